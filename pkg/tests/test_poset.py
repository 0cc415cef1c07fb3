import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cylchroma.errors import CycleError, ParseError, SizeError
from cylchroma.poset import (all_posets, antichain, canonical_form, chain, chains, disjoint_union,
                             find_31, inc_graph, is_31_free, longest_chain, parse_poset,
                             poset_from_relations, read_poset)


def brute_31_free(p):
    lt = p.lt
    for quad in itertools.permutations(range(p.n), 4):
        a, b, c, d = quad
        if lt[a][b] and lt[b][c] and all(p.incomparable(d, x) for x in (a, b, c)):
            return False
    return True


@st.composite
def random_poset(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    # relations only go upward in index, so no cycles
    pairs = draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
                          max_size=12))
    return poset_from_relations(n, [(a, b) for a, b in pairs if a < b])


def test_closure_infers_transitive_pair():
    p = poset_from_relations(3, [(0, 1), (1, 2)])
    assert p.lt[0][2]


def test_empty_relations_antichain():
    p = poset_from_relations(3, [])
    assert p.relations() == []
    assert p == antichain(3)


def test_cycle_rejected():
    with pytest.raises(CycleError):
        poset_from_relations(2, [(0, 1), (1, 0)])


def test_out_of_range_rejected():
    with pytest.raises(IndexError):
        poset_from_relations(2, [(0, 2)])


def test_31_free_examples():
    assert is_31_free(chain(4))
    assert not is_31_free(disjoint_union(chain(3), chain(1)))
    assert is_31_free(antichain(4))


def test_31_witness_shape():
    a, b, c, d = find_31(disjoint_union(chain(3), chain(1)))
    assert (a, b, c, d) == (0, 1, 2, 3)


def test_longest_chain_examples():
    assert longest_chain(chain(3)) == 3
    assert longest_chain(antichain(3)) == 1
    assert longest_chain(poset_from_relations(4, [(0, 1), (2, 3)])) == 2
    assert longest_chain(antichain(0)) == 0


def test_inc_graph_examples():
    assert inc_graph(chain(4)).edges == []
    assert len(inc_graph(antichain(4)).edges) == 6
    g = inc_graph(poset_from_relations(3, [(0, 1)]))
    assert sorted(g.edges) == [(0, 2), (1, 2)]


def test_all_posets_counts():
    assert [sum(1 for _ in all_posets(n)) for n in range(7)] == [1, 1, 2, 5, 16, 63, 318]


def test_all_posets_distinct_classes():
    forms = [canonical_form(p) for p in all_posets(5)]
    assert len(forms) == len(set(forms))


def test_all_posets_guard():
    with pytest.raises(SizeError):
        list(all_posets(8))


def test_31_free_matches_brute_force():
    for n in range(7):
        for p in all_posets(n):
            assert is_31_free(p) == brute_31_free(p)


def test_chains_match_definition():
    p = poset_from_relations(4, [(0, 1), (0, 2), (2, 3)])
    got = sorted(chains(p, 2))
    want = sorted(c for c in itertools.permutations(range(4), 2) if p.lt[c[0]][c[1]])
    assert got == want


@given(random_poset())
@settings(max_examples=80, deadline=None)
def test_poset_invariants(p):
    lt = p.lt
    for a in range(p.n):
        assert not lt[a][a]
        for b in range(p.n):
            assert not (lt[a][b] and lt[b][a])
            for c in range(p.n):
                if lt[a][b] and lt[b][c]:
                    assert lt[a][c]


@given(random_poset())
@settings(max_examples=80, deadline=None)
def test_inc_graph_edge_count(p):
    comparable = len(p.relations())
    assert len(inc_graph(p).edges) == p.n * (p.n - 1) // 2 - comparable


@given(random_poset(max_n=5), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_canonical_form_is_relabelling_invariant(p, rnd):
    perm = list(range(p.n))
    rnd.shuffle(perm)
    q = poset_from_relations(p.n, [(perm[a], perm[b]) for a, b in p.relations()])
    assert canonical_form(p) == canonical_form(q)


def test_parse_poset_roundtrip():
    p = parse_poset("4\n# comment\n\n0 < 1\n1 < 2\n")
    assert p.lt[0][2] and p.n == 4
    assert parse_poset(p.to_text()) == p


def test_parse_errors_carry_line_numbers(tmp_path):
    with pytest.raises(ParseError, match="line 3"):
        parse_poset("3\n0 < 1\n1 > 2\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_poset("x\n")
    f = tmp_path / "bad.txt"
    f.write_text("2\n0 < 5\n")
    with pytest.raises(ParseError, match="line 2"):
        read_poset(f)


def test_parse_cycle_is_parse_error():
    with pytest.raises(ParseError):
        parse_poset("2\n0 < 1\n1 < 0\n")
