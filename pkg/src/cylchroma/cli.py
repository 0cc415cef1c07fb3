"""Command-line front end: ``cylchroma <command> [options]``.

Exit codes: 0 verified, 1 mismatch, 2 input error, 3 size guard.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Callable

from .errors import CylchromaError, ParseError, SizeError
from .involution import enumerate_B, in_B, phi, trace_line
from .poset import Poset, find_31, inc_graph, read_poset
from .shapes import (CylindricShape, parse_shape, to_gessel_krattenthaler,
                     to_postnikov_mcnamara)
from .symx import (chromatic_X, corollary_det_side, corollary_sum, e_coeffs,
                   sink_counts, sinks_from_e)
from .tableaux import cylindric_weight_counts, is_p_array, u_weight
from .upoly import UPolynomial, diff_terms, s_P_cylindric

OK, MISMATCH, INPUT_ERROR, SIZE_ERROR = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    poset_path: str | None = None
    shape: str | None = None
    emit: str = "text"
    seed: int = 0
    kbound: int | None = None
    sample: int | None = None


@dataclass
class Report:
    """One command's result: ``data`` feeds json, ``rows`` feed tsv, ``lines`` feed text."""
    data: dict
    lines: list[str]
    rows: list[tuple] = field(default_factory=list)
    status: int = OK


def fmt_part(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def fmt_mono(mono) -> str:
    return "*".join(f"u{i}^{e}" for i, e in enumerate(mono) if e) or "1"


def _num(c):
    return int(c) if getattr(c, "denominator", 1) == 1 else str(c)


def cmd_check31(p: Poset, cfg: RunConfig) -> Report:
    w = find_31(p)
    if w is None:
        return Report({"31_free": True}, ["31-free: true"], [("31_free", "true")])
    a, b, c, d = w
    return Report({"31_free": False, "witness": {"chain": [a, b, c], "point": d}},
                  [f"31-free: false, witness: {{{a},{b},{c} | {d}}}"],
                  [("31_free", "false"), ("witness", f"{a},{b},{c}|{d}")])


def cmd_chromatic(p: Poset, cfg: RunConfig) -> Report:
    g = inc_graph(p)
    c = e_coeffs(g)
    x = chromatic_X(g)
    e_items = sorted(c.items(), reverse=True)
    m_items = sorted(((lam, _num(v)) for lam, v in x.coeffs.items()), reverse=True)
    lines = [f"e: {fmt_part(lam)} -> {v}" for lam, v in e_items]
    lines += [f"m: {fmt_part(lam)} -> {v}" for lam, v in m_items]
    rows = [("e", ",".join(map(str, lam)), v) for lam, v in e_items]
    rows += [("m", ",".join(map(str, lam)), v) for lam, v in m_items]
    data = {"e": {",".join(map(str, lam)): v for lam, v in e_items},
            "m": {",".join(map(str, lam)): v for lam, v in m_items}}
    return Report(data, lines, rows)


def cmd_verify_main(p: Poset, cs: CylindricShape, cfg: RunConfig) -> Report:
    det = s_P_cylindric(cs, p)
    tab = UPolynomial(p.n, cylindric_weight_counts(cs, p))
    diff = diff_terms(det, tab)
    data = {"shape": str(cs), "equal": not diff, "terms": len(tab),
            "diff": [{"monomial": fmt_mono(m), "determinant": _num(a), "tableaux": _num(b)}
                     for m, a, b in diff]}
    if not diff:
        return Report(data, ["EQUAL"], [("result", "EQUAL")])
    lines = [f"DIFF {len(diff)} monomials"]
    lines += [f"{fmt_mono(m)}: determinant {_num(a)}, tableaux {_num(b)}" for m, a, b in diff]
    rows = [(fmt_mono(m), _num(a), _num(b)) for m, a, b in diff]
    return Report(data, lines, rows, MISMATCH)


def _special_case(cs: CylindricShape) -> str | None:
    lam = cs.outer
    if cs.inner:
        return None
    r, c = lam[0], lam.count(lam[0])
    if cs.shift == 0 and len(lam) == c:
        return f"rectangle: c_({r}^{c}) = #standard"
    if cs.shift == 1 and len(lam) <= c + 1:
        return f"partial sum: sum over lambda_1 <= {r} of c_lambda = #standard"
    return None


def cmd_corollary(p: Poset, cs: CylindricShape, cfg: RunConfig) -> Report:
    lhs, rhs = corollary_sum(p, cs)
    det = _num(corollary_det_side(p, cs))
    match = lhs == rhs == det
    data = {"shape": str(cs), "lhs": lhs, "rhs": rhs, "determinant": det, "match": match}
    lines = [f"lhs: {lhs}", f"rhs: {rhs}", f"determinant: {det}", f"match: {str(match).lower()}"]
    note = _special_case(cs)
    if note:
        data["identity"] = note
        lines.append(f"{note} = {rhs}")
    rows = [("lhs", lhs), ("rhs", rhs), ("determinant", det), ("match", str(match).lower())]
    return Report(data, lines, rows, OK if match else MISMATCH)


def cmd_sinks(p: Poset, cfg: RunConfig) -> Report:
    g = inc_graph(p)
    hist = sink_counts(g)
    fromc = sinks_from_e(e_coeffs(g))
    js = sorted(set(hist) | set(fromc))
    match = hist == fromc
    lines = [f"j={j}: {hist.get(j, 0)} = sum_{{l(lambda)={j}}} c_lambda = {fromc.get(j, 0)}" for j in js]
    lines.append(f"match: {str(match).lower()}")
    rows = [(j, hist.get(j, 0), fromc.get(j, 0)) for j in js]
    data = {"sinks": {str(j): hist.get(j, 0) for j in js},
            "e_sums": {str(j): fromc.get(j, 0) for j in js}, "match": match}
    return Report(data, lines, rows, OK if match else MISMATCH)


def cmd_convert(cs: CylindricShape, cfg: RunConfig) -> Report:
    data: dict = {"shape": str(cs)}
    lines, rows, status = [], [], OK
    try:
        nu, eta, m = to_gessel_krattenthaler(cs)
        data["gk"] = {"nu": list(nu), "eta": list(eta), "m": m}
        lines.append(f"GK: nu={fmt_part(nu)}, eta={fmt_part(eta)}, m={m}")
        rows.append(("GK", fmt_part(nu), fmt_part(eta), m))
    except CylchromaError as exc:
        data["gk"] = {"error": str(exc)}
        lines.append(f"GK: error: {exc}")
        status = INPUT_ERROR
    try:
        nu, m, theta, k, n = to_postnikov_mcnamara(cs)
        data["pm"] = {"nu": list(nu), "m": m, "theta": list(theta), "k": k, "n": n}
        lines.append(f"PM: nu={fmt_part(nu)}, m={m}, theta={fmt_part(theta)}, k={k}, n={n}")
        rows.append(("PM", fmt_part(nu), m, fmt_part(theta), k, n))
    except CylchromaError as exc:
        data["pm"] = {"error": str(exc)}
        lines.append(f"PM: error: {exc}")
        status = INPUT_ERROR
    return Report(data, lines, rows, status)


def cmd_involution_trace(p: Poset, cs: CylindricShape, cfg: RunConfig) -> Report:
    triples = sorted(enumerate_B(cs, p, cfg.kbound, include_fixed=True), key=lambda t: t.key())
    in_b = [t for t in triples if in_B(t, p)]
    fixed = [t for t in triples if not in_B(t, p)]
    signed: dict = {}
    broken = 0
    for t in in_b:
        w = u_weight(t.arr, p.n)
        signed[w] = signed.get(w, 0) + t.sign
        s = phi(t, p)
        if not is_p_array(s.arr, p) or phi(s, p).key() != t.key() or s.sign != -t.sign:
            broken += 1
    residue = sum(1 for v in signed.values() if v)
    shown = in_b
    if cfg.sample is not None and cfg.sample < len(in_b):
        shown = sorted(random.Random(cfg.seed).sample(in_b, cfg.sample), key=lambda t: t.key())
    trace = [trace_line(t, p) for t in shown]
    ok = not broken and not residue
    summary = [f"B: {len(in_b)}", f"fixed: {len(fixed)}", f"unpaired: {broken}",
               f"nonzero signed monomials: {residue}", f"involution: {'ok' if ok else 'FAILED'}"]
    data = {"shape": str(cs), "B": len(in_b), "fixed": len(fixed), "unpaired": broken,
            "nonzero_signed": residue, "ok": ok, "trace": trace}
    rows = [tuple(line.split("\t")) for line in trace]
    return Report(data, trace + summary, rows, OK if ok else MISMATCH)


COMMANDS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "check31": (("poset",), cmd_check31),
    "chromatic": (("poset",), cmd_chromatic),
    "verify-main": (("poset", "shape"), cmd_verify_main),
    "corollary": (("poset", "shape"), cmd_corollary),
    "sinks": (("poset",), cmd_sinks),
    "convert": (("shape",), cmd_convert),
    "involution-trace": (("poset", "shape"), cmd_involution_trace),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cylchroma", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--poset", dest="poset_path", metavar="FILE")
    ap.add_argument("--shape", metavar="STR", help="lambda/mu/d, e.g. 4,4,4,4,2,1,1/2,1/3")
    ap.add_argument("--emit", choices=("text", "tsv", "json"), default="text")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--kbound", type=int)
    ap.add_argument("--sample", type=int, help="involution-trace: print a seeded sample of N lines")
    return ap


def render(report: Report, emit: str) -> str:
    if emit == "json":
        return json.dumps(report.data, sort_keys=True, indent=2)
    if emit == "tsv":
        return "\n".join("\t".join(str(x) for x in row) for row in report.rows)
    return "\n".join(report.lines)


def run(cfg: RunConfig) -> Report:
    needs, fn = COMMANDS[cfg.command]
    args = []
    if "poset" in needs:
        if not cfg.poset_path:
            raise ParseError(f"{cfg.command} needs --poset")
        args.append(read_poset(cfg.poset_path))
    if "shape" in needs:
        if not cfg.shape:
            raise ParseError(f"{cfg.command} needs --shape")
        args.append(parse_shape(cfg.shape))
    return fn(*args, cfg)


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(ns))
    try:
        report = run(cfg)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SIZE_ERROR
    except (CylchromaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    out = render(report, cfg.emit)
    if out:
        print(out)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
