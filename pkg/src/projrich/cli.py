"""
Command-line driver: ``projrich {poset, verify, genfun}``.

Exit codes: 0 success, 1 a verification failed, 2 bad input.

>>> main(["genfun", "--family", "typeA", "--k", "1", "--n", "3"])
1,3,3
0
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from .coxeter import element_to_json, weyl_group
from .demazure_checks import verify_demazure_properties
from .genfun import (
    A_brute, F_brute, QPoly, check_duality, typeA_F, typeB_F, typeC_check, typeC_count,
    typeD_F,
)
from .localization import (
    lemma_suite_H, lemma_suite_K, matrix_identity_K, verify_cmain, verify_kmain,
    verify_reduced_word_independence, verify_support_and_degree,
)
from .reports import Report
from .richardson_poset import (
    J_of, NotGradedError, admissible_set, poset_diagnostics, qj_poset,
    verify_appendix, verify_prop_equiv, verify_theorem_combin,
)
from .root_data import build_root_system

__all__ = ["main", "RunConfig", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

SUITES = ("combinatorics", "diagnostics", "appendix", "demazure", "words",
          "cohomology", "ktheory", "lemmas", "matrix", "all")
FAMILIES = ("typeA", "typeB", "typeC", "typeD", "brute")


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    """Validated options shared by the subcommands."""
    type: str | None = None
    rank: int | None = None
    coweight: tuple[int, ...] | None = None
    suite: str = "all"
    out: str | None = None
    format: str = "json"
    seed: int = 0
    max_len: int = 6
    fault: str | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def root_system(self):
        if self.type is None or self.rank is None:
            raise InputError("--type and --rank are required")
        try:
            return build_root_system(self.type, self.rank)
        except ValueError as exc:
            raise InputError(str(exc)) from exc

    def lam(self, rs, required: bool = True):
        if self.coweight is None:
            if required:
                raise InputError("--coweight is required")
            return None
        if len(self.coweight) != rs.rank:
            raise InputError(f"coweight has {len(self.coweight)} entries, rank is {rs.rank}")
        if not rs.is_dominant(self.coweight):
            raise InputError(f"coweight {list(self.coweight)} is not dominant")
        return self.coweight


def _parse_coweight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"coweight must be comma-separated integers, got {text!r}")


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="projrich", description=__doc__.strip().splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def group_args(p):
        p.add_argument("--type", choices=("A", "B", "C", "D"))
        p.add_argument("--rank", type=int)
        p.add_argument("--coweight", type=_parse_coweight,
                       help="fundamental-coweight coordinates, e.g. 1,0")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("poset", help="dump Q_J, its Hasse diagram and the admissible set")
    group_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("verify", help="run verification suites")
    group_args(p)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=_positive, default=6, dest="max_len")
    p.add_argument("--samples", type=_positive, default=1000, help="random affine triples")
    p.add_argument("--inject-fault", choices=("sign-flip",), dest="fault", help=argparse.SUPPRESS)

    p = sub.add_parser("genfun", help="generating functions and closed formulas")
    group_args(p)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--at-one", action="store_true", dest="at_one", help="evaluate at q = 1")
    p.add_argument("--rank-poly", action="store_true", dest="rank_poly",
                   help="the rank generating function of Q_J instead of F")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    return ap


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(type=ns.type, rank=ns.rank, coweight=ns.coweight, out=ns.out, format=ns.format)
    for key in ("suite", "seed", "max_len", "fault"):
        if hasattr(ns, key):
            setattr(cfg, key, getattr(ns, key))
    for key in ("family", "k", "n", "at_one", "rank_poly", "samples"):
        if hasattr(ns, key):
            cfg.extra[key] = getattr(ns, key)
    return cfg


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


# -- poset -------------------------------------------------------------------------
def cmd_poset(cfg: RunConfig) -> tuple[int, str]:
    rs = cfg.root_system()
    lam = cfg.lam(rs)
    P = qj_poset(rs, lam)
    try:
        diag = poset_diagnostics(P)
    except NotGradedError as exc:
        diag = {"error": str(exc)}
    adm = admissible_set(rs, lam)
    A = weyl_group(rs).affine
    elements = [
        {"x_word": list(x.word()), "y_word": list(y.word()), "grade": g}
        for (x, y), g in zip(P.elements, P.rank)
    ]
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "x_word", "y_word", "grade"])
        for k, e in enumerate(elements):
            w.writerow([k, " ".join(map(str, e["x_word"])), " ".join(map(str, e["y_word"])), e["grade"]])
        return EXIT_OK, buf.getvalue().rstrip("\n")
    adm_sorted = sorted(adm.elements, key=lambda z: (A.length(z), repr(z)))
    out = {
        "type": rs.name,
        "lambda": list(lam),
        "J": sorted(J_of(rs, lam)),
        "elements": elements,
        "hasse": [list(e) for e in P.hasse],
        "diagnostics": diag,
        "admissible": {
            "size": len(adm),
            "elements": [dict(element_to_json(z), length=A.length(z)) for z in adm_sorted],
        },
    }
    return EXIT_OK, _dump(out)


# -- verify ------------------------------------------------------------------------
def _diagnostics_report(rs, lam) -> Report:
    rep = Report("poset_diagnostics", f"{rs.name} lambda={list(lam)}")
    d = poset_diagnostics(qj_poset(rs, lam))
    rep.check(d["thin"], property="thin")
    rep.check(d["eulerian"], property="eulerian")
    return rep


def _run_suite(name: str, cfg: RunConfig, rs, lam) -> list[Report]:
    W = weyl_group(rs)
    if name == "combinatorics":
        return [verify_prop_equiv(rs, lam), verify_theorem_combin(rs, lam)]
    if name == "diagnostics":
        return [_diagnostics_report(rs, lam)]
    if name == "appendix":
        from itertools import combinations
        nodes = W.nodes
        return [verify_appendix(rs, frozenset(c))
                for k in range(len(nodes) + 1) for c in combinations(nodes, k)]
    if name == "demazure":
        return [verify_demazure_properties(W),
                verify_demazure_properties(W.affine, samples=cfg.extra.get("samples", 1000),
                                           max_len=cfg.max_len, seed=cfg.seed)]
    if name == "words":
        return [verify_reduced_word_independence(W, cfg.max_len),
                verify_reduced_word_independence(W.affine, cfg.max_len),
                verify_support_and_degree(W, cfg.max_len),
                verify_support_and_degree(W.affine, min(cfg.max_len, 5))]
    if name == "cohomology":
        return [verify_cmain(rs, lam, fault=cfg.fault)]
    if name == "ktheory":
        return [verify_kmain(rs, lam, fault=cfg.fault)]
    if name == "lemmas":
        inst = [(rs, lam)] if lam is not None else []
        return [lemma_suite_H(rs, inst), lemma_suite_K(rs, inst)]
    if name == "matrix":
        return [matrix_identity_K(rs)]
    raise InputError(f"unknown suite {name}")


_NEEDS_LAMBDA = {"combinatorics", "diagnostics", "cohomology", "ktheory"}


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    rs = cfg.root_system()
    names = [s for s in SUITES if s != "all"] if cfg.suite == "all" else [cfg.suite]
    needs = any(n in _NEEDS_LAMBDA for n in names)
    lam = cfg.lam(rs, required=needs)
    if cfg.fault and not any(n in ("cohomology", "ktheory") for n in names):
        raise InputError("fault injection applies to the cohomology and ktheory suites")
    reports: list[Report] = []
    for n in names:
        reports.extend(_run_suite(n, cfg, rs, lam))
    passed = all(r.passed for r in reports)
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "instance", "n_checked", "n_failed", "passed"])
        for r in reports:
            w.writerow([r.theorem, r.instance, r.n_checked, r.n_failed, r.passed])
        text = buf.getvalue().rstrip("\n")
    else:
        text = _dump({"passed": passed, "reports": [r.to_dict() for r in reports]})
    return (EXIT_OK if passed else EXIT_FAIL), text


# -- genfun ------------------------------------------------------------------------
def _need(cfg: RunConfig, key: str, lo: int) -> int:
    v = cfg.extra.get(key)
    if v is None:
        raise InputError(f"--{key} is required for --family {cfg.extra['family']}")
    if v < lo:
        raise InputError(f"--{key} must be at least {lo}")
    return v


def cmd_genfun(cfg: RunConfig) -> tuple[int, str]:
    fam = cfg.extra["family"]
    at_one, rank_poly = cfg.extra.get("at_one"), cfg.extra.get("rank_poly")
    row: dict[str, Any] = {"family": fam}
    F = A = None
    shift = None
    status = EXIT_OK
    if fam == "typeA":
        n = _need(cfg, "n", 2)
        k = _need(cfg, "k", 1)
        if k >= n:
            raise InputError("need 1 <= k < n")
        row["params"] = f"k={k} n={n}"
        F, shift = typeA_F(k, n), k * (n - k)
    elif fam in ("typeB", "typeD"):
        n = _need(cfg, "n", 0)
        row["params"] = f"n={n}"
        F = typeB_F(n) if fam == "typeB" else typeD_F(n)
        shift = max(2 * n - 1, 0) if fam == "typeB" else max(2 * n - 2, 0)
        if n == 0:
            shift = 0
    elif fam == "typeC":
        n = _need(cfg, "n", 0)
        row["params"] = f"n={n}"
        if at_one and not rank_poly:
            ok = typeC_check(n)
            row["F(1)"] = typeC_count(n)
            row["consistent"] = ok
            status = EXIT_OK if ok else EXIT_FAIL
            return status, _format_genfun(cfg, row, str(typeC_count(n)))
        if n < 2:
            raise InputError("type C needs n >= 2 for the polynomial (no closed q-formula; brute force)")
        rs = build_root_system("C", n)
        lam = tuple(0 for _ in range(n - 1)) + (1,)
        F, shift = F_brute(rs, lam), rs.two_rho_pairing(lam)
    else:
        rs = cfg.root_system()
        lam = cfg.lam(rs)
        F, A = F_brute(rs, lam), A_brute(rs, lam)
        row["params"] = f"{rs.name} lambda={list(lam)}"
        if rs.is_cominuscule(lam):
            row["duality"] = check_duality(F, A, rs.two_rho_pairing(lam))
            if not row["duality"]:
                status = EXIT_FAIL
    if A is None:
        if shift is None or F.degree > shift:
            raise InputError("rank polynomial unavailable for this input")
        A = F.reversed(shift)
    row["F"] = list(F.coeffs)
    row["A"] = list(A.coeffs)
    row["F(1)"] = F(1)
    poly: QPoly = A if rank_poly else F
    plain = str(poly(1)) if at_one else poly.csv()
    return status, _format_genfun(cfg, row, plain)


def _format_genfun(cfg: RunConfig, row: dict, plain: str) -> str:
    if cfg.format == "json":
        return _dump(row)
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "params", "F", "A", "F(1)"])
        w.writerow([row["family"], row.get("params", ""),
                    " ".join(map(str, row.get("F", []))), " ".join(map(str, row.get("A", []))),
                    row.get("F(1)", "")])
        return buf.getvalue().rstrip("\n")
    return plain


COMMANDS = {"poset": cmd_poset, "verify": cmd_verify, "genfun": cmd_genfun}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    cfg = _config(ns)
    try:
        code, text = COMMANDS[ns.command](cfg)
    except (InputError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
