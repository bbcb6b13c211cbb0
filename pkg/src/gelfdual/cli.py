"""Command-line interface.

Exit codes: 0 ok, 1 usage or input error, 2 check failure, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import catalog as cat
from .perm import GroupPair, PermError, parse_pair_text
from .scheme import SchemeError, antiautomorphism_certificate, build_scheme, burnside_rank
from .spectral import (CharacterTriple, NotGelfand, ValidationFailure, build_triple, check_idempotents,
                       parse_triple, validate_septuple)
from .triples import (ExplosionGuard, dual_triple, find_isomorphism, integrality_test, self_duality,
                      splitting_field, symmetry_report)

__all__ = ["main", "build_parser", "ValidationReport", "validate_recipe", "validate_triple"]

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2, 3
MAX_TABLE_DEGREE = 12
EXACT_ORACLE_DEGREE = 8


class UsageError(Exception):
    pass


class _Out:
    """Human text or key=value records, one per line."""

    def __init__(self, machine: bool):
        self.machine = machine
        self.lines: list[str] = []

    def kv(self, key: str, value, text: Optional[str] = None):
        if self.machine:
            self.lines.append(f"{key}={value}")
        else:
            self.lines.append(text if text is not None else f"{key}: {value}")

    def text(self, line: str):
        if not self.machine:
            self.lines.append(line)

    def flush(self):
        if self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")


def _escape(text: str) -> str:
    return text.rstrip("\n").replace("\n", "\\n")


def _unescape(text: str) -> str:
    return text.replace("\\n", "\n")


# ---- input resolution ------------------------------------------------------------------

def _sources(args) -> list[tuple[str, GroupPair, Optional[cat.PairRecipe]]]:
    out = []
    for r in args.recipe or []:
        try:
            recipe = cat.parse_recipe(r)
            out.append((recipe.text, cat.instantiate(recipe), recipe))
        except cat.InvalidRecipe as e:
            raise UsageError(f"invalid recipe {r!r}: {e}") from None
    for path in args.pair or []:
        try:
            with open(path) as fh:
                pair = parse_pair_text(fh.read(), name=path)
        except (OSError, PermError, ValueError) as e:
            raise UsageError(f"cannot load pair file {path}: {e}") from None
        out.append((path, pair, None))
    return out


def _single_source(args):
    src = _sources(args)
    if len(src) != 1:
        raise UsageError("exactly one --recipe or --pair is required")
    return src[0]


def _catalog(args) -> list[cat.PairRecipe]:
    if args.catalog:
        try:
            return cat.load_catalog(args.catalog)
        except (OSError, cat.InvalidRecipe) as e:
            raise UsageError(f"cannot load catalog {args.catalog}: {e}") from None
    return cat.full_catalog()


def _triple_of(pair: GroupPair, out: _Out) -> Optional[CharacterTriple]:
    scheme = build_scheme(pair)
    if not scheme.is_gelfand():
        return None
    return build_triple(scheme)


def _fmt_witness(w: tuple) -> str:
    *idx, value = w
    return "(" + ",".join(str(i + 1) for i in idx) + ") " + value.render()


def _fmt_vec(v) -> str:
    return " ".join(str(x) for x in v)


def _approx_rows(t: CharacterTriple) -> list[str]:
    rows = []
    for row in t.C:
        vals = []
        for c in row:
            z = complex(c)
            vals.append(f"{z.real:.6f}" if abs(z.imag) < 1e-12 else f"{z.real:.6f}{z.imag:+.6f}i")
        rows.append("[ " + "  ".join(vals) + " ]")
    return rows


# ---- commands ------------------------------------------------------------------------------

def cmd_analyze(args, out: _Out) -> int:
    label, pair, recipe = _single_source(args)
    scheme = build_scheme(pair)
    out.kv("source", label)
    out.kv("degree", pair.degree, f"|X| = {pair.degree}")
    out.kv("group_order", pair.group.order(), f"|G| = {pair.group.order()}")
    out.kv("suborbits", _fmt_vec(scheme.suborbit_sizes).replace(" ", ","),
           "suborbit sizes: " + _fmt_vec(scheme.suborbit_sizes))
    gelfand = scheme.is_gelfand()
    out.kv("gelfand", "yes" if gelfand else "no")
    if not gelfand:
        out.text("the Hecke algebra is not commutative; no triple")
        return EXIT_FAIL
    cands = cat.antiautomorphism_candidates(recipe) if recipe else []
    cert = antiautomorphism_certificate(pair, cands, scheme)
    out.kv("certificate", cert.kind.replace(" ", "_") if cert else "none",
           "Gelfand certificate: " + (cert.kind if cert else "none (commutativity checked directly)"))
    t = build_triple(scheme)
    name = cat.name_triple(t)
    if out.machine:
        out.kv("name", name or "-")
        out.kv("triple", _escape(t.serialize()))
    else:
        out.text("name: " + (name or "-"))
        out.text("A = " + _fmt_vec(t.A))
        out.text("B = " + _fmt_vec(t.B))
        out.text("C =")
        out.lines.extend("  " + r for r in t.render_matrix().splitlines())
        if args.approx:
            out.text("C (approximate, for reading only) =")
            out.lines.extend("  " + r for r in _approx_rows(t))
        out.text("mu = " + _fmt_vec(m + 1 for m in t.mu))
        out.text("pi = " + _fmt_vec(p + 1 for p in t.pi))
    sf = splitting_field(t)
    out.kv("conductor", t.conductor)
    out.kv("galois", sf.describe().replace(" ", ""), f"Gal(L/Q) = {sf.describe()}")
    rep = integrality_test(t)
    out.kv("dual_structure_constants", "pass" if rep.dual_structure_constants else "fail")
    out.kv("ratio_integrality", "pass" if rep.ratio_integrality else "fail")
    if not rep.passed:
        out.kv("integrality_witness", _fmt_witness(rep.dual_witness or rep.ratio_witness))
    sd = self_duality(t)
    out.kv("self_dual", "yes" if sd.is_self_dual else "no")
    if sd.witness is not None:
        out.kv("self_duality_witness", str(sd.witness).replace(" ", ","),
               f"self-duality witness: {sd.witness}" + (" (nontrivial)" if sd.nontrivial else ""))
    if not sd.conventions_agree:
        out.kv("self_duality_conventions", "disagree")
    return EXIT_OK


def cmd_check(args, out: _Out) -> int:
    label, pair, _ = _single_source(args)
    t = _triple_of(pair, out)
    out.kv("source", label)
    if t is None:
        out.kv("gelfand", "no")
        return EXIT_FAIL
    rep = integrality_test(t)
    out.kv("dual_structure_constants", "pass" if rep.dual_structure_constants else "fail")
    if rep.dual_witness:
        out.kv("dual_witness", _fmt_witness(rep.dual_witness))
    out.kv("ratio_integrality", "pass" if rep.ratio_integrality else "fail")
    if rep.ratio_witness:
        out.kv("ratio_witness", _fmt_witness(rep.ratio_witness))
    out.kv("integral", "yes" if rep.passed else "no")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_dual_search(args, out: _Out) -> int:
    label, pair, _ = _single_source(args)
    t = _triple_of(pair, out)
    out.kv("target", label)
    if t is None:
        out.kv("gelfand", "no")
        return EXIT_FAIL
    sources = _catalog(args)
    rep = cat.dual_search(t, sources)
    out.kv("integrality_prefilter", "pass" if rep.prefilter_passed else "fail")
    if not rep.prefilter_passed:
        out.text("no dual pair can exist")
        return EXIT_FAIL
    for recipe, iso in rep.found:
        out.kv("found", f"{recipe.text} : {iso}")
    for recipe, why in rep.skipped:
        if why.startswith("error"):
            out.kv("source_error", f"{recipe.text}: {why}")
    out.kv("realizations", rep.realizations, f"realizations found: {rep.realizations} (lower bound)")
    return EXIT_OK if rep.found else EXIT_INCONCLUSIVE


def cmd_table(args, out: _Out) -> int:
    n = args.max_degree if args.max_degree is not None else 7
    if not 1 <= n <= MAX_TABLE_DEGREE:
        raise UsageError(f"--max-degree must be between 1 and {MAX_TABLE_DEGREE}")
    rows = cat.build_table(n, _catalog(args) if args.catalog else cat.mini_catalog())
    out.lines.extend(cat.format_table(rows, machine=out.machine, details=args.details).splitlines())
    return EXIT_OK


def cmd_equiv(args, out: _Out) -> int:
    from .heckemaps import DEFAULT_BUDGET, search_equivalences

    src = _sources(args)
    if not src:
        raise UsageError("equiv needs at least one --recipe or --pair")
    try:
        graph = search_equivalences([p for _, p, _ in src], budget=args.budget or DEFAULT_BUDGET)
    except ValueError as e:
        out.kv("precheck", f"fail: {e}")
        return EXIT_FAIL
    if out.machine:
        for a, b, m in graph.edges:
            out.kv("edge", f"{a + 1}->{b + 1}")
        for a, b in graph.exhausted:
            out.kv("exhausted", f"{a + 1}->{b + 1}")
        out.kv("connected", int(graph.is_connected()))
        out.kv("terminal", ",".join(str(i + 1) for i in graph.terminal_nodes()))
    else:
        out.lines.extend(graph.lines())
    if graph.exhausted and not graph.is_connected():
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---- validation ------------------------------------------------------------------------------

@dataclass
class ValidationReport:
    checks: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)   # (subject, check, detail)
    flags: list[tuple[str, str]] = field(default_factory=list)          # reported, not failures

    def record(self, subject: str, check: str, problems: Sequence[str]):
        self.checks += 1
        if problems:
            self.failures.append((subject, check, "; ".join(problems[:3])))


def validate_triple(t: CharacterTriple, report: ValidationReport, subject: str) -> None:
    report.record(subject, "triple identities", t.violations())
    try:
        validate_septuple(t)
        report.record(subject, "normalization", [])
    except ValidationFailure as e:
        report.record(subject, "normalization", [str(e)])
    try:
        dd = dual_triple(dual_triple(t))
        report.record(subject, "double dual", [] if find_isomorphism(t, dd) else ["dual of dual is not isomorphic"])
    except ValidationFailure as e:
        report.record(subject, "double dual", [str(e)])


def validate_recipe(recipe: cat.PairRecipe, report: ValidationReport) -> None:
    subject = recipe.text
    try:
        pair = cat.instantiate(recipe)
        scheme = build_scheme(pair)
    except (cat.InvalidRecipe, PermError, SchemeError) as e:
        report.record(subject, "instantiate", [str(e)])
        return
    report.record(subject, "degree", [] if pair.degree == cat.predicted_degree(recipe) else ["degree mismatch"])
    report.record(subject, "intersection numbers", scheme.check_invariants())
    b = burnside_rank(pair)
    if b is not None:
        report.record(subject, "Burnside rank", [] if b == scheme.rank else [f"rank {scheme.rank} != {b}"])
    if not scheme.is_gelfand():
        return
    try:
        t = build_triple(scheme)
    except (ValidationFailure, NotGelfand, ArithmeticError) as e:
        report.record(subject, "triple", [str(e)])
        return
    validate_triple(t, report, subject)
    report.record(subject, "idempotents", check_idempotents(t, scheme))
    if pair.degree <= EXACT_ORACLE_DEGREE:
        exact = build_triple(scheme, exact=True)
        report.record(subject, "exact oracle", [] if exact == t else ["hybrid and exact triples differ"])
    d = cat.dual_recipe(recipe)
    if d is not None:
        dt = cat.recipe_triple(d)
        ok = dt is not None and find_isomorphism(dt, dual_triple(t)) is not None
        report.record(subject, "dual recipe", [] if ok else [f"{d.text} does not realize the dual"])
        report.record(subject, "integrality soundness", [] if integrality_test(t).passed else
                      ["a dual pair exists but the integrality test fails"])
    try:
        sym = symmetry_report(t)
        if not sym.conventions_agree:
            report.flags.append((subject, "symmetry conventions disagree"))
    except ExplosionGuard:
        pass


def cmd_validate(args, out: _Out) -> int:
    report = ValidationReport()
    recipes = _catalog(args) if (args.catalog or not args.inputs) and not args.no_catalog else []
    for recipe in recipes:
        validate_recipe(recipe, report)
    for path in args.inputs:
        try:
            with open(path) as fh:
                t = parse_triple(fh.read())
        except (OSError, ValueError) as e:
            raise UsageError(f"cannot read triple file {path}: {e}") from None
        validate_triple(t, report, path)
    if report.checks == 0:
        out.kv("warning", "0 checks", "warning: 0 checks")
    out.kv("checks", report.checks)
    out.kv("failures", len(report.failures))
    for subject, note in report.flags:
        out.kv("flag", f"{subject}: {note}")
    for subject, check, detail in report.failures[:1]:
        out.kv("first_failure", f"{subject}: {check}: {detail}".replace("\n", " "))
        if subject in {r.text for r in recipes}:
            repro = f'gelfdual analyze --recipe "{subject}"'
        else:
            repro = f"gelfdual validate --no-catalog {subject}"
        out.kv("reproduce", repro)
    return EXIT_FAIL if report.failures else EXIT_OK


# ---- entry point -------------------------------------------------------------------------------

COMMANDS = {
    "analyze": cmd_analyze,
    "dual-search": cmd_dual_search,
    "table": cmd_table,
    "check": cmd_check,
    "equiv": cmd_equiv,
    "validate": cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--recipe", action="append", metavar="STR", help="pair recipe, e.g. 'wreath 3 2'")
    common.add_argument("--pair", action="append", metavar="FILE", help="pair file")
    common.add_argument("--catalog", metavar="FILE", help="recipe catalog file (default: shipped catalogs)")
    common.add_argument("--machine", action="store_true", help="key=value output")
    common.add_argument("--max-degree", type=int, metavar="N")
    common.add_argument("--budget", type=int, metavar="N", help="search budget for equiv")
    common.add_argument("--approx", action="store_true", help="add a numeric rendering of C")
    p = argparse.ArgumentParser(prog="gelfdual", description="Gelfand pairs, character triples and dual pairs.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "table":
            sp.add_argument("--details", action="store_true", help="list realizing recipes and omitted triples")
        if name == "validate":
            sp.add_argument("inputs", nargs="*", help="triple files to check")
            sp.add_argument("--no-catalog", action="store_true", help="check only the given triple files")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if not hasattr(args, "details"):
        args.details = False
    out = _Out(args.machine)
    try:
        code = COMMANDS[args.command](args, out)
    except UsageError as e:
        out.flush()
        print(f"gelfdual: {e}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
