"""Command-line interface.

Subcommands: colorgroup, abf, wheel, verify, table.  Output is text by
default; --format json emits a deterministic document (stable key order,
canonical polynomial strings, big integers as decimal strings) that
round-trips byte-identically through json.loads/render_json.  Exit codes:
0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .alexander import (
    general_presentation,
    wheel_abf_matrix_closed,
    wheel_abf_matrix_recursive,
    wheel_euclidean_reduction,
    wheel_module,
    wheel_reduced_burau_matrix,
)
from .braid import (
    BraidParseError,
    BraidWord,
    burau,
    exponent_sum,
    parse_braid,
    wheel_braid,
)
from .coloring import EnumerationLimitError, coloring_group
from .ring import AbelianGroup, LaurentPoly, Matrix, normalize_unit
from .sequences import IdentityCheck, identity_suite, recurrence_solver_check
from .wheel import cross_verify, fox_closed_form

_T = LaurentPoly.t()


def _group_payload(group: AbelianGroup) -> dict:
    return {
        "torsion": [str(d) for d in group.torsion],
        "free_rank": group.free_rank,
        "display": group.describe(),
    }


def _matrix_payload(matrix: Matrix) -> list[list[str]]:
    return [[str(entry) for entry in row] for row in matrix.entries()]


def render_json(document: dict) -> str:
    """The byte-exact JSON form used by every subcommand."""
    return json.dumps(document, indent=2, ensure_ascii=False)


def _emit(document: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(render_json(document))
    else:
        for line in text_lines:
            print(line)


def _parse_braid_arg(parser: argparse.ArgumentParser, text: str, strands: int | None) -> BraidWord:
    try:
        return parse_braid(text, strands=strands)
    except BraidParseError as exc:
        parser.error(str(exc))  # exits 2


def _cmd_colorgroup(parser, args) -> int:
    word = _parse_braid_arg(parser, args.braid, args.strands)
    result = coloring_group(word)
    document = {
        "command": "colorgroup",
        "inputs": {"braid": list(word.letters), "strands": word.strands},
        "results": {
            "group": _group_payload(result.group),
            "determinant": str(result.determinant),
            "reduced_matrix": _matrix_payload(result.reduced_matrix),
        },
    }
    lines = [
        f"braid: {word.as_text() or '(identity)'} on {word.strands} strands",
        f"reduced coloring group: {result.group.describe()}",
        f"determinant: {result.determinant}",
    ]
    _emit(document, args.format, lines)
    return 0


def _cmd_abf(parser, args) -> int:
    word = _parse_braid_arg(parser, args.braid, args.strands)
    presentation = general_presentation(word)
    document = {
        "command": "abf",
        "inputs": {"braid": list(word.letters), "strands": word.strands},
        "results": {
            "matrix": _matrix_payload(presentation.matrix),
            "alexander": str(presentation.alexander),
        },
    }
    lines = [
        f"braid: {word.as_text() or '(identity)'} on {word.strands} strands",
        "reduced presentation matrix:",
        *(
            "  [" + ", ".join(str(e) for e in row) + "]"
            for row in presentation.matrix.entries()
        ),
        f"alexander polynomial: {presentation.alexander}",
    ]
    _emit(document, args.format, lines)
    return 0


def _cmd_wheel(parser, args) -> int:
    if args.n < 1:
        parser.error("n must be at least 1")
    moduli = tuple(args.moduli or ())
    if any(m < 2 for m in moduli):
        parser.error("every modulus must be at least 2")
    try:
        report = cross_verify(args.n, brute_force_moduli=moduli)
    except EnumerationLimitError as exc:
        parser.error(str(exc))
    module = wheel_module(args.n)
    gens = module.ideal_gens
    _, det_a_prime = wheel_euclidean_reduction(args.n)
    document = {
        "command": "wheel",
        "inputs": {"n": args.n, "moduli": list(moduli)},
        "results": {
            "closed_form_group": _group_payload(report.closed_form_group),
            "burau_group": _group_payload(report.burau_group),
            "ideal_gens": [str(g) for g in gens],
            "det_a_prime": str(det_a_prime),
            "alexander": str(module.alexander),
            "ideal_gens_at_minus_one": [str(v) for v in report.abf_gens_at_minus_one],
            "brute_force": [
                {
                    "modulus": c.modulus,
                    "count": str(c.count),
                    "predicted": str(c.predicted),
                    "ok": c.ok,
                }
                for c in report.brute_force_checks
            ],
            "goeritz_ok": report.goeritz_ok,
        },
        "consistency": report.all_consistent,
    }
    lines = [
        f"wheel n = {args.n}: closure of (sigma_1 sigma_2^-1)^{args.n}",
        f"closed-form group:  {report.closed_form_group.describe()}",
        f"burau-route group:  {report.burau_group.describe()}",
        f"module generators:  ({gens[0]}, {gens[1]})",
        f"det A' = {det_a_prime}",
        f"alexander polynomial: {module.alexander}",
        f"generators at t=-1: {list(report.abf_gens_at_minus_one)}",
    ]
    for c in report.brute_force_checks:
        verdict = "ok" if c.ok else "MISMATCH"
        lines.append(
            f"brute force mod {c.modulus}: {c.count} colorings, predicted {c.predicted} [{verdict}]"
        )
    lines.append(f"goeritz presentation agrees: {report.goeritz_ok}")
    lines.append(f"all routes consistent: {report.all_consistent}")
    _emit(document, args.format, lines)
    return 0 if report.all_consistent else 1


def _cmd_verify(parser, args) -> int:
    if args.max_n < 1 or args.max_index < 1:
        parser.error("--max-n and --max-index must be at least 1")
    checks: list[IdentityCheck] = list(identity_suite(args.max_index).checks)
    checks.append(recurrence_solver_check(min(40, args.max_index)))
    checks.append(_burau_property_check())
    checks.append(_wheel_matrix_routes_check(args.max_n))
    checks.append(_wheel_cross_verify_check(args.max_n))

    document = {
        "command": "verify",
        "inputs": {"max_n": args.max_n, "max_index": args.max_index},
        "results": {
            "suites": [
                {
                    "name": c.name,
                    "cases": c.cases,
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                }
                for c in checks
            ]
        },
        "consistency": all(c.passed for c in checks),
    }
    lines = []
    for c in checks:
        status = "ok  " if c.passed else "FAIL"
        extra = "" if c.passed else f"  first counterexample: {c.counterexample}"
        lines.append(f"{status} {c.name} ({c.cases} cases){extra}")
    ok = all(c.passed for c in checks)
    lines.append("all suites passed" if ok else "verification FAILED")
    _emit(document, args.format, lines)
    return 0 if ok else 1


def _random_word(rng: random.Random, max_strands: int = 6, max_len: int = 20) -> BraidWord:
    strands = rng.randint(2, max_strands)
    length = rng.randint(0, max_len)
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
    )
    return BraidWord(strands, letters)


def _burau_property_check(cases: int = 120, seed: int = 9151) -> IdentityCheck:
    """Randomized Burau sanity: homomorphism, braid relations, inverse
    cancellation, det = (-t)^writhe, row sums, weighted left null vector."""
    rng = random.Random(seed)
    results = []
    for trial in range(cases):
        word = _random_word(rng)
        m = burau(word)
        s = word.strands
        ok = True
        kind = trial % 4
        if kind == 0:
            other = _random_word(rng, max_strands=s, max_len=10)
            other = BraidWord(s, other.letters)
            ok = burau(word * other) == m * burau(other)
        elif kind == 1:
            ok = m * burau(word.inverse()) == Matrix.identity(s, one=LaurentPoly.one())
        elif kind == 2:
            weights = [LaurentPoly.t(s - 1 - i) for i in range(s)]
            delta = m - Matrix.identity(s, one=LaurentPoly.one())
            for j in range(s):
                total = LaurentPoly.zero()
                for i in range(s):
                    total = total + weights[i] * delta[i, j]
                ok = ok and total.is_zero
            ok = ok and all(
                sum((m[i, j] for j in range(s)), LaurentPoly.zero()) == 1
                for i in range(s)
            )
        else:
            small = _random_word(rng, max_strands=4, max_len=12)
            sign = exponent_sum(small)
            expected = (-_T if sign >= 0 else -LaurentPoly.t(-1)) ** abs(sign)
            ok = burau(small).det() == expected
        results.append((f"trial={trial}", ok))
    # braid relations on every adjacent pair up to 6 strands
    for s in range(3, 7):
        for i in range(1, s - 1):
            lhs = burau(BraidWord(s, (i, i + 1, i)))
            rhs = burau(BraidWord(s, (i + 1, i, i + 1)))
            results.append((f"braid relation s={s}, i={i}", lhs == rhs))
        for i in range(1, s - 1):
            for j in range(i + 2, s):
                lhs = burau(BraidWord(s, (i, j)))
                rhs = burau(BraidWord(s, (j, i)))
                results.append((f"far commutation s={s}, i={i}, j={j}", lhs == rhs))
    count = 0
    for label, ok in results:
        count += 1
        if not ok:
            return IdentityCheck("burau_properties", count, label)
    return IdentityCheck("burau_properties", count)


def _wheel_matrix_routes_check(max_n: int) -> IdentityCheck:
    cases = 0
    for n in range(1, max_n + 1):
        cases += 1
        closed = wheel_abf_matrix_closed(n)
        if wheel_abf_matrix_recursive(n) != closed:
            return IdentityCheck("wheel_matrix_routes", cases, f"n={n} (recursive != closed)")
        if n <= 15:
            det_closed = normalize_unit(closed.det())
            det_burau = normalize_unit(wheel_reduced_burau_matrix(n).det())
            if det_closed != det_burau:
                return IdentityCheck(
                    "wheel_matrix_routes", cases, f"n={n} (closed det != burau det)"
                )
    return IdentityCheck("wheel_matrix_routes", cases)


def _wheel_cross_verify_check(max_n: int) -> IdentityCheck:
    cases = 0
    for n in range(1, max_n + 1):
        cases += 1
        report = cross_verify(n, brute_force_moduli=(2, 3, 5))
        if not report.all_consistent:
            return IdentityCheck("wheel_cross_verify", cases, f"n={n}")
    return IdentityCheck("wheel_cross_verify", cases)


def _cmd_table(parser, args) -> int:
    if args.from_n < 1 or args.from_n > args.to_n:
        parser.error("need 1 <= --from <= --to")
    rows = []
    for n in range(args.from_n, args.to_n + 1):
        group = fox_closed_form(n)
        module = wheel_module(n)
        rows.append(
            {
                "n": n,
                "group": group.describe(),
                "ideal_gens": [str(g) for g in module.ideal_gens],
                "alexander": str(module.alexander),
            }
        )
    document = {
        "command": "table",
        "inputs": {"from": args.from_n, "to": args.to_n},
        "results": {"rows": rows},
    }
    if args.format == "json":
        print(render_json(document))
    elif args.format == "csv":
        print("n,group,ideal_gen_1,ideal_gen_2,alexander")
        for row in rows:
            gens = row["ideal_gens"]
            print(f"{row['n']},{row['group']},{gens[0]},{gens[1]},{row['alexander']}")
    elif args.format == "markdown":
        print("| n | group | ideal generators | alexander |")
        print("|---|-------|------------------|-----------|")
        for row in rows:
            gens = ", ".join(row["ideal_gens"])
            print(f"| {row['n']} | {row['group']} | {gens} | {row['alexander']} |")
    else:
        for row in rows:
            gens = ", ".join(row["ideal_gens"])
            print(f"n={row['n']}: {row['group']}; gens ({gens}); alexander {row['alexander']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foxabf",
        description=(
            "Exact Fox coloring groups and Alexander-Burau-Fox modules of "
            "braid closures, with closed-form cross-checks for the wheel family."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_color = sub.add_parser("colorgroup", help="reduced Fox coloring group of a braid closure")
    p_color.add_argument("braid", help='braid word, e.g. "1 -2 1 -2"')
    p_color.add_argument("--strands", type=int, default=None, help="strand count override")
    p_color.add_argument("--format", choices=("text", "json"), default="text")

    p_abf = sub.add_parser("abf", help="reduced ABF presentation and Alexander polynomial")
    p_abf.add_argument("braid", help='braid word, e.g. "1 -2 1 -2"')
    p_abf.add_argument("--strands", type=int, default=None, help="strand count override")
    p_abf.add_argument("--format", choices=("text", "json"), default="text")

    p_wheel = sub.add_parser("wheel", help="cross-verified report for one wheel index")
    p_wheel.add_argument("n", type=int, help="number of spokes (>= 1)")
    p_wheel.add_argument(
        "--moduli", type=int, nargs="*", default=None, help="brute-force coloring moduli"
    )
    p_wheel.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run every identity and cross-route suite")
    p_verify.add_argument("--max-n", type=int, default=20, dest="max_n")
    p_verify.add_argument("--max-index", type=int, default=40, dest="max_index")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_table = sub.add_parser("table", help="closed-form table over a range of wheel indices")
    p_table.add_argument("--from", type=int, required=True, dest="from_n")
    p_table.add_argument("--to", type=int, required=True, dest="to_n")
    p_table.add_argument(
        "--format", choices=("text", "json", "csv", "markdown"), default="text"
    )

    return parser


_HANDLERS = {
    "colorgroup": _cmd_colorgroup,
    "abf": _cmd_abf,
    "wheel": _cmd_wheel,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
