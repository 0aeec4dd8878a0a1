"""Command-line interface.

Subcommands::

    seq FAMILY TERMS [--format plain|bfile|json]
    verify {hook,bijection,closed-forms,invariants,all} [--max-n N] [--max-m M]
           [--cutoff C] [--format plain|json]
    reverse (--values 1,2,22,584 | --family ID [--terms N] | --values-file PATH)
    bijection {free,unibi} [--max-m M] [--show]
    hook {klabelled,bucket,ktuple,rho} [options]

Exit status is 0 exactly when every executed check passes.  The b-file
format prints ``n a(n)`` lines with offset 1 for every family.  The
environment variable INCTREE_CAPACITY raises the enumeration capacity
bounds (at the cost of potentially very long runtimes).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial
from typing import List, Optional, Tuple

from . import bijections, families, hooks, reverse, solvers
from .trees import (
    CapacityError,
    count_bucket_labellings_bruteforce,
    count_bucket_labellings_formula,
    count_k_labellings_bruteforce,
    count_k_labellings_formula,
    enumerate_bucket_functions,
    enumerate_ordered_trees,
    tree_weight,
)
from .weights import DegreeWeights

_BILABELLED_IDS = (
    "bilabelled/unordered",
    "bilabelled/ordered",
    "bilabelled/2-bundled",
    "bilabelled/3-bundled",
    "bilabelled/strict-binary",
    "bilabelled/even-degree",
    "bilabelled/binary",
)


def _fmt_value(v: Fraction) -> str:
    return str(v)


def _print_sequence(identifier: str, seq, fmt: str, out) -> None:
    if fmt == "plain":
        print(" ".join(_fmt_value(v) for v in seq), file=out)
    elif fmt == "bfile":
        for n, v in enumerate(seq, start=1):
            print(f"{n} {_fmt_value(v)}", file=out)
    elif fmt == "json":
        payload = {
            "family": identifier,
            "values": [
                int(v) if v.denominator == 1 else str(v) for v in seq
            ],
        }
        print(json.dumps(payload), file=out)
    else:
        raise ValueError(f"unknown format {fmt!r}")


# -- verification suites -------------------------------------------------

Check = Tuple[str, bool, str]


def _suite_hook(max_n: int, max_m: int) -> List[Check]:
    checks: List[Check] = []
    for identifier in _BILABELLED_IDS:
        spec = families.get_family(identifier)
        bad = ""
        for n in range(1, max_n + 1):
            rep = hooks.hook_sum_k_labelled(spec.weights, 2, n)
            if not rep.equal:
                bad = f"first failure at n={n}: {rep.to_text()}"
                break
        checks.append((f"hook k=2 {identifier} n<={max_n}", not bad, bad))
    tri = families.get_family("trilabelled/unordered")
    n_tri = min(max_n, 6)
    bad = ""
    for n in range(1, n_tri + 1):
        rep = hooks.hook_sum_k_labelled(tri.weights, 3, n)
        if not rep.equal:
            bad = f"first failure at n={n}"
            break
    checks.append((f"hook k=3 trilabelled/unordered n<={n_tri}", not bad, bad))
    for k in (1, 2, 3):
        for variant in ("ordered", "unordered"):
            w = (
                DegreeWeights.bundled(1)
                if variant == "ordered"
                else DegreeWeights.exponential()
            )
            bad = ""
            for n in range(1, min(max_n, 6) + 1):
                rep = hooks.hook_sum_k_tuple(w, k, n)
                if not rep.equal:
                    bad = f"first failure at n={n}"
                    break
            checks.append((f"hook k-tuple(k={k}) {variant}", not bad, bad))
    bucket_weights = {
        "ordered": DegreeWeights.bundled(1),
        "unordered": DegreeWeights.exponential(),
        "strict-binary": DegreeWeights.polynomial([1, 0, 1], name="strict-binary"),
    }
    for name, w in bucket_weights.items():
        bad = ""
        for m in range(1, max_m + 1):
            rep = hooks.hook_sum_bucket(w, m)
            if not rep.equal:
                bad = f"first failure at m={m}"
                break
        checks.append((f"hook bucket-free {name} m<={max_m}", not bad, bad))
    bad = ""
    for m in range(1, max_m + 1):
        rep = hooks.hook_sum_bucket(DegreeWeights.exponential(), m, max_bucket=2)
        if not rep.equal:
            bad = f"first failure at m={m}"
            break
    checks.append((f"hook bucket-uni-bi unordered m<={max_m}", not bad, bad))
    bad = ""
    for n in range(1, max_n + 1):
        lhs = hooks.generic_hook_weight_sum("binary", [1, 1], [0, 1], n)
        rhs = Fraction(2**n * (n + 1) ** (n - 1), factorial(n))
        if lhs != rhs:
            bad = f"first failure at n={n}: {lhs} != {rhs}"
            break
    checks.append((f"hook rho=1+1/h binary vs 2^n(n+1)^(n-1)/n! n<={max_n}", not bad, bad))
    return checks


def _suite_bijection(max_m: int) -> List[Check]:
    chain = bijections.verify_chain_bijection(max_m)
    split = bijections.verify_split_bijection(max_m)
    return [
        (
            f"chain bijection m<={max_m} counts={chain.domain_sizes}",
            chain.ok,
            "; ".join(chain.failures[:3]),
        ),
        (
            f"split bijection m<={max_m} counts={split.domain_sizes}",
            split.ok,
            "; ".join(split.failures[:3]),
        ),
    ]


def _compare_prefix(solved, expected) -> str:
    for i, (a, b) in enumerate(zip(solved, expected), start=1):
        if a != b:
            return f"index {i}: solver {a} != reference {b}"
    return ""


def _suite_closed_forms(max_n: int, cutoff: int) -> List[Check]:
    checks: List[Check] = []
    for identifier, spec in sorted(families.REGISTRY.items()):
        terms = max(len(spec.reference_prefix), max_n)
        seq = spec.sequence(terms)
        if spec.reference_prefix:
            bad = _compare_prefix(seq, spec.reference_prefix)
            checks.append((f"reference prefix {identifier}", not bad, bad))
        if spec.closed_form is not None:
            closed = tuple(spec.closed_form(n) for n in range(1, terms + 1))
            bad = _compare_prefix(seq, closed)
            checks.append((f"closed form {identifier} n<={terms}", not bad, bad))
        if spec.special_recurrence is not None:
            rec = spec.special_recurrence(terms)
            bad = _compare_prefix(seq, rec)
            checks.append((f"recurrence {identifier} n<={terms}", not bad, bad))
    tangent = families.reduced_tangent_check(max_n)
    checks.append(
        ("reduced tangent numbers vs solver", tangent.ok, str(tangent.failures))
    )
    lem = families.even_degree_lemniscate_relation_check(max_n)
    checks.append(
        ("even-degree vs lemniscate sine", lem.ok, str(lem.failures))
    )
    for n in (2, 3, 5, 7):
        exact = families.strict_binary_recurrence(n)[n - 1]
        approx = families.strict_binary_lattice_sum(n, cutoff)
        if exact == 0:
            ok = abs(approx.value) < 1e-6
        else:
            ok = abs(approx.value - exact) / exact < 1e-6
        checks.append(
            (
                f"lattice sum n={n} cutoff={cutoff}",
                ok,
                f"value={approx.value!r} exact={exact}",
            )
        )
    for m in range(1, 7):
        exact = families.get_family("free/binary").sequence(m)[m]
        approx = families.binary_free_multi_numeric(m, 60)
        ok = abs(approx - exact) / int(exact) < 1e-6
        checks.append((f"binary free series m={m}", ok, f"value={approx!r}"))
    return checks


def _suite_invariants(max_n: int, max_m: int) -> List[Check]:
    checks: List[Check] = []
    for identifier in _BILABELLED_IDS:
        spec = families.get_family(identifier)
        t = solvers.k_labelled_series(spec.weights, 2, 20)
        rep = solvers.first_order_invariant_check(spec.weights, t)
        checks.append(
            (
                f"(T')^2 = 2 Phi(T) to order {rep.checked_order} {identifier}",
                rep.ok,
                f"mismatches at {rep.mismatches}" if not rep.ok else "",
            )
        )
    for identifier in (
        "free/strict-binary",
        "free/binary",
        "free/unary-binary",
        "free/ordered-no-unary",
        "free/unordered-no-unary",
    ):
        spec = families.get_family(identifier)
        base = spec.weights
        shifted = DegreeWeights.custom(
            lambda j, _b=base: _b.coefficient(j) + (1 if j == 1 else 0),
            name=f"{base.name}+t",
        )
        free_seq = tuple(spec.sequence(max_m))
        uni_seq = tuple(solvers.solve_k_labelled(shifted, 1, max_m))
        bad = _compare_prefix(free_seq, uni_seq)
        checks.append((f"free = single-label with phi+t {identifier}", not bad, bad))
    bad = ""
    for n in range(1, min(max_n, 4) + 1):
        for tree in enumerate_ordered_trees(n):
            for k in (1, 2, 3):
                if count_k_labellings_formula(tree, k) != count_k_labellings_bruteforce(tree, k):
                    bad = f"mismatch at tree {tree.to_text()} k={k}"
                    break
            for m in range(n, max_m + 1):
                for buckets in enumerate_bucket_functions(tree, m):
                    if count_bucket_labellings_formula(
                        tree, buckets
                    ) != count_bucket_labellings_bruteforce(tree, buckets):
                        bad = f"mismatch at tree {tree.to_text()} buckets={buckets}"
                        break
    checks.append((f"label-count formulas vs brute force n<=4", not bad, bad))
    w = DegreeWeights.exponential()
    bad = ""
    for n in range(1, min(max_n, 6) + 1):
        total = sum(
            (
                tree_weight(tree, w) * count_k_labellings_formula(tree, 1)
                for tree in enumerate_ordered_trees(n)
            ),
            Fraction(0),
        )
        if total != solvers.solve_k_labelled(w, 1, n)[n]:
            bad = f"first failure at n={n}"
            break
    checks.append(("tree-sum oracle vs single-label solver", not bad, bad))
    return checks


def _run_verify(args, out) -> int:
    suites = (
        ["hook", "bijection", "closed-forms", "invariants"]
        if args.suite == "all"
        else [args.suite]
    )
    checks: List[Check] = []
    for suite in suites:
        if suite == "hook":
            checks.extend(_suite_hook(args.max_n, args.max_m))
        elif suite == "bijection":
            checks.extend(_suite_bijection(args.max_m))
        elif suite == "closed-forms":
            checks.extend(_suite_closed_forms(args.max_n, args.cutoff))
        elif suite == "invariants":
            checks.extend(_suite_invariants(args.max_n, args.max_m))
    ok = all(c[1] for c in checks)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "ok": ok,
                    "checks": [
                        {"name": name, "ok": good, "detail": detail}
                        for name, good, detail in checks
                    ],
                }
            ),
            file=out,
        )
    else:
        for name, good, detail in checks:
            line = f"{'PASS' if good else 'FAIL'} {name}"
            if detail and not good:
                line += f" [{detail}]"
            print(line, file=out)
        print(f"{'OK' if ok else 'FAILED'} ({len(checks)} checks)", file=out)
    return 0 if ok else 1


def _run_reverse(args, out) -> int:
    if args.values:
        target = reverse.parse_values(args.values)
        source = "values"
    elif args.values_file:
        target = reverse.values_from_file(args.values_file)
        source = args.values_file
    elif args.family:
        spec = families.get_family(args.family)
        terms = args.terms or 8
        target = tuple(spec.sequence(terms))
        source = args.family
    else:
        raise ValueError("need --values, --values-file or --family")
    report = reverse.reverse_engineer(target, source=source)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "source": report.source,
                    "target": [str(v) for v in report.target],
                    "phi": [str(v) for v in report.phi],
                    "guaranteed_order": report.guaranteed_order,
                    "admissible": report.admissible,
                    "first_violation": report.first_violation,
                }
            ),
            file=out,
        )
        return 0
    for j, value in enumerate(report.phi):
        print(f"phi_{j} = {value}", file=out)
    print(f"guaranteed order: {report.guaranteed_order}", file=out)
    if report.admissible:
        print("admissible: yes (all computed weights non-negative, phi_0 > 0)", file=out)
        rt = reverse.round_trip_check(report)
        print(f"round trip reproduces input: {'yes' if rt else 'NO'}", file=out)
        return 0 if rt else 1
    print(f"admissible: no (first violation at phi_{report.first_violation})", file=out)
    return 0


def _run_bijection(args, out) -> int:
    if args.scheme == "free":
        report = bijections.verify_chain_bijection(args.max_m)
    else:
        report = bijections.verify_split_bijection(args.max_m)
    for m, d, i in zip(report.label_counts, report.domain_sizes, report.image_sizes):
        print(f"m={m}: {d} objects <-> {i} colored trees", file=out)
    if args.show:
        for m in range(1, args.max_m + 1):
            if args.scheme == "free":
                for obj in bijections.enumerate_free_multilabelled(m):
                    img = bijections.multi_to_colored(obj)
                    print(
                        f"{bijections.format_object(obj)} -> "
                        f"{bijections.format_object(img)}",
                        file=out,
                    )
            else:
                for obj in bijections.enumerate_unibi_unordered(m):
                    img, shifted = bijections.unibi_to_q(obj)
                    tag = "m-1" if shifted else "m"
                    print(
                        f"{bijections.format_object(obj)} -> "
                        f"{bijections.format_object(img)} [{tag}]",
                        file=out,
                    )
    if report.ok:
        print("PASS bijection verified", file=out)
        return 0
    for failure in report.failures:
        print(f"FAIL {failure}", file=out)
    return 1


def _run_hook(args, out) -> int:
    fmt = args.format
    if args.kind == "rho":
        num = [Fraction(x) for x in args.rho_num.split(",")]
        den = [Fraction(x) for x in args.rho_den.split(",")]
        for n in range(1, args.max_n + 1):
            value = hooks.generic_hook_weight_sum(args.tree_family, num, den, n)
            print(f"n={n} sum={value}", file=out)
        return 0
    if args.family:
        weights = families.get_family(args.family).weights
    elif args.weights:
        weights = DegreeWeights.parse(args.weights)
    else:
        raise ValueError("need --weights or --family")
    reports = []
    if args.kind == "klabelled":
        for n in range(1, args.max_n + 1):
            reports.append(hooks.hook_sum_k_labelled(weights, args.k, n))
    elif args.kind == "ktuple":
        for n in range(1, args.max_n + 1):
            reports.append(hooks.hook_sum_k_tuple(weights, args.k, n))
    elif args.kind == "bucket":
        if args.max_bucket not in (None, 2):
            raise ValueError("--max-bucket supports only 2 (omit it for unbounded)")
        for m in range(1, args.max_m + 1):
            reports.append(hooks.hook_sum_bucket(weights, m, args.max_bucket))
    if fmt == "json":
        print(json.dumps([r.to_json_dict() for r in reports]), file=out)
    else:
        for r in reports:
            print(r.to_text(), file=out)
    return 0 if all(r.equal for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inctree",
        description="Exact enumeration and verification of multilabelled increasing tree families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print a family's counting sequence")
    p_seq.add_argument("family", help="family identifier, e.g. bilabelled/unordered")
    p_seq.add_argument("terms", type=int)
    p_seq.add_argument("--format", choices=("plain", "bfile", "json"), default="plain")

    p_verify = sub.add_parser("verify", help="run exhaustive verification suites")
    p_verify.add_argument(
        "suite", choices=("hook", "bijection", "closed-forms", "invariants", "all")
    )
    p_verify.add_argument("--max-n", type=int, default=6)
    p_verify.add_argument("--max-m", type=int, default=5)
    p_verify.add_argument("--cutoff", type=int, default=50)
    p_verify.add_argument("--format", choices=("plain", "json"), default="plain")

    p_rev = sub.add_parser("reverse", help="recover degree weights from a target sequence")
    p_rev.add_argument("--values", help="comma-separated target values T_1,T_2,...")
    p_rev.add_argument("--values-file", help="file with one target value per line")
    p_rev.add_argument("--family", help="take the target from a registered family")
    p_rev.add_argument("--terms", "-t", type=int, default=None)
    p_rev.add_argument("--format", choices=("plain", "json"), default="plain")

    p_bij = sub.add_parser("bijection", help="verify a bijection exhaustively")
    p_bij.add_argument("scheme", choices=("free", "unibi"))
    p_bij.add_argument("--max-m", type=int, default=5)
    p_bij.add_argument("--show", action="store_true", help="print each object pair")

    p_hook = sub.add_parser("hook", help="evaluate hook-length identities")
    p_hook.add_argument("kind", choices=("klabelled", "bucket", "ktuple", "rho"))
    p_hook.add_argument("--weights", help="degree weights, e.g. exp or poly:1,0,1")
    p_hook.add_argument("--family", help="take weights from a registered family")
    p_hook.add_argument("-k", type=int, default=2)
    p_hook.add_argument("--max-n", type=int, default=5)
    p_hook.add_argument("--max-m", type=int, default=5)
    p_hook.add_argument("--max-bucket", type=int, default=None)
    p_hook.add_argument("--rho-num", default="1")
    p_hook.add_argument("--rho-den", default="1")
    p_hook.add_argument("--tree-family", default="ordered")
    p_hook.add_argument("--format", choices=("plain", "json"), default="plain")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "seq":
            spec = families.get_family(args.family)
            seq = spec.sequence(args.terms)
            _print_sequence(args.family, seq, args.format, out)
            return 0
        if args.command == "verify":
            return _run_verify(args, out)
        if args.command == "reverse":
            return _run_reverse(args, out)
        if args.command == "bijection":
            return _run_bijection(args, out)
        if args.command == "hook":
            return _run_hook(args, out)
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
