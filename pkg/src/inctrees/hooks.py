"""Hook-length identities, checked exactly by exhaustive tree enumeration.

Each identity equates a sum over trees of a product of per-node factors
(degree weight divided by some function of the hook-length) with a counting
sequence value divided by a factorial.  The left-hand side is computed here
by brute-force enumeration; the right-hand side comes from the coefficient
solvers — two fully independent computation paths, compared exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .solvers import (
    solve_free_multilabelled,
    solve_k_labelled,
    solve_k_tuple,
    solve_unilabelled_bilabelled,
)
from .trees import (
    CapacityError,
    capacity_limit,
    bucket_hook_lengths,
    enumerate_bucket_functions,
    enumerate_ordered_trees,
    falling_factorial,
    tree_weight,
)
from .weights import DegreeWeights

MAX_HOOK_TREE_SIZE = 12   # Catalan(11) = 58786 trees per sum
MAX_HOOK_BUCKET_TOTAL = 8


def _check_hookcapacity_limit(value: int, cap: int, what: str):
    limit = capacity_limit(cap)
    if value > limit:
        raise CapacityError(
            f"{what} = {value} exceeds the hook-sum capacity {limit}; "
            "set INCTREE_CAPACITY to override"
        )


@dataclass(frozen=True)
class HookIdentityReport:
    """Result of checking one hook-length identity at one size."""

    scheme: str
    parameter: int
    lhs: Fraction
    rhs: Fraction
    trees_visited: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_text(self) -> str:
        verdict = "equal" if self.equal else "UNEQUAL"
        return (
            f"{self.scheme} n={self.parameter} lhs={self.lhs} rhs={self.rhs} "
            f"trees={self.trees_visited} {verdict}"
        )

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "parameter": self.parameter,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "trees_visited": self.trees_visited,
            "verdict": "equal" if self.equal else "unequal",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def hook_sum_k_labelled(weights: DegreeWeights, k: int, n: int) -> HookIdentityReport:
    """Sum over plane trees of size n of prod phi_odeg / (k h)(kh-1)...(kh-k+1),
    against T_n / (kn)! from the k-labelled solver."""
    _check_hookcapacity_limit(n, MAX_HOOK_TREE_SIZE, "tree size n")
    lhs = Fraction(0)
    visited = 0
    for tree in enumerate_ordered_trees(n):
        visited += 1
        term = Fraction(1)
        for d, h in zip(tree.out_degrees(), tree.hook_lengths()):
            w = weights.coefficient(d)
            if w == 0:
                term = Fraction(0)
                break
            term *= w / falling_factorial(k * h, k)
        lhs += term
    rhs = solve_k_labelled(weights, k, n)[n] / factorial(k * n)
    return HookIdentityReport(f"k-labelled(k={k})", n, lhs, rhs, visited)


def hook_sum_bucket(
    weights: DegreeWeights, m: int, max_bucket: Optional[int] = None
) -> HookIdentityReport:
    """Sum over trees of all sizes and bucket-size functions with m labels of
    prod phi_odeg / (bucket hook-length falling bucket size).

    Unbounded buckets check the free multilabelled count; max_bucket=2
    checks the one-or-two-labels count.
    """
    _check_hookcapacity_limit(m, MAX_HOOK_BUCKET_TOTAL, "label count m")
    lhs = Fraction(0)
    visited = 0
    min_size = 1 if max_bucket is None else (m + max_bucket - 1) // max_bucket
    for size in range(min_size, m + 1):
        for tree in enumerate_ordered_trees(size):
            visited += 1
            weight = tree_weight(tree, weights)
            if weight == 0:
                continue
            for buckets in enumerate_bucket_functions(tree, m, max_bucket):
                term = weight
                for hb, b in zip(bucket_hook_lengths(tree, buckets), buckets):
                    term /= falling_factorial(hb, b)
                lhs += term
    if max_bucket is None:
        rhs_seq = solve_free_multilabelled(weights, m)
        scheme = "bucket-free"
    elif max_bucket == 2:
        rhs_seq = solve_unilabelled_bilabelled(weights, m)
        scheme = "bucket-uni-bi"
    else:
        raise ValueError("max_bucket must be None (free) or 2 (uni-bi)")
    rhs = rhs_seq[m] / factorial(m)
    return HookIdentityReport(scheme, m, lhs, rhs, visited)


def hook_sum_k_tuple(weights: DegreeWeights, k: int, n: int) -> HookIdentityReport:
    """Sum over plane trees of size n of prod phi_odeg / h^k, against
    T_n / (n!)^k from the k-tuple solver."""
    _check_hookcapacity_limit(n, MAX_HOOK_TREE_SIZE, "tree size n")
    lhs = Fraction(0)
    visited = 0
    for tree in enumerate_ordered_trees(n):
        visited += 1
        term = Fraction(1)
        for d, h in zip(tree.out_degrees(), tree.hook_lengths()):
            w = weights.coefficient(d)
            if w == 0:
                term = Fraction(0)
                break
            term *= w / Fraction(h) ** k
        lhs += term
    rhs = solve_k_tuple(weights, k, n)[n] / Fraction(factorial(n)) ** k
    return HookIdentityReport(f"k-tuple(k={k})", n, lhs, rhs, visited)


_GENERIC_FAMILIES = {
    "ordered": DegreeWeights.bundled(1),
    "binary": DegreeWeights.polynomial([1, 2, 1], name="binary"),
    "strict-binary": DegreeWeights.polynomial([1, 0, 1], name="strict-binary"),
}


def _eval_poly(coeffs: Sequence, x: int) -> Fraction:
    total = Fraction(0)
    for c in reversed([Fraction(c) for c in coeffs]):
        total = total * x + c
    return total


def generic_hook_weight_sum(
    tree_family: str, rho_numerator: Sequence, rho_denominator: Sequence, n: int
) -> Fraction:
    """Sum over the family's weighted size-n trees of prod rho(h) over nodes,
    for a rational hook-weight function rho given by numerator/denominator
    coefficient lists (constant term first).

    Families: "ordered" (all weights 1), "binary" (weights C(2, j)),
    "strict-binary" (out-degrees 0 and 2 only).
    """
    try:
        weights = _GENERIC_FAMILIES[tree_family]
    except KeyError:
        raise ValueError(
            f"unknown tree family {tree_family!r}; "
            f"choose from {sorted(_GENERIC_FAMILIES)}"
        ) from None
    _check_hookcapacity_limit(n, MAX_HOOK_TREE_SIZE, "tree size n")
    for h in range(1, n + 1):
        if _eval_poly(rho_denominator, h) == 0:
            raise ValueError(f"hook-weight denominator vanishes at h = {h}")
    rho = {
        h: _eval_poly(rho_numerator, h) / _eval_poly(rho_denominator, h)
        for h in range(1, n + 1)
    }
    total = Fraction(0)
    for tree in enumerate_ordered_trees(n):
        term = Fraction(1)
        for d, h in zip(tree.out_degrees(), tree.hook_lengths()):
            w = weights.coefficient(d)
            if w == 0:
                term = Fraction(0)
                break
            term *= w * rho[h]
        total += term
    return total
