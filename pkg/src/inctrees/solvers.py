"""Counting sequences of multilabelled increasing tree families.

Each labelling scheme turns into a functional/differential equation for an
exponential generating function, which is solved here purely at the level of
exact coefficient recurrences:

* k-labelled:  T has coefficients at z^(kn)/(kn)! and satisfies
  d^k/dz^k T = phi(T) with vanishing initial conditions,
* free multilabelled:  T' = phi(T) + T,  T(0) = 0,
* one-or-two labels per node ("uni-bi"):  T'' = phi(T) + T' phi'(T),
  T(0) = 0, T'(0) = phi_0,
* k-tuple labelled:  a direct convolution recurrence with the multinomial
  coefficient raised to the k-th power.

The series solvers work by fixed-point iteration: substituting a prefix of
the solution into the right-hand side and integrating extends the valid
order on every pass, so ``terms + 2`` passes pin down all requested
coefficients exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Tuple

from .series import Series
from .trees import compositions
from .weights import DegreeWeights


@dataclass(frozen=True)
class CountingSequence:
    """Exact values T_1, T_2, ... for one family and labelling scheme."""

    values: Tuple[Fraction, ...]
    scheme: str
    weights: DegreeWeights
    k: Optional[int] = None

    def __getitem__(self, n: int) -> Fraction:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"T_{n} not computed (have 1..{len(self.values)})")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_integers(self) -> Tuple[int, ...]:
        """The values as ints; raises if any entry is not an integer."""
        out = []
        for i, v in enumerate(self.values, start=1):
            if v.denominator != 1:
                raise ValueError(f"T_{i} = {v} is not an integer")
            out.append(int(v))
        return tuple(out)


# -- series solutions ---------------------------------------------------


def k_labelled_series(weights: DegreeWeights, k: int, order: int) -> Series:
    """EGF of the k-labelled family, truncated at the given order in z."""
    if k < 1:
        raise ValueError("k must be positive")
    phi = weights.as_series(order)
    t = Series.zero(order)
    for _ in range(order // k + 2):
        rhs = phi.compose(t)
        for _ in range(k):
            rhs = rhs.integrate()
        t = rhs.truncate(order)
    return t


def free_multilabelled_series(weights: DegreeWeights, order: int) -> Series:
    phi = weights.as_series(order)
    t = Series.zero(order)
    for _ in range(order + 1):
        t = (phi.compose(t) + t).integrate().truncate(order)
    return t


def unilabelled_bilabelled_series(weights: DegreeWeights, order: int) -> Series:
    phi = weights.as_series(order)
    phi_prime = weights.derivative_series(order)
    linear = Series.identity(order).scale(weights.coefficient(0))
    t = linear
    for _ in range(order + 1):
        rhs = phi.compose(t) + t.differentiate() * phi_prime.compose(t)
        t = (rhs.integrate().integrate() + linear).truncate(order)
    return t


def _extract(series: Series, weights, scheme, k, terms, stride) -> CountingSequence:
    values = tuple(
        series.coefficient(stride * n) * factorial(stride * n)
        for n in range(1, terms + 1)
    )
    return CountingSequence(values=values, scheme=scheme, weights=weights, k=k)


def solve_k_labelled(weights: DegreeWeights, k: int, terms: int) -> CountingSequence:
    """T_n for 1 <= n <= terms, where T_n counts (total weight of) the
    family's increasing k-labelled trees with kn labels."""
    if terms < 1:
        raise ValueError("terms must be positive")
    series = k_labelled_series(weights, k, k * terms)
    return _extract(series, weights, "k-labelled", k, terms, k)


def solve_free_multilabelled(weights: DegreeWeights, terms: int) -> CountingSequence:
    """T_m for 1 <= m <= terms: free multilabelled increasing trees with m
    labels."""
    if terms < 1:
        raise ValueError("terms must be positive")
    series = free_multilabelled_series(weights, terms)
    return _extract(series, weights, "free-multilabelled", None, terms, 1)


def solve_unilabelled_bilabelled(weights: DegreeWeights, terms: int) -> CountingSequence:
    """T_m for 1 <= m <= terms: increasing trees whose nodes hold one or two
    labels, m labels in total."""
    if terms < 1:
        raise ValueError("terms must be positive")
    series = unilabelled_bilabelled_series(weights, terms)
    return _extract(series, weights, "uni-bi", None, terms, 1)


def solve_k_tuple(weights: DegreeWeights, k: int, terms: int) -> CountingSequence:
    """T_n for 1 <= n <= terms: increasing k-tuple labelled trees of size n.

    Seeds T_1 = phi_0 (the weight of the single-node tree); every size-n
    value follows from the root decomposition, with the label multinomial
    raised to the k-th power.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if terms < 1:
        raise ValueError("terms must be positive")
    values = [weights.coefficient(0)]
    for n in range(2, terms + 1):
        total = Fraction(0)
        for r in range(1, n):
            phi_r = weights.coefficient(r)
            if phi_r == 0:
                continue
            acc = Fraction(0)
            for parts in compositions(n - 1, r):
                mult = factorial(n - 1)
                for s in parts:
                    mult //= factorial(s)
                prod = Fraction(mult) ** k
                for s in parts:
                    prod *= values[s - 1]
                acc += prod
            total += phi_r * acc
        values.append(total)
    return CountingSequence(
        values=tuple(values), scheme="k-tuple", weights=weights, k=k
    )


# -- first integral of the second-order equation -------------------------


@dataclass(frozen=True)
class InvariantReport:
    """Coefficientwise comparison of (T')^2 against 2 Phi(T)."""

    checked_order: int
    matches: Tuple[bool, ...]
    mismatches: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def first_order_invariant_check(weights: DegreeWeights, t: Series) -> InvariantReport:
    """Verify (T')^2 = 2 Phi(T) coefficient by coefficient.

    ``t`` should be a solution series of the two-labels-per-node family for
    these weights; both sides are recomputed here from scratch.
    """
    lhs = t.differentiate()
    lhs = lhs * lhs
    big_phi = weights.antiderivative_series(t.order)
    rhs = big_phi.compose(t).scale(2)
    order = min(lhs.order, rhs.order)
    matches = tuple(
        lhs.coefficient(i) == rhs.coefficient(i) for i in range(order + 1)
    )
    mismatches = tuple(i for i, good in enumerate(matches) if not good)
    return InvariantReport(checked_order=order, matches=matches, mismatches=mismatches)
