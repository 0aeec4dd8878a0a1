"""Exhaustive enumeration of ordered rooted trees and their label counts.

This is the brute-force oracle layer: plane trees of a given size in a
deterministic canonical order, hook-lengths, node weights, bucket-size
functions, and both closed-form and explicit-enumeration counts of
increasing labellings.  Everything here is exact and deliberately naive;
capacity limits keep runtimes at desk scale.

Node-indexed data (hook-lengths, out-degrees, bucket sizes, label blocks)
is always aligned with the preorder traversal of the tree.

Trees have a text form of balanced parentheses: ``()`` is a single node and
``(()())`` is a root with two leaf children.

The environment variable ``INCTREE_CAPACITY``, when set to an integer,
replaces all three built-in capacity bounds (tree size, total label count
for the k-labelled brute force, total bucket size).  Raising it can make
enumerations take minutes and gigabytes; that risk is the caller's.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Optional, Sequence, Tuple

from .weights import DegreeWeights

MAX_TREE_SIZE = 14
MAX_LABEL_TOTAL = 12   # brute-force k-labellings: k * n
MAX_BUCKET_TOTAL = 10  # brute-force bucket labellings: m
_MEMO_SIZE_LIMIT = 10  # tree lists cached up to this size


class CapacityError(ValueError):
    """An enumeration was asked to exceed its documented capacity."""


def capacity_limit(default: int) -> int:
    """Effective capacity bound: INCTREE_CAPACITY when set, else the default."""
    override = os.environ.get("INCTREE_CAPACITY")
    return int(override) if override else default


@dataclass(frozen=True)
class OrderedTree:
    """Rooted plane tree; children are an ordered tuple of subtrees."""

    children: Tuple["OrderedTree", ...] = ()
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "size", 1 + sum(c.size for c in self.children))

    @classmethod
    def leaf(cls) -> "OrderedTree":
        return cls(())

    @property
    def out_degree(self) -> int:
        return len(self.children)

    def preorder(self) -> Iterator["OrderedTree"]:
        """All subtrees (one per node), root first."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def out_degrees(self) -> Tuple[int, ...]:
        return tuple(node.out_degree for node in self.preorder())

    def hook_lengths(self) -> Tuple[int, ...]:
        """Subtree sizes in preorder; the hook-length of a node is the
        number of its descendants including itself."""
        return tuple(node.size for node in self.preorder())

    def parent_indices(self) -> Tuple[int, ...]:
        """Preorder index of each node's parent (-1 for the root)."""
        parents = [-1] * self.size
        cursor = [0]

        def walk(node: "OrderedTree", parent: int):
            me = cursor[0]
            cursor[0] += 1
            parents[me] = parent
            for child in node.children:
                walk(child, me)

        walk(self, -1)
        return tuple(parents)

    # -- text form -----------------------------------------------------

    def to_text(self) -> str:
        return "(" + "".join(c.to_text() for c in self.children) + ")"

    @classmethod
    def parse(cls, text: str) -> "OrderedTree":
        text = text.strip()
        tree, pos = cls._parse_at(text, 0)
        if pos != len(text):
            raise ValueError(f"trailing input after tree at position {pos}")
        return tree

    @classmethod
    def _parse_at(cls, text: str, pos: int):
        if pos >= len(text) or text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos}")
        pos += 1
        children = []
        while pos < len(text) and text[pos] == "(":
            child, pos = cls._parse_at(text, pos)
            children.append(child)
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"expected ')' at position {pos}")
        return cls(tuple(children)), pos + 1

    def __repr__(self) -> str:
        return f"OrderedTree.parse({self.to_text()!r})"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def compositions(total: int, parts: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Ordered compositions of ``total`` into positive parts, lexicographic.

    With ``parts`` set, only compositions of exactly that many parts.
    ``total == 0`` yields the empty composition (when parts is 0 or None).
    """
    if parts is not None:
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest
        return
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


_tree_memo: dict = {}


def _forests(total: int) -> Iterator[Tuple[OrderedTree, ...]]:
    """Forests with the given total size, ordered lexicographically by the
    (size, canonical rank) sequence of their trees."""
    if total == 0:
        yield ()
        return
    for first_size in range(1, total + 1):
        for first in _iter_trees(first_size):
            for rest in _forests(total - first_size):
                yield (first,) + rest


def _iter_trees(n: int) -> Iterator[OrderedTree]:
    if n <= _MEMO_SIZE_LIMIT:
        if n not in _tree_memo:
            _tree_memo[n] = tuple(_build_trees(n))
        yield from _tree_memo[n]
    else:
        yield from _build_trees(n)


def _build_trees(n: int) -> Iterator[OrderedTree]:
    if n == 1:
        yield OrderedTree(())
        return
    for kids in _forests(n - 1):
        yield OrderedTree(kids)


def enumerate_ordered_trees(n: int) -> Iterator[OrderedTree]:
    """All Catalan(n-1) plane trees with n nodes, in canonical order.

    Canonical order sorts same-size trees by their child sequences
    lexicographically, where a child of smaller size precedes any larger
    child and same-size children compare by their own canonical rank.
    """
    if n < 1:
        raise ValueError("tree size must be positive")
    cap = capacity_limit(MAX_TREE_SIZE)
    if n > cap:
        raise CapacityError(
            f"tree size {n} exceeds capacity {cap} "
            f"(Catalan({n - 1}) = {catalan(n - 1)} trees); "
            "set INCTREE_CAPACITY to override"
        )
    return _iter_trees(n)


def falling_factorial(x: int, s: int) -> int:
    """x (x-1) ... (x-s+1); the empty product 1 for s = 0."""
    out = 1
    for i in range(s):
        out *= x - i
    return out


def tree_weight(tree: OrderedTree, weights: DegreeWeights) -> Fraction:
    """Product of the degree weights over all nodes."""
    w = Fraction(1)
    for d in tree.out_degrees():
        w *= weights.coefficient(d)
        if w == 0:
            break
    return w


# -- increasing k-labellings ------------------------------------------


def count_k_labellings_formula(tree: OrderedTree, k: int) -> int:
    """Number of increasing k-labellings: (kn)! / prod of k-step falling
    factorials of k * hook-length."""
    if k < 1:
        raise ValueError("k must be positive")
    denom = 1
    for h in tree.hook_lengths():
        denom *= falling_factorial(k * h, k)
    count, rem = divmod(factorial(k * tree.size), denom)
    assert rem == 0, "labelling count is always integral"
    return count


def iter_increasing_labellings(
    tree: OrderedTree, block_sizes: Sequence[int]
) -> Iterator[Tuple[frozenset, ...]]:
    """All assignments of disjoint label blocks (given sizes, preorder) such
    that every label in a child block exceeds every label of its parent.

    Labels are 1..sum(block_sizes); blocks are yielded as preorder-aligned
    tuples of frozensets.
    """
    n = tree.size
    if len(block_sizes) != n:
        raise ValueError("one block size per node required")
    parents = tree.parent_indices()
    total = sum(block_sizes)

    def assign(i: int, avail: frozenset, blocks: tuple):
        if i == n:
            yield blocks
            return
        lower = max(blocks[parents[i]]) if i > 0 else 0
        candidates = sorted(x for x in avail if x > lower)
        if len(candidates) < block_sizes[i]:
            return
        for chosen in combinations(candidates, block_sizes[i]):
            yield from assign(i + 1, avail.difference(chosen), blocks + (frozenset(chosen),))

    return assign(0, frozenset(range(1, total + 1)), ())


def count_k_labellings_bruteforce(tree: OrderedTree, k: int) -> int:
    """Count increasing k-labellings by explicit construction."""
    if k < 1:
        raise ValueError("k must be positive")
    total = k * tree.size
    cap = capacity_limit(MAX_LABEL_TOTAL)
    if total > cap:
        raise CapacityError(
            f"brute-force labelling needs k*n = {total} <= {cap}; "
            "set INCTREE_CAPACITY to override"
        )
    return sum(1 for _ in iter_increasing_labellings(tree, [k] * tree.size))


# -- bucket labellings -------------------------------------------------


def bucket_hook_lengths(tree: OrderedTree, buckets: Sequence[int]) -> Tuple[int, ...]:
    """Bucket hook-length of each node (preorder): total bucket size of its
    subtree."""
    nodes = list(tree.preorder())
    if len(buckets) != len(nodes):
        raise ValueError("one bucket size per node required")
    out = []
    offset = 0
    for sub in nodes:
        out.append(sum(buckets[offset : offset + sub.size]))
        offset += 1
    return tuple(out)


def count_bucket_labellings_formula(tree: OrderedTree, buckets: Sequence[int]) -> int:
    """Number of increasing multilabellings for a fixed bucket-size function:
    m! / prod over nodes of (bucket hook-length) falling (bucket size)."""
    if any(b < 1 for b in buckets):
        raise ValueError("bucket sizes must be positive")
    m = sum(buckets)
    denom = 1
    for hb, b in zip(bucket_hook_lengths(tree, buckets), buckets):
        denom *= falling_factorial(hb, b)
    count, rem = divmod(factorial(m), denom)
    assert rem == 0, "bucket labelling count is always integral"
    return count


def count_bucket_labellings_bruteforce(tree: OrderedTree, buckets: Sequence[int]) -> int:
    m = sum(buckets)
    cap = capacity_limit(MAX_BUCKET_TOTAL)
    if m > cap:
        raise CapacityError(
            f"brute-force bucket labelling needs m = {m} <= {cap}; "
            "set INCTREE_CAPACITY to override"
        )
    return sum(1 for _ in iter_increasing_labellings(tree, list(buckets)))


def count_k_tuple_labellings(tree: OrderedTree, k: int) -> int:
    """Number of increasing k-tuple labellings: the k-th power of the
    single-labelling count n! / prod of hook-lengths."""
    if k < 1:
        raise ValueError("k must be positive")
    return count_k_labellings_formula(tree, 1) ** k


def enumerate_bucket_functions(
    tree: OrderedTree, m: int, max_bucket: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """All bucket-size functions with total m (preorder tuples).

    ``max_bucket`` caps the size of a single bucket (2 for the
    one-or-two-labels scheme); None leaves it unbounded.  m below the tree
    size yields nothing.
    """
    n = tree.size
    if m < n:
        return
    cap = max_bucket if max_bucket is not None else m

    def rec(remaining_nodes: int, remaining_total: int, acc: tuple):
        if remaining_nodes == 0:
            if remaining_total == 0:
                yield acc
            return
        low = max(1, remaining_total - cap * (remaining_nodes - 1))
        high = min(cap, remaining_total - (remaining_nodes - 1))
        for b in range(low, high + 1):
            yield from rec(remaining_nodes - 1, remaining_total - b, acc + (b,))

    yield from rec(n, m, ())
