"""The two structural bijections, run forward and backward.

Chain map: a node holding k labels becomes a chain of k-1 black nodes and a
white node, so free multilabelled trees with m labels match ordered
increasing trees of size m whose unary nodes are two-colored.

Split map: a doubly-labelled node splits into two adjacent siblings and its
parent turns black, matching trees that hold one or two labels per node
against two-colorable-branching trees of size m or m-1.
"""
from inctrees.bijections import (
    MultiTree,
    enumerate_free_multilabelled,
    enumerate_unibi_unordered,
    format_object,
    multi_to_colored,
    q_to_unibi,
    unibi_to_q,
    verify_chain_bijection,
    verify_split_bijection,
)

print("chain map on all free multilabelled trees with 3 labels:")
for obj in enumerate_free_multilabelled(3):
    print(f"  {format_object(obj):22s} -> {format_object(multi_to_colored(obj))}")

print("\nsplit map on all one-or-two-label trees with 3 labels:")
for obj in enumerate_unibi_unordered(3):
    image, shifted = unibi_to_q(obj)
    tag = "size m-1" if shifted else "size m"
    back = q_to_unibi(image, shifted)
    print(f"  {format_object(obj):22s} -> {format_object(image):18s} ({tag}, "
          f"round trip ok: {back == obj})")

print("\nexhaustive verification (round trips, injectivity, counts):")
chain = verify_chain_bijection(5)
print(f"  chain map, m <= 5: counts {chain.domain_sizes}, ok: {chain.ok}")
split = verify_split_bijection(5)
print(f"  split map, m <= 5: counts {split.domain_sizes}, ok: {split.ok}")

# a single seven-label example, spelled out
big = MultiTree((1, 2), (MultiTree((3, 4), (MultiTree((6, 7)),)), MultiTree((5,))))
print("\none seven-label example:")
print("  object:", format_object(big))
image, shifted = unibi_to_q(big)
print("  split image:", format_object(image), "(root was doubly labelled:", shifted, ")")
print("  restored:", format_object(q_to_unibi(image, shifted)))
