"""Hook-length identities, verified two ways.

For a tree, the hook-length of a node is the size of its subtree.  The
number of increasing k-labellings of a fixed tree is a pure hook-length
product, so summing over all trees of a size turns a counting sequence into
a hook-length identity.  Here the left side is computed by brute-force
enumeration of all plane trees and the right side by the coefficient
solver; the two must agree exactly.
"""
from fractions import Fraction
from math import factorial

from inctrees import DegreeWeights, generic_hook_weight_sum
from inctrees.hooks import hook_sum_bucket, hook_sum_k_labelled, hook_sum_k_tuple

exp = DegreeWeights.exponential()

print("two labels per node, unordered shapes:")
for n in range(1, 7):
    print(" ", hook_sum_k_labelled(exp, 2, n).to_text())

print("\nbucket labellings (free, then capped at two labels per bucket):")
for m in range(1, 6):
    print(" ", hook_sum_bucket(DegreeWeights.bundled(1), m).to_text())
    print(" ", hook_sum_bucket(exp, m, max_bucket=2).to_text())

print("\nindependent label pairs over ordered trees:")
for n in range(1, 6):
    print(" ", hook_sum_k_tuple(DegreeWeights.bundled(1), 2, n).to_text())

print("\nthe classical binary-tree identity with rho(h) = 1 + 1/h:")
for n in range(1, 9):
    lhs = generic_hook_weight_sum("binary", [1, 1], [0, 1], n)
    rhs = Fraction(2**n * (n + 1) ** (n - 1), factorial(n))
    print(f"  n={n}: sum = {lhs}, 2^n (n+1)^(n-1) / n! = {rhs}, equal: {lhs == rhs}")
