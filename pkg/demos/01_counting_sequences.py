"""Counting sequences of multilabelled increasing tree families.

Every family is defined by a degree-weight sequence (which tree shapes are
allowed, with what multiplicity) and a labelling scheme (how labels attach
to nodes).  The solvers extract exact coefficients from the defining
differential equation of each scheme's exponential generating function.
"""
from inctrees import (
    DegreeWeights,
    solve_free_multilabelled,
    solve_k_labelled,
    solve_k_tuple,
    solve_unilabelled_bilabelled,
)
from inctrees.families import REGISTRY

# Two labels per node, unordered shapes: the reduced tangent numbers.
exp = DegreeWeights.exponential()
print("unordered, 2 labels/node:", solve_k_labelled(exp, 2, 8).as_integers())

# Three labels per node gives the Blasius boundary-layer coefficients.
print("unordered, 3 labels/node:", solve_k_labelled(exp, 3, 6).as_integers())

# Free multilabelling: any node may hold any non-empty label set.
unary_binary = DegreeWeights.polynomial([1, 1, 1], name="unary-binary")
print("unary-binary, free labels:", solve_free_multilabelled(unary_binary, 8).as_integers(),
      " (= m!)")

# At most two labels per node.
print("unordered, 1-2 labels/node:", solve_unilabelled_bilabelled(exp, 7).as_integers())

# k independent increasing labellings, here k = 2 over ordered trees.
ordered = DegreeWeights.bundled(1)
print("ordered, label pairs:", solve_k_tuple(ordered, 2, 6).as_integers())

print()
print("registered families:")
for identifier, spec in sorted(REGISTRY.items()):
    oeis = f" [{spec.oeis}]" if spec.oeis else ""
    print(f"  {identifier:26s} {spec.reference_prefix}{oeis}")
