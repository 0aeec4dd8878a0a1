"""Families with elliptic and special-function structure.

Some of the two-labels-per-node families have generating functions tied to
classical special functions; at the coefficient level those ties become
exact integer identities plus two convergent numeric formulas.
"""
from inctrees.families import (
    binary_free_multi_numeric,
    blasius_numbers,
    even_degree_recurrence,
    inverse_erf_coefficients,
    lemniscate_sine_coefficients,
    strict_binary_lattice_sum,
    strict_binary_recurrence,
    weierstrass_invariants,
)

print("inverse error function coefficients c_k:")
print(" ", inverse_erf_coefficients(6))

print("\nlemniscate sine coefficients S_n (sl'' = -2 sl^3):")
print(" ", lemniscate_sine_coefficients(13))
print("even-degree family from S via T_n = (-1)^((n-1)/2) S_(2n-1)/2^(n-1):")
print(" ", even_degree_recurrence(7))

print("\nBlasius numbers (F''' = F'' F):", blasius_numbers(6))

print("\nWeierstrass invariants for quadratic weight polynomials:")
for phi in ((1, 0, 1), (1, 2, 1)):
    g2, g3, p_shift = weierstrass_invariants(*phi)
    print(f"  phi = {phi}: g2 = {g2}, g3 = {g3}, p(C) = {p_shift}")

print("\nlattice sum vs exact strict-binary values (cutoff 50):")
exact = strict_binary_recurrence(7)
for n in (2, 3, 5, 7):
    approx = strict_binary_lattice_sum(n, 50)
    print(f"  n={n}: lattice = {approx.value:.9g}, exact = {exact[n - 1]}, "
          f"imag residual = {approx.imaginary_residual:.1e}")

print("\ngeometric series for free multilabelled binary trees:")
for m in range(1, 7):
    print(f"  m={m}: series = {binary_free_multi_numeric(m, 60):.9g}")
