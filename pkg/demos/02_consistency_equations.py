"""Pentagon and hexagon consistency of the Fibonacci F and R symbols.

Any consistent anyon theory must satisfy two polynomial constraint
families: the pentagon (five recouplings around a four-particle tree
compose to the identity) and the hexagon (recoupling commutes with
braiding).  The Fibonacci solution is essentially unique, and tiny
perturbations of it are detected immediately by the residual scans.
"""

import itertools

import numpy as np

from anyons import (
    FSymbolTable,
    RSymbolTable,
    f_unitarity_residual,
    fibonacci_data,
    gauge_transform,
    hexagon_residual,
    pentagon_residual,
    su2k_admissible,
    trivial_data,
    zd_model,
)

model, F, R = fibonacci_data()

print("Fibonacci F(1111) block:")
_, _, block = F.block(1, 1, 1, 1)
print(np.round(block.real, 6))
print("R exchange phases:", {k: np.round(v, 6) for k, v in R.entries.items()})

print(f"\npentagon residual:   {pentagon_residual(model, F):.3e}")
print(f"hexagon residual:    {hexagon_residual(model, F, R):.3e}")
print(f"unitarity residual:  {f_unitarity_residual(model, F):.3e}")

print("\nPerturbing F(1111)^0_0 by 0.01 breaks the pentagon:")
entries = dict(F.entries)
entries[(1, 1, 1, 1, 0, 0)] += 0.01
print(f"  residual -> {pentagon_residual(model, FSymbolTable(model, entries)):.3e}")

print("Conjugating R(1,1->0) breaks the hexagon:")
r_entries = dict(R.entries)
r_entries[(1, 1, 0)] = np.conj(r_entries[(1, 1, 0)])
print(f"  residual -> {hexagon_residual(model, F, RSymbolTable(model, r_entries)):.3e}")

print("\nGauge freedom: rephasing every fusion vertex leaves the pentagon exact:")
rng = np.random.default_rng(1)
phases = {
    t: complex(np.exp(2j * np.pi * rng.random()))
    for t in itertools.product(model.labels, repeat=3)
    if model.n(*t)
}
print(f"  gauged residual: {pentagon_residual(model, gauge_transform(F, phases)):.3e}")

print("\nAbelian Z_3 with trivial data is exactly consistent:")
z3 = zd_model(3)
f3, r3 = trivial_data(z3)
print(f"  pentagon {pentagon_residual(z3, f3)}, hexagon {hexagon_residual(z3, f3, r3)}")

print("\nSU(2)_3 restricted to integer spins reproduces the Fibonacci fusion rules:")
for a in (0, 1):
    for b in (0, 1):
        allowed = [c for c in (0, 1) if su2k_admissible(a, b, c, 3)]
        print(f"  {a} x {b} -> {allowed}")
