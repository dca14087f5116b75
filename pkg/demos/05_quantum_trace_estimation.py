"""Estimating normalised traces the way a quantum computer would.

Evaluating a Jones polynomial reduces to the trace of a product of braid
unitaries.  The Hadamard test estimates that trace from +-1 measurement
outcomes: a work qubit in |+> controls the product applied to a maximally
mixed register; X- and Y-basis statistics of the work qubit give the real
and imaginary parts.  The simulation reproduces the outcome statistics
shot by shot.
"""

import numpy as np

from anyons import (
    exact_normalized_trace,
    fib_qubit_rep,
    hadamard_test_trace,
    parse_braid,
)

rep = fib_qubit_rep()
word = parse_braid("B3: s1 s2 s1")
matrices = [rep.generator(g) for g in word.letters]

exact = exact_normalized_trace(matrices)
print(f"exact normalised trace of the braid product: {exact:.6f}")

print("\nSampled estimates (same braid, increasing shots, seed 7):")
for shots in (100, 1_000, 10_000, 100_000):
    est = hadamard_test_trace(matrices, shots=shots, seed=7)
    err = abs(est.value - exact)
    print(f"  {shots:>7d} shots: {est.value:+.4f}  |error| {err:.4f}  "
          f"stderr ({est.stderr_re:.4f}, {est.stderr_im:.4f})")

print("\nStandard error halves when shots quadruple:")
ratios = []
for seed in range(30):
    lo = hadamard_test_trace(matrices, shots=2_000, seed=seed)
    hi = hadamard_test_trace(matrices, shots=8_000, seed=seed + 100)
    ratios.append(hi.stderr_re / lo.stderr_re)
print(f"  mean stderr ratio over 30 seeds: {np.mean(ratios):.3f} (ideal 0.5)")

print("\nPure-state variant estimates a single diagonal element:")
est = hadamard_test_trace(matrices, shots=50_000, seed=3, basis_state=0)
product = np.linalg.multi_dot(matrices)
print(f"  <0|U|0> = {product[0, 0]:.4f}, estimated {est.value:.4f}")
