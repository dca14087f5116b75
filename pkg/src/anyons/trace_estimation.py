"""Hadamard-test estimation of normalised traces of unitary products.

The quantum protocol keeps a register in the completely mixed state and one
work qubit in ``|+>``; applying the work-controlled product of unitaries
and measuring the work qubit in the x and y bases yields +-1 outcomes whose
means estimate the real and imaginary parts of ``Tr[prod_j U_j] / D``.

The simulation here reproduces the protocol's outcome statistics without
building the controlled circuit: per shot it draws a uniformly random basis
state ``|s>`` (the mixed register), computes the exact biases
``Re <s|U|s>`` and ``Im <s|U|s>``, and then samples the two +-1 outcomes.
That is equivalent in distribution to state-vector simulation of the
circuit.  Passing ``basis_state`` replaces the mixed register with the pure
state ``|s>`` and estimates the unnormalised diagonal element ``<s|U|s>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, ResourceError

#: Cap on the product dimension accepted by the sampled estimator.
DIM_CAP = 2 ** 10


@dataclass(frozen=True)
class TraceEstimate:
    """A sampled estimate of a normalised trace.

    ``stderr_re``/``stderr_im`` are the sample standard deviations of the
    +-1 outcome streams divided by sqrt(shots); both lie in [0, 1].
    """

    value: complex
    stderr_re: float
    stderr_im: float
    shots: int
    seed: int


def exact_normalized_trace(matrices: list[np.ndarray]) -> complex:
    """``Tr[prod_j U_j] / D`` for an ordered list of square matrices."""
    if not matrices:
        raise InputError("need at least one matrix")
    dim = matrices[0].shape[0]
    for m in matrices:
        if m.shape != (dim, dim):
            raise InputError("matrices must be square and of equal dimension")
    prod = np.eye(dim, dtype=complex)
    for m in matrices:
        prod = prod @ m
    return complex(np.trace(prod) / dim)


def hadamard_test_trace(
    matrices: list[np.ndarray],
    shots: int,
    seed: int,
    basis_state: int | None = None,
) -> TraceEstimate:
    """Simulate the mixed-state Hadamard test for the product of ``matrices``.

    Per shot, one x-basis and one y-basis outcome are drawn (two independent
    Bernoullis with the exact biases for that shot's register state); the
    estimate is ``mean(x) + i mean(y)``.  Reproducible for a fixed ``seed``;
    the real and imaginary parts always lie in [-1, 1].
    """
    if shots < 1:
        raise InputError("shots must be >= 1")
    if not matrices:
        raise InputError("need at least one matrix")
    dim = matrices[0].shape[0]
    if dim > DIM_CAP:
        raise ResourceError(f"dimension {dim} exceeds cap {DIM_CAP}")
    for m in matrices:
        if m.shape != (dim, dim):
            raise InputError("matrices must be square and of equal dimension")
    prod = np.eye(dim, dtype=complex)
    for m in matrices:
        prod = prod @ m
    diag = np.diagonal(prod)
    if np.max(np.abs(diag)) > 1.0 + 1e-9:
        raise InputError(
            "matrix elements exceed unit modulus; the Hadamard test needs "
            "a unitary product"
        )

    rng = np.random.Generator(np.random.Philox(key=seed))
    if basis_state is None:
        states = rng.integers(0, dim, size=shots)
    else:
        if not (0 <= basis_state < dim):
            raise InputError(f"basis state {basis_state} out of range")
        states = np.full(shots, basis_state)
    bias_re = np.real(diag[states])
    bias_im = np.imag(diag[states])
    x_out = np.where(rng.random(shots) < (1.0 + bias_re) / 2.0, 1.0, -1.0)
    y_out = np.where(rng.random(shots) < (1.0 + bias_im) / 2.0, 1.0, -1.0)

    value = complex(x_out.mean(), y_out.mean())
    if shots > 1:
        stderr_re = float(x_out.std(ddof=1) / math.sqrt(shots))
        stderr_im = float(y_out.std(ddof=1) / math.sqrt(shots))
    else:
        stderr_re = stderr_im = 0.0
    return TraceEstimate(value, stderr_re, stderr_im, shots, seed)
