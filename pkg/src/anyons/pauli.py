"""Qudit Pauli strings on a fixed set of sites, with exact phase tracking.

A :class:`PauliString` over ``n`` sites of dimension ``d`` represents

    exp(i pi phase / d) * prod_e X_e^{x_e} Z_e^{z_e}

with exponents in Z_d and the phase exponent in Z_{2d} (units of pi/d;
this granularity keeps the qubit Y = i X Z exact).  The generalised Pauli
matrices obey ``Z^r X^s = exp(2 pi i r s / d) X^s Z^r``, so two strings
commute up to the phase exponent

    commutation_phase(P, Q) = 2 * sum_e (z^P_e x^Q_e - x^P_e z^Q_e)  mod 2d

with ``P Q = exp(i pi phi / d) Q P``.  All operations are pure; nothing
here mutates shared state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(eq=False)
class PauliString:
    """An n-site qudit Pauli operator in X-then-Z normal order per site."""

    d: int
    x: np.ndarray
    z: np.ndarray
    phase: int = 0

    def __post_init__(self):
        if self.d < 2:
            raise InputError("qudit dimension must be >= 2")
        x = np.asarray(self.x, dtype=np.int64) % self.d
        z = np.asarray(self.z, dtype=np.int64) % self.d
        if x.shape != z.shape or x.ndim != 1:
            raise InputError("x and z exponent vectors must be equal-length 1-d")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "phase", int(self.phase) % (2 * self.d))

    @classmethod
    def identity(cls, d: int, n: int) -> "PauliString":
        return cls(d, np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))

    @property
    def n_sites(self) -> int:
        return len(self.x)

    def is_identity(self) -> bool:
        return not self.x.any() and not self.z.any() and self.phase == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.d == other.d
            and self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __mul__(self, other: "PauliString") -> "PauliString":
        if not isinstance(other, PauliString):
            return NotImplemented
        self._check_compatible(other)
        # Z^{z1} moves past X^{x2}: each site contributes 2 z1 x2 in pi/d units.
        cross = 2 * int(np.dot(self.z, other.x))
        return PauliString(
            self.d,
            self.x + other.x,
            self.z + other.z,
            self.phase + other.phase + cross,
        )

    def inverse(self) -> "PauliString":
        cross = 2 * int(np.dot(self.z, self.x))
        return PauliString(self.d, -self.x, -self.z, -self.phase + cross)

    def __pow__(self, k: int) -> "PauliString":
        if k < 0:
            return self.inverse() ** (-k)
        out = PauliString.identity(self.d, self.n_sites)
        for _ in range(k):
            out = out * self
        return out

    def _check_compatible(self, other: "PauliString"):
        if self.d != other.d or self.n_sites != other.n_sites:
            raise InputError("Pauli strings live on different spaces")

    # -- dense backends ----------------------------------------------------

    def dense(self) -> np.ndarray:
        """Explicit matrix over the d^n-dimensional space (small n only).

        Site 0 indexes the least significant digit of the basis index,
        matching :meth:`apply_to_state`.
        """
        d, n = self.d, self.n_sites
        omega = np.exp(2j * np.pi / d)
        shift = np.zeros((d, d), dtype=complex)
        for k in range(d):
            shift[(k + 1) % d, k] = 1.0
        clock = np.diag([omega ** k for k in range(d)])
        out = np.array([[np.exp(1j * np.pi * self.phase / d)]], dtype=complex)
        for e in reversed(range(n)):
            site = np.linalg.matrix_power(shift, int(self.x[e])) @ \
                np.linalg.matrix_power(clock, int(self.z[e]))
            out = np.kron(out, site)
        return out

    def apply_to_state(self, psi: np.ndarray) -> np.ndarray:
        """Apply to a dense qubit state vector (d = 2 only).

        Sites map to bits of the basis index with site 0 as the least
        significant bit.
        """
        if self.d != 2:
            raise InputError("dense state backend supports d = 2 only")
        n = self.n_sites
        if psi.shape != (2 ** n,):
            raise InputError("state vector has the wrong dimension")
        idx = np.arange(2 ** n)
        zmask = int(sum(1 << e for e in range(n) if self.z[e]))
        xmask = int(sum(1 << e for e in range(n) if self.x[e]))
        signs = 1 - 2 * (_popcount_array(idx & zmask) & 1)
        out = np.zeros_like(psi, dtype=complex)
        out[idx ^ xmask] = (1j ** self.phase) * signs * psi
        return out

    def expectation(self, psi: np.ndarray) -> complex:
        """``<psi|P|psi>`` on the dense qubit backend."""
        return complex(np.vdot(psi, self.apply_to_state(psi)))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "d": self.d,
            "x": [int(v) for v in self.x],
            "z": [int(v) for v in self.z],
            "phase": self.phase,
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PauliString":
        doc = json.loads(text)
        return cls(
            doc["d"],
            np.array(doc["x"], dtype=np.int64),
            np.array(doc["z"], dtype=np.int64),
            doc["phase"],
        )


def _popcount_array(values: np.ndarray) -> np.ndarray:
    out = np.zeros_like(values)
    v = values.copy()
    while v.any():
        out += v & 1
        v >>= 1
    return out


def commutation_phase(p: PauliString, q: PauliString) -> int:
    """Exponent phi (mod 2d, units pi/d) with ``P Q = exp(i pi phi/d) Q P``."""
    p._check_compatible(q)
    phi = 2 * int(np.dot(p.z, q.x) - np.dot(p.x, q.z))
    return phi % (2 * p.d)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over the prime field Z_p."""
    m = (np.asarray(matrix, dtype=np.int64) % p).copy()
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, rows):
            if m[r, col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        for r in range(rows):
            if r != rank and m[r, col] % p:
                m[r] = (m[r] - m[r, col] * m[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank
