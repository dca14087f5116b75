"""Levin-Wen operators for the Fibonacci string-net model, one face at a time.

The smallest patch exhibiting the full operator algebra is a single
hexagonal face: six boundary edges ``g h i j k l`` around the hexagon and
six external edges ``a b c d e f``, one per vertex, 12 qubits in all
(string absent = 0, present = 1; strings are self-dual).  Basis order puts
the external qubits in the high bits, ``a`` most significant, then the
boundary qubits with ``g`` most significant.

The vertex term is the diagonal rank-5 projector onto allowed branchings
{000, 011, 101, 110, 111} of the three edges meeting at a vertex.  The
face operators ``B^s`` fuse a virtual type-``s`` string into the face:
``B^0`` is the identity on each external sector (fusing the vacuum string
changes nothing), while ``B^1`` maps boundary configuration ``ghijkl`` to
``g'h'i'j'k'l'`` with the product of six F symbols

    F(a l 1 g')^g_{l'} F(b g 1 h')^h_{g'} F(c h 1 i')^i_{h'}
    F(d i 1 j')^j_{i'} F(e j 1 k')^k_{j'} F(f k 1 l')^l_{k'}

and is identically zero between different external sectors (structural
block-diagonality).  The face term is

    H_f = (d_0 B^0 + d_1 B^1) / (d_0^2 + d_1^2),   d_0 = 1, d_1 = phi,

a Hermitian projector on the subspace where all six vertex constraints
hold, commuting there and everywhere with every vertex projector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .errors import InputError
from .fsymbols import PHI, fibonacci_data

#: Allowed branchings of three edge occupations at a trivalent vertex.
ALLOWED_BRANCHINGS = frozenset(
    {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)}
)


def branching_allowed(i: int, j: int, k: int) -> bool:
    return (i, j, k) in ALLOWED_BRANCHINGS


def vertex_projector() -> tuple[np.ndarray, dict[tuple[int, ...], Fraction]]:
    """The 8x8 vertex projector and its exact Z-Pauli expansion.

    Returns ``(matrix, coeffs)`` where ``coeffs`` maps each subset of the
    three qubit slots (as a sorted tuple) to the exact coefficient of the
    corresponding Z product, with Z = diag(1, -1) acting on the occupation
    basis (|0> = no string).  The expansion is

        H_v = (5 - Z1 - Z2 - Z3 + Z1 Z2 + Z1 Z3 + Z2 Z3 + 3 Z1 Z2 Z3) / 8.
    """
    diag = np.zeros(8)
    for bits in product((0, 1), repeat=3):
        if branching_allowed(*bits):
            diag[bits[0] * 4 + bits[1] * 2 + bits[2]] = 1.0
    matrix = np.diag(diag)

    coeffs: dict[tuple[int, ...], Fraction] = {}
    for subset_bits in product((0, 1), repeat=3):
        subset = tuple(q for q in range(3) if subset_bits[q])
        tr = 0
        for bits in product((0, 1), repeat=3):
            if branching_allowed(*bits):
                sign = (-1) ** sum(bits[q] for q in subset)
                tr += sign
        coeffs[subset] = Fraction(tr, 8)
    return matrix, coeffs


@dataclass(frozen=True)
class FaceOperatorMatrix:
    """A face operator, stored as one 64x64 boundary block per external
    sector (structural block-diagonality in the external edges)."""

    s: int
    blocks: np.ndarray  # shape (64, 64, 64): [external, target, source]

    def block(self, external: int) -> np.ndarray:
        """Boundary-space matrix for one external-edge configuration."""
        if not (0 <= external < 64):
            raise InputError("external sector index must be in [0, 64)")
        return self.blocks[external]

    def dense(self) -> np.ndarray:
        """Full 4096x4096 matrix (external qubits are the high bits)."""
        out = np.zeros((4096, 4096), dtype=complex)
        for ext in range(64):
            sl = slice(ext * 64, (ext + 1) * 64)
            out[sl, sl] = self.blocks[ext]
        return out


def _f_tensor() -> np.ndarray:
    """``W[x, y, zp, u, yp] = F(x y 1 zp)^u_{yp}`` over Fibonacci labels."""
    _, ftab, _ = fibonacci_data()
    w = np.zeros((2, 2, 2, 2, 2), dtype=complex)
    for x, y, zp, u, yp in product((0, 1), repeat=5):
        w[x, y, zp, u, yp] = ftab.value(x, y, 1, zp, u, yp)
    return w


def face_operator(s: int) -> FaceOperatorMatrix:
    """The Levin-Wen face operator ``B^s`` for Fibonacci strings."""
    if s not in (0, 1):
        raise InputError("string type s must be 0 or 1")
    if s == 0:
        blocks = np.broadcast_to(np.eye(64, dtype=complex), (64, 64, 64)).copy()
        return FaceOperatorMatrix(0, blocks)
    w = _f_tensor()
    # indices: external a..f; source boundary g h i j k l; target m n o p q r
    tensor = np.einsum(
        "almgr,bgnhm,choin,dipjo,ejqkp,fkrlq->abcdefghijklmnopqr",
        w, w, w, w, w, w,
    )
    t = tensor.reshape(64, 64, 64)  # [external, source, target]
    blocks = np.transpose(t, (0, 2, 1)).copy()  # [external, target, source]
    return FaceOperatorMatrix(1, blocks)


def face_term(b0: FaceOperatorMatrix | None = None,
              b1: FaceOperatorMatrix | None = None) -> np.ndarray:
    """``H_f`` blocks, shape (64, 64, 64): ``(B^0 + phi B^1) / (1 + phi^2)``."""
    b0 = face_operator(0) if b0 is None else b0
    b1 = face_operator(1) if b1 is None else b1
    return (b0.blocks + PHI * b1.blocks) / (1.0 + PHI ** 2)


def _vertex_triples(ext: int, bnd: int) -> list[tuple[int, int, int]]:
    """The six (external, previous-boundary, next-boundary) triples."""
    a = [(ext >> (5 - q)) & 1 for q in range(6)]
    g = [(bnd >> (5 - q)) & 1 for q in range(6)]
    # vertex q joins external edge q with boundary edges (q-1 mod 6) and q:
    # (a, l, g), (b, g, h), (c, h, i), (d, i, j), (e, j, k), (f, k, l)
    return [(a[q], g[(q - 1) % 6], g[q]) for q in range(6)]


def constrained_configs(ext: int) -> list[int]:
    """Boundary configurations satisfying all six vertex constraints."""
    return [
        bnd
        for bnd in range(64)
        if all(branching_allowed(*t) for t in _vertex_triples(ext, bnd))
    ]


def vertex_diagonal(ext: int, vertex: int) -> np.ndarray:
    """Diagonal of one vertex projector on the boundary space of a sector."""
    if not (0 <= vertex < 6):
        raise InputError("vertex index must be in [0, 6)")
    return np.array(
        [
            1.0 if branching_allowed(*_vertex_triples(ext, bnd)[vertex]) else 0.0
            for bnd in range(64)
        ]
    )


def face_term_checks() -> dict[str, float]:
    """Residual report for the face term, worst case over external sectors.

    * ``hermiticity``: max-entry norm of ``H_f - H_f^dag`` restricted to
      the subspace where all six vertex constraints hold;
    * ``projector``: max-entry norm of ``H_f^2 - H_f`` on that subspace;
    * ``vertex_commutation``: max-entry norm of ``[H_f, H_v]`` over the
      whole boundary block, for each of the six vertex projectors.
    """
    h = face_term()
    herm = 0.0
    proj = 0.0
    comm = 0.0
    for ext in range(64):
        block = h[ext]
        allowed = constrained_configs(ext)
        if allowed:
            sub = block[np.ix_(allowed, allowed)]
            herm = max(herm, float(np.max(np.abs(sub - sub.conj().T))))
            proj = max(proj, float(np.max(np.abs(sub @ sub - sub))))
        for vertex in range(6):
            dv = vertex_diagonal(ext, vertex)
            commutator = block * dv[np.newaxis, :] - dv[:, np.newaxis] * block
            comm = max(comm, float(np.max(np.abs(commutator))))
    return {
        "hermiticity": herm,
        "projector": proj,
        "vertex_commutation": comm,
    }
