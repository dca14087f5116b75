r"""F and R symbol tables and their consistency checks.

An F symbol ``F(abcd)^i_j`` is the recoupling coefficient between the two
ways to fuse three labels ``a, b, c`` into ``d``: the left-associated tree
with vertices ``(a, b -> i)`` and ``(i, c -> d)``, and the right-associated
tree with vertices ``(b, c -> j)`` and ``(a, j -> d)``::

    a   b   c            a   b   c
     \ /   /              \   \ /
      i   /    = sum_j     \   j     x  F(abcd)^i_j
       \ /                  \ /
        d                    d

An entry is admissible exactly when those four oriented vertices are
allowed fusion products (read as unordered label sets they are ``{abi}``,
``{cdi}``, ``{cbj}``, ``{adj}``); non-admissible entries are identically
zero.  For each fixed ``(a,b,c,d)`` the matrix ``F(abcd)^i_j`` must be
unitary.

An R symbol ``R(a,b -> c)`` is the phase acquired when ``a`` and ``b`` are
exchanged counterclockwise in fusion channel ``c``.

The pentagon and hexagon scans evaluate the consistency equations over the
full label product and report the worst absolute deviation.  The equations
are stated in the tree-oriented form, which is what makes them hold
verbatim for non-self-dual models (abelian Z_d with d > 2); for self-dual
models such as the Fibonacci theory the oriented and unordered readings
have identical admissible sets and values.  The scans are plain tensor
contractions, so results never depend on evaluation order.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CompletenessError, InputError, InvariantViolation
from .fusion import AnyonModel, Label, fibonacci_model

PHI = (1 + math.sqrt(5)) / 2


def f_admissible(model: AnyonModel, a, b, c, d, i, j) -> bool:
    """True when all four vertex triples of ``F(abcd)^i_j`` are allowed:
    ``(a, b -> i)``, ``(i, c -> d)``, ``(b, c -> j)``, ``(a, j -> d)``."""
    return bool(
        model.n(a, b, i)
        and model.n(i, c, d)
        and model.n(b, c, j)
        and model.n(a, j, d)
    )


@dataclass(frozen=True)
class FSymbolTable:
    """Complete map of admissible ``(a, b, c, d, i, j)`` tuples to values."""

    model: AnyonModel
    entries: dict[tuple[Label, Label, Label, Label, Label, Label], complex]

    def value(self, a, b, c, d, i, j) -> complex:
        key = (a, b, c, d, i, j)
        if not f_admissible(self.model, *key):
            return 0.0
        try:
            return self.entries[key]
        except KeyError:
            raise CompletenessError(f"F table missing admissible entry {key}") from None

    def check_complete(self):
        for key in itertools.product(self.model.labels, repeat=6):
            if f_admissible(self.model, *key) and key not in self.entries:
                raise CompletenessError(f"F table missing admissible entry {key}")

    def dense(self) -> np.ndarray:
        """Values as a 6-index complex tensor over label indices."""
        self.check_complete()
        k = len(self.model.labels)
        out = np.zeros((k,) * 6, dtype=complex)
        idx = {a: i for i, a in enumerate(self.model.labels)}
        for key, val in self.entries.items():
            out[tuple(idx[x] for x in key)] = val
        return out

    def block(self, a, b, c, d) -> tuple[list[Label], list[Label], np.ndarray]:
        """The matrix ``F(abcd)^i_j`` with its admissible row/column labels."""
        m = self.model
        rows = [i for i in m.labels if m.n(a, b, i) and m.n(i, c, d)]
        cols = [j for j in m.labels if m.n(b, c, j) and m.n(a, j, d)]
        mat = np.array(
            [[self.value(a, b, c, d, i, j) for j in cols] for i in rows],
            dtype=complex,
        ).reshape(len(rows), len(cols))
        return rows, cols, mat

    def to_json(self) -> str:
        doc = {
            "model": json.loads(self.model.to_json()),
            "entries": [
                [list(k), [complex(v).real, complex(v).imag]]
                for k, v in sorted(self.entries.items(), key=lambda kv: str(kv[0]))
            ],
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FSymbolTable":
        doc = json.loads(text)
        model = AnyonModel.from_json(json.dumps(doc["model"]))
        entries = {
            tuple(k): complex(re, im) for k, (re, im) in doc["entries"]
        }
        return cls(model, entries)


@dataclass(frozen=True)
class RSymbolTable:
    """Map of allowed exchange triples ``(a, b, c)`` to unit-modulus phases."""

    model: AnyonModel
    entries: dict[tuple[Label, Label, Label], complex]

    def value(self, a, b, c) -> complex:
        key = (a, b, c)
        if not self.model.n(a, b, c):
            return 0.0
        try:
            return self.entries[key]
        except KeyError:
            raise CompletenessError(f"R table missing allowed entry {key}") from None

    def check_complete(self):
        for key in itertools.product(self.model.labels, repeat=3):
            if self.model.n(*key) and key not in self.entries:
                raise CompletenessError(f"R table missing allowed entry {key}")

    def dense(self) -> np.ndarray:
        self.check_complete()
        k = len(self.model.labels)
        out = np.zeros((k,) * 3, dtype=complex)
        idx = {a: i for i, a in enumerate(self.model.labels)}
        for key, val in self.entries.items():
            out[tuple(idx[x] for x in key)] = val
        return out

    def to_json(self) -> str:
        doc = {
            "model": json.loads(self.model.to_json()),
            "entries": [
                [list(k), [v.real, v.imag]]
                for k, v in sorted(self.entries.items(), key=lambda kv: str(kv[0]))
            ],
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RSymbolTable":
        doc = json.loads(text)
        model = AnyonModel.from_json(json.dumps(doc["model"]))
        entries = {tuple(k): complex(re, im) for k, (re, im) in doc["entries"]}
        return cls(model, entries)


# ---------------------------------------------------------------------------
# concrete data


def fibonacci_data() -> tuple[AnyonModel, FSymbolTable, RSymbolTable]:
    """The Fibonacci anyon solution of the pentagon and hexagon equations.

    All admissible F entries with a vacuum label among ``(a, b, c, d)`` are 1;
    the only non-trivial block is the real symmetric matrix

        F(1111) = [[1/phi,        1/sqrt(phi)],
                   [1/sqrt(phi), -1/phi      ]]

    and the exchange phases are ``R(1,1->0) = exp(4 pi i / 5)`` and
    ``R(1,1->1) = -exp(2 pi i / 5)`` with trivial vacuum entries.
    """
    model = fibonacci_model()
    f2 = np.array(
        [[1 / PHI, 1 / math.sqrt(PHI)], [1 / math.sqrt(PHI), -1 / PHI]]
    )
    entries: dict[tuple, complex] = {}
    for key in itertools.product(model.labels, repeat=6):
        if not f_admissible(model, *key):
            continue
        a, b, c, d, i, j = key
        if (a, b, c, d) == (1, 1, 1, 1):
            entries[key] = complex(f2[i, j])
        else:
            entries[key] = 1.0 + 0.0j
    r_entries = {
        (0, 0, 0): 1.0 + 0.0j,
        (0, 1, 1): 1.0 + 0.0j,
        (1, 0, 1): 1.0 + 0.0j,
        (1, 1, 0): np.exp(4j * np.pi / 5),
        (1, 1, 1): -np.exp(2j * np.pi / 5),
    }
    return model, FSymbolTable(model, entries), RSymbolTable(model, r_entries)


def trivial_data(model: AnyonModel) -> tuple[FSymbolTable, RSymbolTable]:
    """F == 1 on every admissible tuple and R == 1 on every allowed triple.

    A consistent (pentagon- and hexagon-exact) solution for any abelian
    group model where all fusion multiplicities are one.
    """
    f_entries = {
        key: 1.0 + 0.0j
        for key in itertools.product(model.labels, repeat=6)
        if f_admissible(model, *key)
    }
    r_entries = {
        key: 1.0 + 0.0j
        for key in itertools.product(model.labels, repeat=3)
        if model.n(*key)
    }
    return FSymbolTable(model, f_entries), RSymbolTable(model, r_entries)


def gauge_transform(
    f: FSymbolTable, phases: dict[tuple[Label, Label, Label], complex]
) -> FSymbolTable:
    """Rephase fusion-vertex bases by unit phases ``u(x, y, z)`` per vertex.

    ``phases`` is keyed by allowed fusion vertices ``(x, y, z)`` meaning
    ``x`` and ``y`` fuse to ``z``.  The F symbols transform with the left
    tree's vertices over the right tree's:

        F'(abcd)^i_j = F(abcd)^i_j * u(a,b,i) u(i,c,d) / (u(b,c,j) u(a,j,d))

    which leaves the pentagon residual invariant.
    """
    for key, u in phases.items():
        if not f.model.n(*key):
            raise InputError(f"phase attached to non-allowed vertex {key}")
        if abs(abs(u) - 1.0) > 1e-12:
            raise InputError(f"gauge phase at {key} is not unit modulus")
    out = {}
    for (a, b, c, d, i, j), val in f.entries.items():
        out[(a, b, c, d, i, j)] = (
            val
            * phases.get((a, b, i), 1.0)
            * phases.get((i, c, d), 1.0)
            / (phases.get((b, c, j), 1.0) * phases.get((a, j, d), 1.0))
        )
    return FSymbolTable(f.model, out)


# ---------------------------------------------------------------------------
# residual checks


def pentagon_residual(model: AnyonModel, f: FSymbolTable) -> float:
    """Worst absolute deviation of the pentagon identity

        F(fcde)^g_l F(able)^f_k
            = sum_h F(abcg)^f_h F(ahde)^g_k F(bcdk)^h_l

    over all label assignments (a, b, c, d, e, f, g, k, l).  This is the
    tree-oriented statement of the familiar five-recoupling cycle; common
    self-dual shorthands of it (with slots permuted via tetrahedral 6j
    symmetry) coincide with it on every self-dual model.
    """
    if f.model != model:
        raise InputError("F table belongs to a different model")
    fv = f.dense()
    lhs = np.einsum("fcdegl,ablefk->abcdefgkl", fv, fv)
    rhs = np.einsum("abcgfh,ahdegk,bcdkhl->abcdefgkl", fv, fv, fv)
    return float(np.max(np.abs(lhs - rhs)))


def hexagon_residual(model: AnyonModel, f: FSymbolTable, r: RSymbolTable) -> float:
    """Worst absolute deviation of the hexagon identity

        R(mk)_r F(lmkj)^q_r R(ml)_q
            = sum_p F(lkmj)^p_r R(mp)_j F(mlkj)^q_p

    over all label assignments (m, k, l, j, q, r).
    """
    if f.model != model or r.model != model:
        raise InputError("symbol tables belong to a different model")
    fv = f.dense()
    rv = r.dense()
    lhs = np.einsum("mkr,lmkjqr,mlq->mkljqr", rv, fv, rv)
    rhs = np.einsum("lkmjpr,mpj,mlkjqp->mkljqr", fv, rv, fv)
    return float(np.max(np.abs(lhs - rhs)))


def f_unitarity_residual(model: AnyonModel, f: FSymbolTable) -> float:
    """``max over (a,b,c,d) of max-entry norm of F(abcd) F(abcd)^dag - 1``."""
    if f.model != model:
        raise InputError("F table belongs to a different model")
    f.check_complete()
    worst = 0.0
    for abcd in itertools.product(model.labels, repeat=4):
        rows, cols, mat = f.block(*abcd)
        if not rows and not cols:
            continue
        if len(rows) != len(cols):
            raise InvariantViolation(
                f"F block {abcd} is not square ({len(rows)} x {len(cols)})"
            )
        gram = mat @ mat.conj().T - np.eye(len(rows))
        worst = max(worst, float(np.max(np.abs(gram))))
    return worst


# ---------------------------------------------------------------------------
# SU(2)_k admissibility


def _as_half_integer(x) -> Fraction:
    v = Fraction(x).limit_denominator(2) if isinstance(x, float) else Fraction(x)
    if v != x or v.denominator not in (1, 2) or v < 0:
        raise InputError(f"{x!r} is not a non-negative half-integer")
    return v


def su2k_admissible(j1, j2, j, k: int) -> bool:
    """Whether ``(j1, j2, j)`` is an allowed fusion triple in SU(2)_k.

    Requires the triangle rule ``|j1 - j2| <= j <= j1 + j2`` with integer
    ``j1 + j2 + j``, every spin bounded by ``k/2``, and the level truncation
    ``j1 + j2 + j <= k``.
    """
    if k < 1:
        raise InputError("level k must be a positive integer")
    a, b, c = _as_half_integer(j1), _as_half_integer(j2), _as_half_integer(j)
    if (a + b + c).denominator != 1:
        return False
    if not (abs(a - b) <= c <= a + b):
        return False
    if max(a, b, c) > Fraction(k, 2):
        return False
    return a + b + c <= k
