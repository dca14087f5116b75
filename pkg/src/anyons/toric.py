"""Qudit toric-code stabilizer engine on a periodic square lattice.

Geometry
--------
Qudits live on the edges of an ``Lx x Ly`` torus.  Horizontal edge
``h(x, y)`` points from vertex ``(x, y)`` to ``(x+1, y)``; vertical edge
``v(x, y)`` points from ``(x, y)`` to ``(x, y+1)`` (coordinates wrap).
Face ``(x, y)`` has vertex ``(x, y)`` as its lower-left corner.

Stabilizer convention
---------------------
Vertex ("star") stabilizers are X-type with divergence exponents (+1 on
incoming edges, -1 on outgoing); face ("plaquette") stabilizers are Z-type
with counterclockwise circulation exponents.  The oriented exponents make
every star/plaquette pair commute for all qudit dimensions, and they pin
the particle dictionary used throughout:

* a *charge* is a vertex defect, created at the endpoints of a Z-type
  string running along lattice paths;
* a *flux* is a face defect, created at the endpoints of an X-type string
  running along dual-lattice paths;
* a *dyon* ``(r, s)`` is ``r`` charge units and ``s`` flux units together,
  and winding ``(r, s)`` around ``(r', s')`` yields the phase
  ``2 pi (r s' + s r') / d``.

(The familiar alternative puts Z on stars and X on plaquettes; the two
descriptions are exchanged by the lattice duality and give identical
degeneracy, statistics and correction behaviour.  This orientation is the
one in which Z strings terminate on vertex defects, which is what the
charge/flux naming above requires.)

A dense state-vector backend (d = 2, up to 20 qubits) supports ground-state
construction and the charge/flux interferometer protocol.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, InvariantViolation, ResourceError
from .pauli import PauliString, commutation_phase, rank_mod_p

#: Dense state-vector backend cap (qubits).
DENSE_QUBIT_CAP = 20


@dataclass(frozen=True)
class TorusLattice:
    """Square lattice on the torus; see the module docstring for indexing."""

    lx: int
    ly: int

    def __post_init__(self):
        if self.lx < 2 or self.ly < 2:
            raise InputError("torus lattice needs lx, ly >= 2")

    @property
    def n_vertices(self) -> int:
        return self.lx * self.ly

    @property
    def n_faces(self) -> int:
        return self.lx * self.ly

    @property
    def n_edges(self) -> int:
        return 2 * self.lx * self.ly

    def vertex_index(self, x: int, y: int) -> int:
        return (y % self.ly) * self.lx + (x % self.lx)

    face_index = vertex_index

    def vertex_coords(self, index: int) -> tuple[int, int]:
        return index % self.lx, index // self.lx

    face_coords = vertex_coords

    def h_edge(self, x: int, y: int) -> int:
        return (y % self.ly) * self.lx + (x % self.lx)

    def v_edge(self, x: int, y: int) -> int:
        return self.lx * self.ly + (y % self.ly) * self.lx + (x % self.lx)

    def is_horizontal(self, edge: int) -> bool:
        return edge < self.lx * self.ly

    def edge_endpoints(self, edge: int) -> tuple[int, int]:
        """(tail, head) vertex indices along the edge orientation."""
        if self.is_horizontal(edge):
            x, y = edge % self.lx, edge // self.lx
            return self.vertex_index(x, y), self.vertex_index(x + 1, y)
        e = edge - self.lx * self.ly
        x, y = e % self.lx, e // self.lx
        return self.vertex_index(x, y), self.vertex_index(x, y + 1)

    def dual_edge_endpoints(self, edge: int) -> tuple[int, int]:
        """(tail, head) face indices; dual orientation is the primal one
        rotated counterclockwise (h: face below -> face above; v: face
        right -> face left)."""
        if self.is_horizontal(edge):
            x, y = edge % self.lx, edge // self.lx
            return self.face_index(x, y - 1), self.face_index(x, y)
        e = edge - self.lx * self.ly
        x, y = e % self.lx, e // self.lx
        return self.face_index(x, y), self.face_index(x - 1, y)

    def star_exponents(self, x: int, y: int) -> dict[int, int]:
        """Divergence signs at a vertex: incoming edges +1, outgoing -1."""
        return {
            self.h_edge(x - 1, y): +1,
            self.v_edge(x, y - 1): +1,
            self.h_edge(x, y): -1,
            self.v_edge(x, y): -1,
        }

    def face_boundary_exponents(self, x: int, y: int) -> dict[int, int]:
        """Counterclockwise circulation signs around a face."""
        return {
            self.h_edge(x, y): +1,
            self.v_edge(x + 1, y): +1,
            self.h_edge(x, y + 1): -1,
            self.v_edge(x, y): -1,
        }

    def to_json(self) -> str:
        return json.dumps({"lx": self.lx, "ly": self.ly}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "TorusLattice":
        doc = json.loads(text)
        return cls(doc["lx"], doc["ly"])

    def validate(self):
        """Structural sanity: edge incidences and star/face overlaps."""
        vertex_count = [0] * self.n_edges
        face_count = [0] * self.n_edges
        stars = []
        faces = []
        for y in range(self.ly):
            for x in range(self.lx):
                s = self.star_exponents(x, y)
                f = self.face_boundary_exponents(x, y)
                stars.append(set(s))
                faces.append(set(f))
                for e in s:
                    vertex_count[e] += 1
                for e in f:
                    face_count[e] += 1
        if any(c != 2 for c in vertex_count) or any(c != 2 for c in face_count):
            raise InvariantViolation("an edge is not in exactly 2 stars and 2 faces")
        for s in stars:
            for f in faces:
                if len(s & f) not in (0, 2):
                    raise InvariantViolation("a star and a face share 1 edge")


@dataclass(frozen=True)
class Syndrome:
    """Violated stabilizers with their eigenvalue exponents (mod d)."""

    d: int
    vertex: dict[int, int]
    face: dict[int, int]

    def __post_init__(self):
        object.__setattr__(
            self, "vertex", {v: e % self.d for v, e in self.vertex.items() if e % self.d}
        )
        object.__setattr__(
            self, "face", {f: e % self.d for f, e in self.face.items() if e % self.d}
        )

    def check_sum_rule(self):
        if sum(self.vertex.values()) % self.d or sum(self.face.values()) % self.d:
            raise InputError("syndrome violates the torus sum rule")

    def is_empty(self) -> bool:
        return not self.vertex and not self.face


# ---------------------------------------------------------------------------
# stabilizers


def build_stabilizers(
    lat: TorusLattice, d: int
) -> tuple[list[PauliString], list[PauliString]]:
    """One X-type star per vertex and one Z-type plaquette per face."""
    if d < 2:
        raise InputError("qudit dimension must be >= 2")
    stars = []
    plaqs = []
    for y in range(lat.ly):
        for x in range(lat.lx):
            xs = np.zeros(lat.n_edges, dtype=np.int64)
            for e, sign in lat.star_exponents(x, y).items():
                xs[e] = sign
            stars.append(PauliString(d, xs, np.zeros(lat.n_edges, dtype=np.int64)))
            zs = np.zeros(lat.n_edges, dtype=np.int64)
            for e, sign in lat.face_boundary_exponents(x, y).items():
                zs[e] = sign
            plaqs.append(PauliString(d, np.zeros(lat.n_edges, dtype=np.int64), zs))
    return stars, plaqs


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    for p in range(2, int(math.isqrt(d)) + 1):
        if d % p == 0:
            return False
    return True


def ground_space_dim(lat: TorusLattice, d: int) -> int:
    """``d^(n - rank)`` with the rank of the stabilizer generators over Z_d.

    Requires prime ``d`` so that Z_d is a field; equals ``d^2`` on the
    torus (two vertex/face dependencies: the product of all stars and the
    product of all plaquettes are both the identity).
    """
    if not _is_prime(d):
        raise InputError(f"ground_space_dim needs prime d, got {d}")
    stars, plaqs = build_stabilizers(lat, d)
    rows = [np.concatenate([p.x, p.z]) for p in stars + plaqs]
    rank = rank_mod_p(np.array(rows), d)
    return d ** (lat.n_edges - rank)


# ---------------------------------------------------------------------------
# strings, syndromes, correction


def vertex_path_edges(lat: TorusLattice, vertices: list[tuple[int, int]]):
    """Directed edge list ``[(edge, +-1), ...]`` along consecutive vertices."""
    steps = []
    for (x1, y1), (x2, y2) in zip(vertices, vertices[1:]):
        dx = (x2 - x1) % lat.lx
        dy = (y2 - y1) % lat.ly
        if dy == 0 and dx == 1:
            steps.append((lat.h_edge(x1, y1), +1))
        elif dy == 0 and dx == lat.lx - 1:
            steps.append((lat.h_edge(x2, y2), -1))
        elif dx == 0 and dy == 1:
            steps.append((lat.v_edge(x1, y1), +1))
        elif dx == 0 and dy == lat.ly - 1:
            steps.append((lat.v_edge(x2, y2), -1))
        else:
            raise InputError(f"vertices {(x1, y1)} and {(x2, y2)} are not adjacent")
    return steps


def dual_path_edges(lat: TorusLattice, faces: list[tuple[int, int]]):
    """Directed primal-edge list crossed by consecutive dual (face) steps."""
    steps = []
    for (x1, y1), (x2, y2) in zip(faces, faces[1:]):
        dx = (x2 - x1) % lat.lx
        dy = (y2 - y1) % lat.ly
        if dy == 0 and dx == 1:
            steps.append((lat.v_edge(x2, y2), -1))
        elif dy == 0 and dx == lat.lx - 1:
            steps.append((lat.v_edge(x1, y1), +1))
        elif dx == 0 and dy == 1:
            steps.append((lat.h_edge(x2, y2), +1))
        elif dx == 0 and dy == lat.ly - 1:
            steps.append((lat.h_edge(x1, y1), -1))
        else:
            raise InputError(f"faces {(x1, y1)} and {(x2, y2)} are not adjacent")
    return steps


def string_operator(
    lat: TorusLattice,
    path: list[tuple[int, int]],
    kind: str,
    r: int,
    d: int,
) -> PauliString:
    """Power-``r`` string along a connected directed path.

    ``kind='charge'`` builds a Z-type operator on a lattice path (defects
    at the endpoint vertices); ``kind='flux'`` an X-type operator on a
    dual-lattice path (defects at the endpoint faces).  ``path`` is a list
    of ``(edge index, direction)`` pairs where direction +-1 is along or
    against the (dual) edge orientation; consecutive steps must chain
    head-to-tail.  Closed paths give empty syndromes.
    """
    if kind not in ("charge", "flux"):
        raise InputError("kind must be 'charge' or 'flux'")
    endpoints = lat.edge_endpoints if kind == "charge" else lat.dual_edge_endpoints
    prev_head = None
    for edge, direction in path:
        if direction not in (-1, 1):
            raise InputError("path directions must be +-1")
        if not (0 <= edge < lat.n_edges):
            raise InputError(f"edge index {edge} out of range")
        tail, head = endpoints(edge)
        if direction == -1:
            tail, head = head, tail
        if prev_head is not None and tail != prev_head:
            raise InputError("path is not connected head-to-tail")
        prev_head = head
    xs = np.zeros(lat.n_edges, dtype=np.int64)
    zs = np.zeros(lat.n_edges, dtype=np.int64)
    target = zs if kind == "charge" else xs
    for edge, direction in path:
        target[edge] += direction * r
    return PauliString(d, xs, zs)


def syndrome(lat: TorusLattice, error: PauliString) -> Syndrome:
    """Defect exponents of every stabilizer on the errored state.

    A stabilizer ``S`` acquires eigenvalue ``omega^k`` with
    ``k = commutation_phase(S, error) / 2 mod d``.
    """
    if error.n_sites != lat.n_edges:
        raise InputError("error operator does not match the lattice")
    d = error.d
    stars, plaqs = build_stabilizers(lat, d)
    vertex = {}
    for v, s in enumerate(stars):
        k = (commutation_phase(s, error) // 2) % d
        if k:
            vertex[v] = k
    face = {}
    for f, p in enumerate(plaqs):
        k = (commutation_phase(p, error) // 2) % d
        if k:
            face[f] = k
    syn = Syndrome(d, vertex, face)
    syn.check_sum_rule()
    return syn


def _torus_shortest_vertex_path(lat, start: tuple[int, int], goal: tuple[int, int]):
    """Greedy staircase: x leg first, then y, each along the shorter wrap."""
    x, y = start
    path = [(x, y)]
    gx, gy = goal
    right = (gx - x) % lat.lx
    step_x = +1 if right <= lat.lx - right else -1
    while x % lat.lx != gx % lat.lx:
        x += step_x
        path.append((x % lat.lx, y % lat.ly))
    up = (gy - y) % lat.ly
    step_y = +1 if up <= lat.ly - up else -1
    while y % lat.ly != gy % lat.ly:
        y += step_y
        path.append((x % lat.lx, y % lat.ly))
    return path


def correct(lat: TorusLattice, syn: Syndrome) -> PauliString:
    """Greedy nearest-pair correction string for a syndrome.

    Repeatedly connects the lowest-index defect to its nearest partner
    along a shortest staircase path with the power that cancels it.  The
    returned operator's syndrome is exactly the inverse of ``syn``, so
    composing it with any error that produced ``syn`` leaves an empty
    syndrome; whether the composite is homologically trivial is for
    :func:`homology_class` to report.
    """
    syn.check_sum_rule()
    d = syn.d
    total = PauliString.identity(d, lat.n_edges)

    for kind, defects in (("charge", dict(syn.vertex)), ("flux", dict(syn.face))):
        path_builder = vertex_path_edges if kind == "charge" else dual_path_edges
        while defects:
            v1 = min(defects)
            others = [v for v in defects if v != v1]
            assert others, "sum rule guarantees defects pair up"
            c1 = lat.vertex_coords(v1)

            def torus_dist(v):
                x, y = lat.vertex_coords(v)
                dx = min((x - c1[0]) % lat.lx, (c1[0] - x) % lat.lx)
                dy = min((y - c1[1]) % lat.ly, (c1[1] - y) % lat.ly)
                return (dx + dy, v)

            v2 = min(others, key=torus_dist)
            path = _torus_shortest_vertex_path(lat, c1, lat.vertex_coords(v2))
            probe = string_operator(lat, path_builder(lat, path), kind, 1, d)
            probe_syn = syndrome(lat, probe)
            probe_defects = probe_syn.vertex if kind == "charge" else probe_syn.face
            k1 = probe_defects.get(v1)
            assert k1 is not None and math.gcd(k1, d) == 1
            power = (-defects[v1] * pow(k1, -1, d)) % d
            total = total * (probe ** power)
            for v, k in probe_defects.items():
                defects[v] = (defects.get(v, 0) + power * k) % d
                if defects[v] == 0:
                    del defects[v]
    return total


def homology_class(
    lat: TorusLattice, loop: PauliString
) -> dict[str, tuple[int, int]]:
    """Winding numbers (mod d) of a syndrome-free operator, per species.

    Counts signed crossings of two fundamental cuts: the charge pair from
    Z exponents on primal cuts, the flux pair from X exponents on dual
    cuts.  Stabilizer products give (0, 0); the canonical charge loop along
    the x direction gives charge winding (1, 0).
    """
    if not syndrome(lat, loop).is_empty():
        raise InputError("operator has a non-empty syndrome; not a closed loop")
    d = loop.d
    charge_wx = sum(int(loop.z[lat.h_edge(lat.lx - 1, y)]) for y in range(lat.ly)) % d
    charge_wy = sum(int(loop.z[lat.v_edge(x, lat.ly - 1)]) for x in range(lat.lx)) % d
    flux_wx = (-sum(int(loop.x[lat.v_edge(0, y)]) for y in range(lat.ly))) % d
    flux_wy = sum(int(loop.x[lat.h_edge(x, 0)]) for x in range(lat.lx)) % d
    return {"charge": (charge_wx, charge_wy), "flux": (flux_wx, flux_wy)}


# ---------------------------------------------------------------------------
# dyon braiding


def dyon_braiding_phase(
    d: int,
    dyon1: tuple[int, int],
    dyon2: tuple[int, int],
    lat: TorusLattice | None = None,
) -> int:
    """Phase exponent (units pi/d, mod 2d) for winding dyon1 around dyon2.

    Built by explicit operator composition: dyon2 = (r', s') is created by
    open charge and flux strings ending inside a region, dyon1 = (r, s) is
    wound along the counterclockwise charge loop (primal) and flux loop
    (dual) bounding that region, and the braiding phase is the commutation
    phase of the loop with the creation strings.  The result is asserted
    against the closed form ``2 (r s' + s r') mod 2d`` before returning;
    a mismatch raises :class:`InvariantViolation`.
    """
    if d < 2:
        raise InputError("qudit dimension must be >= 2")
    r, s = dyon1[0] % d, dyon1[1] % d
    rp, sp = dyon2[0] % d, dyon2[1] % d
    if lat is None:
        lat = TorusLattice(4, 4)
    if lat.lx < 4 or lat.ly < 4:
        raise InputError("need at least a 4x4 torus to separate the strings")

    # Counterclockwise primal loop around the 2x2 block of faces with
    # lower-left corner (1, 1); it strictly encloses vertex (2, 2).
    ring = [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (2, 3), (1, 3), (1, 2), (1, 1)]
    charge_loop = string_operator(lat, vertex_path_edges(lat, ring), "charge", r, d)
    # Counterclockwise dual loop through the four faces around vertex (2, 2).
    dual_ring = [(1, 1), (2, 1), (2, 2), (1, 2), (1, 1)]
    flux_loop = string_operator(lat, dual_path_edges(lat, dual_ring), "flux", s, d)
    loop = charge_loop * flux_loop

    # dyon2: charge at vertex (2, 2) and flux at face (1, 1), with creation
    # strings entering the enclosed region from below.
    charge_str = string_operator(
        lat, vertex_path_edges(lat, [(2, 0), (2, 1), (2, 2)]), "charge", rp, d
    )
    flux_str = string_operator(
        lat, dual_path_edges(lat, [(1, 0), (1, 1)]), "flux", sp, d
    )
    creation = charge_str * flux_str

    phi = commutation_phase(loop, creation)
    expected = (2 * (r * sp + s * rp)) % (2 * d)
    if phi != expected:
        raise InvariantViolation(
            f"loop composition gave exponent {phi}, closed form {expected}"
        )
    return phi


# ---------------------------------------------------------------------------
# dense backend (d = 2)


def ground_state(lat: TorusLattice, d: int = 2, cap: int = DENSE_QUBIT_CAP) -> np.ndarray:
    """A toric-code ground state as a dense vector (d = 2 only).

    Projects the all-zeros product state (already a +1 eigenstate of every
    Z-type plaquette) with ``(1 + A_v)/2`` for every star, then normalises
    and verifies all stabilizer expectations are +1.
    """
    if d != 2:
        raise InputError("the dense backend supports d = 2 only")
    n = lat.n_edges
    if n > cap:
        raise ResourceError(f"{n} qubits exceed the dense cap {cap}")
    psi = np.zeros(2 ** n, dtype=complex)
    psi[0] = 1.0
    stars, plaqs = build_stabilizers(lat, 2)
    for star in stars:
        psi = (psi + star.apply_to_state(psi)) / 2.0
    psi /= np.linalg.norm(psi)
    for op in stars + plaqs:
        if abs(op.expectation(psi) - 1.0) > 1e-10:
            raise InvariantViolation("projected state is not stabilized")
    return psi


def interferometer_run(
    lat: TorusLattice,
    braid: bool,
    beta: float,
    splitter_edge: int | None = None,
    loop: PauliString | None = None,
) -> float:
    """Charge/flux interferometer on the dense backend; returns ``<Z_l>``.

    The splitter ``exp(-i pi/4 Z_l)`` splits the ground state into a
    vacuum branch and a defect-pair branch; a dwell phase ``exp(i beta)``
    is imprinted on the defect branch (standing in for the dynamical phase
    accumulated while the pair exists); if ``braid``, a closed contractible
    dual loop encircling exactly one defect of the pair is applied;
    the inverse splitter then interferes the branches, giving
    ``<Z_l> = sin(beta)`` without the braid and ``sin(beta + pi)`` with it.

    The reference (no-braid) run applies the same loop translated so that
    it encloses no defect, which is the topologically trivial braid.  A
    ``loop`` that does not pick up exactly a pi phase against the splitter
    string raises :class:`InputError` (protocol geometry).
    """
    n = lat.n_edges
    if n > DENSE_QUBIT_CAP:
        raise ResourceError(f"{n} qubits exceed the dense cap {DENSE_QUBIT_CAP}")
    if splitter_edge is None:
        splitter_edge = lat.h_edge(0, 0)
    zvec = np.zeros(n, dtype=np.int64)
    zvec[splitter_edge] = 1
    z_l = PauliString(2, np.zeros(n, dtype=np.int64), zvec)

    tail, head = lat.edge_endpoints(splitter_edge)
    stars, _ = build_stabilizers(lat, 2)
    if loop is None:
        if braid:
            loop = stars[head]  # minimal dual loop around one endpoint
        else:
            far = _vertex_far_from(lat, tail, head)
            loop = stars[far]  # same loop shape, enclosing no defect
    if not syndrome(lat, loop).is_empty():
        raise InputError("braiding loop is not closed")
    phase = commutation_phase(loop, z_l)
    if braid and phase != 2:
        raise InputError("loop does not enclose exactly one defect of the pair")
    if not braid and phase != 0:
        raise InputError("reference loop must enclose no defect")

    psi = ground_state(lat)
    c = math.cos(math.pi / 4)
    s = math.sin(math.pi / 4)
    psi = c * psi - 1j * s * z_l.apply_to_state(psi)  # splitter
    probe = stars[head].apply_to_state(psi)  # dwell: phase the defect branch
    psi = (psi + probe) / 2.0 + np.exp(1j * beta) * (psi - probe) / 2.0
    psi = loop.apply_to_state(psi)  # braid (or its trivial translate)
    psi = c * psi + 1j * s * z_l.apply_to_state(psi)  # inverse splitter
    expect = z_l.expectation(psi)
    assert abs(expect.imag) < 1e-12
    return float(expect.real)


def _vertex_far_from(lat: TorusLattice, *avoid: int) -> int:
    coords = [lat.vertex_coords(v) for v in avoid]

    def min_dist(v):
        x, y = lat.vertex_coords(v)
        return min(
            min((x - cx) % lat.lx, (cx - x) % lat.lx)
            + min((y - cy) % lat.ly, (cy - y) % lat.ly)
            for cx, cy in coords
        )

    return max(range(lat.n_vertices), key=lambda v: (min_dist(v), -v))


def extract_mutual_statistics(braid_expectation: float, ref_expectation: float) -> float:
    """Recover the charge/flux statistical angle from both interferometer runs.

    For this abelian theory the angle is 0 or pi; the braid run flips the
    sign of ``sin(beta)`` exactly when the angle is pi.
    """
    if abs(braid_expectation - ref_expectation) <= abs(braid_expectation + ref_expectation):
        return 0.0
    return math.pi


# ---------------------------------------------------------------------------
# honeycomb-model helpers


def honeycomb_phase(jx: float, jy: float, jz: float) -> str:
    """``'gapless'`` when all three triangle inequalities hold, else ``'gapped'``.

    Boundary cases (equalities) count as gapless, including the degenerate
    all-zero couplings.
    """
    a, b, c = abs(jx), abs(jy), abs(jz)
    gapless = a <= b + c and b <= a + c and c <= a + b
    return "gapless" if gapless else "gapped"


def honeycomb_effective_coupling(jx: float, jy: float, jz: float) -> float:
    """Fourth-order effective plaquette coupling ``Jx^2 Jy^2 / (16 |Jz|^3)``."""
    if jz == 0:
        raise InputError("Jz must be non-zero")
    return (jx ** 2) * (jy ** 2) / (16.0 * abs(jz) ** 3)
