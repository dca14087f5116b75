"""Toric-code engine: stabilizers, strings, correction, braiding, protocol."""

import itertools
import math

import numpy as np
import pytest

from anyons.errors import InputError, ResourceError
from anyons.pauli import PauliString, commutation_phase
from anyons.toric import (
    Syndrome,
    TorusLattice,
    build_stabilizers,
    correct,
    dual_path_edges,
    dyon_braiding_phase,
    extract_mutual_statistics,
    ground_space_dim,
    ground_state,
    homology_class,
    honeycomb_effective_coupling,
    honeycomb_phase,
    interferometer_run,
    string_operator,
    syndrome,
    vertex_path_edges,
)


def charge_string(lat, vertices, r=1, d=2):
    return string_operator(lat, vertex_path_edges(lat, vertices), "charge", r, d)


def flux_string(lat, faces, r=1, d=2):
    return string_operator(lat, dual_path_edges(lat, faces), "flux", r, d)


class TestLattice:
    @pytest.mark.parametrize("lx,ly", [(2, 2), (3, 2), (4, 5), (6, 6)])
    def test_structure(self, lx, ly):
        lat = TorusLattice(lx, ly)
        lat.validate()
        assert lat.n_edges == 2 * lx * ly

    def test_too_small(self):
        with pytest.raises(InputError):
            TorusLattice(1, 4)


class TestStabilizers:
    @pytest.mark.parametrize("d", [2, 3, 5])
    @pytest.mark.parametrize("lx,ly", [(2, 2), (3, 3), (6, 6)])
    def test_all_pairs_commute(self, lx, ly, d):
        lat = TorusLattice(lx, ly)
        stars, plaqs = build_stabilizers(lat, d)
        ops = stars + plaqs
        assert all(
            commutation_phase(p, q) == 0 for p in ops for q in ops
        )

    def test_counts(self):
        lat = TorusLattice(2, 2)
        stars, plaqs = build_stabilizers(lat, 2)
        assert len(stars) == 4 and len(plaqs) == 4

    @pytest.mark.parametrize("d", [2, 3])
    def test_products_are_identity(self, d):
        lat = TorusLattice(3, 2)
        stars, plaqs = build_stabilizers(lat, d)
        prod = PauliString.identity(d, lat.n_edges)
        for s in stars:
            prod = prod * s
        assert prod.is_identity()
        prod = PauliString.identity(d, lat.n_edges)
        for p in plaqs:
            prod = prod * p
        assert prod.is_identity()


class TestGroundSpaceDim:
    @pytest.mark.parametrize("lx,ly", [(2, 2), (3, 3), (4, 3), (6, 6)])
    def test_qubit_degeneracy_four(self, lx, ly):
        assert ground_space_dim(TorusLattice(lx, ly), 2) == 4

    @pytest.mark.parametrize("d", [3, 5])
    @pytest.mark.parametrize("lx,ly", [(2, 2), (3, 3)])
    def test_qudit_degeneracy(self, lx, ly, d):
        assert ground_space_dim(TorusLattice(lx, ly), d) == d ** 2

    def test_non_prime_rejected(self):
        with pytest.raises(InputError):
            ground_space_dim(TorusLattice(2, 2), 4)


class TestStrings:
    def test_single_edge_charge_defects(self):
        lat = TorusLattice(4, 4)
        op = charge_string(lat, [(0, 0), (1, 0)])
        syn = syndrome(lat, op)
        assert set(syn.vertex) == {lat.vertex_index(0, 0), lat.vertex_index(1, 0)}
        assert syn.face == {}

    def test_open_string_two_defects_only(self):
        lat = TorusLattice(5, 5)
        for kind, builder in (("charge", charge_string), ("flux", flux_string)):
            op = builder(lat, [(0, 0), (1, 0), (2, 0), (2, 1)])
            syn = syndrome(lat, op)
            defects = syn.vertex if kind == "charge" else syn.face
            others = syn.face if kind == "charge" else syn.vertex
            assert len(defects) == 2 and not others

    def test_qudit_endpoint_exponents(self):
        lat = TorusLattice(4, 4)
        op = string_operator(
            lat, vertex_path_edges(lat, [(0, 0), (1, 0), (2, 0)]), "charge", 2, 3
        )
        syn = syndrome(lat, op)
        assert sorted(syn.vertex.values()) == [1, 2]  # +2 and -2 mod 3

    def test_closed_contractible_loop_is_stabilizer_product(self):
        lat = TorusLattice(4, 4)
        ring = [(1, 1), (2, 1), (2, 2), (1, 2), (1, 1)]
        loop = charge_string(lat, ring)
        assert syndrome(lat, loop).is_empty()
        # counterclockwise unit charge loop = the plaquette it encloses
        _, plaqs = build_stabilizers(lat, 2)
        assert loop == plaqs[lat.face_index(1, 1)]

    def test_flux_loop_is_star(self):
        lat = TorusLattice(4, 4)
        dual_ring = [(1, 1), (2, 1), (2, 2), (1, 2), (1, 1)]
        loop = flux_string(lat, dual_ring)
        stars, _ = build_stabilizers(lat, 2)
        assert loop == stars[lat.vertex_index(2, 2)]

    def test_disconnected_path_rejected(self):
        lat = TorusLattice(4, 4)
        steps = vertex_path_edges(lat, [(0, 0), (1, 0)]) + vertex_path_edges(
            lat, [(2, 2), (2, 3)]
        )
        with pytest.raises(InputError):
            string_operator(lat, steps, "charge", 1, 2)

    def test_non_adjacent_vertices_rejected(self):
        lat = TorusLattice(4, 4)
        with pytest.raises(InputError):
            vertex_path_edges(lat, [(0, 0), (2, 0)])


class TestSyndromeAndCorrection:
    def test_identity_has_empty_syndrome(self):
        lat = TorusLattice(3, 3)
        syn = syndrome(lat, PauliString.identity(2, lat.n_edges))
        assert syn.is_empty()
        assert correct(lat, syn).is_identity()

    def test_noncontractible_loop_empty_syndrome_nontrivial_class(self):
        lat = TorusLattice(5, 5)
        loop = charge_string(lat, [(x, 0) for x in range(5)] + [(0, 0)])
        syn = syndrome(lat, loop)
        assert syn.is_empty()
        assert homology_class(lat, loop)["charge"] == (1, 0)

    def test_noncontractible_dual_loop_is_logical(self):
        lat = TorusLattice(5, 5)
        loop = flux_string(lat, [(x, 1) for x in range(5)] + [(0, 1)])
        assert syndrome(lat, loop).is_empty()
        cls = homology_class(lat, loop)
        assert cls["flux"] != (0, 0) and cls["charge"] == (0, 0)

    def test_adjacent_pair_single_edge_correction(self):
        lat = TorusLattice(5, 5)
        error = charge_string(lat, [(1, 1), (2, 1)])
        syn = syndrome(lat, error)
        corr = correct(lat, syn)
        composite = error * corr
        assert syndrome(lat, composite).is_empty()
        assert homology_class(lat, composite)["charge"] == (0, 0)

    @pytest.mark.parametrize("d", [2, 3])
    def test_random_errors_corrected(self, d):
        lat = TorusLattice(5, 5)
        rng = np.random.default_rng(d)
        for _ in range(25):
            x = rng.integers(0, d, size=lat.n_edges)
            z = rng.integers(0, d, size=lat.n_edges)
            mask = rng.random(lat.n_edges) < 3.0 / lat.n_edges
            error = PauliString(d, x * mask, z * mask)
            syn = syndrome(lat, error)
            corr = correct(lat, syn)
            assert syndrome(lat, error * corr).is_empty()

    def test_long_string_becomes_logical_error(self):
        lat = TorusLattice(5, 5)
        error = charge_string(lat, [(x, 0) for x in range(4)])  # length 4 > 5/2
        syn = syndrome(lat, error)
        corr = correct(lat, syn)
        composite = error * corr
        assert syndrome(lat, composite).is_empty()
        assert homology_class(lat, composite)["charge"] == (1, 0)

    def test_sum_rule_enforced(self):
        lat = TorusLattice(3, 3)
        with pytest.raises(InputError):
            correct(lat, Syndrome(2, {0: 1}, {}))

    def test_homology_requires_closed(self):
        lat = TorusLattice(4, 4)
        with pytest.raises(InputError):
            homology_class(lat, charge_string(lat, [(0, 0), (1, 0)]))

    def test_power_d_trivializes_winding(self):
        lat = TorusLattice(4, 4)
        d = 3
        loop = string_operator(
            lat,
            vertex_path_edges(lat, [(x, 0) for x in range(4)] + [(0, 0)]),
            "charge", 1, d,
        )
        assert homology_class(lat, loop)["charge"] == (1, 0)
        assert homology_class(lat, loop ** d)["charge"] == (0, 0)


class TestDyonBraiding:
    def test_qubit_charge_around_flux_is_minus_one(self):
        phi = dyon_braiding_phase(2, (1, 0), (0, 1))
        assert phi == 2  # exponent 2 in units of pi/2: U = exp(i pi) = -1

    def test_vacuum_partner_trivial(self):
        for d in (2, 3):
            assert dyon_braiding_phase(d, (1, 1), (0, 0)) == 0

    def test_d3_example(self):
        # 2 pi/3 (1*1 + 2*2) = 10 pi/3 = 4 pi/3: exponent 4 in pi/3 units
        assert dyon_braiding_phase(3, (1, 2), (2, 1)) == 4

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_composition_matches_closed_form_everywhere(self, d):
        for r, s, rp, sp in itertools.product(range(d), repeat=4):
            phi = dyon_braiding_phase(d, (r, s), (rp, sp))
            assert phi == (2 * (r * sp + s * rp)) % (2 * d)

    def test_symmetric_in_the_two_dyons(self):
        for d in (2, 3):
            for r, s, rp, sp in itertools.product(range(d), repeat=4):
                assert dyon_braiding_phase(d, (r, s), (rp, sp)) == dyon_braiding_phase(
                    d, (rp, sp), (r, s)
                )


class TestGroundState:
    def test_2x2_stabilized(self):
        lat = TorusLattice(2, 2)
        psi = ground_state(lat)
        assert psi.shape == (256,)
        stars, plaqs = build_stabilizers(lat, 2)
        for op in stars + plaqs:
            assert op.expectation(psi) == pytest.approx(1.0, abs=1e-12)

    def test_contractible_loops_act_trivially(self):
        lat = TorusLattice(3, 3)
        psi = ground_state(lat)
        x_loop = flux_string(lat, [(1, 1), (2, 1), (2, 2), (1, 2), (1, 1)])
        z_loop = charge_string(lat, [(1, 1), (2, 1), (2, 2), (1, 2), (1, 1)])
        assert x_loop.expectation(psi) == pytest.approx(1.0, abs=1e-12)
        assert z_loop.expectation(psi) == pytest.approx(1.0, abs=1e-12)

    def test_noncontractible_loop_expectation_in_range(self):
        lat = TorusLattice(3, 3)
        psi = ground_state(lat)
        loop = flux_string(lat, [(x, 0) for x in range(3)] + [(0, 0)])
        value = loop.expectation(psi).real
        assert -1.0 <= value <= 1.0

    def test_cap(self):
        with pytest.raises(ResourceError):
            ground_state(TorusLattice(4, 4))  # 32 qubits > 20

    def test_d_restriction(self):
        with pytest.raises(InputError):
            ground_state(TorusLattice(2, 2), d=3)


class TestInterferometer:
    def test_beta_quarter_pi(self):
        lat = TorusLattice(3, 3)
        no_braid = interferometer_run(lat, braid=False, beta=math.pi / 4)
        braided = interferometer_run(lat, braid=True, beta=math.pi / 4)
        assert no_braid == pytest.approx(math.sqrt(2) / 2, abs=1e-9)
        assert braided == pytest.approx(-math.sqrt(2) / 2, abs=1e-9)
        assert extract_mutual_statistics(braided, no_braid) == math.pi

    def test_beta_zero_degenerate(self):
        lat = TorusLattice(2, 2)
        assert interferometer_run(lat, braid=False, beta=0.0) == pytest.approx(0.0, abs=1e-12)
        assert interferometer_run(lat, braid=True, beta=0.0) == pytest.approx(0.0, abs=1e-12)

    def test_sine_curve(self):
        lat = TorusLattice(2, 2)
        for beta in (0.3, 1.1, 2.0):
            assert interferometer_run(lat, braid=False, beta=beta) == pytest.approx(
                math.sin(beta), abs=1e-9
            )
            assert interferometer_run(lat, braid=True, beta=beta) == pytest.approx(
                math.sin(beta + math.pi), abs=1e-9
            )

    def test_bad_loop_geometry(self):
        lat = TorusLattice(3, 3)
        stars, _ = build_stabilizers(lat, 2)
        # a loop enclosing both endpoints of the splitter edge picks up no phase
        tail, head = lat.edge_endpoints(lat.h_edge(0, 0))
        both = stars[tail] * stars[head]
        with pytest.raises(InputError):
            interferometer_run(lat, braid=True, beta=0.5, loop=both)

    def test_open_string_rejected_as_loop(self):
        lat = TorusLattice(3, 3)
        open_string = flux_string(lat, [(0, 0), (1, 0)])
        with pytest.raises(InputError):
            interferometer_run(lat, braid=True, beta=0.5, loop=open_string)


class TestHoneycomb:
    def test_phase_boundary(self):
        assert honeycomb_phase(1, 1, 1) == "gapless"
        assert honeycomb_phase(1, 0, 0) == "gapped"
        assert honeycomb_phase(0, 0, 0) == "gapless"
        assert honeycomb_phase(1, 1, 2) == "gapless"  # equality counts as gapless
        assert honeycomb_phase(1, 1, 2.01) == "gapped"

    def test_effective_coupling(self):
        assert honeycomb_effective_coupling(1, 1, 4) == pytest.approx(1 / 1024)
        assert honeycomb_effective_coupling(2, 2, 2) == pytest.approx(1 / 8)
        assert honeycomb_effective_coupling(0, 1, 1) == 0.0
        assert honeycomb_effective_coupling(1, 1, -2) == pytest.approx(1 / 128)

    def test_jz_zero_rejected(self):
        with pytest.raises(InputError):
            honeycomb_effective_coupling(1, 1, 0)


class TestWenModelEquivalence:
    """Single-qubit basis change mapping Y Z Y Z diamond terms onto the
    toric-code stars and plaquettes on a 2x2 torus."""

    def _diamond_terms(self, lat):
        y = lambda e: PauliString(2, _one_hot(lat, e), _one_hot(lat, e), phase=1)
        z = lambda e: PauliString(2, _zeros(lat), _one_hot(lat, e))
        vertex_terms = []
        for vy in range(lat.ly):
            for vx in range(lat.lx):
                # horizontal neighbours get Y, vertical neighbours get Z
                term = (
                    y(lat.h_edge(vx - 1, vy))
                    * y(lat.h_edge(vx, vy))
                    * z(lat.v_edge(vx, vy))
                    * z(lat.v_edge(vx, vy - 1))
                )
                vertex_terms.append(term)
        face_terms = []
        for fy in range(lat.ly):
            for fx in range(lat.lx):
                term = (
                    y(lat.v_edge(fx, fy))
                    * y(lat.v_edge(fx + 1, fy))
                    * z(lat.h_edge(fx, fy))
                    * z(lat.h_edge(fx, fy + 1))
                )
                face_terms.append(term)
        return vertex_terms, face_terms

    def test_basis_change_to_surface_code(self):
        lat = TorusLattice(2, 2)
        wen_vertex, wen_face = self._diamond_terms(lat)
        stars, plaqs = build_stabilizers(lat, 2)

        # u_h = S^dag maps (X, Y, Z) -> (-Y, X, Z); u_v cycles (X, Y, Z) -> (Y, Z, X)
        u_h = np.diag([1.0, -1.0j])
        axis = (np.array([[0, 1], [1, 0]]) + np.array([[0, -1j], [1j, 0]])
                + np.diag([1.0, -1.0])) / np.sqrt(3)
        u_v = np.cos(np.pi / 3) * np.eye(2) - 1j * np.sin(np.pi / 3) * axis
        xmat = np.array([[0, 1], [1, 0]], dtype=complex)
        if not np.allclose(u_v @ np.diag([1.0, -1.0]) @ u_v.conj().T, xmat):
            u_v = u_v.conj().T
        assert np.allclose(u_v @ np.diag([1.0, -1.0]) @ u_v.conj().T, xmat, atol=1e-12)

        n_h = lat.lx * lat.ly
        factors = [u_h] * n_h + [u_v] * n_h
        big_u = np.eye(1, dtype=complex)
        for f in reversed(factors):  # site 0 least significant, as in dense()
            big_u = np.kron(big_u, f)

        for wen, target in zip(wen_vertex + wen_face, stars + plaqs):
            mapped = big_u @ wen.dense() @ big_u.conj().T
            assert np.allclose(mapped, target.dense(), atol=1e-10)


def _zeros(lat):
    return np.zeros(lat.n_edges, dtype=np.int64)


def _one_hot(lat, e):
    v = np.zeros(lat.n_edges, dtype=np.int64)
    v[e] = 1
    return v
