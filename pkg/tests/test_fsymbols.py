"""F/R symbol data, consistency residuals, admissibility."""

import itertools
import math

import numpy as np
import pytest

from anyons.errors import CompletenessError, InputError
from anyons.fsymbols import (
    FSymbolTable,
    RSymbolTable,
    f_admissible,
    f_unitarity_residual,
    fibonacci_data,
    gauge_transform,
    hexagon_residual,
    pentagon_residual,
    su2k_admissible,
    trivial_data,
)
from anyons.fusion import AnyonModel, fibonacci_model, toric_model, zd_model

PHI = (1 + math.sqrt(5)) / 2


@pytest.fixture(scope="module")
def fib_data():
    return fibonacci_data()


class TestFibonacciValues:
    def test_f_matrix_block(self, fib_data):
        _, f, _ = fib_data
        assert f.value(1, 1, 1, 1, 0, 0) == pytest.approx(1 / PHI)
        assert f.value(1, 1, 1, 1, 0, 1) == pytest.approx(1 / math.sqrt(PHI))
        assert f.value(1, 1, 1, 1, 1, 0) == pytest.approx(1 / math.sqrt(PHI))
        assert f.value(1, 1, 1, 1, 1, 1) == pytest.approx(-1 / PHI)

    def test_one_dimensional_entries(self, fib_data):
        _, f, _ = fib_data
        assert f.value(0, 0, 0, 0, 0, 0) == 1
        assert f.value(1, 1, 0, 1, 1, 1) == 1
        assert f.value(0, 1, 1, 1, 1, 1) == 1
        assert f.value(1, 1, 1, 0, 1, 1) == 1
        assert f.value(1, 0, 1, 1, 1, 1) == 1

    def test_r_values(self, fib_data):
        _, _, r = fib_data
        assert r.value(1, 1, 0) == pytest.approx(np.exp(4j * np.pi / 5))
        assert r.value(1, 1, 1) == pytest.approx(-np.exp(2j * np.pi / 5))
        assert r.value(0, 0, 0) == 1 and r.value(0, 1, 1) == 1

    def test_non_admissible_is_zero(self, fib_data):
        _, f, _ = fib_data
        assert f.value(0, 0, 0, 1, 0, 0) == 0.0
        assert f.value(1, 1, 1, 1, 0, 2) == 0.0  # unknown label never admissible

    def test_unit_modulus_r(self, fib_data):
        _, _, r = fib_data
        assert all(abs(abs(v) - 1) < 1e-12 for v in r.entries.values())


class TestResiduals:
    def test_pentagon_fibonacci(self, fib_data):
        model, f, _ = fib_data
        assert pentagon_residual(model, f) < 1e-12

    def test_hexagon_fibonacci(self, fib_data):
        model, f, r = fib_data
        assert hexagon_residual(model, f, r) < 1e-12

    def test_unitarity_fibonacci(self, fib_data):
        model, f, _ = fib_data
        assert f_unitarity_residual(model, f) < 1e-12

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_abelian_trivial_exact_zero(self, d):
        model = zd_model(d)
        f, r = trivial_data(model)
        assert pentagon_residual(model, f) == 0.0
        assert hexagon_residual(model, f, r) == 0.0

    def test_toric_trivial_exact_zero(self):
        model = toric_model()
        f, r = trivial_data(model)
        assert pentagon_residual(model, f) == 0.0
        assert hexagon_residual(model, f, r) == 0.0

    def test_trivial_single_label_model(self):
        model = AnyonModel((0,), 0, {0: 0}, {(0, 0, 0): 1})
        f, r = trivial_data(model)
        assert pentagon_residual(model, f) == 0.0
        assert hexagon_residual(model, f, r) == 0.0
        assert f_unitarity_residual(model, f) == 0.0

    def test_perturbed_pentagon_blows_up(self, fib_data):
        model, f, _ = fib_data
        entries = dict(f.entries)
        entries[(1, 1, 1, 1, 0, 0)] += 0.01
        assert pentagon_residual(model, FSymbolTable(model, entries)) > 1e-3

    def test_conjugated_r_breaks_hexagon(self, fib_data):
        model, f, r = fib_data
        entries = dict(r.entries)
        entries[(1, 1, 0)] = np.conj(entries[(1, 1, 0)])
        assert hexagon_residual(model, f, RSymbolTable(model, entries)) > 1e-3

    def test_scaled_block_unitarity(self, fib_data):
        model, f, _ = fib_data
        entries = {
            k: (v * 1.1 if k[:4] == (1, 1, 1, 1) else v)
            for k, v in f.entries.items()
        }
        resid = f_unitarity_residual(model, FSymbolTable(model, entries))
        assert resid == pytest.approx(1.1 ** 2 - 1, abs=1e-9)

    def test_missing_entry_named(self, fib_data):
        model, f, _ = fib_data
        entries = dict(f.entries)
        del entries[(1, 1, 1, 1, 0, 0)]
        broken = FSymbolTable(model, entries)
        with pytest.raises(CompletenessError, match=r"1, 1, 1, 1, 0, 0"):
            pentagon_residual(model, broken)

    def test_missing_r_entry_named(self, fib_data):
        model, f, r = fib_data
        entries = dict(r.entries)
        del entries[(1, 1, 1)]
        broken = RSymbolTable(model, entries)
        with pytest.raises(CompletenessError, match=r"1, 1, 1"):
            hexagon_residual(model, f, broken)


class TestGaugeCovariance:
    @pytest.mark.parametrize("model_factory", [fibonacci_model, lambda: zd_model(3)])
    def test_pentagon_invariant_under_rephasing(self, model_factory):
        model = model_factory()
        if model.name == "fibonacci":
            _, f, _ = fibonacci_data()
        else:
            f, _ = trivial_data(model)
        rng = np.random.default_rng(42)
        phases = {
            t: complex(np.exp(2j * np.pi * rng.random()))
            for t in itertools.product(model.labels, repeat=3)
            if model.n(*t)
        }
        gauged = gauge_transform(f, phases)
        assert pentagon_residual(model, gauged) < 1e-12

    def test_bad_phase_rejected(self, fib_data):
        model, f, _ = fib_data
        with pytest.raises(InputError):
            gauge_transform(f, {(0, 0, 1): 1.0})  # not an allowed vertex
        with pytest.raises(InputError):
            gauge_transform(f, {(1, 1, 0): 2.0})  # not unit modulus


class TestAdmissibility:
    def test_oriented_triples(self):
        z3 = zd_model(3)
        # (a,b->i), (i,c->d), (b,c->j), (a,j->d)
        assert f_admissible(z3, 1, 1, 1, 0, 2, 2)
        assert not f_admissible(z3, 1, 1, 1, 0, 2, 1)

    def test_self_dual_matches_unordered(self, fib_data):
        model, f, _ = fib_data
        for key in itertools.product(model.labels, repeat=6):
            a, b, c, d, i, j = key
            unordered = bool(
                model.n(a, b, i)
                and model.n(c, d, i)
                and model.n(a, d, j)
                and model.n(c, b, j)
            )
            assert f_admissible(model, *key) == unordered


class TestSU2k:
    def test_examples(self):
        assert su2k_admissible(0.5, 0.5, 1, 2) is True
        assert su2k_admissible(0.5, 0.5, 1, 1) is False
        for k in (2, 3, 6):
            for twice_j in range(0, k + 1):
                j = twice_j / 2
                assert su2k_admissible(0, j, j, k) is True

    def test_so3_level3_is_fibonacci(self):
        fib = fibonacci_model()
        for a in (0, 1):
            for b in (0, 1):
                for c in (0, 1):
                    assert su2k_admissible(a, b, c, 3) == (fib.n(a, b, c) > 0)

    def test_triangle_rule(self):
        assert su2k_admissible(1, 1, 2, 100)
        assert not su2k_admissible(1, 1, 3, 100)
        assert not su2k_admissible(0.5, 1, 1, 100)  # half-integer sum

    def test_level_bound(self):
        assert not su2k_admissible(2, 2, 2, 3)  # each spin must be <= k/2
        assert su2k_admissible(1, 1, 1, 3)
        assert not su2k_admissible(1, 1, 1, 2)  # j1+j2+j <= k fails

    def test_bad_input(self):
        with pytest.raises(InputError):
            su2k_admissible(0.3, 0.5, 1, 2)
        with pytest.raises(InputError):
            su2k_admissible(0.5, 0.5, 1, 0)


class TestSerialization:
    def test_round_trips(self, fib_data):
        model, f, r = fib_data
        assert FSymbolTable.from_json(f.to_json()).entries == f.entries
        assert RSymbolTable.from_json(r.to_json()).entries == r.entries

    def test_complex_as_re_im_pairs(self, fib_data):
        import json

        _, _, r = fib_data
        doc = json.loads(r.to_json())
        for _, value in doc["entries"]:
            assert isinstance(value, list) and len(value) == 2
