"""Tests for operator construction, POVMs, densities, covariance, orbits,
reduction, coarse graining, and question/answer matching."""

import numpy as np
import pytest
import scipy.linalg
from numpy.testing import assert_allclose

from symquant.groups import cyclic_group, cyclic_shift_action
from symquant.coherent import permutation_rep
from symquant.linalg import DimensionMismatchError
from symquant.quantize import (
    NegativeWeightError,
    NotAnOrbitError,
    NotInSubgroupError,
    NotUnitError,
    RowMismatchError,
    SpectrumNotPreservedError,
    StatisticalModel,
    build_density,
    build_operator,
    build_povm,
    coarse_grain,
    conjugation_covariance,
    covariance_check,
    eigen_orbit_partition,
    function_operator,
    maximality_check,
    model_reduce,
    operator_from_matrix,
    question_answer_match,
    spectrum_permutations,
)
from symquant.spin import spin_generators
from symquant.variables import (
    accessibility_leq,
    induce_group,
    variable_from_point_labels,
)

QUBIT = np.eye(2, dtype=complex)


class TestBuildOperator:
    def test_spin_half_component(self):
        b = build_operator(QUBIT, 1.0, [0.5, -0.5])
        assert_allclose(b.matrix, np.diag([0.5, -0.5]), atol=1e-15)
        assert_allclose(b.eigenvalues, [-0.5, 0.5])

    def test_unit_labels_give_identity(self):
        b = build_operator(QUBIT, 1.0, [1.0, 1.0])
        assert np.max(np.abs(b.matrix - np.eye(2))) <= 1e-10

    def test_single_state_warn_mode(self):
        with pytest.warns(UserWarning, match="misses the identity"):
            b = build_operator([np.array([1.0, 0.0])], 1.0, [5.0],
                               require_resolution=False)
        assert_allclose(b.matrix, np.diag([5.0, 0.0]), atol=1e-15)

    def test_strict_mode_raises(self):
        with pytest.raises(ValueError, match="misses the identity"):
            build_operator([np.array([1.0, 0.0])], 1.0, [5.0])

    def test_orthonormal_unit_weights_eigenvalues_are_labels(self):
        rng = np.random.default_rng(2)
        W, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        labels = [3.0, -1.0, 0.5, 2.0]
        b = build_operator(W.T, 1.0, labels)
        assert_allclose(b.eigenvalues, sorted(labels), atol=1e-9)

    def test_label_count_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            build_operator(QUBIT, 1.0, [1.0])

    def test_real_labels_give_hermitian(self):
        rng = np.random.default_rng(6)
        W, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
        b = build_operator(W.T, 1.0, [1.0, 2.0, 3.0])
        assert np.max(np.abs(b.matrix - b.matrix.conj().T)) <= 1e-10

    def test_unitary_conjugation_preserves_spectrum(self):
        rng = np.random.default_rng(8)
        labels = [0.0, 1.0, 4.0]
        b = build_operator(np.eye(3, dtype=complex), 1.0, labels)
        W, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
        moved = operator_from_matrix(W @ b.matrix @ W.conj().T)
        assert_allclose(moved.eigenvalues, b.eigenvalues, atol=1e-9)

    def test_spectral_sum_matches_quadratic_form(self):
        rng = np.random.default_rng(4)
        b = build_operator(np.eye(5, dtype=complex), 1.0, rng.normal(size=5))
        v = rng.normal(size=5) + 1j * rng.normal(size=5)
        v /= np.linalg.norm(v)
        direct = float((v.conj() @ b.matrix @ v).real)
        assert abs(b.spectrum.expectation(v) - direct) <= 1e-9


class TestFunctionOperator:
    def test_indicator_projects(self):
        b = function_operator(QUBIT, 1.0, [0.5, -0.5],
                              lambda u: 1.0 if u == 0.5 else 0.0)
        assert_allclose(b.matrix, np.diag([1.0, 0.0]), atol=1e-15)

    def test_square_on_spin_one(self):
        basis = np.eye(3, dtype=complex)
        b = function_operator(basis, 1.0, [1.0, 0.0, -1.0], lambda u: u * u)
        assert_allclose(b.matrix, np.diag([1.0, 0.0, 1.0]), atol=1e-15)

    def test_identity_function(self):
        b1 = build_operator(QUBIT, 1.0, [0.5, -0.5])
        b2 = function_operator(QUBIT, 1.0, [0.5, -0.5], lambda u: u)
        assert_allclose(b1.matrix, b2.matrix)

    def test_functional_calculus_on_orthonormal_family(self):
        rng = np.random.default_rng(12)
        W, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        labels = np.array([2.0, -1.0, 0.0, 1.0])
        f = lambda u: u ** 2 + 1.0
        b = function_operator(W.T, 1.0, labels, f)
        expect = sorted({f(u) for u in labels})
        assert_allclose(b.eigenvalues, expect, atol=1e-9)


class TestPovm:
    def test_two_state_example(self):
        model = StatisticalModel(probabilities=[[0.3, 0.7], [0.7, 0.3]])
        povm = build_povm(model, QUBIT, 1.0)
        assert_allclose(povm.effects[0], np.diag([0.3, 0.7]), atol=1e-15)

    def test_deterministic_model_gives_projections(self):
        model = StatisticalModel(probabilities=np.eye(2))
        povm = build_povm(model, QUBIT, 1.0)
        assert_allclose(povm.effects[0], np.diag([1.0, 0.0]), atol=1e-15)
        assert_allclose(povm.effects[1], np.diag([0.0, 1.0]), atol=1e-15)

    def test_completeness_seeded_models(self):
        rng = np.random.default_rng(31)
        for size in (2, 3, 4, 5):
            probs = rng.uniform(0.05, 1.0, size=(size, 3))
            probs /= probs.sum(axis=1, keepdims=True)
            povm = build_povm(StatisticalModel(probabilities=probs),
                              np.eye(size, dtype=complex), 1.0)
            assert povm.completeness_deviation() <= 1e-10

    def test_additivity(self):
        rng = np.random.default_rng(5)
        probs = rng.uniform(0.1, 1.0, size=(3, 4))
        probs /= probs.sum(axis=1, keepdims=True)
        povm = build_povm(StatisticalModel(probabilities=probs),
                          np.eye(3, dtype=complex), 1.0)
        combined = povm.effect([0, 2])
        assert_allclose(combined, povm.effects[0] + povm.effects[2])

    def test_row_mismatch(self):
        model = StatisticalModel(probabilities=[[0.5, 0.5]])
        with pytest.raises(RowMismatchError):
            build_povm(model, QUBIT, 1.0)

    def test_rows_must_be_stochastic(self):
        with pytest.raises(ValueError):
            StatisticalModel(probabilities=[[0.5, 0.6]])
        with pytest.raises(ValueError):
            StatisticalModel(probabilities=[[-0.1, 1.1]])


class TestDensity:
    def test_uniform_maximally_mixed(self):
        rho = build_density([0.5, 0.5], QUBIT, 1.0)
        assert_allclose(rho.sigma, np.eye(2) / 2, atol=1e-15)
        assert abs(rho.trace - 1.0) <= 1e-10

    def test_pure_state(self):
        rho = build_density([1.0, 0.0], QUBIT, 1.0)
        assert_allclose(rho.sigma, np.diag([1.0, 0.0]), atol=1e-15)

    def test_diagonal_mixture(self):
        rho = build_density([0.25, 0.75], QUBIT, 1.0)
        assert_allclose(rho.sigma, np.diag([0.25, 0.75]), atol=1e-15)

    def test_negative_weight(self):
        with pytest.raises(NegativeWeightError):
            build_density([-0.1, 1.1], QUBIT, 1.0)

    def test_normalize_flag(self):
        rho = build_density([3.0, 1.0], QUBIT, 1.0, normalize=True)
        assert abs(rho.trace - 1.0) <= 1e-12
        assert_allclose(rho.sigma, np.diag([0.75, 0.25]), atol=1e-15)

    def test_psd(self):
        rng = np.random.default_rng(14)
        W, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        pi = rng.uniform(size=4)
        rho = build_density(pi, W.T, 1.0, normalize=True)
        assert float(np.linalg.eigvalsh(rho.sigma)[0]) >= -1e-12


class TestCovariance:
    def test_identity_element(self):
        b = build_operator(QUBIT, 1.0, [0.5, -0.5])
        rep = conjugation_covariance(b, np.eye(2), [0, 1])
        assert rep.passed and rep.distance <= 1e-15

    def test_qubit_swap(self):
        b = build_operator(QUBIT, 1.0, [0.5, -0.5])
        swap = np.array([[0.0, 1.0], [1.0, 0.0]])
        rep = conjugation_covariance(b, swap, [1, 0])
        assert rep.passed
        # explicit conjugation oracle
        lhs = swap @ np.diag([0.5, -0.5]) @ swap
        assert_allclose(lhs, np.diag([-0.5, 0.5]))

    def test_spin_one_half_turn(self):
        # pi-rotation about x reverses the z component
        Jx, _, Jz = spin_generators(1.0)
        b = operator_from_matrix(Jz)
        U = scipy.linalg.expm(-1j * np.pi * Jx)
        rep = conjugation_covariance(b, U, [2, 1, 0])
        assert rep.passed and rep.distance <= 1e-9
        assert np.linalg.norm(U.conj().T @ Jz @ U + Jz) <= 1e-9

    def test_group_wrapper_and_subgroup_error(self):
        g = cyclic_group(4)
        act = cyclic_shift_action(g)
        parity = variable_from_point_labels([0.0, 1.0, 0.0, 1.0])
        indicator = variable_from_point_labels([1.0, 1.0, 0.0, 0.0])
        induced = induce_group(parity, act)
        value_rep = permutation_rep(induced.value_action)
        bundle = build_operator(QUBIT, 1.0, list(parity.value_labels))
        for h in range(4):
            rep = covariance_check(bundle, value_rep, h, parity, act)
            assert rep.passed
        with pytest.raises(NotInSubgroupError):
            covariance_check(bundle, value_rep, 1, indicator, act)


class TestEigenOrbits:
    def test_sign_flip_pair(self):
        b = build_operator(QUBIT, 1.0, [0.5, -0.5])
        perms = spectrum_permutations(b.eigenvalues, [lambda u: u, lambda u: -u])
        part = eigen_orbit_partition(b, perms)
        assert part.blocks == ((0, 1),)
        assert part.single_orbit

    def test_trivial_group_singletons(self):
        b = build_operator(np.eye(3, dtype=complex), 1.0, [1.0, 0.0, -1.0])
        part = eigen_orbit_partition(b, [np.arange(3)])
        assert part.blocks == ((0,), (1,), (2,))
        assert not part.single_orbit

    def test_flip_fixes_zero(self):
        b = build_operator(np.eye(3, dtype=complex), 1.0, [1.0, 0.0, -1.0])
        perms = spectrum_permutations(b.eigenvalues, [lambda u: -u])
        part = eigen_orbit_partition(b, perms)
        assert part.blocks == ((0, 2), (1,))
        assert part.label_blocks() == ((-1.0, 1.0), (0.0,))

    def test_spectrum_not_preserved(self):
        b = build_operator(np.eye(3, dtype=complex), 1.0, [-1.0, 0.0, 2.0])
        with pytest.raises(SpectrumNotPreservedError):
            spectrum_permutations(b.eigenvalues, [lambda u: -u])

    def test_accepts_induced_action(self):
        g = cyclic_group(4)
        act = cyclic_shift_action(g)
        parity = variable_from_point_labels([0.0, 1.0, 0.0, 1.0])
        induced = induce_group(parity, act)
        b = build_operator(QUBIT, 1.0, list(parity.value_labels))
        part = eigen_orbit_partition(b, induced)
        assert part.single_orbit


class TestModelReduce:
    def test_spin_half_labels(self):
        eigs = [-0.5, 0.5]
        perms = spectrum_permutations(eigs, [lambda u: u, lambda u: -u])
        reduced = model_reduce(eigs, perms, [-0.5, 0.5])
        assert reduced.value_labels == (-0.5, 0.5)
        assert reduced.space_size == 2

    def test_singleton_orbit_under_trivial_group(self):
        reduced = model_reduce([0.0], [np.arange(1)], [0.0])
        assert reduced.value_labels == (0.0,)

    def test_rejects_non_orbit(self):
        eigs = [-1.0, 0.0, 1.0]
        perms = spectrum_permutations(eigs, [lambda u: -u])
        with pytest.raises(NotAnOrbitError):
            model_reduce(eigs, perms, [-1.0, 0.0])

    def test_rejects_union_of_orbits(self):
        eigs = [-1.0, 0.0, 1.0]
        perms = spectrum_permutations(eigs, [lambda u: -u])
        with pytest.raises(NotAnOrbitError):
            model_reduce(eigs, perms, [-1.0, 0.0, 1.0])

    def test_rejects_label_outside_spectrum(self):
        with pytest.raises(NotAnOrbitError):
            model_reduce([0.0, 1.0], [np.arange(2)], [2.0])


class TestMaximality:
    def test_distinct_eigenvalues(self):
        b = operator_from_matrix(np.diag([1.0, 0.0, -1.0]))
        assert maximality_check(b)

    def test_squared_labels_collide(self):
        b = operator_from_matrix(np.diag([1.0, 0.0, 1.0]))
        assert not maximality_check(b)

    def test_identity_fully_degenerate(self):
        assert not maximality_check(operator_from_matrix(np.eye(2)))


class TestCoarseGrain:
    def test_identity_map_recovers_operator(self):
        basis = np.eye(3, dtype=complex)
        grain, bundle = coarse_grain(basis, [1.0, 0.0, -1.0], lambda u: u)
        assert grain.coarse_labels == (-1.0, 0.0, 1.0)
        assert_allclose(bundle.matrix, np.diag([1.0, 0.0, -1.0]), atol=1e-15)
        assert maximality_check(bundle)

    def test_square_blocks(self):
        basis = np.eye(3, dtype=complex)
        grain, bundle = coarse_grain(basis, [1.0, 0.0, -1.0], lambda u: u * u)
        assert grain.coarse_labels == (0.0, 1.0)
        assert grain.blocks == ((1,), (0, 2))
        assert_allclose(bundle.matrix, np.diag([1.0, 0.0, 1.0]), atol=1e-15)
        assert not maximality_check(bundle)
        # block projections sum the right rank-one pieces
        assert_allclose(grain.block_projections[1], np.diag([1.0, 0.0, 1.0]))

    def test_constant_map(self):
        basis = np.eye(2, dtype=complex)
        grain, bundle = coarse_grain(basis, [0.5, -0.5], lambda u: 3.0)
        assert grain.coarse_labels == (3.0,)
        assert_allclose(bundle.matrix, 3.0 * np.eye(2), atol=1e-15)
        assert not maximality_check(bundle)

    def test_requires_orthonormal_basis(self):
        with pytest.raises(ValueError, match="orthonormal"):
            coarse_grain([[1.0, 0.0], [1.0, 0.0]], [0.0, 1.0], lambda u: u)

    def test_split_degenerate_block_flips_maximality(self):
        # refining a degenerate operator into distinct labels makes the
        # coarse variable a non-injective function of the fine one
        fine = variable_from_point_labels([1.0, 0.0, -1.0], sort=False)
        coarse = variable_from_point_labels([1.0, 0.0, 1.0], sort=False)
        ok, f = accessibility_leq(coarse, fine)
        assert ok
        assert len(set(f.tolist())) < fine.n_values  # non-injective
        basis = np.eye(3, dtype=complex)
        _, fine_bundle = coarse_grain(basis, [1.0, 0.0, -1.0], lambda u: u)
        _, coarse_bundle = coarse_grain(basis, [1.0, 0.0, -1.0], lambda u: u * u)
        assert maximality_check(fine_bundle)
        assert not maximality_check(coarse_bundle)


class TestQuestionAnswer:
    @pytest.fixture
    def qubit_bases(self):
        z = np.eye(2, dtype=complex)
        x = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2)
        return {"z": z, "x": x}

    def test_z_plus_matches_z_only(self, qubit_bases):
        # overlap table: |<x pm|z+>|^2 = 1/2 < 1 - tol
        matches = question_answer_match(np.array([1.0, 0.0]), qubit_bases)
        assert matches == [("z", 0)]

    def test_x_plus_matches_x_only(self, qubit_bases):
        v = np.array([1.0, 1.0]) / np.sqrt(2)
        matches = question_answer_match(v, qubit_bases)
        assert matches == [("x", 0)]

    def test_tilted_vector_matches_none(self, qubit_bases):
        v = np.array([np.cos(np.pi / 8), np.sin(np.pi / 8)])
        assert question_answer_match(v, qubit_bases) == []

    def test_phase_insensitive(self, qubit_bases):
        v = np.exp(1j * 0.7) * np.array([1.0, 0.0])
        assert question_answer_match(v, qubit_bases) == [("z", 0)]

    def test_not_unit(self, qubit_bases):
        with pytest.raises(NotUnitError):
            question_answer_match(np.array([1.0, 1.0]), qubit_bases)
