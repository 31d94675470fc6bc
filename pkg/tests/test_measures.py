"""Tests for the entanglement measure and Schmidt operations."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qent import (
    apply_unitary,
    cluster_state,
    ghz_state,
    product_state,
    purity,
    q_direct,
    q_purity,
    random_product_state,
    random_state,
    reduced_density,
    schmidt_number,
    schmidt_spectrum,
    split_on_qubit,
    w_state,
    wedge_distance,
)

from conftest import bell_bell, haar_unitary


class TestSplitOnQubit:
    def test_basis_state(self):
        s = split_on_qubit(product_state([(1, 0), (1, 0)]), 0)
        assert np.allclose(s.u_tilde, [1, 0]) and np.allclose(s.v_tilde, [0, 0])

    def test_ghz2(self):
        s = split_on_qubit(ghz_state(2), 0)
        assert np.allclose(s.u_tilde, [1 / np.sqrt(2), 0])
        assert np.allclose(s.v_tilde, [0, 1 / np.sqrt(2)])

    def test_w3_middle_qubit(self):
        # remaining pair keeps order (qubit 0, qubit 2)
        s = split_on_qubit(w_state(3), 1)
        r = 1 / np.sqrt(3)
        assert np.allclose(s.u_tilde, [0, r, r, 0])  # |01>, |10> of the pair
        assert np.allclose(s.v_tilde, [r, 0, 0, 0])  # |00>

    def test_reassembles_the_state(self, rng):
        state = random_state(4, rng)
        for k in range(4):
            s = split_on_qubit(state, k)
            t = np.stack([s.u_tilde.reshape([2] * 3), s.v_tilde.reshape([2] * 3)])
            rebuilt = np.moveaxis(t, 0, k).reshape(-1)
            assert np.allclose(rebuilt, state.amplitudes, atol=1e-12)
            assert abs(np.vdot(s.u_tilde, s.u_tilde) + np.vdot(s.v_tilde, s.v_tilde) - 1) < 1e-10

    def test_rejects_bad_input(self, rng):
        with pytest.raises(ValueError):
            split_on_qubit(random_state(1, rng), 0)
        with pytest.raises(ValueError):
            split_on_qubit(random_state(3, rng), 3)


def _normalized_pair(u, v):
    u, v = np.asarray(u), np.asarray(v)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu < 1e-6 or nv < 1e-6:
        return None
    return u / nu, v / nv


_complex_elems = st.complex_numbers(
    max_magnitude=3.0, allow_nan=False, allow_infinity=False, allow_subnormal=False
)


@st.composite
def _vector_pairs(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    u = draw(st.lists(_complex_elems, min_size=n, max_size=n))
    v = draw(st.lists(_complex_elems, min_size=n, max_size=n))
    return np.array(u), np.array(v)


class TestWedgeDistance:
    def test_proportional_vectors_give_zero(self, rng):
        u = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        for lam in (0.0, 1.0, -2.3, 0.7j):
            assert wedge_distance(u, lam * u) < 1e-20

    def test_two_dimensional_value(self):
        assert np.isclose(wedge_distance([1 / np.sqrt(2), 0], [0, 1 / np.sqrt(2)]), 0.25)

    @settings(max_examples=60, deadline=None)
    @given(_vector_pairs())
    def test_lagrange_identity(self, pair):
        # independent oracle: <u|u><v|v> - |<u|v>|^2, never used by the library
        pair = _normalized_pair(*pair)
        if pair is None:
            return
        u, v = pair
        expected = (np.vdot(u, u) * np.vdot(v, v) - abs(np.vdot(u, v)) ** 2).real
        assert abs(wedge_distance(u, v) - expected) < 1e-10

    @settings(max_examples=30, deadline=None)
    @given(_vector_pairs())
    def test_nonnegative(self, pair):
        u, v = pair
        assert wedge_distance(u, v) >= 0

    def test_rejects_mismatched_lengths(self):
        with pytest.raises(ValueError):
            wedge_distance([1, 0], [1, 0, 0])


class TestQRoutes:
    def test_product_states_have_zero_q(self, rng):
        for n in (2, 3, 5):
            state = random_product_state(n, rng)
            assert q_direct(state) < 1e-12
            assert abs(q_purity(state)) < 1e-12

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_ghz_is_maximal(self, n):
        assert abs(q_direct(ghz_state(n)) - 1.0) < 1e-12

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_w_formula(self, n):
        expected = 4 * (n - 1) / n**2
        assert abs(q_direct(w_state(n)) - expected) < 1e-12
        assert abs(q_purity(w_state(n)) - expected) < 1e-12

    def test_bell_bell_and_ghz4_both_maximal(self):
        assert abs(q_purity(bell_bell()) - 1.0) < 1e-12
        assert abs(q_purity(ghz_state(4)) - 1.0) < 1e-12

    def test_route_equivalence_on_random_states(self, rng):
        for n in (2, 3, 4, 5):
            for _ in range(10):
                state = random_state(n, rng)
                assert abs(q_direct(state) - q_purity(state)) < 1e-9

    def test_split_distance_equals_purity_deficit(self, rng):
        # per-qubit identity D_k = (1 - Tr[rho_k^2]) / 2
        for _ in range(5):
            state = random_state(4, rng)
            for k in range(4):
                s = split_on_qubit(state, k)
                d = wedge_distance(s.u_tilde, s.v_tilde)
                deficit = (1 - purity(reduced_density(state, [k]))) / 2
                assert abs(d - deficit) < 1e-10

    def test_local_unitary_invariance(self, rng):
        for _ in range(10):
            state = random_state(4, rng)
            before = q_direct(state)
            for k in range(4):
                state = apply_unitary(state, haar_unitary(2, rng), [k])
            assert abs(q_direct(state) - before) < 1e-9

    def test_range(self, rng):
        for _ in range(20):
            q = q_direct(random_state(int(rng.integers(2, 6)), rng))
            assert -1e-12 <= q <= 1 + 1e-10

    def test_zero_characterization(self, rng):
        # Q vanishes exactly when every single-qubit marginal stays pure
        prod = random_product_state(4, rng)
        assert q_purity(prod) < 1e-9
        assert all(purity(reduced_density(prod, [k])) > 1 - 1e-9 for k in range(4))
        ent = ghz_state(4)
        assert q_purity(ent) > 1e-9
        assert any(purity(reduced_density(ent, [k])) < 1 - 1e-9 for k in range(4))

    def test_rejects_single_qubit(self, rng):
        with pytest.raises(ValueError):
            q_direct(random_state(1, rng))
        with pytest.raises(ValueError):
            q_purity(random_state(1, rng))


class TestSchmidt:
    def test_product_cut_has_trivial_spectrum(self, rng):
        state = random_product_state(4, rng)
        spec = schmidt_spectrum(state, [0, 1])
        assert np.isclose(spec.coefficients[0], 1.0, atol=1e-10)
        assert np.allclose(spec.coefficients[1:], 0, atol=1e-10)

    def test_ghz_any_cut_two_equal_coefficients(self):
        for n in (2, 3, 4, 5):
            for part_a in ([0], [n - 1], list(range(n // 2))):
                spec = schmidt_spectrum(ghz_state(n), part_a).coefficients
                assert np.allclose(spec[:2], 1 / np.sqrt(2), atol=1e-12)
                assert np.allclose(spec[2:], 0, atol=1e-12)

    def test_bell_single_qubit_cut(self, rng):
        from conftest import bell_pair

        spec = schmidt_spectrum(bell_pair(), [0])
        assert np.allclose(spec.squared(), [0.5, 0.5])
        assert np.isclose(purity(reduced_density(bell_pair(), [0])), 0.5)

    def test_squared_values_match_reduced_eigenvalues(self, rng):
        state = random_state(5, rng)
        for part_a in ([0], [1, 3], [0, 2, 4]):
            sq = np.sort(schmidt_spectrum(state, part_a).squared())[::-1]
            eig = np.sort(np.linalg.eigvalsh(reduced_density(state, part_a).entries))[::-1]
            padded = np.zeros(eig.size)
            padded[: sq.size] = sq  # the cut can have fewer coefficients than dim(A)
            assert np.allclose(padded, eig, atol=1e-9)
            assert abs(np.sum(sq) - 1.0) < 1e-9

    def test_sorted_descending(self, rng):
        spec = schmidt_spectrum(random_state(4, rng), [0, 2]).coefficients
        assert np.all(np.diff(spec) <= 1e-15)

    def test_schmidt_number_values(self):
        for n in (2, 3, 4):
            assert schmidt_number(ghz_state(n), [0]) == 2
        assert schmidt_number(bell_bell(), [0, 1]) == 1
        assert schmidt_number(ghz_state(4), [0, 1]) == 2

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_cluster_cut_ranks(self, n):
        # A contiguous cut of a line crosses one edge, so its Schmidt number
        # is always 2; the alternating (even|odd) cut crosses every edge and
        # attains the maximal 2**(n//2).
        state = cluster_state(n)
        assert schmidt_number(state, list(range(n // 2))) == 2
        assert schmidt_number(state, list(range(0, n, 2))) == 2 ** (n // 2)

    def test_rejects_empty_or_full_subset(self, rng):
        state = random_state(3, rng)
        with pytest.raises(ValueError):
            schmidt_spectrum(state, [])
        with pytest.raises(ValueError):
            schmidt_spectrum(state, [0, 1, 2])
