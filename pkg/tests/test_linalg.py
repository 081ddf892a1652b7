import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wginv.errors import DirectSumError, NotPsdError, PreconditionError
from wginv.linalg import (
    Subspace,
    Tolerances,
    as_matrix,
    as_vector,
    null_basis,
    numeric_rank,
    oblique_projector,
    orth_projector,
    pinv,
    preimage,
    projection_from_matrix,
    range_basis,
    seminorm,
    subspace_complement,
    subspace_contains,
    subspace_from_span,
    subspace_intersect,
    subspace_ominus,
    subspaces_equal,
    svd,
)

from conftest import random_matrix, random_psd, random_subspace


def test_tolerances_validate():
    with pytest.raises(ValueError):
        Tolerances(rank_rel=0.0)
    with pytest.raises(ValueError):
        Tolerances(residual_rel=1.5)


def test_as_matrix_rejects_nonfinite():
    with pytest.raises(ValueError):
        as_matrix([[1.0, np.nan]])
    with pytest.raises(ValueError):
        as_vector([np.inf])


def test_svd_identity():
    u, s, vh = svd(np.eye(3))
    assert np.allclose(s, 1.0)
    assert np.allclose(u @ np.diag(s) @ vh, np.eye(3))


def test_svd_zero():
    _, s, _ = svd(np.zeros((2, 2)))
    assert np.allclose(s, 0.0)


def test_svd_diagonal_singular_values():
    # characteristic polynomial of M^H M gives sigma = (4, 3)
    _, s, _ = svd(np.array([[3.0, 0.0], [0.0, 4.0]]))
    assert np.allclose(s, [4.0, 3.0])


def test_numeric_rank_cases():
    assert numeric_rank(np.eye(4)) == 4
    assert numeric_rank(np.zeros((3, 2))) == 0
    # Gram eigenvalues of the all-ones 2x2 matrix are {0, 4}
    assert numeric_rank(np.array([[1.0, 1.0], [1.0, 1.0]])) == 1


def test_numeric_rank_respects_cutoff():
    nearly_singular = np.diag([1.0, 1e-13])
    assert numeric_rank(nearly_singular) == 1
    assert numeric_rank(nearly_singular, Tolerances(rank_rel=1e-15)) == 2
    assert numeric_rank(nearly_singular, Tolerances(rank_rel=1e-2)) == 1


def test_svd_factor_contract():
    rng = np.random.default_rng(33)
    m = rng.standard_normal((5, 3))
    u, s, vh = svd(m)
    assert np.all(np.diff(s) <= 0) and np.all(s >= 0)
    assert np.allclose(u.conj().T @ u, np.eye(3), atol=1e-12)
    assert np.allclose(vh @ vh.conj().T, np.eye(3), atol=1e-12)
    assert np.allclose(u @ np.diag(s) @ vh, m, atol=1e-12)


def test_subspace_rejects_non_orthonormal_basis():
    with pytest.raises(ValueError):
        Subspace(2, np.array([[1.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        Subspace(2, np.array([[2.0], [0.0]]))


def test_pinv_examples():
    assert np.allclose(pinv(np.eye(3)), np.eye(3))
    assert np.allclose(pinv(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))
    assert np.allclose(pinv(np.array([[1.0], [1.0]])), np.array([[0.5, 0.5]]))


def _check_moore_penrose(m, x, tol=1e-10):
    assert np.linalg.norm(m @ x @ m - m) <= tol * max(np.linalg.norm(m), 1.0)
    assert np.linalg.norm(x @ m @ x - x) <= tol * max(np.linalg.norm(x), 1.0)
    bx = m @ x
    xb = x @ m
    assert np.linalg.norm(bx - bx.conj().T) <= tol * max(np.linalg.norm(bx), 1.0)
    assert np.linalg.norm(xb - xb.conj().T) <= tol * max(np.linalg.norm(xb), 1.0)


@pytest.mark.parametrize("complex_entries", [False, True])
def test_pinv_moore_penrose_equations(complex_entries):
    rng = np.random.default_rng(7)
    for _ in range(50):
        m_dim = int(rng.integers(1, 7))
        n_dim = int(rng.integers(1, 7))
        rank = int(rng.integers(0, min(m_dim, n_dim) + 1))
        m = random_matrix(rng, m_dim, n_dim, rank, complex_entries)
        _check_moore_penrose(m, pinv(m))


def test_pinv_involution_on_truncated_representative():
    rng = np.random.default_rng(21)
    for _ in range(30):
        m_dim, n_dim = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        rank = int(rng.integers(0, min(m_dim, n_dim) + 1))
        m = random_matrix(rng, m_dim, n_dim, rank)
        u, s, vh = np.linalg.svd(m)
        truncated = u[:, :rank] @ np.diag(s[:rank]) @ vh[:rank]
        assert np.linalg.norm(pinv(pinv(m)) - truncated) <= 1e-8 * max(1.0, np.linalg.norm(m))


def test_rank_nullity_exact():
    rng = np.random.default_rng(3)
    for _ in range(40):
        m_dim, n_dim = int(rng.integers(1, 8)), int(rng.integers(1, 8))
        rank = int(rng.integers(0, min(m_dim, n_dim) + 1))
        m = random_matrix(rng, m_dim, n_dim, rank)
        assert numeric_rank(m) + null_basis(m).dim == n_dim


def test_range_null_example():
    m = np.array([[1.0, 1.0], [0.0, 0.0]])
    rng_s = range_basis(m)
    nul_s = null_basis(m)
    assert rng_s.dim == 1 and nul_s.dim == 1
    assert np.allclose(np.abs(rng_s.basis.ravel()), [1.0, 0.0])
    assert np.allclose(np.abs(nul_s.basis.ravel()), [1.0, 1.0] / np.sqrt(2.0))


def test_range_null_trivial_cases():
    assert range_basis(np.eye(2)).dim == 2
    assert null_basis(np.eye(2)).dim == 0
    z = np.zeros((2, 3))
    assert range_basis(z).dim == 0
    assert null_basis(z).dim == 3


def test_orth_projector_examples():
    full = subspace_from_span(np.eye(2))
    assert np.allclose(orth_projector(full).matrix, np.eye(2))
    trivial = Subspace(2, np.zeros((2, 0)))
    assert np.allclose(orth_projector(trivial).matrix, 0.0)
    diag_line = subspace_from_span(np.array([[1.0], [1.0]]))
    assert np.allclose(orth_projector(diag_line).matrix, 0.5 * np.ones((2, 2)))


def test_orth_projector_hermitian_idempotent():
    rng = np.random.default_rng(11)
    for _ in range(20):
        n = int(rng.integers(1, 8))
        s = random_subspace(rng, n, int(rng.integers(0, n + 1)))
        p = orth_projector(s).matrix
        assert np.linalg.norm(p @ p - p) < 1e-12
        assert np.linalg.norm(p - p.conj().T) < 1e-12


def test_oblique_projector_example():
    m = subspace_from_span(np.array([[1.0], [0.0]]))
    n = subspace_from_span(np.array([[1.0], [1.0]]))
    p = oblique_projector(m, n)
    assert np.allclose(p.matrix, np.array([[1.0, -1.0], [0.0, 0.0]]))


def test_oblique_projector_orthogonal_case_matches_orth():
    rng = np.random.default_rng(5)
    s = random_subspace(rng, 5, 2)
    p = oblique_projector(s, subspace_complement(s))
    assert np.allclose(p.matrix, orth_projector(s).matrix)


def test_oblique_projector_fixes_and_annihilates():
    rng = np.random.default_rng(13)
    for _ in range(20):
        n = int(rng.integers(2, 8))
        k = int(rng.integers(1, n))
        m_sub = random_subspace(rng, n, k)
        from conftest import random_complement

        n_sub = random_complement(rng, m_sub)
        p = oblique_projector(m_sub, n_sub)
        assert np.linalg.norm(p.matrix @ m_sub.basis - m_sub.basis) < 1e-8
        assert np.linalg.norm(p.matrix @ n_sub.basis) < 1e-8
        assert np.linalg.norm(p.matrix @ p.matrix - p.matrix) < 1e-8


def test_oblique_projector_degenerate_error():
    s = subspace_from_span(np.array([[1.0], [0.0]]))
    with pytest.raises(DirectSumError):
        oblique_projector(s, s)


def test_projection_from_matrix_rejects_non_idempotent():
    with pytest.raises(PreconditionError):
        projection_from_matrix(np.array([[1.0, 0.0], [0.0, 2.0]]))
    with pytest.raises(PreconditionError):
        projection_from_matrix(np.ones((2, 3)))


def test_check_psd_tolerates_roundoff():
    from wginv.linalg import check_psd

    # eigenvalue floor admits slightly negative values from user roundoff
    assert check_psd(np.diag([1.0, -1e-10])) is not None
    with pytest.raises(NotPsdError):
        check_psd(np.diag([1.0, -1e-3]))
    with pytest.raises(NotPsdError):
        check_psd(np.array([[1.0, 1.0], [0.0, 1.0]]))  # not Hermitian


def test_rel_residual_conventions():
    from wginv.linalg import rel_residual

    assert rel_residual(0.0, 0.0) == 0.0
    assert rel_residual(1.0, 0.0) == float("inf")
    assert rel_residual(1.0, 4.0) == 0.25


def test_subspace_intersect_self():
    rng = np.random.default_rng(17)
    s = random_subspace(rng, 6, 3)
    assert subspaces_equal(subspace_intersect(s, s), s)


def test_subspace_ominus_cases():
    full = subspace_from_span(np.eye(3))
    trivial = Subspace(3, np.zeros((3, 0)))
    assert subspaces_equal(subspace_ominus(full, trivial), full)
    line = subspace_from_span(np.array([[1.0], [0.0], [0.0]]))
    plane = subspace_from_span(np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]))
    rest = subspace_ominus(plane, line)
    assert rest.dim == 1
    assert np.allclose(np.abs(rest.basis.ravel()), [0.0, 1.0, 0.0])
    with pytest.raises(PreconditionError):
        subspace_ominus(line, plane)


def test_preimage_example():
    target = subspace_from_span(np.array([[0.0], [1.0]]))
    pre = preimage(np.diag([1.0, 0.0]), target)
    assert subspaces_equal(pre, target)


def test_preimage_contains_nullspace_of_psd():
    rng = np.random.default_rng(19)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        a = random_psd(rng, n, int(rng.integers(0, n + 1)))
        s = random_subspace(rng, n, int(rng.integers(0, n + 1)))
        assert subspace_contains(preimage(a, s), null_basis(a))


def test_seminorm_cases():
    assert seminorm(np.eye(3), [3.0, 0.0, 4.0]) == pytest.approx(5.0)
    # vector in the nullspace of the weight
    assert seminorm(np.diag([1.0, 0.0]), [0.0, 7.0]) == pytest.approx(0.0)
    assert seminorm(np.diag([4.0, 0.0]), [1.0, 1.0]) == pytest.approx(2.0)
    with pytest.raises(NotPsdError):
        seminorm(np.diag([1.0, -1.0]), [1.0, 1.0])


@settings(max_examples=40, deadline=None)
@given(
    m_dim=st.integers(min_value=1, max_value=6),
    n_dim=st.integers(min_value=1, max_value=6),
    seed=st.integers(min_value=0, max_value=2**31),
)
def test_pinv_equations_hypothesis(m_dim, n_dim, seed):
    rng = np.random.default_rng(seed)
    rank = int(rng.integers(0, min(m_dim, n_dim) + 1))
    m = random_matrix(rng, m_dim, n_dim, rank)
    _check_moore_penrose(m, pinv(m))


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=6),
    seed=st.integers(min_value=0, max_value=2**31),
)
def test_rank_nullity_hypothesis(n, seed):
    rng = np.random.default_rng(seed)
    m = random_matrix(rng, n, n, int(rng.integers(0, n + 1)))
    assert numeric_rank(m) + null_basis(m).dim == n
