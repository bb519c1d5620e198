"""Flexible tensor SVDs: reconstruction, orthogonality, matrix reduction."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sigtext.decompose import (fold3, ftsvd_first, ftsvd_second,
                               reconstruct, unfold3)


def rel_err(got: np.ndarray, want: np.ndarray) -> float:
    denom = np.linalg.norm(want)
    if denom == 0:
        return np.linalg.norm(got)
    return np.linalg.norm(got - want) / denom


def leading_projector(basis: np.ndarray, rank: int) -> np.ndarray:
    lead = basis[:, :rank]
    return lead @ lead.T


def test_first_kind_orthogonal_and_reconstructs(rng):
    for _ in range(20):
        a = rng.normal(size=(4, 5, 3))
        res = ftsvd_first(a)
        assert np.allclose(res.u.T @ res.u, np.eye(4), atol=1e-8)
        assert np.allclose(res.v.T @ res.v, np.eye(3), atol=1e-8)
        assert rel_err(reconstruct(res), a) < 1e-8
        assert np.all(np.diff(res.singular_values) <= 1e-12)
        assert np.all(res.singular_values >= 0)


def test_first_kind_zero_tensor():
    res = ftsvd_first(np.zeros((3, 4, 2)))
    assert np.allclose(res.s, 0.0)
    assert rel_err(reconstruct(res), np.zeros((3, 4, 2))) == 0.0


def test_first_kind_matrix_case_matches_svd_subspaces(rng):
    mat = rng.normal(size=(5, 3))
    res = ftsvd_first(mat[:, :, None])
    u_svd, s_svd, _ = np.linalg.svd(mat)
    rank = int(np.sum(s_svd > 1e-10 * s_svd[0]))
    # column-space projectors agree up to the rank of the matrix
    assert np.allclose(leading_projector(res.u, rank),
                       leading_projector(u_svd, rank), atol=1e-8)
    # and the leading singular values match the matrix oracle
    assert np.allclose(res.singular_values[:rank], s_svd[:rank], atol=1e-10)


def test_second_kind_diag_matrix():
    a = np.diag([2.0, 1.0])[:, :, None]
    res = ftsvd_second(a)
    assert np.allclose(res.singular_values, [2.0, 1.0])


def test_second_kind_matrix_case_matches_svd(rng):
    mat = rng.normal(size=(4, 6))
    res = ftsvd_second(mat[:, :, None])
    _, s_svd, vt = np.linalg.svd(mat)
    assert np.allclose(res.singular_values, s_svd, atol=1e-10)
    rank = int(np.sum(s_svd > 1e-10 * s_svd[0]))
    # row-space projectors agree up to the rank of the matrix
    assert np.allclose(leading_projector(res.v, rank),
                       leading_projector(vt.T, rank), atol=1e-8)


def test_second_kind_structure(rng):
    a = rng.normal(size=(3, 4, 2))
    res = ftsvd_second(a)
    # pseudo-diagonal: the unfolded core is diag(sigma)
    smat = unfold3(res.s)
    expected = np.zeros_like(smat)
    k = res.singular_values.size
    expected[np.arange(k), np.arange(k)] = res.singular_values
    assert np.allclose(smat, expected, atol=0)
    # each frontal slice is diagonal
    for j in range(a.shape[2]):
        slice_ = res.s[:, :, j]
        assert np.allclose(slice_, np.diag(np.diag(slice_)) if slice_.shape[0] == slice_.shape[1]
                           else slice_ * np.eye(*slice_.shape), atol=0)
    # ordering
    assert np.all(np.diff(res.singular_values) <= 0)
    assert np.all(res.singular_values >= 0)
    assert rel_err(reconstruct(res), a) < 1e-8


def test_second_kind_economy(rng):
    a = rng.normal(size=(4, 5, 3))
    res = ftsvd_second(a, full_matrices=False)
    assert rel_err(reconstruct(res), a) < 1e-8


def test_fold_unfold_roundtrip(rng):
    a = rng.normal(size=(4, 5, 3))
    assert np.array_equal(fold3(unfold3(a), a.shape), a)


def test_non_finite_rejected():
    bad = np.zeros((2, 2, 2))
    bad[0, 0, 0] = np.nan
    with pytest.raises(ValueError, match="non-finite"):
        ftsvd_second(bad)
    with pytest.raises(ValueError, match="third-order"):
        ftsvd_first(np.zeros((2, 2)))


@settings(max_examples=25, deadline=None)
@given(
    i1=st.integers(1, 6), i2=st.integers(1, 6), i3=st.integers(1, 6),
    seed=st.integers(0, 2**32 - 1),
)
def test_reconstruction_property(i1, i2, i3, seed):
    a = np.random.default_rng(seed).normal(size=(i1, i2, i3))
    for res in (ftsvd_first(a), ftsvd_second(a)):
        assert rel_err(reconstruct(res), a) < 1e-8
        assert np.all(np.diff(res.singular_values) <= 1e-12)
