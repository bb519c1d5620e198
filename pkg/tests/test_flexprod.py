"""Flexible tensor product against a naive nested-loop oracle.

The oracle builds every output entry by explicit summation with the index
layout spelled out mode by mode, so it shares no code with the tensordot
implementation it checks.
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sigtext.decompose import FlexOrder, flexible_product


def naive_flexible_product(a: np.ndarray, b: np.ndarray, q: int,
                           alpha: int, beta: int) -> np.ndarray:
    """Direct nested-index summation; s_r pairing per the order flags."""
    m, n = a.ndim, b.ndim
    if alpha == 1:
        a_s = list(range(1, q + 1))                 # s_r at axis r
        a_k = [0] + list(range(q + 1, m))
    else:
        a_s = [m - r for r in range(1, q + 1)]      # s_r at axis m - r
        a_k = list(range(0, m - q))
    if beta == 1:
        b_s = list(range(0, q))                     # s_r at axis r - 1
        b_k = list(range(q, n))
    else:
        b_s = [n - 1 - r for r in range(1, q + 1)]  # s_r at axis n - 1 - r
        b_k = list(range(0, n - q - 1)) + [n - 1]
    out_shape = tuple([a.shape[ax] for ax in a_k] + [b.shape[ax] for ax in b_k])
    s_ranges = [range(a.shape[ax]) for ax in a_s]
    out = np.zeros(out_shape)
    for k_idx in np.ndindex(*out_shape):
        ka, kb = k_idx[: len(a_k)], k_idx[len(a_k):]
        total = 0.0
        for s in itertools.product(*s_ranges):
            ai = [0] * m
            bi = [0] * n
            for ax, v in zip(a_k, ka):
                ai[ax] = v
            for ax, v in zip(a_s, s):
                ai[ax] = v
            for ax, v in zip(b_k, kb):
                bi[ax] = v
            for ax, v in zip(b_s, s):
                bi[ax] = v
            total += a[tuple(ai)] * b[tuple(bi)]
        out[k_idx] = total
    return out


def random_case(rng: np.random.Generator, max_dim: int = 6):
    m = int(rng.integers(2, 4))
    n = int(rng.integers(2, 4))
    q = int(rng.integers(1, min(m, n)))
    alpha = int(rng.integers(1, 3))
    beta = int(rng.integers(1, 3))
    if alpha == 1:
        a_s = list(range(1, q + 1))
    else:
        a_s = [m - r for r in range(1, q + 1)]
    if beta == 1:
        b_s = list(range(0, q))
    else:
        b_s = [n - 1 - r for r in range(1, q + 1)]
    a_shape = [int(rng.integers(1, max_dim + 1)) for _ in range(m)]
    b_shape = [int(rng.integers(1, max_dim + 1)) for _ in range(n)]
    for ax_a, ax_b in zip(a_s, b_s):
        b_shape[ax_b] = a_shape[ax_a]
    a = rng.normal(size=a_shape)
    b = rng.normal(size=b_shape)
    return a, b, q, alpha, beta


def test_matrix_product_reduction(rng):
    a = rng.normal(size=(2, 3))
    b = rng.normal(size=(3, 2))
    out = flexible_product(a, b, 1, FlexOrder.FORWARD, FlexOrder.FORWARD)
    assert np.array_equal(out, a @ b)


def test_identity_matrix(rng):
    b = rng.normal(size=(3, 4))
    out = flexible_product(np.eye(3), b, 1)
    assert np.allclose(out, b, rtol=0, atol=0)


@pytest.mark.parametrize("alpha", [1, 2])
@pytest.mark.parametrize("beta", [1, 2])
def test_q2_all_orderings_against_oracle(alpha, beta, rng):
    a = rng.normal(size=(2, 3, 4))
    a_s = [1, 2] if alpha == 1 else [2, 1]          # axes of A carrying s_1, s_2
    b_s = [0, 1] if beta == 1 else [1, 0]           # axes of B carrying s_1, s_2
    b_shape = [0, 0, int(rng.integers(1, 5))]
    for ax_a, ax_b in zip(a_s, b_s):
        b_shape[ax_b] = a.shape[ax_a]
    b = rng.normal(size=b_shape)
    expected = naive_flexible_product(a, b, 2, alpha, beta)
    got = flexible_product(a, b, 2, FlexOrder(alpha), FlexOrder(beta))
    assert got.shape == expected.shape
    assert np.allclose(got, expected, rtol=1e-12, atol=1e-12)


def test_randomized_against_oracle(rng):
    for _ in range(120):
        a, b, q, alpha, beta = random_case(rng)
        expected = naive_flexible_product(a, b, q, alpha, beta)
        got = flexible_product(a, b, q, FlexOrder(alpha), FlexOrder(beta))
        assert got.shape == expected.shape
        scale = max(1.0, np.max(np.abs(expected)))
        assert np.max(np.abs(got - expected)) <= 1e-12 * scale


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_oracle_property(seed):
    rng = np.random.default_rng(seed)
    a, b, q, alpha, beta = random_case(rng)
    expected = naive_flexible_product(a, b, q, alpha, beta)
    got = flexible_product(a, b, q, FlexOrder(alpha), FlexOrder(beta))
    scale = max(1.0, np.max(np.abs(expected)))
    assert np.max(np.abs(got - expected)) <= 1e-12 * scale


def test_dimension_mismatch_names_modes():
    a = np.zeros((2, 3))
    b = np.zeros((4, 2))
    with pytest.raises(ValueError, match="mode 2 of A .* mode 1 of B"):
        flexible_product(a, b, 1)


def test_q_out_of_range():
    a = np.zeros((2, 3))
    b = np.zeros((3, 2))
    with pytest.raises(ValueError, match="q must lie"):
        flexible_product(a, b, 2)


def test_order_cap():
    a = np.zeros((2,) * 5)
    with pytest.raises(ValueError, match="order above"):
        flexible_product(a, np.zeros((2, 2)), 1)
