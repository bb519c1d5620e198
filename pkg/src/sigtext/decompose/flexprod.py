"""Flexible tensor product: multi-mode contraction with orderable indices.

The product ``flexible_product(A, B, q, alpha, beta)`` contracts q modes of
A against q modes of B.  Which modes, and in which pairing order, is set by
the order flags: with FORWARD the contracted modes of A are the q modes
immediately after its first mode (paired low-to-high) and B contributes its
first q modes; with REVERSE A contributes its last q modes (paired
high-to-low) and B keeps its last mode free, contributing the q modes just
before it in reversed order.  The result keeps A's free modes (its first
mode leading) followed by B's free modes (its last mode trailing), so for
matrices with q = 1 the product reduces to ordinary matrix multiplication.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

MAX_ORDER = 4


class FlexOrder(IntEnum):
    FORWARD = 1
    REVERSE = 2


def _contract_axes(order: FlexOrder, ndim: int, q: int, side: str) -> list[int]:
    """Axes contributing s_1..s_q, in pairing order."""
    if side == "A":
        if order is FlexOrder.FORWARD:
            return list(range(1, q + 1))
        return [ndim - 1 - r for r in range(q)]
    if order is FlexOrder.FORWARD:
        return list(range(q))
    return [ndim - 2 - r for r in range(q)]


def flexible_product(a: np.ndarray, b: np.ndarray, q: int,
                     alpha: FlexOrder = FlexOrder.FORWARD,
                     beta: FlexOrder = FlexOrder.FORWARD) -> np.ndarray:
    """Contract q modes of ``a`` against q modes of ``b``.

    Output order is a.ndim + b.ndim - 2q; free modes keep their original
    relative order, A's first.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    m, n = a.ndim, b.ndim
    if m > MAX_ORDER or n > MAX_ORDER:
        raise ValueError(f"tensor order above {MAX_ORDER} is not supported")
    if m < 1 or n < 1:
        raise ValueError("inputs must have at least one mode")
    if not 1 <= q <= min(m, n) - 1:
        raise ValueError(f"q must lie in [1, {min(m, n) - 1}] for orders ({m}, {n}), got {q}")
    alpha = FlexOrder(alpha)
    beta = FlexOrder(beta)
    a_axes = _contract_axes(alpha, m, q, "A")
    b_axes = _contract_axes(beta, n, q, "B")
    for r, (ia, ib) in enumerate(zip(a_axes, b_axes), start=1):
        if a.shape[ia] != b.shape[ib]:
            raise ValueError(
                f"contracted size mismatch for s_{r}: mode {ia + 1} of A has size "
                f"{a.shape[ia]} but mode {ib + 1} of B has size {b.shape[ib]}"
            )
    return np.tensordot(a, b, axes=(a_axes, b_axes))
