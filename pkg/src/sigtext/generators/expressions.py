"""Composable signal expressions.

An expression tree combines signal units (and literal sample arrays) with
elementwise arithmetic, discrete convolution, integer powers and running
integration.  Every node carries an optional scalar gain applied to its
result.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import cumulative_trapezoid

from ..signalio import DEFAULT_UNIT, SampleGrid, SampledSignal
from .units import UnitParams, eval_unit

# Divide rejects samples whose magnitude falls below this fraction of the
# denominator's peak magnitude.
DIV_GUARD_REL = 1e-9


class Operator(str, Enum):
    ADD = "add"
    SUBTRACT = "subtract"
    MULTIPLY = "multiply"
    DIVIDE = "divide"
    CONVOLVE = "convolve"
    POWER = "power"
    INTEGRATE = "integrate"


_BINARY = {Operator.ADD, Operator.SUBTRACT, Operator.MULTIPLY,
           Operator.DIVIDE, Operator.CONVOLVE}
_UNARY = {Operator.POWER, Operator.INTEGRATE}


@dataclass(frozen=True)
class UnitExpr:
    """Leaf wrapping one signal unit."""

    params: UnitParams
    gain: float = 1.0


@dataclass(frozen=True)
class LiteralExpr:
    """Leaf carrying explicit sample values (resampled literally onto the grid)."""

    samples: tuple[float, ...]
    gain: float = 1.0

    @staticmethod
    def constant(value: float, n_samples: int) -> "LiteralExpr":
        return LiteralExpr((float(value),) * n_samples)


@dataclass(frozen=True)
class OpExpr:
    """Interior node: an operator over one or two child expressions."""

    op: Operator
    operands: tuple["SignalExpr", ...]
    exponent: int = 1
    gain: float = 1.0

    def __post_init__(self):
        arity = 2 if self.op in _BINARY else 1
        if len(self.operands) != arity:
            raise ValueError(f"{self.op.value} expects {arity} operands, got {len(self.operands)}")
        if self.op is Operator.POWER and self.exponent < 1:
            raise ValueError(f"power exponent must be >= 1, got {self.exponent}")


SignalExpr = UnitExpr | LiteralExpr | OpExpr


def add(a: SignalExpr, b: SignalExpr, gain: float = 1.0) -> OpExpr:
    return OpExpr(Operator.ADD, (a, b), gain=gain)


def subtract(a: SignalExpr, b: SignalExpr, gain: float = 1.0) -> OpExpr:
    return OpExpr(Operator.SUBTRACT, (a, b), gain=gain)


def multiply(a: SignalExpr, b: SignalExpr, gain: float = 1.0) -> OpExpr:
    return OpExpr(Operator.MULTIPLY, (a, b), gain=gain)


def divide(a: SignalExpr, b: SignalExpr, gain: float = 1.0) -> OpExpr:
    return OpExpr(Operator.DIVIDE, (a, b), gain=gain)


def convolve(a: SignalExpr, b: SignalExpr, gain: float = 1.0) -> OpExpr:
    return OpExpr(Operator.CONVOLVE, (a, b), gain=gain)


def power(a: SignalExpr, exponent: int, gain: float = 1.0) -> OpExpr:
    return OpExpr(Operator.POWER, (a,), exponent=exponent, gain=gain)


def integrate(a: SignalExpr, gain: float = 1.0) -> OpExpr:
    return OpExpr(Operator.INTEGRATE, (a,), gain=gain)


def _eval(expr: SignalExpr, grid: SampleGrid) -> np.ndarray:
    if isinstance(expr, UnitExpr):
        return expr.gain * eval_unit(expr.params, grid).samples
    if isinstance(expr, LiteralExpr):
        vals = np.asarray(expr.samples, dtype=np.float64)
        if vals.size != grid.n_samples:
            raise ValueError(
                f"literal length {vals.size} does not match grid n_samples {grid.n_samples}"
            )
        return expr.gain * vals
    x = _eval(expr.operands[0], grid)
    if expr.op is Operator.ADD:
        out = x + _eval(expr.operands[1], grid)
    elif expr.op is Operator.SUBTRACT:
        out = x - _eval(expr.operands[1], grid)
    elif expr.op is Operator.MULTIPLY:
        out = x * _eval(expr.operands[1], grid)
    elif expr.op is Operator.DIVIDE:
        den = _eval(expr.operands[1], grid)
        peak = np.max(np.abs(den))
        if peak == 0.0:
            raise ZeroDivisionError("divide: denominator is identically zero")
        guard = DIV_GUARD_REL * peak
        small = np.abs(den) < guard
        if np.any(small):
            idx = int(np.argmax(small))
            raise ZeroDivisionError(
                f"divide: |denominator| below guard {guard:.3e} at sample {idx}"
            )
        out = x / den
    elif expr.op is Operator.CONVOLVE:
        h = _eval(expr.operands[1], grid)
        # Discrete linear convolution approximating the continuous integral:
        # sum f[m] h[i-m] / fs, truncated to the grid length.
        out = np.convolve(x, h)[: grid.n_samples] / grid.sample_rate_hz
    elif expr.op is Operator.POWER:
        out = x ** expr.exponent
    elif expr.op is Operator.INTEGRATE:
        out = cumulative_trapezoid(x, dx=1.0 / grid.sample_rate_hz, initial=0.0)
    else:  # pragma: no cover
        raise TypeError(f"unknown operator {expr.op}")
    return expr.gain * out


def apply_expr(expr: SignalExpr, grid: SampleGrid, unit: str = DEFAULT_UNIT) -> SampledSignal:
    """Evaluate an expression tree on the grid."""
    return SampledSignal(_eval(expr, grid), grid.sample_rate_hz, unit)
