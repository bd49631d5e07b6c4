"""Execution of kernel plans on input windows.

Two scalar modes share one code path:

* float mode (default): IEEE double arithmetic, summation in matrix-row index
  order so results are bit-reproducible across runs;
* exact mode: ``fractions.Fraction`` arithmetic.  Every constant the plans
  produce is a tap combination divided by at most one factor of two, so all
  values stay dyadic rationals and equality checks against the direct method
  are exact.

``OpCounter`` instruments the very path that computes the result: each scalar
multiplication and each scalar addition increments the counter where it
happens, so the counted arithmetic is the shipped arithmetic.  Sign flips on
ternary-matrix entries are not multiplications and are not counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .plan import KernelPlan

__all__ = [
    "OpCounter",
    "PreparedKernel",
    "precompute_diagonal",
    "apply_basic_op",
    "apply_basic_op_naive",
    "is_dyadic",
]


@dataclass
class OpCounter:
    """Running tally of scalar multiplications and additions."""

    mults: int = 0
    adds: int = 0


def _coerce(values: Sequence, exact: bool) -> list:
    if exact:
        return [Fraction(v) for v in values]
    return [float(v) for v in values]


def _sparse_rows(matrix: np.ndarray) -> tuple[tuple[tuple[int, int], ...], ...]:
    # (index, sign) pairs per row; the ternary matrices never need weights.
    mat = np.asarray(matrix, dtype=np.int64)
    rows: list[list[tuple[int, int]]] = [[] for _ in range(mat.shape[0])]
    rr, cc = np.nonzero(mat)
    for r, c in zip(rr.tolist(), cc.tolist()):
        rows[r].append((c, int(mat[r, c])))
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class PreparedKernel:
    """A plan bound to one set of taps, diagonal already evaluated.

    Immutable; safe to share between threads and reuse across windows.
    """

    plan: KernelPlan
    s: tuple
    exact: bool
    _pre_rows: tuple = field(repr=False)
    _post_rows: tuple = field(repr=False)


def precompute_diagonal(plan: KernelPlan, taps: Sequence, exact: bool = False) -> PreparedKernel:
    """Evaluate the diagonal constants for the given taps.

    The halved terms divide by two once; in float mode that division is itself
    exact, so each constant is correctly rounded.  Raises ValueError when the
    tap count does not match the plan.
    """
    if len(taps) != plan.m:
        raise ValueError(f"plan is for {plan.m} taps, got {len(taps)}")
    w = _coerce(taps, exact)
    zero = Fraction(0) if exact else 0.0
    s = []
    for term in plan.diag:
        total = zero
        for wi, c in zip(w, term.coeffs):
            if c > 0:
                total = total + wi
            elif c < 0:
                total = total - wi
        s.append(total / 2 if term.halved else total)
    return PreparedKernel(
        plan,
        tuple(s),
        exact,
        _sparse_rows(plan.a_pre),
        _sparse_rows(plan.a_post),
    )


def _apply_ternary(rows, vec, zero, counter: OpCounter | None):
    out = []
    for row in rows:
        acc = None
        for j, sign in row:
            term = vec[j] if sign > 0 else -vec[j]
            if acc is None:
                acc = term
            else:
                acc = acc + term
                if counter is not None:
                    counter.adds += 1
        out.append(zero if acc is None else acc)
    return out


def apply_basic_op(kernel: PreparedKernel, tile: Sequence, counter: OpCounter | None = None):
    """Compute the two adjacent outputs for one (m+1)-sample window.

    Evaluates t = a_pre @ x (additions only), mu = s * t (exactly P scalar
    multiplications), y = a_post @ mu (additions only).
    """
    plan = kernel.plan
    if len(tile) != plan.m + 1:
        raise ValueError(f"window must have {plan.m + 1} samples, got {len(tile)}")
    x = _coerce(tile, kernel.exact)
    zero = Fraction(0) if kernel.exact else 0.0

    t = _apply_ternary(kernel._pre_rows, x, zero, counter)
    mu = []
    for sk, tk in zip(kernel.s, t):
        mu.append(sk * tk)
        if counter is not None:
            counter.mults += 1
    y = _apply_ternary(kernel._post_rows, mu, zero, counter)
    return y[0], y[1]


def apply_basic_op_naive(taps: Sequence, tile: Sequence, exact: bool = False,
                         counter: OpCounter | None = None):
    """Direct evaluation of the two adjacent outputs: 2m multiplications.

    Summation runs in index order.  This is the ground truth the factorized
    kernels are checked against.
    """
    m = len(taps)
    if len(tile) != m + 1:
        raise ValueError(f"window must have {m + 1} samples, got {len(tile)}")
    w = _coerce(taps, exact)
    x = _coerce(tile, exact)

    def dot(offset: int):
        acc = x[offset] * w[0]
        if counter is not None:
            counter.mults += 1
        for i in range(1, m):
            acc = acc + x[i + offset] * w[i]
            if counter is not None:
                counter.mults += 1
                counter.adds += 1
        return acc

    return dot(0), dot(1)


def is_dyadic(value) -> bool:
    """True when the value is an exact rational with a power-of-two denominator."""
    if isinstance(value, Fraction):
        d = value.denominator
        return d & (d - 1) == 0
    return isinstance(value, int)
