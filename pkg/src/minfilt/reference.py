"""Ground-truth FIR filtering by direct summation.

Correlation-style indexing throughout: output[j] = sum_i x[i+j] * w[i], with
no tap reversal, valid positions only (N - m + 1 outputs).  Every equivalence
check in the package compares against this implementation.
"""

from __future__ import annotations

from typing import Sequence

from .kernels import _coerce

__all__ = ["naive_fir"]


def naive_fir(signal: Sequence, taps: Sequence, exact: bool = False) -> list:
    """Filter a whole signal the obvious way.

    Returns the N - m + 1 valid outputs; summation runs in index order.
    Raises ValueError when the signal is shorter than the filter.
    """
    m = len(taps)
    if m < 1:
        raise ValueError("filter needs at least one tap")
    n = len(signal)
    if n < m:
        raise ValueError(f"signal has {n} samples, need at least {m}")
    w = _coerce(taps, exact)
    x = _coerce(signal, exact)
    out = []
    for j in range(n - m + 1):
        acc = x[j] * w[0]
        for i in range(1, m):
            acc = acc + x[i + j] * w[i]
        out.append(acc)
    return out
