"""Filtering a full signal with a prepared two-output kernel.

The signal is cut into overlapping windows x[2k .. 2k+m], each feeding one
basic operation that yields two adjacent outputs.  When the number of valid
outputs is odd, the final window is completed with a single zero sample and
its second output is discarded, so a single uniform kernel serves every
window.
"""

from __future__ import annotations

from typing import Sequence

from .kernels import OpCounter, PreparedKernel, apply_basic_op

__all__ = ["fir_filter"]


def fir_filter(kernel: PreparedKernel, signal: Sequence,
               counter: OpCounter | None = None) -> list:
    """Compute all N - m + 1 valid outputs via ceil((N-m+1)/2) basic ops."""
    m = kernel.plan.m
    n = len(signal)
    if n < m:
        raise ValueError(f"signal has {n} samples, need at least {m}")
    n_out = n - m + 1
    out: list = []
    for k in range((n_out + 1) // 2):
        window = list(signal[2 * k : 2 * k + m + 1])
        if len(window) < m + 1:
            window.append(0)
        y0, y1 = apply_basic_op(kernel, window, counter)
        out.append(y0)
        if len(out) < n_out:
            out.append(y1)
    return out
