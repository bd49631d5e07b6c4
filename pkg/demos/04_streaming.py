"""Filtering a whole signal: windows of m+1 samples, two outputs at a time.

fir_filter slides the kernel across the signal in steps of two, so a length-N
input costs ceil((N-m+1)/2) basic operations.  When the output count is odd,
the last window borrows a single zero sample and its second output is
discarded; no special-case kernel is needed.
"""

import numpy as np

from minfilt import (
    OpCounter,
    fir_filter,
    generate_plan,
    naive_fir,
    precompute_diagonal,
)

plan = generate_plan(3)
taps = [1.0, 1.0, 1.0]
kernel = precompute_diagonal(plan, taps)

signal = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]
print(f"signal = {signal}, taps = {taps} (moving sum of three)")
print(f"fir_filter -> {fir_filter(kernel, signal)}")
print(f"naive_fir  -> {naive_fir(signal, taps)}")
print()

signal = [1.0, 1.0, 1.0, 1.0, 1.0]
print(f"signal = {signal} gives an odd number of outputs:")
print(f"fir_filter -> {fir_filter(kernel, signal)}  (padded window's y1 dropped)")
print()

print("Cost per signal length (m = 3, so one window per two outputs):")
print("N    outputs  windows  mults (windows * 4)  direct mults (3 per output)")
for n in range(3, 11):
    counter = OpCounter()
    out = fir_filter(kernel, [0.0] * n, counter)
    windows = counter.mults // plan.p
    print(f"{n:<4} {len(out):<8} {windows:<8} {counter.mults:<20} {3 * len(out)}")
print()

rng = np.random.default_rng(606)
for m in (3, 5, 7, 9, 11):
    p = generate_plan(m)
    w = rng.integers(-999, 1000, size=m).tolist()
    x = rng.integers(-999, 1000, size=m + 17).tolist()
    k = precompute_diagonal(p, w, exact=True)
    assert fir_filter(k, x) == naive_fir(x, w, exact=True)
print("Exact streaming equality spot-checked for m in {3, 5, 7, 9, 11}.")
