"""Exact-arithmetic verification: equality you can trust bit for bit.

Every plan constant is a signed sum of taps divided by at most one factor of
two, so with Fraction arithmetic the factorized kernel must equal the direct
method exactly, not merely within a tolerance.  That turns verification into
a pure yes or no question, and validate_plan asks it automatically.
"""

from dataclasses import replace
from fractions import Fraction

import numpy as np

from minfilt import (
    apply_basic_op,
    apply_basic_op_naive,
    generate_plan,
    is_dyadic,
    precompute_diagonal,
    validate_plan,
)

plan = generate_plan(5)
taps = [3, -7, 11, 5, -2]
kernel = precompute_diagonal(plan, taps, exact=True)

print(f"taps w = {taps}")
print("exact diagonal constants:")
for k, v in enumerate(kernel.s):
    print(f"  s[{k}] = {v}   dyadic: {is_dyadic(v)}")
print()
print("Halved constants like", Fraction(3, 2), "stay dyadic, so float mode")
print("rounds each constant once and integer inputs lose nothing at all.")
print()

rng = np.random.default_rng(12345)
trials = 2000
for _ in range(trials):
    w = rng.integers(-2**20, 2**20 + 1, size=5).tolist()
    x = rng.integers(-2**20, 2**20 + 1, size=6).tolist()
    k = precompute_diagonal(plan, w, exact=True)
    assert apply_basic_op(k, x) == apply_basic_op_naive(w, x, exact=True)
print(f"{trials} random integer trials: factorized == direct, every bit equal.")
print()

report = validate_plan(plan)
print(f"validate_plan(generate_plan(5)).ok = {report.ok}")

bad_pre = plan.a_pre.copy()
bad_pre[0, 0] = -1
report = validate_plan(replace(plan, a_pre=bad_pre))
print("After flipping one matrix sign (structurally still legal):")
for msg in report.failures:
    print(f"  {msg}")
print()
print("Structural checks pass the flipped plan; the exact identity catches it.")
