"""Construction of minimal-multiplication plans for the basic filtering operation.

The basic operation takes an (m+1)-sample window x and an m-tap filter w and
produces the two adjacent FIR outputs

    y0 = sum_i x[i] * w[i],      y1 = sum_i x[i+1] * w[i].

A :class:`KernelPlan` expresses this as y = a_post @ diag(s) @ a_pre @ x where
a_pre and a_post contain only entries from {-1, 0, +1} (so they cost additions,
never multiplications) and s is a vector of constants precomputed from the taps.
The number of diagonal entries P is the number of scalar multiplications per
window, and it is smaller than the 2m of the direct method.

Plans are assembled from three block types that each handle a contiguous run
of taps:

* ``WINO3`` covers 3 taps with 4 products.  This is Winograd's classic trick
  for two adjacent 3-tap outputs: with t the first tap index,

      mu1 = (x[t] - x[t+2]) * w[t]
      mu2 = (x[t+1] + x[t+2]) * (w[t] + w[t+1] + w[t+2]) / 2
      mu3 = (x[t+2] - x[t+1]) * (w[t] - w[t+1] + w[t+2]) / 2
      mu4 = (x[t+1] - x[t+3]) * w[t+2]

  and the block's two partial outputs are mu1+mu2+mu3 and mu2-mu3-mu4.

* ``PAIR2`` covers 2 taps with 3 products (the two-tap analogue of the same
  idea): mu_a = (x[t] - x[t+1])*w[t], mu_b = x[t+1]*(w[t] + w[t+1]),
  mu_c = (x[t+2] - x[t+1])*w[t+1]; partials are mu_a+mu_b and mu_b+mu_c.

* ``PASS1`` covers 1 tap with 2 plain products x[t]*w[t] and x[t+1]*w[t].

``decompose`` tiles the tap range greedily with WINO3 blocks and closes the
remainder with one PASS1 or PAIR2 block, so any tap count m >= 1 is supported
with P = 4*(m // 3) + (0, 2, 3)[m % 3] products.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "BlockKind",
    "Block",
    "DiagonalTerm",
    "KernelPlan",
    "ValidationReport",
    "decompose",
    "generate_plan",
    "validate_plan",
    "plan_to_json",
    "plan_from_json",
]


class BlockKind(Enum):
    WINO3 = "wino3"
    PASS1 = "pass1"
    PAIR2 = "pair2"


_TAP_COUNT = {BlockKind.WINO3: 3, BlockKind.PASS1: 1, BlockKind.PAIR2: 2}
_PRODUCT_COUNT = {BlockKind.WINO3: 4, BlockKind.PASS1: 2, BlockKind.PAIR2: 3}


@dataclass(frozen=True)
class Block:
    """One contiguous run of taps handled by a single factorization template."""

    kind: BlockKind
    tap_offset: int

    @property
    def tap_count(self) -> int:
        return _TAP_COUNT[self.kind]

    @property
    def product_count(self) -> int:
        return _PRODUCT_COUNT[self.kind]


@dataclass(frozen=True)
class DiagonalTerm:
    """Symbolic recipe for one diagonal constant.

    The constant is (sum_i coeffs[i] * w[i]), divided by two when ``halved``.
    Coefficients are restricted to {-1, 0, +1}; halving only occurs for the
    three-tap combinations (w[a] +/- w[a+1] + w[a+2]) / 2.
    """

    coeffs: tuple[int, ...]
    halved: bool


@dataclass(frozen=True)
class KernelPlan:
    """Factorization of the basic operation for one tap count.

    The plan is a plain data container; ``validate_plan`` checks its
    invariants.  ``a_pre`` has shape (p, m+1), ``a_post`` shape (2, p), and
    ``diag`` holds p terms.  Instances returned by ``generate_plan`` and
    ``plan_from_json`` carry read-only matrices and are safe to share across
    threads.
    """

    m: int
    blocks: tuple[Block, ...]
    a_pre: np.ndarray
    a_post: np.ndarray
    diag: tuple[DiagonalTerm, ...]

    @property
    def p(self) -> int:
        """Number of products (scalar multiplications) per window."""
        return len(self.diag)


def decompose(m: int) -> list[Block]:
    """Tile the tap range [0, m) with blocks.

    Greedy: WINO3 blocks first, then one PASS1 (1 tap left) or PAIR2 (2 taps
    left) closing block.  m == 7 is the one exception: its leftover tap sits
    between the two 3-tap groups, matching the published 7-tap layout.
    """
    if m < 1:
        raise ValueError(f"tap count must be >= 1, got {m}")
    if m == 7:
        return [
            Block(BlockKind.WINO3, 0),
            Block(BlockKind.PASS1, 3),
            Block(BlockKind.WINO3, 4),
        ]
    blocks = [Block(BlockKind.WINO3, 3 * i) for i in range(m // 3)]
    if m % 3 == 1:
        blocks.append(Block(BlockKind.PASS1, m - 1))
    elif m % 3 == 2:
        blocks.append(Block(BlockKind.PAIR2, m - 2))
    return blocks


def _unit(m: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if j == i else 0 for j in range(m))


def _combine(*rows: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*rows))


def generate_plan(m: int) -> KernelPlan:
    """Build the full factorization plan for an m-tap filter."""
    blocks = decompose(m)
    p = sum(b.product_count for b in blocks)
    a_pre = np.zeros((p, m + 1), dtype=np.int8)
    a_post = np.zeros((2, p), dtype=np.int8)
    diag: list[DiagonalTerm] = []

    r = 0
    for block in blocks:
        t = block.tap_offset
        if block.kind is BlockKind.WINO3:
            a_pre[r, t], a_pre[r, t + 2] = 1, -1
            a_pre[r + 1, t + 1], a_pre[r + 1, t + 2] = 1, 1
            a_pre[r + 2, t + 1], a_pre[r + 2, t + 2] = -1, 1
            a_pre[r + 3, t + 1], a_pre[r + 3, t + 3] = 1, -1
            a_post[0, r : r + 3] = (1, 1, 1)
            a_post[1, r + 1 : r + 4] = (1, -1, -1)
            mid = _combine(_unit(m, t), _unit(m, t + 1), _unit(m, t + 2))
            alt = _combine(_unit(m, t), _unit(m, t + 1, -1), _unit(m, t + 2))
            diag += [
                DiagonalTerm(_unit(m, t), False),
                DiagonalTerm(mid, True),
                DiagonalTerm(alt, True),
                DiagonalTerm(_unit(m, t + 2), False),
            ]
            r += 4
        elif block.kind is BlockKind.PASS1:
            a_pre[r, t] = 1
            a_pre[r + 1, t + 1] = 1
            a_post[0, r] = 1
            a_post[1, r + 1] = 1
            diag += [DiagonalTerm(_unit(m, t), False)] * 2
            r += 2
        else:  # PAIR2
            a_pre[r, t], a_pre[r, t + 1] = 1, -1
            a_pre[r + 1, t + 1] = 1
            a_pre[r + 2, t + 1], a_pre[r + 2, t + 2] = -1, 1
            a_post[0, r], a_post[0, r + 1] = 1, 1
            a_post[1, r + 1], a_post[1, r + 2] = 1, 1
            pair = _combine(_unit(m, t), _unit(m, t + 1))
            diag += [
                DiagonalTerm(_unit(m, t), False),
                DiagonalTerm(pair, False),
                DiagonalTerm(_unit(m, t + 1), False),
            ]
            r += 3

    a_pre.flags.writeable = False
    a_post.flags.writeable = False
    return KernelPlan(m, tuple(blocks), a_pre, a_post, tuple(diag))


@dataclass
class ValidationReport:
    """Outcome of ``validate_plan``; failures are collected, never raised."""

    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_structure(plan: KernelPlan, fail: list[str]) -> None:
    if plan.m < 1:
        fail.append(f"tap count must be >= 1, got {plan.m}")
        return

    covered = []
    for block in plan.blocks:
        covered.extend(range(block.tap_offset, block.tap_offset + block.tap_count))
    if sorted(covered) != list(range(plan.m)):
        fail.append(f"blocks do not tile the tap range [0, {plan.m}) exactly once")

    p = sum(b.product_count for b in plan.blocks)
    if len(plan.diag) != p:
        fail.append(f"dimension violation: {len(plan.diag)} diagonal terms, blocks need {p}")
    if plan.a_pre.ndim != 2 or plan.a_pre.shape != (p, plan.m + 1):
        fail.append(f"dimension violation: a_pre shape {plan.a_pre.shape}, expected {(p, plan.m + 1)}")
    if plan.a_post.ndim != 2 or plan.a_post.shape != (2, p):
        fail.append(f"dimension violation: a_post shape {plan.a_post.shape}, expected {(2, p)}")

    for name, mat in (("a_pre", plan.a_pre), ("a_post", plan.a_post)):
        if mat.size and np.abs(np.asarray(mat, dtype=np.int64)).max() > 1:
            fail.append(f"ternary-entry violation: {name} has an entry outside {{-1, 0, +1}}")

    for k, term in enumerate(plan.diag):
        coeffs = np.asarray(term.coeffs, dtype=np.int64)
        if coeffs.shape != (plan.m,):
            fail.append(f"dimension violation: diag term {k} has {coeffs.size} coefficients, expected {plan.m}")
            continue
        if coeffs.size and np.abs(coeffs).max() > 1:
            fail.append(f"ternary-entry violation: diag term {k} coefficient outside {{-1, 0, +1}}")
        if term.halved and not _is_halvable(coeffs):
            fail.append(f"diag term {k} is halved but is not of the form (w[a] +/- w[a+1] + w[a+2]) / 2")


def _is_halvable(coeffs: np.ndarray) -> bool:
    nz = np.flatnonzero(coeffs)
    if len(nz) != 3 or nz[2] - nz[0] != 2 or nz[1] - nz[0] != 1:
        return False
    a = nz[0]
    return coeffs[a] == 1 and coeffs[a + 2] == 1 and coeffs[a + 1] in (-1, 1)


def _check_identity(plan: KernelPlan, fail: list[str]) -> None:
    # Exact-arithmetic equality against the direct two-output sums on a fixed
    # pseudorandom integer set; deterministic across runs and platforms.
    from .kernels import apply_basic_op, apply_basic_op_naive, precompute_diagonal

    rng = np.random.default_rng(1789)
    for trial in range(100):
        w = rng.integers(-1024, 1025, size=plan.m)
        x = rng.integers(-1024, 1025, size=plan.m + 1)
        kernel = precompute_diagonal(plan, w, exact=True)
        got = apply_basic_op(kernel, x)
        want = apply_basic_op_naive(w, x, exact=True)
        if got != want:
            fail.append(
                f"correctness-identity violation on trial {trial}: got {got}, expected {want}"
            )
            return


def validate_plan(plan: KernelPlan) -> ValidationReport:
    """Check every structural invariant plus the correctness identity.

    Structural failures (ternary entries, dimensions, block tiling, halving
    recipe) are all reported; the exact-arithmetic identity is only attempted
    when the structure is sound enough to evaluate.
    """
    failures: list[str] = []
    _check_structure(plan, failures)
    if not failures:
        _check_identity(plan, failures)
    return ValidationReport(failures)


_KIND_TO_JSON = {BlockKind.WINO3: "wino3", BlockKind.PASS1: "pass1", BlockKind.PAIR2: "pair2"}
_KIND_FROM_JSON = {v: k for k, v in _KIND_TO_JSON.items()}


def plan_to_json(plan: KernelPlan) -> str:
    """Serialize to the canonical single-line JSON document.

    Key order and separators are fixed, so serialize -> parse -> serialize is
    byte-identical.
    """
    doc = {
        "m": plan.m,
        "blocks": [
            {"kind": _KIND_TO_JSON[b.kind], "offset": b.tap_offset} for b in plan.blocks
        ],
        "a_pre": [[int(v) for v in row] for row in plan.a_pre],
        "a_post": [[int(v) for v in row] for row in plan.a_post],
        "diag": [
            {"coeffs": [int(c) for c in t.coeffs], "halved": t.halved} for t in plan.diag
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def plan_from_json(text: str) -> KernelPlan:
    """Parse a plan document.

    Only the schema is enforced here; semantic invariants are left to
    ``validate_plan`` so that a corrupted document can still be loaded and
    reported on.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed plan document: {exc}") from exc
    try:
        m = int(doc["m"])
        blocks = tuple(
            Block(_KIND_FROM_JSON[b["kind"]], int(b["offset"])) for b in doc["blocks"]
        )
        a_pre = np.array(doc["a_pre"], dtype=np.int8)
        a_post = np.array(doc["a_post"], dtype=np.int8)
        diag = tuple(
            DiagonalTerm(tuple(int(c) for c in t["coeffs"]), bool(t["halved"]))
            for t in doc["diag"]
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ValueError(f"malformed plan document: {exc}") from exc
    a_pre.flags.writeable = False
    a_post.flags.writeable = False
    return KernelPlan(m, blocks, a_pre, a_post, diag)
