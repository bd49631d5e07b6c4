"""Fully parallel hardware cost of the naive and factorized basic operations.

Counting conventions, matched to the block dataflow diagrams:

* one multiplier per scalar product (naive: 2m, factorized: P);
* adders are fused multi-input blocks counted at their full fan-in, not
  decomposed into two-input chains.  A fan-in-f adder performs f - 1 scalar
  additions, which ties the histogram to the instrumented kernel: the total
  adder capacity sum((f - 1) * count) equals the additions one window
  actually executes;
* constants derived from the taps, halved sums included, are precomputed off
  the datapath and cost nothing here.

Output stage: each WINO3 block sums its products in two 3-input adders and
each PAIR2 block in two 2-input adders; a PASS1 product feeds onward as is.
Multi-block plans then combine one partial per block in two fan-in-B adders
(B = block count).  The one exception is the two-block WINO3 + PAIR2 shape,
where both blocks feed the output adders directly: two fused 5-input adders
and no intermediate stage, which is how the published 5-tap dataflow draws
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .plan import BlockKind, KernelPlan, generate_plan

__all__ = ["OpCount", "SavingsRow", "count_naive", "count_proposed", "savings_report"]


@dataclass(frozen=True)
class OpCount:
    """Multiplier count plus adder histogram keyed by fan-in."""

    multipliers: int
    adders: Mapping[int, int]

    @property
    def scalar_additions(self) -> int:
        """Scalar additions per window implied by the adder capacity."""
        return sum((fan_in - 1) * count for fan_in, count in self.adders.items())


def _histogram(counts: dict[int, int]) -> Mapping[int, int]:
    clean = {k: v for k, v in sorted(counts.items()) if v}
    return MappingProxyType(clean)


def count_naive(m: int) -> OpCount:
    """Direct method: 2m multipliers and two m-input output adders."""
    if m < 1:
        raise ValueError(f"tap count must be >= 1, got {m}")
    if m == 1:
        return OpCount(2, _histogram({}))
    return OpCount(2 * m, _histogram({m: 2}))


def count_proposed(plan: KernelPlan) -> OpCount:
    """Adder histogram and multiplier count of the factorized dataflow."""
    adders: dict[int, int] = {}

    def add(fan_in: int, count: int) -> None:
        adders[fan_in] = adders.get(fan_in, 0) + count

    kinds = [b.kind for b in plan.blocks]
    for kind in kinds:
        if kind is BlockKind.WINO3:
            add(2, 4)
        elif kind is BlockKind.PAIR2:
            add(2, 2)

    if len(kinds) == 1:
        if kinds[0] is BlockKind.WINO3:
            add(3, 2)
        elif kinds[0] is BlockKind.PAIR2:
            add(2, 2)
    elif sorted(k.value for k in kinds) == ["pair2", "wino3"]:
        # Two-block WINO3 + PAIR2 shape: outputs sum all five products at once.
        add(5, 2)
    else:
        for kind in kinds:
            if kind is BlockKind.WINO3:
                add(3, 2)
            elif kind is BlockKind.PAIR2:
                add(2, 2)
        add(len(kinds), 2)

    return OpCount(plan.p, _histogram(adders))


@dataclass(frozen=True)
class SavingsRow:
    m: int
    naive_multipliers: int
    proposed_multipliers: int
    savings_pct: float


def savings_report(m_list: list[int]) -> list[SavingsRow]:
    """Multiplier savings of the factorized method, one row per tap count."""
    rows = []
    for m in m_list:
        plan = generate_plan(m)
        naive = count_naive(m)
        pct = round((1 - plan.p / naive.multipliers) * 100, 1)
        rows.append(SavingsRow(m, naive.multipliers, plan.p, pct))
    return rows
