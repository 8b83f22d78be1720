"""Greedoid axiom checks with minimal counterexample witnesses.

A family is checked for accessibility (every nonempty member can drop one
element and stay a member) and exchange (a member one larger than another
can donate an element). Witnesses are the canonically smallest failures,
so verdicts are reproducible test anchors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bits
from .stable import SetFamily

GREEDOID = "GREEDOID"
ACCESSIBILITY_FAIL = "ACCESSIBILITY_FAIL"
EXCHANGE_FAIL = "EXCHANGE_FAIL"


@dataclass(frozen=True)
class GreedoidVerdict:
    status: str
    witness_x: int | None
    witness_y: int | None
    family_size: int
    universe: int

    @property
    def holds(self) -> bool:
        return self.status == GREEDOID

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "witness_x": None if self.witness_x is None else list(bits(self.witness_x)),
            "witness_y": None if self.witness_y is None else list(bits(self.witness_y)),
            "family_size": self.family_size,
            "universe": self.universe,
        }


def _require_empty(f: SetFamily) -> None:
    if 0 not in f:
        raise ValueError("family violates the contract: the empty set is not a member")


def check_accessibility(f: SetFamily) -> int | None:
    """None on pass, else the canonically smallest member with no removable element."""
    _require_empty(f)
    for x in f.members:
        if not x:
            continue
        if not any((x ^ (1 << v)) in f for v in bits(x)):
            return x
    return None


def check_exchange(f: SetFamily) -> tuple[int, int] | None:
    """None on pass, else the canonically smallest failing pair (X, Y)."""
    _require_empty(f)
    by_size: dict[int, list[int]] = {}
    for m in f.members:
        by_size.setdefault(m.bit_count(), []).append(m)
    for x in f.members:
        k = x.bit_count()
        if k == 0:
            continue
        for y in by_size.get(k - 1, ()):
            if not any((y | (1 << v)) in f for v in bits(x & ~y)):
                return x, y
    return None


def is_greedoid(f: SetFamily) -> GreedoidVerdict:
    """Accessibility first, then exchange; the first failing axiom names the verdict."""
    acc = check_accessibility(f)
    if acc is not None:
        return GreedoidVerdict(ACCESSIBILITY_FAIL, acc, None, len(f), f.universe)
    exc = check_exchange(f)
    if exc is not None:
        return GreedoidVerdict(EXCHANGE_FAIL, exc[0], exc[1], len(f), f.universe)
    return GreedoidVerdict(GREEDOID, None, None, len(f), f.universe)


def accessibility_chain(f: SetFamily, s: int) -> list[int]:
    """Nested members from the empty set up to ``s``, one new vertex per step.

    Peeling is deterministic: each step drops the largest-index vertex
    whose removal stays in the family, which makes every intermediate set
    the canonically smallest feasible predecessor.
    """
    if s not in f:
        raise ValueError("set is not a member of the family")
    chain = [s]
    cur = s
    while cur:
        nxt = None
        for v in bits(cur):
            cand = cur ^ (1 << v)
            if cand in f:
                nxt = cand  # keep scanning: later (larger) vertices win
        if nxt is None:
            raise ValueError(
                f"no accessibility chain: stuck at member with vertices {sorted(bits(cur))}"
            )
        chain.append(nxt)
        cur = nxt
    chain.reverse()
    return chain
