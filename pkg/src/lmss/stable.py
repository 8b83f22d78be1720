"""Exact stability computations.

alpha() is an exact branch-and-bound that branches in/out on a vertex of
maximum residual degree and prunes with a greedy clique-cover upper bound.
The stable-set stream inserts vertices in increasing order, so each stable
set is produced exactly once and non-stable candidates never materialize.
psi() filters that stream through the local-maximum test, memoizing the
induced-alpha calls by closed-neighborhood mask.
"""

from __future__ import annotations

from collections.abc import Iterator

from .bitset import bits, canonical_key, full_mask
from .graph import Graph, closed_neighborhood


class SetFamily:
    """Canonically ordered collection of vertex sets over a fixed universe.

    Members are sorted by cardinality then bit pattern and deduplicated,
    so families built in any order compare equal structurally.
    """

    __slots__ = ("universe", "members", "_member_set")

    def __init__(self, universe: int, members):
        self.universe = universe
        self._member_set = frozenset(members)
        self.members = tuple(sorted(self._member_set, key=canonical_key))

    def __contains__(self, mask: int) -> bool:
        return mask in self._member_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.universe == other.universe and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.universe, self.members))

    def __repr__(self) -> str:
        return f"SetFamily(universe={self.universe}, size={len(self.members)})"

    def by_size(self, k: int) -> list[int]:
        return [m for m in self.members if m.bit_count() == k]


def is_stable(g: Graph, s: int) -> bool:
    """True iff no edge joins two vertices of ``s``."""
    for v in bits(s):
        if g.adj[v] & s:
            return False
    return True


def enumerate_stable_sets(g: Graph) -> Iterator[int]:
    """Every stable set of ``g`` exactly once, the empty set included."""
    adj = g.adj

    def rec(current: int, candidates: int) -> Iterator[int]:
        yield current
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            yield from rec(current | low, candidates & ~adj[v])

    yield from rec(0, full_mask(g.n))


def _clique_cover_bound(adj: tuple[int, ...], avail: int) -> int:
    """Greedy clique cover of ``avail``; the clique count bounds alpha above."""
    count = 0
    rem = avail
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        rem ^= low
        cand = rem & adj[v]
        while cand:
            lu = cand & -cand
            u = lu.bit_length() - 1
            rem ^= lu
            cand = (cand ^ lu) & adj[u]
        count += 1
    return count


def _alpha_masked(adj: tuple[int, ...], avail: int) -> int:
    """Exact stability number of the subgraph induced by ``avail``."""
    best = 0

    def bb(rem: int, size: int) -> None:
        nonlocal best
        if size + rem.bit_count() <= best:
            return
        # pick the vertex of maximum degree inside rem
        v = -1
        vdeg = -1
        scan = rem
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            scan ^= low
            d = (adj[u] & rem).bit_count()
            if d > vdeg:
                vdeg = d
                v = u
        if vdeg <= 0:
            # all remaining vertices are isolated here; take them
            total = size + rem.bit_count()
            if total > best:
                best = total
            return
        if size + _clique_cover_bound(adj, rem) <= best:
            return
        vbit = 1 << v
        bb(rem & ~(adj[v] | vbit), size + 1)
        bb(rem ^ vbit, size)

    bb(avail, 0)
    return best


def alpha(g: Graph) -> int:
    """Stability number: the size of a maximum stable set."""
    return _alpha_masked(g.adj, full_mask(g.n))


def omega(g: Graph) -> SetFamily:
    """All maximum stable sets, canonically ordered."""
    a = alpha(g)
    return SetFamily(g.n, (s for s in enumerate_stable_sets(g) if s.bit_count() == a))


def is_local_max_stable(g: Graph, s: int) -> bool:
    """True iff ``s`` is stable and maximum within its closed neighborhood.

    The empty set qualifies: its closed neighborhood induces the empty
    graph, whose stability number is 0.
    """
    if not is_stable(g, s):
        return False
    hood = closed_neighborhood(g, s)
    return _alpha_masked(g.adj, hood) == s.bit_count()


def psi(g: Graph) -> SetFamily:
    """The family of all local maximum stable sets, the empty set included."""
    adj = g.adj
    cache: dict[int, int] = {}
    members = []
    for s in enumerate_stable_sets(g):
        hood = s
        for v in bits(s):
            hood |= adj[v]
        a = cache.get(hood)
        if a is None:
            a = _alpha_masked(adj, hood)
            cache[hood] = a
        if a == s.bit_count():
            members.append(s)
    return SetFamily(g.n, members)


def min_nonempty_size(family: SetFamily) -> int | None:
    """Smallest cardinality among nonempty members, or None if there is none."""
    for m in family.members:
        if m:
            return m.bit_count()
    return None


def psi_min_size(g: Graph) -> int | None:
    """Minimum size of a nonempty local maximum stable set (None only for n=0)."""
    return min_nonempty_size(psi(g))
