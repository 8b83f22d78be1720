"""Graph constructions with vertex provenance: union, Zykov sum, corona,
generalized composition, lexicographic product.

Canonical vertex numbering lays operands out consecutively in list order;
a corona puts the host graph first. This makes the composition
specializations literal graph equalities rather than isomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bits, full_mask
from .graph import Graph


@dataclass(frozen=True)
class CompositeGraph:
    """A built graph plus the record of where each vertex came from.

    ``part_of[v]`` is the operand index owning vertex v, or -1 for a corona
    host vertex. ``index_in_part[v]`` is v's index inside its operand (or
    inside the host). ``offsets[i]`` is the composite index of operand i's
    vertex 0; operands occupy contiguous ranges.
    """

    graph: Graph
    operands: tuple[Graph, ...]
    offsets: tuple[int, ...]
    part_of: tuple[int, ...]
    index_in_part: tuple[int, ...]
    host_graph: Graph | None = None
    host_vertices: int = 0

    def part_mask(self, i: int) -> int:
        self._check_index(i)
        return full_mask(self.operands[i].n) << self.offsets[i]

    def restrict(self, s: int, i: int) -> int:
        """S intersected with operand i, expressed in operand coordinates."""
        self._check_index(i)
        return (s >> self.offsets[i]) & full_mask(self.operands[i].n)

    def restrict_host(self, s: int) -> int:
        """S intersected with the host vertices, in host coordinates."""
        out = 0
        for v in bits(s & self.host_vertices):
            out |= 1 << self.index_in_part[v]
        return out

    def lift(self, m: int, i: int) -> int:
        """An operand-i vertex set expressed in composite coordinates."""
        self._check_index(i)
        if m & ~full_mask(self.operands[i].n):
            raise ValueError(f"set does not fit operand {i}")
        return m << self.offsets[i]

    def _check_index(self, i: int) -> None:
        if not 0 <= i < len(self.operands):
            raise ValueError(f"operand index {i} out of range (0..{len(self.operands) - 1})")


def restrict(c: CompositeGraph, s: int, i: int) -> int:
    return c.restrict(s, i)


def _check_operands(parts: list[Graph], minimum: int) -> None:
    if len(parts) < minimum:
        raise ValueError(f"need at least {minimum} operand graphs, got {len(parts)}")
    for i, g in enumerate(parts):
        if g.n == 0:
            raise ValueError(f"operand {i} is the empty graph")


def _layout(parts: list[Graph], base: int = 0) -> tuple[tuple[int, ...], list[int], list[int], int]:
    offsets = []
    part_of = [-1] * base
    index_in_part = list(range(base))
    pos = base
    for i, g in enumerate(parts):
        offsets.append(pos)
        part_of.extend([i] * g.n)
        index_in_part.extend(range(g.n))
        pos += g.n
    return tuple(offsets), part_of, index_in_part, pos


def disjoint_union(parts: list[Graph]) -> CompositeGraph:
    """Side-by-side operands, no cross edges; at least two nonempty operands."""
    _check_operands(parts, 2)
    offsets, part_of, index_in_part, n = _layout(parts)
    adj = [0] * n
    for off, g in zip(offsets, parts):
        for v in range(g.n):
            adj[off + v] = g.adj[v] << off
    return CompositeGraph(Graph(n, tuple(adj)), tuple(parts), offsets,
                          tuple(part_of), tuple(index_in_part))


def zykov_sum(parts: list[Graph]) -> CompositeGraph:
    """Operands plus every cross edge; at least two nonempty operands."""
    _check_operands(parts, 2)
    offsets, part_of, index_in_part, n = _layout(parts)
    fm = full_mask(n)
    adj = [0] * n
    for off, g in zip(offsets, parts):
        pm = full_mask(g.n) << off
        for v in range(g.n):
            adj[off + v] = (g.adj[v] << off) | (fm & ~pm)
    return CompositeGraph(Graph(n, tuple(adj)), tuple(parts), offsets,
                          tuple(part_of), tuple(index_in_part))


def corona(x: Graph, hs: list[Graph]) -> CompositeGraph:
    """Each host vertex v_i joined to every vertex of its private graph H_i.

    The host is laid out first, then H_1..H_n. Host size 1 is accepted by
    the operator itself even though the structural results assume 2+.
    """
    if x.n == 0:
        raise ValueError("corona host must be nonempty")
    if len(hs) != x.n:
        raise ValueError(f"need exactly {x.n} satellite graphs, got {len(hs)}")
    _check_operands(hs, 1)
    offsets, part_of, index_in_part, n = _layout(hs, base=x.n)
    adj = [0] * n
    for v in range(x.n):
        adj[v] = x.adj[v]
    for i, (off, h) in enumerate(zip(offsets, hs)):
        pm = full_mask(h.n) << off
        adj[i] |= pm
        for v in range(h.n):
            adj[off + v] = (h.adj[v] << off) | (1 << i)
    return CompositeGraph(Graph(n, tuple(adj)), tuple(hs), offsets,
                          tuple(part_of), tuple(index_in_part),
                          host_graph=x, host_vertices=full_mask(x.n))


def composition(h0: Graph, parts: list[Graph]) -> CompositeGraph:
    """Substitute parts[i] for vertex i of the skeleton h0.

    Vertices of distinct parts i, j are adjacent exactly when ij is an edge
    of h0. The edgeless skeleton gives the disjoint union, the complete one
    the Zykov sum.
    """
    if len(parts) != h0.n:
        raise ValueError(f"need exactly {h0.n} parts, got {len(parts)}")
    _check_operands(parts, 0)
    offsets, part_of, index_in_part, n = _layout(parts)
    adj = [0] * n
    masks = [full_mask(g.n) << off for off, g in zip(offsets, parts)]
    for i, (off, g) in enumerate(zip(offsets, parts)):
        cross = 0
        for j in bits(h0.adj[i]):
            cross |= masks[j]
        for v in range(g.n):
            adj[off + v] = (g.adj[v] << off) | cross
    return CompositeGraph(Graph(n, tuple(adj)), tuple(parts), offsets,
                          tuple(part_of), tuple(index_in_part), host_graph=h0)


def lexicographic_product(h0: Graph, h: Graph) -> CompositeGraph:
    """Composition with every part equal to ``h``."""
    if h.n == 0:
        raise ValueError("second factor must be nonempty")
    return composition(h0, [h] * h0.n)
