#!/usr/bin/env python3
"""Regenerate the exhaustive small-graph corpus shipped in src/lmss/data/.

One file per vertex count n in 1..7, one graph6 line per isomorphism
class, canonical representative chosen as the minimum edge bitmask over
all vertex permutations, lines sorted by that mask.

Classes are built by vertex extension: every class on n vertices arises
from some class on n-1 vertices plus a new vertex with some neighborhood,
so extending all representatives by all 2^(n-1) neighborhoods and
deduplicating canonical forms is exhaustive. The per-n class counts are
asserted against the known sequence 1, 2, 4, 11, 34, 156, 1044.

Needs numpy (vectorizes the min-over-permutations step). Run from the
repo root with the package installed:  python scripts/gen_graph_corpus.py
"""

from __future__ import annotations

import itertools
import pathlib
import sys

import numpy as np

from lmss.graph import Graph, from_edge_list
from lmss.graph6 import encode

MAX_N = 7
EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "src" / "lmss" / "data"


def pair_index(i: int, j: int) -> int:
    """Column-major upper-triangle bit index of the pair (i, j), i < j."""
    return j * (j - 1) // 2 + i


def permutation_weights(n: int) -> np.ndarray:
    """weights[p, b] = the mask bit produced by source pair-bit b under perm p."""
    k = n * (n - 1) // 2
    pairs = [(i, j) for j in range(n) for i in range(j)]
    perms = list(itertools.permutations(range(n)))
    weights = np.zeros((len(perms), k), dtype=np.uint64)
    for pi, perm in enumerate(perms):
        for b, (i, j) in enumerate(pairs):
            a, c = perm[i], perm[j]
            if a > c:
                a, c = c, a
            weights[pi, b] = np.uint64(1) << np.uint64(pair_index(a, c))
    return weights


def canonical_mask(mask: int, k: int, weights: np.ndarray) -> int:
    if mask == 0:
        return 0
    cols = [b for b in range(k) if mask >> b & 1]
    return int(weights[:, cols].sum(axis=1, dtype=np.uint64).min())


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = []
    for j in range(n):
        for i in range(j):
            if mask >> pair_index(i, j) & 1:
                pairs.append((i, j))
    return from_edge_list(n, pairs)


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    reps: list[int] = [0]  # the single graph on one vertex, as an edge mask
    for n in range(1, MAX_N + 1):
        if n > 1:
            k = n * (n - 1) // 2
            weights = permutation_weights(n)
            base_bits = (n - 1) * (n - 2) // 2
            canon: set[int] = set()
            for old in reps:
                for nb in range(1 << (n - 1)):
                    candidate = old | (nb << base_bits)
                    canon.add(canonical_mask(candidate, k, weights))
            reps = sorted(canon)
        assert len(reps) == EXPECTED_COUNTS[n], (n, len(reps))
        path = OUT_DIR / f"all_graphs_n{n}.g6"
        lines = []
        for mask in reps:
            g = mask_to_graph(n, mask)
            lines.append(encode(g.n, g.adj).decode("ascii"))
        path.write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(reps)} classes -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
