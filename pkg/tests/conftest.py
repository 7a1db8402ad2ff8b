"""Shared generators for the test suite.  Everything is seeded."""

from __future__ import annotations

import random

from booldim.graphs import Graph
from booldim.tournaments import Tournament


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_symmetric_rows(rng: random.Random, n: int, zero_diagonal: bool = True):
    rows = [0] * n
    for i in range(n):
        if not zero_diagonal and rng.random() < 0.5:
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def random_tournament(rng: random.Random, n: int) -> Tournament:
    arcs = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                arcs[i] |= 1 << j
            else:
                arcs[j] |= 1 << i
    return Tournament(n, tuple(arcs))


def all_tournaments_labeled(n: int):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        arcs = [0] * n
        for t, (i, j) in enumerate(pairs):
            if (mask >> t) & 1:
                arcs[i] |= 1 << j
            else:
                arcs[j] |= 1 << i
        yield Tournament(n, tuple(arcs))
