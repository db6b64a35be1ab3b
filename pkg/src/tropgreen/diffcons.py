"""Feasibility of systems of difference constraints ``x[a] - x[b] <= c``."""

from __future__ import annotations

from typing import Iterable


def solve(n: int, constraints: Iterable[tuple]) -> list | None:
    """Return a solution of the constraints ``(a, b, c)``: ``x[a] - x[b] <= c``,
    or None when a negative cycle makes the system infeasible.

    Bellman-Ford from a virtual source joined to every variable at weight 0.
    """
    edges = [(b, a, c) for a, b, c in constraints]
    dist = [0] * n
    for _ in range(n):
        changed = False
        for u, v, w in edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            return dist
    for u, v, w in edges:
        if dist[u] + w < dist[v]:
            return None
    return dist


def feasible(n: int, constraints: Iterable[tuple]) -> bool:
    return solve(n, constraints) is not None


def search_disjunctive(n: int, base: list, clauses: list, budget: int):
    """Pick one alternative from every clause so the union is feasible.

    ``clauses`` is a list of lists of alternatives; an alternative is a list of
    constraints.  Returns ``(solution, nodes)``; ``solution`` is None when the
    search space is exhausted and the string ``"budget"`` when ``budget``
    nodes were spent first.
    """
    if solve(n, base) is None:
        return None, 1
    order = sorted(range(len(clauses)), key=lambda i: len(clauses[i]))
    clauses = [clauses[i] for i in order]
    nodes = 0
    stack = [(0, list(base))]
    while stack:
        depth, chosen = stack.pop()
        nodes += 1
        if nodes > budget:
            return "budget", nodes
        if depth == len(clauses):
            return solve(n, chosen), nodes
        for alt in reversed(clauses[depth]):
            trial = chosen + list(alt)
            if solve(n, trial) is not None:
                stack.append((depth + 1, trial))
    return None, nodes
