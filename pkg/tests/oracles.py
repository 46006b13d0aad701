"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations, product

from asmlab.lattice import GridSpec, boundary_edges, edge_set, incident_edges, interior_vertices, square


def naive_asms(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Filter all 3^(n*n) matrices straight from the definition."""
    out = []
    for flat in product((-1, 0, 1), repeat=n * n):
        rows = [flat[k * n:(k + 1) * n] for k in range(n)]
        cols = list(zip(*rows))
        ok = True
        for line in rows + cols:
            acc = 0
            for x in line:
                acc += x
                if acc not in (0, 1):
                    ok = False
            if acc != 1:
                ok = False
        if ok:
            out.append(tuple(tuple(r) for r in rows))
    return out


def monotone_triangle_count(n: int) -> int:
    """Count monotone triangles with bottom row 1..n.

    Each row interlaces the one below it: a row of length k sits weakly
    between neighbours of the length-(k+1) row and is strictly increasing.
    """

    def rows_above(row: tuple[int, ...]):
        ranges = [range(row[k], row[k + 1] + 1) for k in range(len(row) - 1)]
        for cand in product(*ranges):
            if all(cand[k] < cand[k + 1] for k in range(len(cand) - 1)):
                yield cand

    def count(row: tuple[int, ...]) -> int:
        if len(row) == 1:
            return 1
        return sum(count(r) for r in rows_above(row))

    return count(tuple(range(1, n + 1)))


def naive_ice_states(spec: GridSpec, fixed: dict | None = None) -> list[tuple[int, ...]]:
    """All bit vectors on the edges that satisfy the ice rule at every interior vertex."""
    edges = edge_set(spec)
    pos = {e: k for k, e in enumerate(edges)}
    out = []
    for bits in product((0, 1), repeat=len(edges)):
        if fixed and any(bits[pos[e]] != b for e, b in fixed.items()):
            continue
        good = True
        for v in interior_vertices(spec):
            outdeg = 0
            for e in incident_edges(spec, v):
                lo, hi = e.endpoints
                head = hi if bits[pos[e]] else lo
                outdeg += head != v
            if outdeg != 2:
                good = False
                break
        if good:
            out.append(bits)
    return out


def naive_fpls(n: int, word: str) -> list[tuple[int, ...]]:
    """Colorings with the given boundary word and two black edges at every interior vertex."""
    spec = square(n)
    edges = edge_set(spec)
    pos = {e: k for k, e in enumerate(edges)}
    fixed = {pos[e]: int(c == "b") for e, c in zip(boundary_edges(n), word)}
    free = [k for k in range(len(edges)) if k not in fixed]
    out = []
    for choice in product((0, 1), repeat=len(free)):
        bits = [0] * len(edges)
        for k, b in fixed.items():
            bits[k] = b
        for k, b in zip(free, choice):
            bits[k] = b
        if all(sum(bits[pos[e]] for e in incident_edges(spec, v)) == 2 for v in interior_vertices(spec)):
            out.append(tuple(bits))
    return out


def all_perfect_matchings(points: tuple[int, ...]):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, other in enumerate(rest):
        for m in all_perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + m


def crosses(pairs) -> bool:
    return any(
        a < c < b < d or c < a < d < b
        for (a, b), (c, d) in combinations(pairs, 2)
    )


def noncrossing_matchings(n: int) -> list[tuple[tuple[int, int], ...]]:
    return sorted(
        tuple(sorted(m)) for m in all_perfect_matchings(tuple(range(1, 2 * n + 1))) if not crosses(m)
    )


def all_subsets_ideals(elements, less) -> list[frozenset]:
    """Every subset closed downward under the strict order ``less``."""
    elements = list(elements)
    out = []
    for size in range(len(elements) + 1):
        for sub in combinations(elements, size):
            s = set(sub)
            if all(y in s for x in s for y in elements if less(y, x)):
                out.append(frozenset(s))
    return out
