"""Fully packed loops, monochromatic components and link patterns.

Colorings store one bit per edge of L_n (1 = black, 0 = white). Boundary words
are strings over ``"b"``/``"w"`` read along e_1, ..., e_{4n}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .lattice import (
    EdgeKey,
    H,
    V,
    Vertex,
    boundary_edges,
    boundary_endpoint,
    boundary_label_map,
    edge_index,
    edge_set,
    incident_edges,
    interior_vertices,
    is_boundary,
    is_odd,
    square,
)
from .sixvertex import EdgeBits, IceState, NotOpenBoundary, is_open_boundary, validate_ice

BLACK, WHITE = 1, 0
MINUS, PLUS = "-", "+"


class ColorRuleViolation(ValueError):
    def __init__(self, vertex: Vertex):
        super().__init__(f"vertex {vertex} does not have exactly two black edges")
        self.vertex = vertex


class WrongBoundary(ValueError):
    pass


class MalformedPairs(ValueError):
    pass


def parse_boundary(boundary: str) -> str:
    key = boundary.strip().lower().replace("tau", "").replace("_", "")
    if key in ("-", "minus", "m"):
        return MINUS
    if key in ("+", "plus", "p"):
        return PLUS
    raise ValueError(f"unknown boundary {boundary!r}; use '-' or '+'")


def parse_color(color: str | int) -> int:
    if color in (1, "b", "black"):
        return BLACK
    if color in (0, "w", "white"):
        return WHITE
    raise ValueError(f"unknown color {color!r}; use 'b' or 'w'")


def color_name(color: int) -> str:
    return "b" if color == BLACK else "w"


def tau_minus(n: int) -> str:
    return "wb" * (2 * n)


def tau_plus(n: int) -> str:
    return "bw" * (2 * n)


def tau(n: int, boundary: str) -> str:
    return tau_minus(n) if parse_boundary(boundary) == MINUS else tau_plus(n)


class EdgeColoring(EdgeBits):
    """An arbitrary two-coloring of E(L_n)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.spec.is_square:
            raise ValueError("colorings live on square grids")

    @property
    def black(self) -> tuple[EdgeKey, ...]:
        return tuple(e for e, b in self.items() if b)

    def boundary_word(self) -> str:
        return "".join("b" if self[e] else "w" for e in boundary_edges(self.n))

    def inverted(self):
        return type(self)(self.spec, tuple(1 - b for b in self.bits))

    def to_json(self) -> dict:
        return {"n": self.n, "black": [str(e) for e in self.black]}

    @classmethod
    def from_json(cls, data: dict):
        n = int(data["n"])
        if "bits" in data:
            return super().from_json({"m": n, "n": n, "bits": data["bits"]})
        return cls.from_black(n, [EdgeKey.parse(s) for s in data["black"]])

    @classmethod
    def from_black(cls, n: int, black: Iterable[EdgeKey]):
        spec = square(n)
        idx = edge_index(spec)
        bits = [0] * spec.edge_count
        for e in black:
            if e not in idx:
                raise ValueError(f"{e} is not an edge of L_{n}")
            bits[idx[e]] = 1
        return cls(spec, tuple(bits))


class Fpl(EdgeColoring):
    """A coloring with exactly two black edges at each interior vertex."""


def validate_fpl(c: EdgeColoring) -> Fpl:
    spec = c.spec
    for v in interior_vertices(spec):
        if sum(c[e] for e in incident_edges(spec, v)) != 2:
            raise ColorRuleViolation(v)
    return Fpl(spec, c.bits)


def is_fpl(c: EdgeColoring) -> bool:
    try:
        validate_fpl(c)
    except ColorRuleViolation:
        return False
    return True


def has_boundary(f: EdgeColoring, boundary: str) -> bool:
    return f.boundary_word() == tau(f.n, boundary)


def _odd_end(e: EdgeKey) -> Vertex:
    lo, hi = e.endpoints
    return lo if is_odd(lo) else hi


def sixvertex_to_fpl(s: IceState) -> Fpl:
    if not is_open_boundary(s):
        raise NotOpenBoundary("state does not satisfy the open boundary condition")
    bits = tuple(int(s.points_to(e) != _odd_end(e)) for e in edge_set(s.spec))
    return validate_fpl(EdgeColoring(s.spec, bits))


def fpl_to_sixvertex(f: EdgeColoring) -> IceState:
    if not has_boundary(f, MINUS):
        raise WrongBoundary(f"boundary word {f.boundary_word()} is not tau_minus")
    bits = []
    for e, black in f.items():
        odd = _odd_end(e)
        lo, hi = e.endpoints
        target = (hi if odd == lo else lo) if black else odd
        bits.append(int(target == hi))
    return validate_ice(f.spec, bits)


# components ------------------------------------------------------------------


@dataclass(frozen=True)
class MonoComponent:
    color: int
    kind: str  # "path" or "cycle"
    vertices: tuple[Vertex, ...]
    labels: tuple[int, ...] = ()  # boundary labels at the two ends of a path

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1 if self.kind == "path" else len(self.vertices)

    def to_json(self) -> dict:
        out = {
            "color": color_name(self.color),
            "kind": self.kind,
            "vertices": [list(v) for v in self.vertices],
        }
        if self.labels:
            out["labels"] = list(self.labels)
        return out


def _other(e: EdgeKey, v: Vertex) -> Vertex:
    lo, hi = e.endpoints
    return hi if v == lo else lo


def monochromatic_components(f: EdgeColoring, color: int | str) -> list[MonoComponent]:
    """Split the subgraph of one color into boundary paths and cycles.

    Paths are listed by their smaller boundary label, then cycles by their
    least vertex. Raises ``ValueError`` if the subgraph has a vertex of
    degree above 2 or two paths meet.
    """
    col = parse_color(color)
    spec = f.spec
    n = spec.n
    labels = boundary_label_map(n)
    adj: dict[Vertex, list[EdgeKey]] = {}
    for e, b in f.items():
        if b == col:
            for v in e.endpoints:
                adj.setdefault(v, []).append(e)
    for v, es in adj.items():
        if len(es) > (1 if is_boundary(spec, v) else 2):
            raise ValueError(f"vertex {v} has {len(es)} edges of one color")

    used: set[EdgeKey] = set()
    out: list[MonoComponent] = []
    for e in boundary_edges(n):
        if f[e] != col or e in used:
            continue
        start = boundary_endpoint(spec, e)
        walk = [start]
        v, edge = start, e
        while True:
            used.add(edge)
            v = _other(edge, v)
            walk.append(v)
            nxt = [x for x in adj[v] if x not in used]
            if not nxt:
                break
            edge = nxt[0]
        if not is_boundary(spec, v):
            raise ValueError(f"path from {start} stops at interior vertex {v}")
        last = walk[-2], walk[-1]
        end_edge = next(x for x in adj[v] if set(x.endpoints) == set(last))
        out.append(MonoComponent(col, "path", tuple(walk), (labels[e], labels[end_edge])))

    for e, b in f.items():
        if b != col or e in used:
            continue
        start = min(e.endpoints)
        cyc = [start]
        v, edge = start, e
        while True:
            used.add(edge)
            v = _other(edge, v)
            nxt = [x for x in adj[v] if x not in used]
            if not nxt:
                break
            cyc.append(v)
            edge = nxt[0]
        if v != start:
            raise ValueError(f"open component from {start} avoids the boundary")
        out.append(MonoComponent(col, "cycle", _canonical_cycle(cyc)))
    paths = [c for c in out if c.kind == "path"]
    cycles = sorted((c for c in out if c.kind == "cycle"), key=lambda c: c.vertices)
    return paths + cycles


def _canonical_cycle(cyc: list[Vertex]) -> tuple[Vertex, ...]:
    k = cyc.index(min(cyc))
    fwd = cyc[k:] + cyc[:k]
    back = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, back))


def count_cycles(f: EdgeColoring, color: int | str | None = None) -> int:
    colors = (BLACK, WHITE) if color is None else (parse_color(color),)
    return sum(
        1 for c in colors for comp in monochromatic_components(f, c) if comp.kind == "cycle"
    )


# link patterns ---------------------------------------------------------------


def is_noncrossing_matching(
    size: int, pairs: Iterable[Sequence[int]], singles_allowed: bool = False
) -> bool:
    """Whether ``pairs`` is a non-crossing matching on ``[size]``.

    A matching crosses if two pairs interleave, or if a pair straddles an
    unmatched point. With ``singles_allowed`` false every point must be matched.
    """
    norm = []
    seen: set[int] = set()
    for p in pairs:
        if len(p) != 2:
            raise MalformedPairs(f"{p!r} is not a pair")
        u, v = sorted(int(x) for x in p)
        if u == v or u < 1 or v > size or u in seen or v in seen:
            raise MalformedPairs(f"pair {p!r} is malformed or overlaps another")
        seen |= {u, v}
        norm.append((u, v))
    singles = set(range(1, size + 1)) - seen
    if singles and not singles_allowed:
        return False
    for u1, v1 in norm:
        if any(u1 < j < v1 for j in singles):
            return False
        for u2, v2 in norm:
            if u1 < u2 < v1 < v2:
                return False
    return True


@dataclass(frozen=True, order=True)
class LinkPattern:
    """A non-crossing perfect matching of ``[2n]``, pairs sorted with u < v."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted(tuple(sorted(map(int, p))) for p in self.pairs))
        object.__setattr__(self, "pairs", norm)
        if len(norm) != self.n or not is_noncrossing_matching(2 * self.n, norm):
            raise MalformedPairs(f"{norm} is not a link pattern of size {self.n}")

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> LinkPattern:
        ps = [tuple(p) for p in pairs]
        return cls(len(ps), tuple(ps))

    def partner(self, k: int) -> int:
        for u, v in self.pairs:
            if k == u:
                return v
            if k == v:
                return u
        raise KeyError(k)

    def rotated(self, k: int = 1) -> LinkPattern:
        """Shift every label down by ``k`` (cyclically on ``[2n]``)."""
        size = 2 * self.n
        return LinkPattern(
            self.n, tuple(((u - 1 - k) % size + 1, (v - 1 - k) % size + 1) for u, v in self.pairs)
        )

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, data: dict) -> LinkPattern:
        pairs = [tuple(p) for p in data["pairs"]]
        return cls(int(data.get("n", len(pairs))), tuple(pairs))

    def __str__(self) -> str:
        return "{" + ",".join(f"{{{u},{v}}}" for u, v in self.pairs) + "}"


def link_pattern(f: EdgeColoring, color: int | str, boundary: str) -> LinkPattern:
    """Matching of boundary points joined by paths of one color.

    Black paths end on even labels under tau_minus and odd labels under
    tau_plus; white paths the other way round. Label ``2i`` (or ``2i - 1``)
    becomes point ``i``.
    """
    col = parse_color(color)
    bd = parse_boundary(boundary)
    if not has_boundary(f, bd):
        raise WrongBoundary(f"boundary word {f.boundary_word()} does not match tau{bd}")
    even = (col == BLACK) == (bd == MINUS)
    pairs = []
    for comp in monochromatic_components(f, col):
        if comp.kind != "path":
            continue
        a, b = comp.labels
        if (a % 2 == 0) != even or (b % 2 == 0) != even:
            raise WrongBoundary(f"path joins labels {a} and {b} of the wrong parity")
        pairs.append(((a + 1) // 2, (b + 1) // 2))
    return LinkPattern(f.n, tuple(pairs))


def enumerate_link_patterns(n: int) -> list[LinkPattern]:
    def build(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            inner, outer = points[1:k], points[k + 1:]
            for a in build(inner):
                for b in build(outer):
                    yield [(first, points[k])] + a + b

    pats = [LinkPattern(n, tuple(p)) for p in build(tuple(range(1, 2 * n + 1)))]
    return sorted(pats, key=lambda p: p.pairs)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


# enumeration and statistics ---------------------------------------------------


def enumerate_fpls(n: int, boundary: str = MINUS) -> Iterator[Fpl]:
    """All FPLs on L_n with the given boundary word, by direct coloring search.

    Does not go through ice states: boundary edges are fixed from the word and
    the remaining edges are chosen vertex by vertex (row-major) so that every
    interior vertex ends up with two black edges.
    """
    spec = square(n)
    word = tau(n, boundary)
    fixed = {e: int(word[k] == "b") for k, e in enumerate(boundary_edges(n))}
    idx = edge_index(spec)
    bits = [0] * spec.edge_count
    for e, b in fixed.items():
        bits[idx[e]] = b
    verts = interior_vertices(spec)

    def opts(e: EdgeKey) -> tuple[int, ...]:
        return (fixed[e],) if e in fixed else (0, 1)

    def visit(k: int) -> Iterator[Fpl]:
        if k == len(verts):
            yield Fpl(spec, tuple(bits))
            return
        i, j = verts[k]
        north, west, east, south = V(i - 1, j), H(i, j - 1), H(i, j), V(i, j)
        have = bits[idx[north]] + bits[idx[west]]
        for be in opts(east):
            for bs in opts(south):
                if have + be + bs != 2:
                    continue
                bits[idx[east]], bits[idx[south]] = be, bs
                yield from visit(k + 1)

    yield from visit(0)


def psi_table(n: int, boundary: str = MINUS) -> dict[LinkPattern, int]:
    """Number of FPLs per black link pattern, keys in pattern order."""
    counts = Counter(link_pattern(f, BLACK, boundary) for f in enumerate_fpls(n, boundary))
    return {p: counts[p] for p in sorted(counts, key=lambda p: p.pairs)}


def psi_refined(
    n: int, boundary: str = MINUS, cycles: str = "both"
) -> dict[tuple[LinkPattern, LinkPattern, int], int]:
    """FPL counts by (black pattern, white pattern, number of cycles).

    ``cycles`` picks which cycles are counted: ``"both"`` (default),
    ``"black"`` or ``"white"``.
    """
    color = {"both": None, "black": BLACK, "white": WHITE}[cycles]
    counts: Counter = Counter()
    for f in enumerate_fpls(n, boundary):
        key = (
            link_pattern(f, BLACK, boundary),
            link_pattern(f, WHITE, boundary),
            count_cycles(f, color),
        )
        counts[key] += 1
    return {k: counts[k] for k in sorted(counts, key=lambda k: (k[0].pairs, k[1].pairs, k[2]))}


def example_fpl_n3() -> Fpl:
    """The 3x3 FPL with ASM [[0,1,0],[1,0,0],[0,0,1]], used in docs and tests."""
    black = [
        H(1, 0), H(2, 2), H(3, 0), H(3, 2), H(3, 3), H(1, 3),
        V(0, 2), V(1, 1), V(1, 2), V(1, 3), V(2, 1), V(3, 2),
    ]
    return validate_fpl(Fpl.from_black(3, black))
