"""The grid graph L_{m,n}: vertices, edges, boundary labels and plaquettes.

Vertices are plain ``(i, j)`` tuples. Interior vertices have ``1 <= i <= m``
and ``1 <= j <= n``; boundary vertices sit one step outside the interior on
exactly one side (corners such as ``(0, 0)`` are not vertices).

Edges are identified by :class:`EdgeKey`. ``H(i, j)`` joins ``(i, j)`` and
``(i, j + 1)``; ``V(i, j)`` joins ``(i, j)`` and ``(i + 1, j)``. Every state,
coloring and serialized bit string uses the order returned by
:func:`edge_set`: all horizontal edges row-major, then all vertical edges
row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from typing import NamedTuple

Vertex = tuple[int, int]


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GridSpec:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise LatticeError(f"grid dimensions must be positive, got {self.m}x{self.n}")

    @property
    def edge_count(self) -> int:
        return self.m * (self.n + 1) + self.n * (self.m + 1)

    @property
    def boundary_edge_count(self) -> int:
        return 2 * self.m + 2 * self.n

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> GridSpec:
        return cls(int(data["m"]), int(data["n"]))


def square(n: int) -> GridSpec:
    return GridSpec(n, n)


class EdgeKey(NamedTuple):
    kind: str
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.kind}:{self.i}:{self.j}"

    @classmethod
    def parse(cls, text: str) -> EdgeKey:
        try:
            kind, i, j = text.split(":")
            key = cls(kind, int(i), int(j))
        except ValueError as exc:
            raise LatticeError(f"malformed edge key {text!r}") from exc
        if kind not in ("H", "V"):
            raise LatticeError(f"malformed edge key {text!r}")
        return key

    @property
    def endpoints(self) -> tuple[Vertex, Vertex]:
        """Both endpoints, the one with smaller coordinates first."""
        if self.kind == "H":
            return (self.i, self.j), (self.i, self.j + 1)
        return (self.i, self.j), (self.i + 1, self.j)


def H(i: int, j: int) -> EdgeKey:
    return EdgeKey("H", i, j)


def V(i: int, j: int) -> EdgeKey:
    return EdgeKey("V", i, j)


def is_interior(spec: GridSpec, v: Vertex) -> bool:
    i, j = v
    return 1 <= i <= spec.m and 1 <= j <= spec.n


def is_boundary(spec: GridSpec, v: Vertex) -> bool:
    i, j = v
    return (i in (0, spec.m + 1) and 1 <= j <= spec.n) or (
        j in (0, spec.n + 1) and 1 <= i <= spec.m
    )


def is_vertex(spec: GridSpec, v: Vertex) -> bool:
    return is_interior(spec, v) or is_boundary(spec, v)


def is_odd(v: Vertex) -> bool:
    return (v[0] + v[1]) % 2 == 1


def contains_edge(spec: GridSpec, e: EdgeKey) -> bool:
    if e.kind == "H":
        return 1 <= e.i <= spec.m and 0 <= e.j <= spec.n
    if e.kind == "V":
        return 0 <= e.i <= spec.m and 1 <= e.j <= spec.n
    return False


def is_boundary_edge(spec: GridSpec, e: EdgeKey) -> bool:
    if e.kind == "H":
        return e.j in (0, spec.n)
    return e.i in (0, spec.m)


@cache
def edge_set(spec: GridSpec) -> tuple[EdgeKey, ...]:
    hs = [H(i, j) for i in range(1, spec.m + 1) for j in range(0, spec.n + 1)]
    vs = [V(i, j) for i in range(0, spec.m + 1) for j in range(1, spec.n + 1)]
    return tuple(hs + vs)


@cache
def edge_index(spec: GridSpec) -> dict[EdgeKey, int]:
    return {e: k for k, e in enumerate(edge_set(spec))}


@cache
def interior_vertices(spec: GridSpec) -> tuple[Vertex, ...]:
    return tuple((i, j) for i in range(1, spec.m + 1) for j in range(1, spec.n + 1))


@cache
def incident_edges(spec: GridSpec, v: Vertex) -> tuple[EdgeKey, ...]:
    """Edges at ``v`` in N, E, S, W order (absent directions skipped)."""
    i, j = v
    candidates = (V(i - 1, j), H(i, j), V(i, j), H(i, j - 1))
    return tuple(e for e in candidates if contains_edge(spec, e) and v in e.endpoints)


def compass(v: Vertex) -> dict[str, EdgeKey]:
    i, j = v
    return {"N": V(i - 1, j), "E": H(i, j), "S": V(i, j), "W": H(i, j - 1)}


def boundary_endpoint(spec: GridSpec, e: EdgeKey) -> Vertex:
    u, w = e.endpoints
    return w if is_interior(spec, u) else u


@cache
def boundary_edges(n: int) -> tuple[EdgeKey, ...]:
    """Boundary edges of L_n listed as e_1, ..., e_{4n} (counterclockwise)."""
    if n < 1:
        raise LatticeError("n must be positive")
    left = [H(i, 0) for i in range(1, n + 1)]
    bottom = [V(n, j) for j in range(1, n + 1)]
    right = [H(i, n) for i in range(n, 0, -1)]
    top = [V(0, j) for j in range(n, 1, -1)]
    return tuple([V(0, 1)] + left + bottom + right + top)


@cache
def boundary_label_map(n: int) -> dict[EdgeKey, int]:
    return {e: k for k, e in enumerate(boundary_edges(n), start=1)}


def boundary_edge_label(n: int, k: int) -> EdgeKey:
    """The boundary edge e_k of L_n for ``1 <= k <= 4n``."""
    if not 1 <= k <= 4 * n:
        raise LatticeError(f"boundary label {k} out of range 1..{4 * n}")
    return boundary_edges(n)[k - 1]


def cyclic_label(n: int, k: int) -> int:
    """Reduce ``k`` into 1..4n, so that e_{4n+1} is e_1."""
    return (k - 1) % (4 * n) + 1


@dataclass(frozen=True)
class Plaquette:
    """The unit square alpha_{i,j} of L_n with corner (i, j) at its top left."""

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if not (0 <= self.i <= self.n and 0 <= self.j <= self.n):
            raise LatticeError(f"plaquette ({self.i},{self.j}) out of range for n={self.n}")

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        spec = square(self.n)
        i, j = self.i, self.j
        corners = ((i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1))
        return tuple(v for v in corners if is_vertex(spec, v))

    @cached_property
    def edges(self) -> tuple[EdgeKey, ...]:
        spec = square(self.n)
        i, j = self.i, self.j
        vs = set(self.vertices)
        sides = (V(i, j), H(i + 1, j), V(i, j + 1), H(i, j))
        return tuple(
            e for e in sides
            if contains_edge(spec, e) and all(p in vs for p in e.endpoints)
        )

    @property
    def interior(self) -> bool:
        return 1 <= self.i <= self.n - 1 and 1 <= self.j <= self.n - 1

    @property
    def odd(self) -> bool:
        return (self.i + self.j) % 2 == 1

    @property
    def parity(self) -> int:
        return (self.i + self.j) % 2

    @property
    def eta(self) -> tuple[EdgeKey, EdgeKey, EdgeKey, EdgeKey]:
        """Edges (left, bottom, right, top) of an interior plaquette."""
        if not self.interior:
            raise LatticeError(f"plaquette ({self.i},{self.j}) is not interior")
        i, j = self.i, self.j
        return V(i, j), H(i + 1, j), V(i, j + 1), H(i, j)


def plaquette(n: int, i: int, j: int) -> Plaquette:
    return Plaquette(n, i, j)


@cache
def plaquettes(n: int, parity: int | None = None) -> tuple[Plaquette, ...]:
    """All plaquettes of L_n (row-major), optionally only those of one parity."""
    out = [Plaquette(n, i, j) for i in range(n + 1) for j in range(n + 1)]
    if parity is not None:
        out = [p for p in out if p.parity == parity]
    return tuple(out)


@cache
def interior_plaquettes(n: int) -> tuple[Plaquette, ...]:
    return tuple(p for p in plaquettes(n) if p.interior)


def parse_parity(parity: int | str) -> int:
    if parity in (0, "0", "even"):
        return 0
    if parity in (1, "1", "odd"):
        return 1
    raise LatticeError(f"unknown parity {parity!r}")


def edge_partition_check(n: int, parity: int | str) -> bool:
    """True iff the plaquettes of one parity partition E(L_n)."""
    p = parse_parity(parity)
    counts = dict.fromkeys(edge_set(square(n)), 0)
    for alpha in plaquettes(n, p):
        for e in alpha.edges:
            counts[e] += 1
    return all(c == 1 for c in counts.values())
