"""Six-vertex (ice) states on L_{m,n} and their bijection with ASMs.

A state stores one direction bit per edge, in :func:`lattice.edge_set` order.
For ``H(i, j)`` a set bit means the arrow points toward increasing ``j``; for
``V(i, j)`` it points toward increasing ``i``.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Sequence

from .asm import Asm, partial_sums
from .lattice import (
    EdgeKey,
    GridSpec,
    H,
    V,
    Vertex,
    edge_index,
    edge_set,
    interior_vertices,
    square,
)


class IceRuleViolation(ValueError):
    def __init__(self, vertex: Vertex, message: str | None = None):
        super().__init__(message or f"vertex {vertex} is not 2-in-2-out")
        self.vertex = vertex


class NotOpenBoundary(ValueError):
    pass


class VertexType(Enum):
    """Named by the two directions whose edges point away from the vertex."""

    NE = "NE"
    NS = "NS"
    NW = "NW"
    ES = "ES"
    EW = "EW"
    SW = "SW"

    @property
    def entry(self) -> int:
        return {"NS": 1, "EW": -1}.get(self.value, 0)

    @property
    def triplet(self) -> tuple[int, int, int]:
        """The (a, c, r) value at a cell of this type."""
        return _TRIPLET[self]

    @classmethod
    def from_triplet(cls, t: tuple[int, int, int]) -> VertexType:
        return _FROM_TRIPLET[t]


_TRIPLET = {
    VertexType.NE: (0, 0, 0),
    VertexType.NW: (0, 0, 1),
    VertexType.ES: (0, 1, 0),
    VertexType.SW: (0, 1, 1),
    VertexType.NS: (1, 1, 1),
    VertexType.EW: (-1, 0, 0),
}
_FROM_TRIPLET = {t: vt for vt, t in _TRIPLET.items()}


def _pack(bits: Sequence[int]) -> str:
    data = bytearray((len(bits) + 7) // 8)
    for k, b in enumerate(bits):
        if b:
            data[k // 8] |= 0x80 >> (k % 8)
    return base64.b64encode(bytes(data)).decode("ascii")


def _unpack(text: str, length: int) -> tuple[int, ...]:
    data = base64.b64decode(text.encode("ascii"), validate=True)
    if len(data) != (length + 7) // 8:
        raise ValueError(f"expected {length} bits, got {8 * len(data)}")
    return tuple((data[k // 8] >> (7 - k % 8)) & 1 for k in range(length))


@dataclass(frozen=True)
class EdgeBits:
    """One bit per edge of a grid; shared base of ice states and colorings."""

    spec: GridSpec
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.spec.edge_count:
            raise ValueError(
                f"expected {self.spec.edge_count} bits for {self.spec.m}x{self.spec.n}, "
                f"got {len(self.bits)}"
            )

    def __getitem__(self, e: EdgeKey) -> int:
        return self.bits[edge_index(self.spec)[e]]

    @property
    def n(self) -> int:
        return self.spec.n

    def items(self) -> Iterator[tuple[EdgeKey, int]]:
        return zip(edge_set(self.spec), self.bits)

    def with_flipped(self, edges: Sequence[EdgeKey]):
        idx = edge_index(self.spec)
        bits = list(self.bits)
        for e in edges:
            bits[idx[e]] ^= 1
        return type(self)(self.spec, tuple(bits))

    def bitstring(self) -> str:
        return "".join(map(str, self.bits))

    def packed(self) -> str:
        return _pack(self.bits)

    def to_json(self) -> dict:
        return {"m": self.spec.m, "n": self.spec.n, "bits": self.packed()}

    @classmethod
    def from_json(cls, data: dict):
        spec = GridSpec(int(data["m"]), int(data["n"]))
        return cls(spec, _unpack(data["bits"], spec.edge_count))

    @classmethod
    def from_mapping(cls, spec: GridSpec, values: dict[EdgeKey, int]):
        return cls(spec, tuple(int(values[e]) for e in edge_set(spec)))


class IceState(EdgeBits):
    """An orientation of L_{m,n}. Construct through :func:`validate_ice`."""

    def points_to(self, e: EdgeKey) -> Vertex:
        """The endpoint the arrow on ``e`` points at."""
        lo, hi = e.endpoints
        return hi if self[e] else lo

    def comes_in(self, e: EdgeKey, v: Vertex) -> bool:
        return self.points_to(e) == v

    def goes_out(self, e: EdgeKey, v: Vertex) -> bool:
        return v in e.endpoints and self.points_to(e) != v

    def reversed(self) -> IceState:
        return IceState(self.spec, tuple(1 - b for b in self.bits))

    def describe(self) -> dict[str, str]:
        """Vertex type per interior vertex, keyed ``"i,j"``."""
        return {f"{i},{j}": vertex_type(self, i, j).value for i, j in interior_vertices(self.spec)}


def _out_dirs(bits: IceState, i: int, j: int) -> str:
    out = ""
    if bits[V(i - 1, j)] == 0:
        out += "N"
    if bits[H(i, j)] == 1:
        out += "E"
    if bits[V(i, j)] == 1:
        out += "S"
    if bits[H(i, j - 1)] == 0:
        out += "W"
    return out


def validate_ice(spec: GridSpec, bits: Sequence[int]) -> IceState:
    state = IceState(spec, tuple(int(b) for b in bits))
    if any(b not in (0, 1) for b in state.bits):
        raise ValueError("direction bits must be 0 or 1")
    for i, j in interior_vertices(spec):
        if len(_out_dirs(state, i, j)) != 2:
            raise IceRuleViolation((i, j))
    return state


def open_boundary_bits(n: int) -> dict[EdgeKey, int]:
    """Forced directions of the boundary edges under the open condition."""
    out: dict[EdgeKey, int] = {}
    for k in range(1, n + 1):
        out[H(k, 0)] = 1
        out[H(k, n)] = 0
        out[V(0, k)] = 0
        out[V(n, k)] = 1
    return out


def is_open_boundary(s: IceState) -> bool:
    if not s.spec.is_square:
        return False
    return all(s[e] == b for e, b in open_boundary_bits(s.n).items())


def vertex_type(s: IceState, i: int, j: int) -> VertexType:
    if not (1 <= i <= s.spec.m and 1 <= j <= s.spec.n):
        raise ValueError(f"({i},{j}) is not an interior vertex")
    dirs = _out_dirs(s, i, j)
    try:
        return VertexType(dirs)
    except ValueError:
        raise IceRuleViolation((i, j)) from None


def vertex_types(s: IceState) -> list[list[VertexType]]:
    return [
        [vertex_type(s, i, j) for j in range(1, s.spec.n + 1)]
        for i in range(1, s.spec.m + 1)
    ]


def sixvertex_to_asm(s: IceState) -> Asm:
    if not is_open_boundary(s):
        raise NotOpenBoundary("state does not satisfy the open boundary condition")
    n = s.n
    rows = tuple(
        tuple(vertex_type(s, i, j).entry for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    return Asm(n, rows)


def asm_to_sixvertex(a: Asm) -> IceState:
    n = a.n
    ps = partial_sums(a)
    values: dict[EdgeKey, int] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x, c, r = a[i, j], ps.c[i][j], ps.r[i][j]
            # W edge comes in iff r - a = 0; E edge comes in (i,j+1) iff r = 0
            values[H(i, j - 1)] = int(r - x == 0)
            values[H(i, j)] = int(r == 0)
            # N edge goes out of (i,j) iff c - a = 0; S edge goes out of (i+1,j) iff c = 0
            values[V(i - 1, j)] = int(c - x != 0)
            values[V(i, j)] = int(c != 0)
    return validate_ice(square(n), [values[e] for e in edge_set(square(n))])


class BoundaryCounts(NamedTuple):
    k0: int
    k1: int
    l0: int
    l1: int

    @property
    def total(self) -> int:
        return self.k0 + self.k1 + self.l0 + self.l1

    @property
    def corner_height(self) -> int:
        return self.l0 + self.k1 - self.l1 - self.k0


def boundary_counts(s: IceState) -> BoundaryCounts:
    """Boundary edges pointing at their boundary vertex, one count per side.

    ``k0``/``k1`` cover the left/right sides and ``l0``/``l1`` the top/bottom.
    """
    m, n = s.spec.m, s.spec.n
    k0 = sum(1 for i in range(1, m + 1) if s[H(i, 0)] == 0)
    k1 = sum(1 for i in range(1, m + 1) if s[H(i, n)] == 1)
    l0 = sum(1 for j in range(1, n + 1) if s[V(0, j)] == 0)
    l1 = sum(1 for j in range(1, n + 1) if s[V(m, j)] == 1)
    return BoundaryCounts(k0, k1, l0, l1)


def boundary_indegree(s: IceState) -> int:
    return boundary_counts(s).total


def row_col_crossings(s: IceState, i: int) -> tuple[int, int]:
    """(# of V(i, .) pointing down, # of H(., i) pointing right)."""
    n = s.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    if not is_open_boundary(s):
        raise NotOpenBoundary("state does not satisfy the open boundary condition")
    down = sum(s[V(i, j)] for j in range(1, n + 1))
    right = sum(s[H(j, i)] for j in range(1, n + 1))
    return down, right


def enumerate_ice_states(spec: GridSpec, open_boundary: bool = False) -> Iterator[IceState]:
    """Every ice state of ``spec`` by a vertex-by-vertex search.

    Vertices are visited row-major. At each vertex the still-free edges among
    N, W (only boundary ones are free there) and E, S are chosen so that the
    vertex ends up with exactly two outgoing arrows. With ``open_boundary``
    the boundary edges are fixed in advance.
    """
    m, n = spec.m, spec.n
    if open_boundary and m != n:
        raise ValueError("the open boundary condition needs a square grid")
    fixed = open_boundary_bits(n) if open_boundary else {}
    idx = edge_index(spec)
    bits = [0] * spec.edge_count
    verts = interior_vertices(spec)

    def choices(e: EdgeKey) -> tuple[int, ...]:
        return (fixed[e],) if e in fixed else (0, 1)

    def visit(k: int) -> Iterator[IceState]:
        if k == len(verts):
            yield IceState(spec, tuple(bits))
            return
        i, j = verts[k]
        north, west, east, south = V(i - 1, j), H(i, j - 1), H(i, j), V(i, j)
        n_opts = choices(north) if i == 1 else (bits[idx[north]],)
        w_opts = choices(west) if j == 1 else (bits[idx[west]],)
        e_opts = choices(east) if j == n else (0, 1)
        s_opts = choices(south) if i == m else (0, 1)
        for bn in n_opts:
            for bw in w_opts:
                base = (bn == 0) + (bw == 0)
                for be in e_opts:
                    for bs in s_opts:
                        if base + be + bs != 2:
                            continue
                        bits[idx[north]], bits[idx[west]] = bn, bw
                        bits[idx[east]], bits[idx[south]] = be, bs
                        yield from visit(k + 1)

    yield from visit(0)


def enumerate_sixvertex(n: int) -> Iterator[IceState]:
    """SV(n): all open-boundary ice states on L_n."""
    return enumerate_ice_states(square(n), open_boundary=True)


def open_state_n1() -> IceState:
    return validate_ice(square(1), [1, 0, 0, 1])
