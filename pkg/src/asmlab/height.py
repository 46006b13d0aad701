"""Height matrices, height functions of degree n, and the poset of triples.

A height matrix on L_{m,n} is indexed by ``0 <= i <= m`` and ``0 <= j <= n``.
It is read off an ice state from two step rules, starting at ``h[0][0] = 0``:

* moving right onto ``(i, j)`` adds 1 when ``V(i, j)`` points at ``(i, j)``,
  and subtracts 1 otherwise;
* moving down onto ``(i, j)`` adds 1 when ``H(i, j)`` points away from
  ``(i, j)``, and subtracts 1 otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .asm import Asm, partial_sums, validate_asm
from .lattice import GridSpec, H, V, edge_set, square
from .sixvertex import IceState, VertexType, validate_ice


class InvalidHeight(ValueError):
    pass


class PathInconsistent(ValueError):
    def __init__(self, cell: tuple[int, int], message: str | None = None):
        super().__init__(message or f"height at {cell} depends on the path taken")
        self.cell = cell


Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HeightMatrix:
    rows: Matrix

    @property
    def m(self) -> int:
        return len(self.rows) - 1

    @property
    def n(self) -> int:
        return len(self.rows[0]) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> dict:
        return {"n": self.n, "h": self.to_lists()}


class HeightFn(HeightMatrix):
    """A height function of degree ``n``. Build with :func:`validate_height`."""

    def __le__(self, other: HeightFn) -> bool:
        return leq(self, other)

    @classmethod
    def from_json(cls, data: dict) -> HeightFn:
        h = data["h"]
        return validate_height(int(data.get("n", len(h) - 1)), h)


def _freeze(table: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in table)


def validate_height(n: int, rows: Sequence[Sequence[int]]) -> HeightFn:
    if n < 1 or len(rows) != n + 1 or any(len(r) != n + 1 for r in rows):
        raise InvalidHeight(f"expected a {n + 1}x{n + 1} matrix")
    h = _freeze(rows)
    for i in range(n + 1):
        for j in range(n + 1):
            if j > 0 and abs(h[i][j] - h[i][j - 1]) != 1:
                raise InvalidHeight(f"h[{i}][{j}] and h[{i}][{j - 1}] differ by {h[i][j] - h[i][j - 1]}")
            if i > 0 and abs(h[i][j] - h[i - 1][j]) != 1:
                raise InvalidHeight(f"h[{i}][{j}] and h[{i - 1}][{j}] differ by {h[i][j] - h[i - 1][j]}")
    for k in range(n + 1):
        for cell in ((k, 0), (0, k), (n - k, n), (n, n - k)):
            if h[cell[0]][cell[1]] != k:
                raise InvalidHeight(f"boundary value h{cell} = {h[cell[0]][cell[1]]}, expected {k}")
    return HeightFn(h)


def leq(a: HeightFn, b: HeightFn) -> bool:
    n = a.n
    return all(a[i, j] <= b[i, j] for i in range(1, n) for j in range(1, n))


# step rules -----------------------------------------------------------------


def _step_right(bits: IceState, i: int, j: int) -> int:
    """h[i][j] - h[i][j-1]."""
    return 1 if bits[V(i, j)] == 0 else -1


def _step_down(bits: IceState, i: int, j: int) -> int:
    """h[i][j] - h[i-1][j]."""
    return 1 if bits[H(i, j)] == 1 else -1


def _row_first(bits: IceState) -> list[list[int]]:
    m, n = bits.spec.m, bits.spec.n
    h = [[0] * (n + 1) for _ in range(m + 1)]
    for j in range(1, n + 1):
        h[0][j] = h[0][j - 1] + _step_right(bits, 0, j)
    for i in range(1, m + 1):
        h[i][0] = h[i - 1][0] + _step_down(bits, i, 0)
        for j in range(1, n + 1):
            h[i][j] = h[i][j - 1] + _step_right(bits, i, j)
    return h


def height_from_bits(spec: GridSpec, bits: Sequence[int]) -> HeightMatrix:
    """Accumulate heights from raw direction bits, without the ice check.

    Raises :class:`PathInconsistent` at the first cell where the two step
    rules disagree, which happens exactly when some vertex breaks the ice rule.
    """
    state = IceState(spec, tuple(int(b) for b in bits))
    h = _row_first(state)
    for i in range(1, spec.m + 1):
        for j in range(spec.n + 1):
            if h[i][j] - h[i - 1][j] != _step_down(state, i, j):
                raise PathInconsistent((i, j))
    return HeightMatrix(_freeze(h))


def state_to_height(s: IceState) -> HeightMatrix:
    h = height_from_bits(s.spec, s.bits)
    if s.spec.is_square:
        try:
            return validate_height(s.n, h.rows)
        except InvalidHeight:
            return h
    return h


def accumulate_along_path(s: IceState, path: str) -> int:
    """Height at the endpoint of a monotone path of ``R``/``D`` steps from (0, 0)."""
    i = j = h = 0
    for step in path:
        if step == "R":
            j += 1
            h += _step_right(s, i, j)
        elif step == "D":
            i += 1
            h += _step_down(s, i, j)
        else:
            raise ValueError(f"bad path step {step!r}")
    return h


def random_path(i: int, j: int, rng: random.Random) -> str:
    steps = ["D"] * i + ["R"] * j
    rng.shuffle(steps)
    return "".join(steps)


# bijections -----------------------------------------------------------------

_LOCAL_CASES = {
    (1, 2, 1): VertexType.NE,
    (1, 0, 1): VertexType.NS,
    (1, 0, -1): VertexType.NW,
    (-1, 0, 1): VertexType.ES,
    (-1, 0, -1): VertexType.EW,
    (-1, -2, -1): VertexType.SW,
}


def local_type(h: HeightMatrix, i: int, j: int) -> VertexType:
    """Vertex type at ``(i, j)`` from the four heights around it."""
    base = h[i - 1, j - 1]
    key = (h[i - 1, j] - base, h[i, j] - base, h[i, j - 1] - base)
    try:
        return _LOCAL_CASES[key]
    except KeyError:
        raise InvalidHeight(f"no vertex type matches the heights around ({i},{j})") from None


def height_to_state(h: HeightFn) -> IceState:
    n = h.n
    spec = square(n)
    values: dict = {}

    def put(e, bit: int, cell: tuple[int, int]) -> None:
        if values.setdefault(e, bit) != bit:
            raise InvalidHeight(f"edge {e} gets two directions near {cell}")

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = local_type(h, i, j).value
            put(V(i - 1, j), int("N" not in out), (i, j))
            put(H(i, j), int("E" in out), (i, j))
            put(V(i, j), int("S" in out), (i, j))
            put(H(i, j - 1), int("W" not in out), (i, j))
    return validate_ice(spec, [values[e] for e in edge_set(spec)])


def asm_to_height(a: Asm) -> HeightFn:
    s = partial_sums(a).s
    n = a.n
    return HeightFn(_freeze([[i + j - 2 * s[i][j] for j in range(n + 1)] for i in range(n + 1)]))


def height_to_asm(h: HeightFn) -> Asm:
    n = h.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            twice = h[i - 1, j - 1] - h[i - 1, j] + h[i, j] - h[i, j - 1]
            if twice % 2:
                raise InvalidHeight(f"odd corner sum at ({i},{j})")
            row.append(-twice // 2)
        rows.append(row)
    try:
        return validate_asm(n, rows)
    except ValueError as exc:
        raise InvalidHeight(str(exc)) from exc


def enumerate_heights(n: int) -> Iterator[HeightFn]:
    """All height functions of degree ``n``, filled cell by cell.

    Independent of the ASM and ice-state routes: interior values are chosen
    from the two neighbours above and to the left, then checked against the
    neighbours below and to the right once those are known.
    """
    h = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        h[k][0] = h[0][k] = k
        h[n - k][n] = h[n][n - k] = k
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def fill(k: int) -> Iterator[HeightFn]:
        if k == len(cells):
            yield HeightFn(_freeze(h))
            return
        i, j = cells[k]
        up, left = h[i - 1][j], h[i][j - 1]
        for v in sorted({up - 1, up + 1} & {left - 1, left + 1}):
            if j == n - 1 and abs(v - h[i][n]) != 1:
                continue
            if i == n - 1 and abs(v - h[n][j]) != 1:
                continue
            h[i][j] = v
            yield from fill(k + 1)

    yield from fill(0)


# tracks and value sets -------------------------------------------------------


def track(n: int, i: int, j: int) -> int:
    if not (1 <= i < n and 1 <= j < n):
        raise ValueError(f"({i},{j}) is not an interior cell for n={n}")
    return min(i, n - i, j, n - j)


def height_value_set(n: int, i: int, j: int) -> frozenset[int]:
    l = track(n, i, j)
    return frozenset(abs(i - j) + 2 * k for k in range(l + 1))


def track_classes(n: int) -> dict[int, list[tuple[int, int]]]:
    out: dict[int, list[tuple[int, int]]] = {}
    for i in range(1, n):
        for j in range(1, n):
            out.setdefault(track(n, i, j), []).append((i, j))
    return out


# the poset ------------------------------------------------------------------

Element = tuple[int, int, int]


def rank(x: Element) -> int:
    i, j, k = x
    return abs(i - j) + 2 * k - 2


@cache
def poset_elements(n: int) -> tuple[Element, ...]:
    return tuple(
        (i, j, k)
        for i in range(1, n)
        for j in range(1, n)
        for k in range(1, track(n, i, j) + 1)
    )


def in_poset(n: int, x: Element) -> bool:
    i, j, k = x
    return 1 <= i < n and 1 <= j < n and 1 <= k <= track(n, i, j)


def covers(n: int, x: Element, y: Element) -> bool:
    """True iff ``x`` covers ``y``."""
    for e in (x, y):
        if not in_poset(n, e):
            raise ValueError(f"{e} is not an element for n={n}")
    (i, j, k), (i2, j2, k2) = x, y
    return (
        abs(i - j) + 2 * k == abs(i2 - j2) + 2 * k2 + 1
        and abs(i - i2) + abs(j - j2) == 1
    )


@cache
def cover_pairs(n: int) -> tuple[tuple[Element, Element], ...]:
    """All (lower, upper) pairs with upper covering lower."""
    elems = poset_elements(n)
    return tuple((y, x) for y in elems for x in elems if covers(n, x, y))


@cache
def _down_sets(n: int) -> dict[Element, frozenset[Element]]:
    """Strict down-set of every element under the transitive closure."""
    below: dict[Element, set[Element]] = {x: set() for x in poset_elements(n)}
    for x in sorted(poset_elements(n), key=rank):
        for lo, hi in cover_pairs(n):
            if hi == x:
                below[x] |= {lo} | below[lo]
    return {x: frozenset(v) for x, v in below.items()}


def less_than(n: int, y: Element, x: Element) -> bool:
    return y in _down_sets(n)[x]


def rank_polynomial(n: int) -> list[int]:
    return [(n - r - 1) * (r + 1) for r in range(n - 1)] if n >= 2 else []


def rank_census(n: int) -> list[int]:
    out = [0] * max(n - 1, 0)
    for x in poset_elements(n):
        out[rank(x)] += 1
    return out


def iota(h: HeightFn) -> frozenset[Element]:
    n = h.n
    return frozenset(x for x in poset_elements(n) if h[x[0], x[1]] >= abs(x[0] - x[1]) + 2 * x[2])


def is_order_ideal(n: int, subset: Iterable[Element]) -> bool:
    s = set(subset)
    if not all(in_poset(n, x) for x in s):
        return False
    return all(lo in s for lo, hi in cover_pairs(n) if hi in s)


def down_closure(n: int, xs: Iterable[Element]) -> frozenset[Element]:
    down = _down_sets(n)
    out: set[Element] = set()
    for x in xs:
        out.add(x)
        out |= down[x]
    return frozenset(out)


def enumerate_order_ideals(n: int) -> list[frozenset[Element]]:
    """Every order ideal, as the down-closure of an antichain.

    Antichains are grown by a search over elements in lexicographic order, so
    the output order is deterministic.
    """
    elems = poset_elements(n)
    out: list[frozenset[Element]] = []

    def comparable(a: Element, b: Element) -> bool:
        return less_than(n, a, b) or less_than(n, b, a)

    def grow(start: int, chain: list[Element]) -> None:
        out.append(down_closure(n, chain))
        for k in range(start, len(elems)):
            x = elems[k]
            if all(not comparable(x, y) for y in chain):
                chain.append(x)
                grow(k + 1, chain)
                chain.pop()

    grow(0, [])
    return out


def brute_force_ideals(n: int) -> list[frozenset[Element]]:
    """Every subset tested for downward closure (small ``n`` only)."""
    elems = poset_elements(n)
    return [
        frozenset(sub)
        for size in range(len(elems) + 1)
        for sub in combinations(elems, size)
        if is_order_ideal(n, sub)
    ]


def hasse_dot(n: int) -> str:
    def name(x: Element) -> str:
        return f'"{x[0]},{x[1]},{x[2]}"'

    lines = [f"digraph P{n} {{", "  rankdir=BT;"]
    for x in poset_elements(n):
        lines.append(f"  {name(x)} [label=\"({x[0]},{x[1]},{x[2]})\"];")
    for lo, hi in cover_pairs(n):
        lines.append(f"  {name(lo)} -> {name(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
