"""Alternating sign matrices: validation, enumeration and partial sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence


class AsmError(ValueError):
    """Base class for invalid matrices; ``index`` is 1-based."""

    kind = "invalid"

    def __init__(self, message: str, index: tuple[int, ...] | int | None = None):
        super().__init__(message)
        self.index = index


class BadShape(AsmError):
    kind = "shape"


class BadEntry(AsmError):
    kind = "entry"


class BadPrefix(AsmError):
    kind = "prefix"


class BadTotal(AsmError):
    kind = "total"


@dataclass(frozen=True)
class Asm:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """Entry a_{i,j} with 1-based indices."""
        i, j = ij
        return self.rows[i - 1][j - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": self.to_lists()}

    @classmethod
    def from_json(cls, data: dict) -> Asm:
        rows = data["rows"]
        n = int(data.get("n", len(rows)))
        return validate_asm(n, rows)

    @cached_property
    def sums(self) -> PartialSums:
        return partial_sums(self)

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:2d}" for x in row) for row in self.rows)


@dataclass(frozen=True)
class PartialSums:
    """Prefix sums of an ASM.

    ``c[i][j]`` and ``r[i][j]`` are 1-based (row/column 0 is padding and is 0).
    ``s`` is the full (n+1)x(n+1) corner-sum table with ``s[0][*] = s[*][0] = 0``.
    """

    n: int
    c: tuple[tuple[int, ...], ...]
    r: tuple[tuple[int, ...], ...]
    s: tuple[tuple[int, ...], ...]

    def triplet(self, a: Asm, i: int, j: int) -> tuple[int, int, int]:
        return a[i, j], self.c[i][j], self.r[i][j]


def validate_asm(n: int, entries: Sequence[Sequence[int]]) -> Asm:
    """Check the alternating conditions and return an :class:`Asm`.

    Checks run in the order entries, full sums, prefix sums, so a row such as
    ``[1, 1]`` is reported as a bad total.
    """
    if n < 1:
        raise BadShape(f"size must be positive, got {n}")
    if len(entries) != n or any(len(row) != n for row in entries):
        raise BadShape(f"expected a {n}x{n} matrix")
    rows = []
    for i, row in enumerate(entries, start=1):
        for j, x in enumerate(row, start=1):
            if isinstance(x, bool) or not isinstance(x, int) or x not in (-1, 0, 1):
                raise BadEntry(f"entry ({i},{j}) = {x!r} is not in {{-1,0,1}}", (i, j))
        rows.append(tuple(row))
    cols = list(zip(*rows))
    for label, lines in (("row", rows), ("column", cols)):
        for k, line in enumerate(lines, start=1):
            if sum(line) != 1:
                raise BadTotal(f"{label} {k} sums to {sum(line)}", k)
    for label, lines in (("row", rows), ("column", cols)):
        for k, line in enumerate(lines, start=1):
            acc = 0
            for l, x in enumerate(line, start=1):
                acc += x
                if acc not in (0, 1):
                    idx = (k, l) if label == "row" else (l, k)
                    raise BadPrefix(f"{label} {k} has prefix sum {acc} at entry {idx}", idx)
    return Asm(n, tuple(rows))


def is_asm(n: int, entries: Sequence[Sequence[int]]) -> bool:
    try:
        validate_asm(n, entries)
    except AsmError:
        return False
    return True


def enumerate_asms(n: int) -> Iterator[Asm]:
    """Yield every ASM of size ``n`` in row-major lexicographic order."""
    if n < 1:
        raise BadShape(f"size must be positive, got {n}")
    grid = [[0] * n for _ in range(n)]
    col = [0] * n  # running column sums
    row_sum = 0

    def fill(pos: int) -> Iterator[Asm]:
        nonlocal row_sum
        if pos == n * n:
            yield Asm(n, tuple(tuple(r) for r in grid))
            return
        i, j = divmod(pos, n)
        if j == 0:
            row_sum = 0
        saved_row = row_sum
        for x in (-1, 0, 1):
            r = saved_row + x
            c = col[j] + x
            if r not in (0, 1) or c not in (0, 1):
                continue
            if j == n - 1 and r != 1:
                continue
            if i == n - 1 and c != 1:
                continue
            grid[i][j] = x
            col[j] = c
            row_sum = r
            yield from fill(pos + 1)
            col[j] -= x
            row_sum = saved_row
        grid[i][j] = 0

    yield from fill(0)


def count_asms(n: int) -> int:
    return sum(1 for _ in enumerate_asms(n))


def partial_sums(a: Asm) -> PartialSums:
    n = a.n
    c = [[0] * (n + 1) for _ in range(n + 1)]
    r = [[0] * (n + 1) for _ in range(n + 1)]
    s = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x = a[i, j]
            c[i][j] = c[i - 1][j] + x
            r[i][j] = r[i][j - 1] + x
            s[i][j] = s[i - 1][j] + r[i][j]
    return PartialSums(n, _freeze(c), _freeze(r), _freeze(s))


def _freeze(table: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in table)


TRIPLETS = frozenset({(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 1, 1), (-1, 0, 0)})


def identity(n: int) -> Asm:
    return Asm(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
