"""Integer vectors over link patterns and FPLs, and the operators acting on them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Generic, Hashable, Iterable, Iterator, TypeVar

from .fpl import (
    BLACK,
    MINUS,
    PLUS,
    EdgeColoring,
    LinkPattern,
    WrongBoundary,
    enumerate_fpls,
    enumerate_link_patterns,
    has_boundary,
    link_pattern,
    parse_boundary,
    parse_color,
)
from .gyration import n_alpha
from .lattice import Plaquette, interior_plaquettes

K = TypeVar("K", bound=Hashable)


@dataclass(frozen=True)
class SparseVector(Generic[K]):
    """Finite integer combination of basis keys; zero coefficients are dropped."""

    n: int
    coeffs: dict[K, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", {k: c for k, c in self.coeffs.items() if c})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.coeffs.items())))

    def __getitem__(self, key: K) -> int:
        return self.coeffs.get(key, 0)

    def __iter__(self) -> Iterator[K]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: SparseVector[K]) -> SparseVector[K]:
        acc = defaultdict(int, self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] += c
        return type(self)(self.n, dict(acc))

    def __sub__(self, other: SparseVector[K]) -> SparseVector[K]:
        return self + other.scaled(-1)

    def scaled(self, factor: int) -> SparseVector[K]:
        return type(self)(self.n, {k: factor * c for k, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def mass(self) -> int:
        return sum(self.coeffs.values())


class LinkVector(SparseVector[LinkPattern]):
    def items_sorted(self) -> list[tuple[LinkPattern, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].pairs)

    def to_json(self) -> list[dict]:
        return [{"key": k.to_json()["pairs"], "coeff": c} for k, c in self.items_sorted()]

    @classmethod
    def basis(cls, mu: LinkPattern) -> LinkVector:
        return cls(mu.n, {mu: 1})


class FplVector(SparseVector[EdgeColoring]):
    """Vector over FPLs sharing one boundary word (``"-"`` or ``"+"``)."""

    def __init__(self, n: int, coeffs: dict | None = None, boundary: str = MINUS):
        object.__setattr__(self, "boundary", parse_boundary(boundary))
        super().__init__(n, coeffs or {})
        for f in self.coeffs:
            if not has_boundary(f, self.boundary):
                raise WrongBoundary(f"FPL with boundary {f.boundary_word()} in a tau{self.boundary} vector")

    def scaled(self, factor: int) -> FplVector:
        return FplVector(self.n, {k: factor * c for k, c in self.coeffs.items()}, self.boundary)

    def __add__(self, other: FplVector) -> FplVector:
        acc = defaultdict(int, self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] += c
        return FplVector(self.n, dict(acc), self.boundary)

    def to_json(self) -> list[dict]:
        items = sorted(self.coeffs.items(), key=lambda kv: kv[0].bits)
        return [{"key": k.to_json()["black"], "coeff": c} for k, c in items]


# pattern operators -----------------------------------------------------------


def matchmaker(j: int, mu: LinkPattern) -> LinkPattern:
    """e_j: join j and j+1 (cyclically), pairing their old partners together."""
    size = 2 * mu.n
    if not 1 <= j <= size:
        raise ValueError(f"matchmaker index {j} out of range 1..{size}")
    k = j % size + 1
    u, v = mu.partner(j), mu.partner(k)
    if u == k:
        return mu
    rest = [p for p in mu.pairs if j not in p and k not in p]
    return LinkPattern(mu.n, tuple(rest + [(j, k), (u, v)]))


def rotate(mu: LinkPattern) -> LinkPattern:
    """R: every label drops by one, with 0 wrapping to 2n."""
    return mu.rotated(1)


def rotate_inv(mu: LinkPattern) -> LinkPattern:
    return mu.rotated(-1)


def lift_linear(op: Callable[[K], K], v: SparseVector[K]) -> SparseVector[K]:
    acc: dict = defaultdict(int)
    for k, c in v.coeffs.items():
        acc[op(k)] += c
    if isinstance(v, FplVector):
        first = next(iter(acc), None)
        bd = v.boundary if first is None or has_boundary(first, v.boundary) else _other_side(v.boundary)
        return FplVector(v.n, dict(acc), bd)
    return type(v)(v.n, dict(acc))


def _other_side(boundary: str) -> str:
    return PLUS if boundary == MINUS else MINUS


def _sum_images(ops: Iterable[Callable], v: LinkVector) -> LinkVector:
    out = LinkVector(v.n)
    for op in ops:
        out = out + lift_linear(op, v)
    return out


def rotation_power(k: int) -> Callable[[LinkPattern], LinkPattern]:
    return lambda mu: mu.rotated(k)


def sym(v: LinkVector) -> LinkVector:
    """Sum of the 2n rotated copies R^0 v, ..., R^{2n-1} v."""
    return _sum_images((rotation_power(k) for k in range(2 * v.n)), v)


def hamiltonian(v: LinkVector) -> LinkVector:
    """Sum of e_1 v, ..., e_{2n} v."""
    return _sum_images(
        ((lambda mu, j=j: matchmaker(j, mu)) for j in range(1, 2 * v.n + 1)), v
    )


# FPL-side operators ----------------------------------------------------------


def project_pi(v: FplVector, color: str | int = BLACK, sign: str = MINUS) -> LinkVector:
    bd = parse_boundary(sign)
    if v.boundary != bd:
        raise WrongBoundary(f"vector has boundary tau{v.boundary}, projection needs tau{bd}")
    col = parse_color(color)
    acc: dict = defaultdict(int)
    for f, c in v.coeffs.items():
        acc[link_pattern(f, col, bd)] += c
    return LinkVector(v.n, dict(acc))


def nalpha_weight(v: FplVector, alpha: Plaquette) -> FplVector:
    return FplVector(v.n, {f: n_alpha(f, alpha) * c for f, c in v.coeffs.items()}, v.boundary)


def build_s_vectors(n: int) -> tuple[FplVector, LinkVector]:
    s_fpl = FplVector(n, {f: 1 for f in enumerate_fpls(n, MINUS)}, MINUS)
    return s_fpl, project_pi(s_fpl)


def sym_pi_nalpha(n: int, alpha: Plaquette, s_fpl: FplVector | None = None) -> LinkVector:
    s_fpl = s_fpl if s_fpl is not None else build_s_vectors(n)[0]
    return sym(project_pi(nalpha_weight(s_fpl, alpha)))


def sym_pi_nalpha_check(n: int) -> bool:
    s_fpl, _ = build_s_vectors(n)
    return all(sym_pi_nalpha(n, a, s_fpl).is_zero() for a in interior_plaquettes(n))


def rotation_classes(n: int) -> list[list[LinkPattern]]:
    """Orbits of F(2n) under R, each led by its least member, in order of leaders."""
    seen: set[LinkPattern] = set()
    out = []
    for mu in enumerate_link_patterns(n):
        if mu in seen:
            continue
        cls = [mu]
        nu = rotate(mu)
        while nu != mu:
            cls.append(nu)
            nu = rotate(nu)
        seen.update(cls)
        out.append(sorted(cls, key=lambda p: p.pairs))
    return out


def operator_matrix(op: Callable[[LinkVector], LinkVector], n: int) -> list[list[int]]:
    """Dense matrix of a linear operator in the ordered basis of F(2n).

    Column ``c`` holds the image of the ``c``-th basis pattern.
    """
    basis = enumerate_link_patterns(n)
    cols = [op(LinkVector.basis(mu)) for mu in basis]
    return [[col[row] for col in cols] for row in basis]


def tl_relation_report(n: int) -> dict:
    """Which of e_j e_{j+1} e_j = e_j hold on F(2n); reported, never asserted."""
    size = 2 * n
    basis = enumerate_link_patterns(n)
    out = {}
    for j in range(1, size + 1):
        k = j % size + 1
        out[f"e{j}e{k}e{j}=e{j}"] = all(
            matchmaker(j, matchmaker(k, matchmaker(j, mu))) == matchmaker(j, mu) for mu in basis
        )
    return out
