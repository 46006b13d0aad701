"""Plaquette flips, gyration and its orbits on fully packed loops."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .fpl import (
    BLACK,
    MINUS,
    PLUS,
    EdgeColoring,
    Fpl,
    WrongBoundary,
    count_cycles,
    enumerate_fpls,
    has_boundary,
    link_pattern,
    psi_refined,
    validate_fpl,
)
from .lattice import Plaquette, Vertex, incident_edges, interior_plaquettes, parse_parity, plaquettes


class BoundaryPlaquette(ValueError):
    pass


def n_alpha(c: EdgeColoring, alpha: Plaquette) -> int:
    """+1 if left/right are white and bottom/top black, -1 if reversed, else 0."""
    if not alpha.interior:
        raise BoundaryPlaquette(f"plaquette ({alpha.i},{alpha.j}) is on the boundary")
    left, bottom, right, top = (c[e] for e in alpha.eta)
    if left == right == 0 and bottom == top == 1:
        return 1
    if left == right == 1 and bottom == top == 0:
        return -1
    return 0


def g_alpha(c: EdgeColoring, alpha: Plaquette) -> EdgeColoring:
    if not alpha.interior or n_alpha(c, alpha) == 0:
        return c
    return c.with_flipped(alpha.edges)


def c_alpha(c: EdgeColoring, alpha: Plaquette) -> EdgeColoring:
    flipped = c.with_flipped(alpha.edges)
    return EdgeColoring(flipped.spec, flipped.bits)


def h_alpha(c: EdgeColoring, alpha: Plaquette) -> EdgeColoring:
    return g_alpha(c_alpha(c, alpha), alpha)


def _apply_all(c: EdgeColoring, op, parity: int) -> EdgeColoring:
    for alpha in plaquettes(c.n, parity):
        c = op(c, alpha)
    return c


def g_half(f: EdgeColoring, parity: int | str) -> EdgeColoring:
    """G_0 (even) or G_1 (odd): flip every active plaquette of one parity."""
    return _apply_all(f, g_alpha, parse_parity(parity))


def c_half(c: EdgeColoring, parity: int | str) -> EdgeColoring:
    return _apply_all(c, c_alpha, parse_parity(parity))


def gyration(f: EdgeColoring) -> EdgeColoring:
    """G = G_0 G_1, with the odd half-sweep applied first."""
    return g_half(g_half(f, 1), 0)


def gyration_inverse(f: EdgeColoring) -> EdgeColoring:
    return g_half(g_half(f, 0), 1)


def h_half(f: EdgeColoring, parity: int | str) -> Fpl:
    """H_1 (odd) takes tau_minus FPLs to tau_plus ones; H_0 (even) goes back."""
    p = parse_parity(parity)
    need = MINUS if p == 1 else PLUS
    if not has_boundary(f, need):
        raise WrongBoundary(f"H_{p} needs boundary tau{need}, got {f.boundary_word()}")
    return validate_fpl(_apply_all(EdgeColoring(f.spec, f.bits), h_alpha, p))


def fixed_vertices(f: EdgeColoring, parity: int | str) -> frozenset[Vertex]:
    """Interior vertices whose two black edges lie in different plaquettes of one parity."""
    p = parse_parity(parity)
    owner = {e: alpha for alpha in plaquettes(f.n, p) for e in alpha.edges}
    out = set()
    for i in range(1, f.n + 1):
        for j in range(1, f.n + 1):
            black = [e for e in incident_edges(f.spec, (i, j)) if f[e]]
            if len(black) == 2 and owner[black[0]] != owner[black[1]]:
                out.add((i, j))
    return frozenset(out)


# orbits ---------------------------------------------------------------------


@dataclass(frozen=True)
class Orbit:
    members: tuple[EdgeColoring, ...]

    @property
    def base(self) -> EdgeColoring:
        return self.members[0]

    @property
    def period(self) -> int:
        return len(self.members)


def orbit(f: EdgeColoring, limit: int = 1_000_000) -> Orbit:
    """Iterate gyration from ``f`` until it returns; members start at ``f``."""
    members = [f]
    g = gyration(f)
    while g != f:
        members.append(g)
        if len(members) > limit:
            raise RuntimeError("gyration did not return within the step limit")
        g = gyration(g)
    return Orbit(tuple(members))


def orbits(fpls: Iterable[EdgeColoring]) -> list[Orbit]:
    """Partition into gyration orbits; each starts at its bitwise least member."""
    seen: set[EdgeColoring] = set()
    out = []
    for f in fpls:
        if f in seen:
            continue
        orb = orbit(f)
        seen.update(orb.members)
        k = min(range(orb.period), key=lambda t: orb.members[t].bits)
        out.append(Orbit(orb.members[k:] + orb.members[:k]))
    return sorted(out, key=lambda o: o.base.bits)


def orbit_nalpha_sum(f: EdgeColoring, alpha: Plaquette) -> int:
    return sum(n_alpha(g, alpha) for g in orbit(f).members)


def alpha_beta_sum(f: EdgeColoring, odd: Plaquette, even: Plaquette) -> int:
    """Orbit sum of N_odd along G^k f plus that of N_even along G^-k G_1 f."""
    m = orbit(f).period
    total = 0
    g, h = f, g_half(f, 1)
    for _ in range(m):
        total += n_alpha(g, odd) + n_alpha(h, even)
        g, h = gyration(g), gyration_inverse(h)
    return total


def adjacent_pairs(n: int) -> list[tuple[Plaquette, Plaquette]]:
    """(odd, even) interior plaquettes sharing an edge."""
    inner = interior_plaquettes(n)
    return [
        (a, b)
        for a in inner if a.odd
        for b in inner if not b.odd and set(a.edges) & set(b.edges)
    ]


def wieland_check(n: int) -> dict:
    """Compare each refined count with the count at the rotated key."""
    table = psi_refined(n, MINUS)
    violations = []
    for (mb, mw, l), count in table.items():
        other = table.get((mb.rotated(-1), mw.rotated(1), l), 0)
        if other != count:
            violations.append(
                {"black": str(mb), "white": str(mw), "cycles": l, "count": count, "rotated": other}
            )
    return {"n": n, "keys": len(table), "total": sum(table.values()), "violations": violations}


def period_report(n: int) -> dict:
    orbs = orbits(enumerate_fpls(n, MINUS))
    periods = Counter(o.period for o in orbs)
    return {
        "n": n,
        "orbits": len(orbs),
        "periods": {str(p): periods[p] for p in sorted(periods)},
        "max_period": max(periods),
        "all_within_n": max(periods) <= n,
        "all_divide_2n": all((2 * n) % p == 0 for p in periods),
    }


def pattern_rotation_holds(f: Fpl) -> tuple[bool, bool]:
    """(black pattern rotates by R^-1, white by R) under one gyration."""
    g = gyration(f)
    return (
        link_pattern(g, BLACK, MINUS) == link_pattern(f, BLACK, MINUS).rotated(-1),
        link_pattern(g, "w", MINUS) == link_pattern(f, "w", MINUS).rotated(1),
    )


def h_identities(f: Fpl) -> dict[str, bool]:
    """The link-pattern and cycle-count relations for one tau_minus FPL."""
    up = h_half(f, 1)
    back = h_half(up, 0)
    return {
        "pi_b_H1": link_pattern(up, BLACK, PLUS) == link_pattern(f, BLACK, MINUS).rotated(-1),
        "pi_w_H1": link_pattern(up, "w", PLUS) == link_pattern(f, "w", MINUS).rotated(1),
        "pi_b_H0": link_pattern(back, BLACK, MINUS) == link_pattern(up, BLACK, PLUS),
        "pi_w_H0": link_pattern(back, "w", MINUS) == link_pattern(up, "w", PLUS),
        "cycles_H1": count_cycles(up) == count_cycles(f),
        "cycles_H0": count_cycles(back) == count_cycles(up),
        "H0H1_is_G": back == gyration(f),
        "fixed_H1": fixed_vertices(up, 1) == fixed_vertices(f, 1),
        "fixed_H0": fixed_vertices(back, 0) == fixed_vertices(up, 0),
    }
