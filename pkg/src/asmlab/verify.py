"""Exhaustive verification suites shared by the CLI and the acceptance tests.

Each suite takes a size ``n`` and checks every object up to that size (some
checks have a smaller built-in ceiling, noted on the suite). A suite returns a
:class:`SuiteResult` holding named checks and any measured-but-not-asserted
observations under ``info``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import asm as asm_mod
from . import fpl as fpl_mod
from . import gyration as gy
from . import height as ht
from . import sixvertex as sv
from . import tl_algebra as tl
from .lattice import (
    GridSpec,
    boundary_edges,
    edge_partition_check,
    interior_plaquettes,
    is_boundary_edge,
    plaquettes,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteResult:
    suite: str
    n: int
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "info": self.info,
        }


# enumeration and bijections ---------------------------------------------------


def counts(n: int, fpl_max: int | None = None) -> SuiteResult:
    """Counts of every representation agree, route by route, up to ``n``."""
    res = SuiteResult("counts", n)
    fpl_max = n if fpl_max is None else fpl_max
    table = {}
    for k in range(1, n + 1):
        asms = list(asm_mod.enumerate_asms(k))
        states = list(sv.enumerate_sixvertex(k))
        heights = list(ht.enumerate_heights(k))
        row = {"asm": len(asms), "sixvertex": len(states), "height": len(heights)}
        res.add(f"n={k} sixvertex set = image of asms",
                set(states) == {sv.asm_to_sixvertex(a) for a in asms})
        res.add(f"n={k} height set = image of asms",
                set(heights) == {ht.asm_to_height(a) for a in asms})
        if k <= fpl_max:
            fpls = list(fpl_mod.enumerate_fpls(k, fpl_mod.MINUS))
            row["fpl"] = len(fpls)
            res.add(f"n={k} fpl set = image of sixvertex",
                    set(fpls) == {fpl_mod.sixvertex_to_fpl(s) for s in states})
        res.add(f"n={k} counts agree", len(set(row.values())) == 1, str(row))
        table[str(k)] = row
    res.info["counts"] = table
    return res


def roundtrips(n: int) -> SuiteResult:
    res = SuiteResult("roundtrips", n)
    for k in range(1, n + 1):
        bad: dict[str, int] = {}

        def tally(name: str, ok: bool) -> None:
            bad[name] = bad.get(name, 0) + (not ok)

        for a in asm_mod.enumerate_asms(k):
            s = sv.asm_to_sixvertex(a)
            h = ht.asm_to_height(a)
            f = fpl_mod.sixvertex_to_fpl(s)
            tally("asm->sv->asm", sv.sixvertex_to_asm(s) == a)
            tally("asm->h->asm", ht.height_to_asm(h) == a)
            tally("sv->h->sv", ht.height_to_state(ht.state_to_height(s)) == s)
            tally("h->sv->h", ht.state_to_height(ht.height_to_state(h)) == h)
            tally("sv->fpl->sv", fpl_mod.fpl_to_sixvertex(f) == s)
            tally("fpl boundary is tau_minus", f.boundary_word() == fpl_mod.tau_minus(k))
            tally("asm->sv->h = asm->h", ht.state_to_height(s) == h)
        for s in sv.enumerate_sixvertex(k):
            f = fpl_mod.sixvertex_to_fpl(s)
            tally("sv->asm->sv", sv.asm_to_sixvertex(sv.sixvertex_to_asm(s)) == s)
            tally("fpl->sv->fpl", fpl_mod.sixvertex_to_fpl(fpl_mod.fpl_to_sixvertex(f)) == f)
        for name, nbad in bad.items():
            res.add(f"n={k} {name}", nbad == 0, f"{nbad} failures" if nbad else "")
    return res


def lemma_boundary(n: int, grid_max: int = 3) -> SuiteResult:
    """Boundary in-degree on every L_{m,n'} (m, n' <= min(n, grid_max)) and the per-row and per-column crossing counts."""
    res = SuiteResult("lemma-boundary", n)
    top = min(n, grid_max)
    seen = {}
    for m in range(1, top + 1):
        for k in range(1, top + 1):
            spec = GridSpec(m, k)
            states = bad = bad_corner = 0
            for s in sv.enumerate_ice_states(spec):
                states += 1
                bc = sv.boundary_counts(s)
                bad += bc.total != m + k
                h = ht.state_to_height(s)
                cw = 2 * (bc.k1 + bc.l0) - (m + k)
                ccw = -2 * (bc.k0 + bc.l1) + (m + k)
                bad_corner += not (h[m, k] == cw == ccw == bc.corner_height)
            seen[f"{m}x{k}"] = states
            res.add(f"L_{m},{k} in-degree = {m + k}", bad == 0, f"{states} states, {bad} bad")
            res.add(f"L_{m},{k} corner height formulas", bad_corner == 0)
    res.info["ice_states"] = seen
    for k in range(1, n + 1):
        bad = 0
        for s in sv.enumerate_sixvertex(k):
            for i in range(1, k + 1):
                bad += sv.row_col_crossings(s, i) != (i, k - i)
        res.add(f"n={k} row/column crossing counts", bad == 0, f"{bad} bad")
    return res


# heights and the poset -----------------------------------------------------


def path_independence(n: int, random_paths: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("path-independence", n)
    rng = random.Random(seed)
    bad = cells = 0
    for s in sv.enumerate_sixvertex(n):
        h = ht.state_to_height(s)
        for i in range(n + 1):
            for j in range(n + 1):
                paths = ["D" * i + "R" * j, "R" * j + "D" * i]
                paths += [ht.random_path(i, j, rng) for _ in range(random_paths)]
                cells += 1
                bad += any(ht.accumulate_along_path(s, p) != h[i, j] for p in paths)
    res.add(f"n={n} all paths agree", bad == 0, f"{cells} cells, {bad} inconsistent")
    return res


def height_range(n: int) -> SuiteResult:
    res = SuiteResult("height-range", n)
    for k in range(2, n + 1):
        observed: dict[tuple[int, int], set[int]] = {}
        for h in ht.enumerate_heights(k):
            for i in range(1, k):
                for j in range(1, k):
                    observed.setdefault((i, j), set()).add(h[i, j])
        bad = [c for c, vals in observed.items() if vals != ht.height_value_set(k, *c)]
        res.add(f"n={k} value sets match", not bad, f"mismatch at {bad}" if bad else "")
    res.checks.extend(path_independence(min(n, 4)).checks)
    return res


def ideal(n: int, brute_max: int = 4) -> SuiteResult:
    """Poset census, iota and ideal counts.

    The brute-force ideal oracle runs only for sizes up to ``brute_max``;
    whether iota hits every ideal is recorded under ``info``.
    """
    res = SuiteResult("ideal", n)
    for k in range(1, max(n, 8) + 1):
        res.add(f"n={k} rank census", ht.rank_census(k) == ht.rank_polynomial(k),
                f"{ht.rank_census(k)} vs {ht.rank_polynomial(k)}")
    surj = {}
    for k in range(1, n + 1):
        hs = list(ht.enumerate_heights(k))
        images = [ht.iota(h) for h in hs]
        res.add(f"n={k} iota gives ideals", all(ht.is_order_ideal(k, s) for s in images))
        res.add(f"n={k} iota injective", len(set(images)) == len(images))
        mono = all(
            ht.iota(a) <= ht.iota(b) for a in hs for b in hs if ht.leq(a, b)
        ) if k <= 4 else True
        res.add(f"n={k} iota monotone", mono)
        ideals = ht.enumerate_order_ideals(k)
        if k <= brute_max:
            res.add(f"n={k} ideal search = brute force",
                    sorted(map(sorted, ideals)) == sorted(map(sorted, ht.brute_force_ideals(k))))
        res.add(f"n={k} #ideals = #ASMs", len(ideals) == asm_mod.count_asms(k),
                f"{len(ideals)} ideals")
        surj[str(k)] = {"image": len(set(images)), "ideals": len(ideals)}
    res.info["iota_image_vs_ideals"] = surj
    return res


def catalan(n: int) -> SuiteResult:
    res = SuiteResult("catalan", n)
    for k in range(1, n + 1):
        pats = fpl_mod.enumerate_link_patterns(k)
        res.add(f"n={k} |F(2n)| = Catalan", len(pats) == fpl_mod.catalan(k), str(len(pats)))
        res.add(f"n={k} all non-crossing",
                all(fpl_mod.is_noncrossing_matching(2 * k, p.pairs) for p in pats))
        res.add(f"n={k} distinct", len(set(pats)) == len(pats))
    return res


# gyration ------------------------------------------------------------------


def involutions(n: int, random_colorings: int = 30, seed: int = 0) -> SuiteResult:
    res = SuiteResult("involutions", n)
    rng = random.Random(seed)
    for k in range(1, n + 1):
        fpls = list(fpl_mod.enumerate_fpls(k, fpl_mod.MINUS))
        res.add(f"n={k} even plaquettes partition E", edge_partition_check(k, 0))
        res.add(f"n={k} odd plaquettes partition E", edge_partition_check(k, 1))
        spec = fpls[0].spec
        samples = list(fpls) + [
            fpl_mod.EdgeColoring(spec, tuple(rng.randint(0, 1) for _ in range(spec.edge_count)))
            for _ in range(random_colorings)
        ]
        ok = {"G_alpha": True, "C_alpha": True, "H_alpha": True}
        for c in samples:
            for a in plaquettes(k):
                ok["G_alpha"] &= gy.g_alpha(gy.g_alpha(c, a), a) == c
                ok["C_alpha"] &= gy.c_alpha(gy.c_alpha(c, a), a).bits == c.bits
                ok["H_alpha"] &= gy.h_alpha(gy.h_alpha(c, a), a).bits == c.bits
        for name, good in ok.items():
            res.add(f"n={k} {name} involution", good)
        res.add(f"n={k} C over one parity reverses all",
                all(gy.c_half(c, p).bits == c.inverted().bits for c in samples[:5] for p in (0, 1)))
        res.add(f"n={k} G_0 involution", all(gy.g_half(gy.g_half(f, 0), 0) == f for f in fpls))
        res.add(f"n={k} G_1 involution", all(gy.g_half(gy.g_half(f, 1), 1) == f for f in fpls))
        res.add(f"n={k} G stays in fpl(n,tau-)", {gy.gyration(f) for f in fpls} == set(fpls))
        res.add(f"n={k} G^-1 inverts G", all(gy.gyration_inverse(gy.gyration(f)) == f for f in fpls))
        tallies: dict[str, int] = {}
        for f in fpls:
            for name, good in gy.h_identities(f).items():
                tallies[name] = tallies.get(name, 0) + (not good)
            b, w = gy.pattern_rotation_holds(f)
            tallies["pi_b(G) = R^-1 pi_b"] = tallies.get("pi_b(G) = R^-1 pi_b", 0) + (not b)
            tallies["pi_w(G) = R pi_w"] = tallies.get("pi_w(G) = R pi_w", 0) + (not w)
        for name, nbad in tallies.items():
            res.add(f"n={k} {name}", nbad == 0, f"{nbad} failures" if nbad else "")
        res.add(f"n={k} one H_1-fixed vertex per odd boundary plaquette",
                all(_fixed_per_boundary_plaquette(f) for f in fpls))
    return res


def _fixed_per_boundary_plaquette(f: fpl_mod.Fpl) -> bool:
    fixed = gy.fixed_vertices(f, 1)
    return all(
        len(fixed & set(a.vertices)) == 1
        for a in plaquettes(f.n, 1) if not a.interior
    )


def wieland(n: int) -> SuiteResult:
    res = SuiteResult("wieland", n)
    for k in range(1, n + 1):
        rep = gy.wieland_check(k)
        res.add(f"n={k} refined table symmetric", not rep["violations"],
                f"{rep['keys']} keys, {len(rep['violations'])} violations")
        res.add(f"n={k} refined table total", rep["total"] == asm_mod.count_asms(k))
    return res


def orbit_sums(n: int) -> SuiteResult:
    res = SuiteResult("orbit-sums", n)
    periods = {}
    for k in range(1, n + 1):
        fpls = list(fpl_mod.enumerate_fpls(k, fpl_mod.MINUS))
        orbs = gy.orbits(fpls)
        res.add(f"n={k} orbits partition fpl", sum(o.period for o in orbs) == len(fpls))
        bad = [
            (o.base.bitstring(), a.i, a.j)
            for o in orbs for a in interior_plaquettes(k)
            if sum(gy.n_alpha(g, a) for g in o.members) != 0
        ]
        res.add(f"n={k} N_alpha orbit sums vanish", not bad, f"{len(bad)} nonzero")
        pairs = gy.adjacent_pairs(k)
        bad_ab = sum(1 for f in fpls for a, b in pairs if gy.alpha_beta_sum(f, a, b) != 0)
        res.add(f"n={k} odd/even paired sums vanish", bad_ab == 0,
                f"{len(pairs)} pairs, {bad_ab} nonzero")
        periods[str(k)] = gy.period_report(k)
    res.info["periods"] = periods
    return res


# link-pattern algebra ----------------------------------------------------------


def sym_pi(n: int) -> SuiteResult:
    res = SuiteResult("sym-pi", n)
    res.checks.extend(catalan(n).checks)
    for k in range(1, n + 1):
        basis = fpl_mod.enumerate_link_patterns(k)
        size = 2 * k
        res.add(f"n={k} e_j idempotent",
                all(tl.matchmaker(j, tl.matchmaker(j, mu)) == tl.matchmaker(j, mu)
                    for mu in basis for j in range(1, size + 1)))
        res.add(f"n={k} e_j non-crossing",
                all(fpl_mod.is_noncrossing_matching(size, tl.matchmaker(j, mu).pairs)
                    for mu in basis for j in range(1, size + 1)))
        res.add(f"n={k} R^2n = id", all(mu.rotated(size) == mu for mu in basis))
        res.add(f"n={k} R^-1 R = id", all(tl.rotate_inv(tl.rotate(mu)) == mu for mu in basis))
        order = _permutation_order(tl.rotate, basis)
        res.add(f"n={k} R has order dividing 2n", size % order == 0, f"order {order}")
        res.info.setdefault("rotation_order", {})[str(k)] = order
        sym_ok = True
        for mu in basis:
            v = tl.sym(tl.LinkVector.basis(mu))
            sym_ok &= tl.lift_linear(tl.rotate, v) == v
            sym_ok &= tl.sym(tl.lift_linear(tl.rotate, tl.LinkVector.basis(mu))) == v
        res.add(f"n={k} Sym output R-fixed", sym_ok)
        s_fpl, s_link = tl.build_s_vectors(k)
        for a in interior_plaquettes(k):
            v = tl.sym_pi_nalpha(k, a, s_fpl)
            res.add(f"n={k} Sym Pi N_({a.i},{a.j}) s = 0", v.is_zero(), f"{len(v)} nonzero terms")
        res.add(f"n={k} Pi s = psi table", dict(s_link.coeffs) == fpl_mod.psi_table(k))
        res.add(f"n={k} Pi preserves mass", s_link.mass() == s_fpl.mass())
        res.add(f"n={k} R s_n = s_n", tl.lift_linear(tl.rotate, s_link) == s_link)
        res.info.setdefault("tl_relations", {})[str(k)] = tl.tl_relation_report(k)
    return res


def _permutation_order(op: Callable, basis: list) -> int:
    order, cur = 1, [op(x) for x in basis]
    while cur != basis:
        cur = [op(x) for x in cur]
        order += 1
    return order


def boundary_labels(n: int) -> SuiteResult:
    res = SuiteResult("boundary-labels", n)
    for k in range(1, n + 1):
        edges = boundary_edges(k)
        spec = GridSpec(k, k)
        res.add(f"n={k} labels biject onto boundary edges",
                len(set(edges)) == 4 * k and all(is_boundary_edge(spec, e) for e in edges))
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "lemma-boundary": lemma_boundary,
    "roundtrips": lambda n: _merge("roundtrips", n, counts(n), roundtrips(n)),
    "height-range": height_range,
    "ideal": ideal,
    "wieland": wieland,
    "orbit-sums": orbit_sums,
    "sym-pi": sym_pi,
    "involutions": involutions,
}


def _merge(name: str, n: int, *parts: SuiteResult) -> SuiteResult:
    out = SuiteResult(name, n)
    for p in parts:
        out.checks.extend(p.checks)
        out.info.update(p.info)
    return out


def run_suite(name: str, n: int) -> list[SuiteResult]:
    if name == "all":
        return [fn(n) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](n)]
