"""Text, SVG and DOT pictures of the package's objects.

ASCII grids put vertex ``(i, j)`` at character row ``2i``, column ``2j``; the
edge between two vertices sits on the character between them.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .asm import Asm
from .fpl import EdgeColoring, LinkPattern
from .height import HeightMatrix, hasse_dot
from .lattice import GridSpec, boundary_label_map, edge_set, is_boundary, is_interior
from .sixvertex import IceState

CELL = 40
MARGIN = 20


class BadPayload(ValueError):
    pass


def _canvas(m: int, n: int) -> list[list[str]]:
    grid = [[" "] * (2 * n + 3) for _ in range(2 * m + 3)]
    spec = GridSpec(m, n)
    for i in range(m + 2):
        for j in range(n + 2):
            if is_interior(spec, (i, j)):
                grid[2 * i][2 * j] = "+"
            elif is_boundary(spec, (i, j)):
                grid[2 * i][2 * j] = "o"
    return grid


def _edge_cell(e) -> tuple[int, int]:
    return (2 * e.i, 2 * e.j + 1) if e.kind == "H" else (2 * e.i + 1, 2 * e.j)


def _join(grid: list[list[str]]) -> str:
    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


def ice_ascii(s: IceState) -> str:
    grid = _canvas(s.spec.m, s.spec.n)
    for e, b in s.items():
        r, c = _edge_cell(e)
        grid[r][c] = (">" if b else "<") if e.kind == "H" else ("v" if b else "^")
    return _join(grid)


def fpl_ascii(f: EdgeColoring) -> str:
    grid = _canvas(f.n, f.n)
    for e, b in f.items():
        r, c = _edge_cell(e)
        grid[r][c] = "#" if b else "."
    return _join(grid)


def matrix_ascii(rows) -> str:
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in rows) + "\n"


def link_ascii(mu: LinkPattern) -> str:
    return str(mu) + "\n"


# SVG --------------------------------------------------------------------------


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    defs = (
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>'
    )
    return "\n".join([head, defs, *body, "</svg>"]) + "\n"


def _xy(v: tuple[int, int]) -> tuple[int, int]:
    return MARGIN + CELL * v[1], MARGIN + CELL * v[0]


def ice_svg(s: IceState) -> str:
    body = []
    for e, b in s.items():
        lo, hi = e.endpoints
        (x1, y1), (x2, y2) = _xy(lo), _xy(hi)
        if not b:
            x1, y1, x2, y2 = x2, y2, x1, y1
        body.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" '
            f'marker-end="url(#arrow)"><title>{e}</title></line>'
        )
    size = 2 * MARGIN + CELL * (s.spec.n + 1), 2 * MARGIN + CELL * (s.spec.m + 1)
    return _svg(size[0], size[1], body)


def fpl_svg(f: EdgeColoring) -> str:
    labels = boundary_label_map(f.n)
    body = []
    for e, b in f.items():
        (x1, y1), (x2, y2) = (_xy(v) for v in e.endpoints)
        style = 'stroke="black" stroke-width="4"' if b else 'stroke="gray" stroke-dasharray="4 3"'
        body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}><title>{e}</title></line>')
    for e in edge_set(f.spec):
        if e in labels:
            (x1, y1), (x2, y2) = (_xy(v) for v in e.endpoints)
            body.append(
                f'<text x="{(x1 + x2) / 2 + 4}" y="{(y1 + y2) / 2 - 4}" font-size="10">'
                f"e{labels[e]}</text>"
            )
    side = 2 * MARGIN + CELL * (f.n + 1)
    return _svg(side, side, body)


def link_svg(mu: LinkPattern) -> str:
    size = 2 * mu.n
    step = CELL
    base = MARGIN + step * mu.n
    body = []
    for k in range(1, size + 1):
        x = MARGIN + step * (k - 1)
        body.append(f'<circle cx="{x}" cy="{base}" r="3"/>')
        body.append(f'<text x="{x - 4}" y="{base + 16}" font-size="10">{k}</text>')
    for u, v in mu.pairs:
        x1, x2 = MARGIN + step * (u - 1), MARGIN + step * (v - 1)
        r = (x2 - x1) / 2
        body.append(
            f'<path d="M {x1} {base} A {r} {r} 0 0 1 {x2} {base}" fill="none" stroke="black">'
            f"<title>{escape(f'{u}-{v}')}</title></path>"
        )
    return _svg(2 * MARGIN + step * (size - 1), base + 24, body)


# DOT --------------------------------------------------------------------------


def fpl_dot(f: EdgeColoring) -> str:
    lines = [f"graph fpl{f.n} {{", "  node [shape=point];"]
    verts = sorted({v for e in edge_set(f.spec) for v in e.endpoints})
    for v in verts:
        x, y = _xy(v)
        lines.append(f'  "{v[0]},{v[1]}" [pos="{x},{-y}!"];')
    for e, b in f.items():
        lo, hi = e.endpoints
        style = "style=solid, penwidth=3" if b else "style=dashed"
        lines.append(f'  "{lo[0]},{lo[1]}" -- "{hi[0]},{hi[1]}" [{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def link_dot(mu: LinkPattern) -> str:
    lines = [f"graph link{mu.n} {{", "  layout=circo;"]
    for k in range(1, 2 * mu.n + 1):
        lines.append(f"  {k};")
    for k in range(1, 2 * mu.n + 1):
        nxt = k % (2 * mu.n) + 1
        lines.append(f"  {k} -- {nxt} [style=invis];")
    for u, v in mu.pairs:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_dot(n: int) -> str:
    return hasse_dot(n)


def render(obj, fmt: str) -> str:
    """Dispatch on object type and format; raises :class:`BadPayload` if unsupported."""
    table = {
        (IceState, "ascii"): ice_ascii,
        (IceState, "svg"): ice_svg,
        (EdgeColoring, "ascii"): fpl_ascii,
        (EdgeColoring, "svg"): fpl_svg,
        (EdgeColoring, "dot"): fpl_dot,
        (LinkPattern, "ascii"): link_ascii,
        (LinkPattern, "svg"): link_svg,
        (LinkPattern, "dot"): link_dot,
        (Asm, "ascii"): lambda a: matrix_ascii(a.rows),
        (HeightMatrix, "ascii"): lambda h: matrix_ascii(h.rows),
    }
    for (kind, f), fn in table.items():
        if isinstance(obj, kind) and f == fmt:
            return fn(obj)
    raise BadPayload(f"cannot render {type(obj).__name__} as {fmt}")
