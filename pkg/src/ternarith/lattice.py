"""Equiangular hexagons on the triangular lattice.

Lattice points use cube coordinates ``(u, v, w)`` with ``u + v + w == 0``.
Every side of an equiangular lattice hexagon runs along a line on which one
cube coordinate is constant, so a hexagon is exactly the set of points with

    u_lo <= u <= u_hi,  v_lo <= v <= v_hi,  w_lo <= w <= w_hi.

That representation covers parallelograms, segments and single points too,
with no special cases.  Counting here is brute-force enumeration and never
touches the algebraic product formulas, so it can serve as their oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

from .core import Triple, checked, triangular

# unit steps of the boundary walk, 60 degrees apart
DIRECTIONS = (
    (1, -1, 0),
    (1, 0, -1),
    (0, 1, -1),
    (-1, 1, 0),
    (-1, 0, 1),
    (0, -1, 1),
)

MAX_ENUMERATION = 10**8
MAX_SVG_SIDE = 100


@dataclass(frozen=True)
class LatticePoint:
    u: int
    v: int
    w: int

    def __post_init__(self):
        if self.u + self.v + self.w != 0:
            raise ValueError(f"cube coordinates must sum to 0: {self}")

    def __add__(self, other):
        return LatticePoint(self.u + other.u, self.v + other.v, self.w + other.w)


@dataclass(frozen=True)
class Hexagon:
    """Convex lattice region given by bounds on each cube coordinate.

    Bounds are tightened on construction, so the side point-counts can be
    read back from the coordinate ranges.  ``a`` counts the points on the
    two sides where ``w`` is constant, ``b`` where ``v`` is constant and
    ``c`` where ``u`` is constant.
    """

    u_lo: int
    u_hi: int
    v_lo: int
    v_hi: int
    w_lo: int
    w_hi: int

    def __post_init__(self):
        ul, uh, vl, vh, wl, wh = (
            self.u_lo, self.u_hi, self.v_lo, self.v_hi, self.w_lo, self.w_hi)
        while True:
            nl, nh = max(ul, -vh - wh), min(uh, -vl - wl)
            ml, mh = max(vl, -nh - wh), min(vh, -nl - wl)
            ol, oh = max(wl, -nh - mh), min(wh, -nl - ml)
            if nl > nh or ml > mh or ol > oh:
                raise ValueError("empty lattice region")
            if (nl, nh, ml, mh, ol, oh) == (ul, uh, vl, vh, wl, wh):
                break
            ul, uh, vl, vh, wl, wh = nl, nh, ml, mh, ol, oh
        for name, val in zip(
            ("u_lo", "u_hi", "v_lo", "v_hi", "w_lo", "w_hi"),
            (ul, uh, vl, vh, wl, wh),
        ):
            object.__setattr__(self, name, val)
        du, dv, dw = uh - ul, vh - vl, wh - wl
        if (du + dv + dw) % 2 or min(du + dv - dw, du + dw - dv, dv + dw - du) < 0:
            raise ValueError("bounds do not describe an equiangular hexagon")

    @property
    def steps(self) -> tuple[int, int, int]:
        du = self.u_hi - self.u_lo
        dv = self.v_hi - self.v_lo
        dw = self.w_hi - self.w_lo
        return (du + dv - dw) // 2, (du + dw - dv) // 2, (dv + dw - du) // 2

    @property
    def sides(self) -> tuple[int, int, int]:
        """Point counts (a, b, c) along the three pairs of opposite sides."""
        alpha, beta, gamma = self.steps
        return alpha + 1, beta + 1, gamma + 1

    @property
    def a(self) -> int:
        return self.sides[0]

    @property
    def b(self) -> int:
        return self.sides[1]

    @property
    def c(self) -> int:
        return self.sides[2]

    def contains(self, p: LatticePoint) -> bool:
        return (self.u_lo <= p.u <= self.u_hi
                and self.v_lo <= p.v <= self.v_hi
                and self.w_lo <= p.w <= self.w_hi)

    def vertices(self) -> list[LatticePoint]:
        """Corners in boundary-walk order, repeated where sides vanish."""
        start = LatticePoint(self.u_lo, self.v_hi, -self.u_lo - self.v_hi)
        alpha, beta, gamma = self.steps
        # walk (alpha, beta, gamma, alpha, beta, gamma) starting at the
        # corner with minimal u and maximal v
        out = [start]
        p = start
        for n, d in zip((gamma, alpha, beta, gamma, alpha, beta),
                        DIRECTIONS[5:] + DIRECTIONS[:5]):
            p = LatticePoint(p.u + n * d[0], p.v + n * d[1], p.w + n * d[2])
            out.append(p)
        return out[:6]

    def points(self):
        """Yield every lattice point of the region, u-major."""
        for u in range(self.u_lo, self.u_hi + 1):
            for v in range(max(self.v_lo, -u - self.w_hi),
                           min(self.v_hi, -u - self.w_lo) + 1):
                yield LatticePoint(u, v, -u - v)


def hexagon(a: int, b: int, c: int) -> Hexagon:
    """Hexagon with a, b, c points on its side pairs, anchored at the origin.

    The boundary is walked from the origin with step lengths
    (a-1, b-1, c-1, a-1, b-1, c-1) along successive lattice directions and
    the bounds are read off the visited corners.  Argument order matters
    for the shape, not for the count.
    """
    for s in (a, b, c):
        if s < 1:
            raise ValueError(f"side point-counts must be >= 1, got {(a, b, c)}")
    steps = (a - 1, b - 1, c - 1) * 2
    corners = [(0, 0, 0)]
    u = v = w = 0
    for n, (du, dv, dw) in zip(steps, DIRECTIONS):
        u, v, w = u + n * du, v + n * dv, w + n * dw
        corners.append((u, v, w))
    assert (u, v, w) == (0, 0, 0)
    us, vs, ws = zip(*corners)
    return Hexagon(min(us), max(us), min(vs), max(vs), min(ws), max(ws))


def hexagon_from_triple(t: Triple) -> Hexagon:
    return hexagon(t.x, t.y, t.z)


def discrete_volume(h: Hexagon) -> int:
    """Count lattice points of ``h`` by direct enumeration.

    Scans the (u, v) bounding box and tests the implied ``w`` against its
    bounds; cost is proportional to the box area.
    """
    cells = (h.u_hi - h.u_lo + 1) * (h.v_hi - h.v_lo + 1)
    if cells > MAX_ENUMERATION:
        raise OverflowError(f"enumeration of {cells} cells exceeds {MAX_ENUMERATION}")
    count = 0
    for u in range(h.u_lo, h.u_hi + 1):
        for v in range(h.v_lo, h.v_hi + 1):
            if h.w_lo <= -u - v <= h.w_hi:
                count += 1
    return checked(count)


def complete_to_parallelogram(h: Hexagon, pair_index: int) -> tuple[Hexagon, int]:
    """Drop the bounds of one side pair, turning ``h`` into a parallelogram.

    ``pair_index`` 1, 2, 3 selects the sides counted by a, b, c.  Two corner
    triangles are adjoined along those sides; the number of new points is
    returned alongside the parallelogram and equals ``2 * T(k-1)`` where k
    is the flattened side count.
    """
    if pair_index == 1:
        big = Hexagon(h.u_lo, h.u_hi, h.v_lo, h.v_hi, -(1 << 62), 1 << 62)
    elif pair_index == 2:
        big = Hexagon(h.u_lo, h.u_hi, -(1 << 62), 1 << 62, h.w_lo, h.w_hi)
    elif pair_index == 3:
        big = Hexagon(-(1 << 62), 1 << 62, h.v_lo, h.v_hi, h.w_lo, h.w_hi)
    else:
        raise ValueError(f"pair_index must be 1, 2 or 3, got {pair_index}")
    added = discrete_volume(big) - discrete_volume(h)
    return big, added


def completion_size(h: Hexagon, pair_index: int) -> int:
    """Closed form for the points added by :func:`complete_to_parallelogram`."""
    return 2 * triangular(h.sides[pair_index - 1] - 1)


# ---------------------------------------------------------------- SVG output

@dataclass(frozen=True)
class SvgStyle:
    scale: float = 40.0
    point_radius: float = 5.0
    margin: int = 1
    point_fill: str = "#d62728"
    region_fill: str = "#d9f2d9"
    grid_stroke: str = "#b0b0b0"
    grid_width: float = 1.0


@dataclass(frozen=True)
class SvgDocument:
    text: str
    width: float
    height: float
    point_count: int = field(default=0)

    def write(self, path) -> None:
        Path(path).write_text(self.text, encoding="utf-8")


def _embed(u: int, v: int) -> tuple[float, float]:
    # lattice basis (1, 0) and (1/2, sqrt(3)/2); y grows upward
    return u + v / 2.0, v * math.sqrt(3) / 2.0


def render_svg(h: Hexagon, style: SvgStyle | None = None) -> SvgDocument:
    """Draw ``h`` on a patch of triangular grid, one dot per lattice point."""
    style = style or SvgStyle()
    if max(h.sides) > MAX_SVG_SIDE:
        raise ValueError(f"hexagon sides {h.sides} exceed {MAX_SVG_SIDE}")

    m = style.margin
    box = Hexagon(h.u_lo - m, h.u_hi + m, h.v_lo - m, h.v_hi + m,
                  h.w_lo - m, h.w_hi + m)
    corners = [_embed(p.u, p.v) for p in box.vertices()]
    xs = [x for x, _ in corners]
    ys = [y for _, y in corners]
    pad = 0.5
    x0, y1 = min(xs) - pad, max(ys) + pad
    width = (max(xs) - min(xs) + 2 * pad) * style.scale
    height = (max(ys) - min(ys) + 2 * pad) * style.scale

    def px(u, v):
        x, y = _embed(u, v)
        return round((x - x0) * style.scale, 3), round((y1 - y) * style.scale, 3)

    lines = []
    # grid: one segment per constant-coordinate line crossing the patch
    for u in range(box.u_lo, box.u_hi + 1):
        vl, vh = max(box.v_lo, -u - box.w_hi), min(box.v_hi, -u - box.w_lo)
        if vl < vh:
            lines.append((px(u, vl), px(u, vh)))
    for v in range(box.v_lo, box.v_hi + 1):
        ul, uh = max(box.u_lo, -v - box.w_hi), min(box.u_hi, -v - box.w_lo)
        if ul < uh:
            lines.append((px(ul, v), px(uh, v)))
    for w in range(box.w_lo, box.w_hi + 1):
        ul, uh = max(box.u_lo, -w - box.v_hi), min(box.u_hi, -w - box.v_lo)
        if ul < uh:
            lines.append((px(ul, -w - ul), px(uh, -w - uh)))

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        f'<title>hexagon {h.a},{h.b},{h.c}</title>',
        f'<g class="grid" stroke="{style.grid_stroke}" '
        f'stroke-width="{style.grid_width}">',
    ]
    for (xa, ya), (xb, yb) in lines:
        out.append(f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}"/>')
    out.append("</g>")

    poly = " ".join("{},{}".format(*px(p.u, p.v)) for p in h.vertices())
    out.append(
        f'<polygon class="region" points="{poly}" fill="{style.region_fill}" '
        f'stroke="{style.point_fill}" stroke-width="{style.grid_width}" '
        f'fill-opacity="0.8"/>')

    out.append(f'<g class="points" fill="{style.point_fill}">')
    n = 0
    for p in h.points():
        cx, cy = px(p.u, p.v)
        out.append(f'<circle class="lattice-point" cx="{cx}" cy="{cy}" '
                   f'r="{style.point_radius}"/>')
        n += 1
    out.append("</g>")
    out.append("</svg>")
    return SvgDocument("\n".join(out) + "\n", width, height, n)
