"""phi-Newton polygons and residual polynomials.

For a monic f with phi-adic expansion f = sum a_i(x) phi(x)^i (deg a_i <
deg phi, phi-adic degree n), each nonzero digit contributes the point
(n - i, v(a_i)) where v is the Gauss valuation at p.  The polygon is the
lower convex hull of those points; its strictly-positive-slope part (the
"principal" edges) is what feeds the splitting theorem.  Zero digits have
infinite ordinate and are simply omitted from the hull input.

Each principal edge of slope l/e (lowest terms) and lattice length e*t
carries a residual polynomial T(Y) of degree exactly t over
F_q = F_p[x]/(phi mod p): coefficient j comes from the digit at abscissa
start + e*j, divided by p^(start_height + l*j) and reduced; digits whose
points lie strictly above the edge contribute 0.  T is normalized monic
(the leading coefficient is a unit since the left endpoint is a vertex).

Slopes are reduced integer pairs; nothing here is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .fq import FqField, FqPoly, fq_make
from .zpoly import IntPoly, gauss_valuation, phi_expand


class PhiDividesError(ValueError):
    """phi divides f over the integers: f is reducible, no polygon exists."""

    def __init__(self, f: IntPoly, phi: IntPoly):
        super().__init__(f"{phi} divides {f} over Z; input is reducible")
        self.f = f
        self.phi = phi


class PhiNotFactorError(ValueError):
    """phi mod p does not divide f mod p: no prime ideals arise from phi."""


class PolygonPoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Edge:
    """One side of the lower hull.

    slope = slope_num/slope_den in lowest terms; slope_den divides the
    lattice length, and lattice_length // slope_den is the degree of the
    residual polynomial attached to the edge.
    """

    start: PolygonPoint
    end: PolygonPoint
    slope_num: int
    slope_den: int
    lattice_length: int

    @property
    def residual_degree(self) -> int:
        return self.lattice_length // self.slope_den

    @property
    def is_principal(self) -> bool:
        return self.slope_num > 0

    def __str__(self) -> str:
        return (
            f"({self.start.x},{self.start.y})->({self.end.x},{self.end.y})"
            f" slope {self.slope_num}/{self.slope_den}"
        )


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull data of f with respect to (phi, p)."""

    phi: IntPoly
    p: int
    order: int  # phi-adic degree n of f
    points: tuple[PolygonPoint, ...]  # all finite points, by abscissa
    edges: tuple[Edge, ...]  # hull edges, slopes strictly increasing
    principal_edges: tuple[Edge, ...]  # the strictly-positive-slope tail

    @property
    def principal_length(self) -> int:
        return sum(e.lattice_length for e in self.principal_edges)


def _lower_hull(points: list[PolygonPoint]) -> list[PolygonPoint]:
    """Monotone chain, collinear points merged into single edges."""
    pts = sorted(points)
    hull: list[PolygonPoint] = []
    for q in pts:
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            # keep only strict left turns: cross <= 0 pops b
            if (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x) <= 0:
                hull.pop()
            else:
                break
        hull.append(q)
    return hull


def build_polygon(f: IntPoly, phi: IntPoly, p: int) -> NewtonPolygon:
    """The phi-Newton polygon of f with respect to p.

    Requires f monic, phi monic and irreducible mod p, phi mod p dividing
    f mod p, and phi not dividing f over Z.
    """
    if not f.is_monic():
        raise ValueError("f must be monic")
    fq_make(p, phi)  # validates p prime and phi irreducible mod p
    expansion = phi_expand(f, phi)
    digits = expansion.digits
    n = expansion.order
    if digits[0].is_zero():
        raise PhiDividesError(f, phi)
    # f mod phi is the constant digit, so phi | f mod p iff it vanishes mod p
    if any(c % p != 0 for c in digits[0].coeffs):
        raise PhiNotFactorError(f"{phi} mod {p} does not divide f mod {p}")

    points = []
    for i, a in enumerate(digits):
        if not a.is_zero():
            points.append(PolygonPoint(n - i, gauss_valuation(a, p)))
    points.sort()

    hull = _lower_hull(points)
    edges = []
    for u, v in zip(hull, hull[1:]):
        dx, dy = v.x - u.x, v.y - u.y
        g = gcd(dx, abs(dy)) if dy else dx
        edges.append(Edge(u, v, dy // g, dx // g, dx))
    principal = tuple(e for e in edges if e.is_principal)
    return NewtonPolygon(phi, p, n, tuple(points), tuple(edges), principal)


def residual_field(polygon: NewtonPolygon) -> FqField:
    """F_p[x]/(phi mod p), the coefficient field of the residuals."""
    return fq_make(polygon.p, polygon.phi)


def residual_poly(f: IntPoly, polygon: NewtonPolygon, edge: Edge) -> FqPoly:
    """Residual polynomial T(Y) of f attached to a principal edge.

    T is monic of degree exactly lattice_length/e over F_p[x]/(phi); its
    irreducible factors index the prime ideals contributed by the edge.
    """
    if edge not in polygon.principal_edges:
        raise ValueError("residual polynomials are attached to principal edges only")
    field = residual_field(polygon)
    digits = phi_expand(f, polygon.phi).digits
    n = len(digits) - 1
    p, l, e = polygon.p, edge.slope_num, edge.slope_den
    t = edge.residual_degree

    coeffs: list = [field.zero()] * (t + 1)  # coeffs[j] multiplies Y^(t-j)
    for j in range(t + 1):
        x = edge.start.x + e * j
        a = digits[n - x]
        if a.is_zero():
            continue
        height = edge.start.y + l * j
        if gauss_valuation(a, p) > height:
            continue  # point strictly above the edge
        scaled = IntPoly(tuple(c // p**height for c in a.coeffs))
        coeffs[j] = field.from_intpoly(scaled)

    T = FqPoly(field, list(reversed(coeffs)))
    # left endpoint is a hull vertex, so the leading coefficient is a unit
    return T.monic()
