"""Splitting type of pO_K assembled from Newton polygons and residuals.

The pipeline per prime p: factor f mod p into distinct monic irreducibles
phi_i^(e_i); for each phi_i build the phi_i-Newton polygon of f and, for
every principal edge of slope l/e and every distinct irreducible factor U
of its residual polynomial, record one prime ideal with ramification index
e and residue degree deg(phi_i) * deg(U).

The method only decides the factorization when every residual polynomial
is separable (f is "p-regular"); otherwise ``splitting_type`` refuses with
``NotRegularError`` carrying the repeated factors as witnesses.  The inert
case (f irreducible mod p) is handled directly by Dedekind's criterion
without building a polygon.

Everything is deterministic: modular factors are sorted by (degree,
coefficients), edges come out of the hull sorted by slope, and residual
factors are sorted the same way as modular factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fq import FactorList, FqPoly, factor_mod_p, factor_over_fq, lift_to_intpoly
from .polygon import Edge, NewtonPolygon, build_polygon, residual_poly
from .zpoly import IntPoly


class ZeroModPError(ValueError):
    """Every coefficient of f vanishes mod p; the reduction carries no data."""


@dataclass(frozen=True)
class RegularityWitness:
    """A repeated residual factor: the reason the method is inconclusive."""

    phi: IntPoly
    edge: Edge
    factor: FqPoly
    multiplicity: int

    def __str__(self) -> str:
        return (
            f"phi={self.phi}, edge {self.edge}: residual factor "
            f"{self.factor.text()} has multiplicity {self.multiplicity}"
        )


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    witnesses: tuple[RegularityWitness, ...] = ()

    def __post_init__(self):
        if self.regular != (not self.witnesses):
            raise ValueError("regular flag inconsistent with witnesses")


class NotRegularError(Exception):
    """Some residual polynomial has a repeated factor; Ore gives no answer."""

    def __init__(self, report: RegularityReport):
        super().__init__("; ".join(str(w) for w in report.witnesses))
        self.report = report


@dataclass(frozen=True)
class PrimeFactor:
    """One prime ideal above p, with the provenance that produced it.

    ``source`` is "edge" for polygon-derived primes and "inert" for the
    Dedekind shortcut when f mod p is irreducible (slope and residual are
    None in that case).
    """

    e: int
    f: int
    phi: IntPoly
    source: str = "edge"
    slope: tuple[int, int] | None = None
    residual_factor: FqPoly | None = None

    def provenance(self) -> str:
        if self.source == "inert":
            return "inert (Dedekind)"
        l, d = self.slope
        return (
            f"phi={self.phi}, slope {l}/{d}, "
            f"residual factor {self.residual_factor.text()}"
        )


@dataclass(frozen=True)
class Splitting:
    """Multiset of (e, f) pairs describing pO_K, with per-prime provenance."""

    p: int
    degree: int
    primes: tuple[PrimeFactor, ...]
    squarefree_mod_p: bool

    def __post_init__(self):
        # fundamental identity: sum of e*f must equal deg f, unconditionally
        total = sum(pf.e * pf.f for pf in self.primes)
        if total != self.degree:
            raise AssertionError(
                f"sum(e*f) = {total} != degree {self.degree} at p={self.p}"
            )

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Sorted multiset of (e, f) pairs -- the canonical splitting type."""
        return tuple(sorted((pf.e, pf.f) for pf in self.primes))

    def __str__(self) -> str:
        return " ".join(f"(e={pf.e},f={pf.f})" for pf in self.primes)


@dataclass(frozen=True)
class EdgeData:
    """A principal edge with its residual polynomial and factorization."""

    edge: Edge
    residual: FqPoly
    factors: FactorList


@dataclass(frozen=True)
class PhiData:
    """Everything computed for one modular factor phi of f."""

    phi: IntPoly
    multiplicity: int
    polygon: NewtonPolygon | None  # None for the inert shortcut
    edges: tuple[EdgeData, ...] = ()


@dataclass(frozen=True)
class Decomposition:
    """Full per-prime analysis: factors, polygons, residuals, splitting."""

    f: IntPoly
    p: int
    phi_data: tuple[PhiData, ...]
    regularity: RegularityReport
    squarefree_mod_p: bool
    inert: bool
    splitting: Splitting | None = field(default=None)

    def require_splitting(self) -> Splitting:
        if not self.regularity.regular:
            raise NotRegularError(self.regularity)
        assert self.splitting is not None
        return self.splitting


def decompose(f: IntPoly, p: int) -> Decomposition:
    """Run the whole pipeline at p and keep every intermediate object.

    Raises ZeroModPError if f vanishes mod p and propagates
    PhiDividesError if a modular factor's lift divides f over Z (which
    means f was reducible, violating the caller-asserted precondition).
    """
    if not f.is_monic():
        raise ValueError("f must be monic")
    if all(c % p == 0 for c in f.coeffs):
        raise ZeroModPError(f"f is zero mod {p}")
    factors = factor_mod_p(f, p)
    squarefree = all(m == 1 for _, m in factors)

    if len(factors) == 1 and factors[0][1] == 1:
        # f irreducible mod p: p is inert (Dedekind); the splitting theorem
        # itself requires phi != f, so this case bypasses the polygons.
        phi = lift_to_intpoly(factors[0][0])
        prime = PrimeFactor(1, f.degree, phi, source="inert")
        return Decomposition(
            f=f,
            p=p,
            phi_data=(PhiData(phi, 1, None),),
            regularity=RegularityReport(True),
            squarefree_mod_p=True,
            inert=True,
            splitting=Splitting(p, f.degree, (prime,), True),
        )

    phi_data = []
    witnesses = []
    primes = []
    for fac, mult in factors:
        phi = lift_to_intpoly(fac)
        polygon = build_polygon(f, phi, p)
        edge_data = []
        for edge in polygon.principal_edges:
            T = residual_poly(f, polygon, edge)
            tfactors = factor_over_fq(T)
            edge_data.append(EdgeData(edge, T, tfactors))
            for U, umult in tfactors:
                if umult > 1:
                    witnesses.append(RegularityWitness(phi, edge, U, umult))
                else:
                    primes.append(
                        PrimeFactor(
                            e=edge.slope_den,
                            f=phi.degree * U.degree,
                            phi=phi,
                            slope=(edge.slope_num, edge.slope_den),
                            residual_factor=U,
                        )
                    )
        phi_data.append(PhiData(phi, mult, polygon, tuple(edge_data)))

    regularity = RegularityReport(not witnesses, tuple(witnesses))
    splitting = None
    if regularity.regular:
        splitting = Splitting(p, f.degree, tuple(primes), squarefree)
    return Decomposition(
        f=f,
        p=p,
        phi_data=tuple(phi_data),
        regularity=regularity,
        squarefree_mod_p=squarefree,
        inert=False,
        splitting=splitting,
    )


def splitting_type(f: IntPoly, p: int) -> Splitting:
    """Splitting type of pO_K for K defined by the (irreducible) monic f.

    Irreducibility of f over Q is the caller's responsibility.  Raises
    NotRegularError when some residual polynomial is inseparable and
    ZeroModPError when f vanishes mod p.
    """
    return decompose(f, p).require_splitting()


def is_p_regular(f: IntPoly, p: int) -> RegularityReport:
    """Check separability of every residual of every principal edge."""
    return decompose(f, p).regularity
