"""Full per-polynomial analysis reports (library layer under the CLI).

``analyze`` runs, for each requested prime: the modular factorization, all
Newton polygons with their residual polynomials and factorizations, the
splitting type with provenance, and (for sextic input at p in {2, 3}) the
index valuation.  Quadrinomial-shaped input additionally gets the verdicts
of every applicable non-monogenity criterion.  Reports are deterministic
and convert losslessly to JSON-ready dicts with stable keys.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import engstrom, quadrinomial
from .engstrom import IndexValuation, MonogenityVerdict, monogenity_verdict
from .ore import Decomposition, ZeroModPError, decompose
from .polygon import PhiDividesError
from .quadrinomial import CriterionVerdict, Irreducibility, Quadrinomial
from .zpoly import IntPoly, parse_poly, poly_str

NOT_REGULAR = "not-regular"
ZERO_MOD_P = "zero-mod-p"
REDUCIBLE = "reducible"


@dataclass(frozen=True)
class PrimeBlock:
    """Everything computed at one prime (or the error that stopped it)."""

    p: int
    decomposition: Decomposition | None = None
    index: IndexValuation | None = None
    error: str | None = None
    error_detail: str = ""


@dataclass(frozen=True)
class AnalysisReport:
    input_text: str
    poly: IntPoly
    irreducibility: Irreducibility | None
    shape: Quadrinomial | None
    primes: tuple[PrimeBlock, ...]
    verdicts: tuple[CriterionVerdict, ...]
    monogenic: MonogenityVerdict
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "input": self.input_text,
            "poly": poly_str(self.poly),
            "degree": self.poly.degree,
            "irreducibility": None
            if self.irreducibility is None
            else {
                "status": self.irreducibility.status,
                "witness": None
                if self.irreducibility.witness is None
                else poly_str(self.irreducibility.witness),
                "method": self.irreducibility.method,
            },
            "primes": [_prime_dict(block) for block in self.primes],
            "verdicts": [
                {
                    "criterion": v.criterion,
                    "applies": v.applies,
                    "claims": [[p, val] for p, val in v.claims],
                    "failed": list(v.failed),
                    "case": v.case,
                }
                for v in self.verdicts
            ],
            "monogenic": self.monogenic.verdict,
            "certifying": [[p, v] for p, v in self.monogenic.certifying],
            "notes": list(self.notes),
        }

    def first_error(self) -> str | None:
        for block in self.primes:
            if block.error:
                return block.error
        return None


def _prime_dict(block: PrimeBlock) -> dict:
    out: dict = {"p": block.p}
    if block.error:
        out["error"] = {"kind": block.error, "detail": block.error_detail}
        return out
    d = block.decomposition
    out["factors"] = [
        {"phi": poly_str(pd.phi), "multiplicity": pd.multiplicity}
        for pd in d.phi_data
    ]
    polygons = []
    for pd in d.phi_data:
        if pd.polygon is None:
            continue
        edges = []
        for ed in pd.edges:
            edges.append(
                {
                    "l": ed.edge.slope_num,
                    "e": ed.edge.slope_den,
                    "length": ed.edge.lattice_length,
                    "start": [ed.edge.start.x, ed.edge.start.y],
                    "end": [ed.edge.end.x, ed.edge.end.y],
                    "residual": ed.residual.text(),
                    "residual_factors": [
                        u.text() for u, _ in ed.factors for _ in [0]
                    ],
                }
            )
        polygons.append(
            {
                "phi": poly_str(pd.phi),
                "vertices": _vertices(pd.polygon),
                "points": [[pt.x, pt.y] for pt in pd.polygon.points],
                "edges": edges,
            }
        )
    out["polygons"] = polygons
    out["regular"] = d.regularity.regular
    if not d.regularity.regular:
        out["witnesses"] = [str(w) for w in d.regularity.witnesses]
        out["splitting"] = None
    else:
        out["splitting"] = [[pf.e, pf.f] for pf in d.splitting.primes]
        out["provenance"] = [pf.provenance() for pf in d.splitting.primes]
    if block.index is not None:
        out["index"] = {
            "status": block.index.status,
            "value": block.index.value,
            "reason": block.index.reason,
        }
    return out


def _vertices(polygon) -> list[list[int]]:
    if not polygon.edges:
        return [[pt.x, pt.y] for pt in polygon.points[:1]]
    verts = [polygon.edges[0].start] + [e.end for e in polygon.edges]
    return [[v.x, v.y] for v in verts]


def quadrinomial_shape(f: IntPoly) -> Quadrinomial | None:
    """Match x^6 + a*x^m + b*x + c (at most one term between x^2 and x^5)."""
    if f.degree != 6 or not f.is_monic():
        return None
    mids = [(i, f.coeff(i)) for i in range(2, 6) if f.coeff(i) != 0]
    if len(mids) > 1:
        return None
    if mids:
        m, a = mids[0]
        return Quadrinomial(a, f.coeff(1), f.coeff(0), m)
    return Quadrinomial(0, f.coeff(1), f.coeff(0), 2)


def run_verdicts(q: Quadrinomial) -> tuple[CriterionVerdict, ...]:
    """Every criterion whose preconditions the shape satisfies."""
    verdicts = [quadrinomial.check_eight_nine(q)]
    if q.m in (2, 3, 4) and q.b != 0 and q.c != 0:
        verdicts.append(quadrinomial.check_two_adic(q))
        verdicts.append(quadrinomial.check_three_adic(q))
    if q.m in (3, 4) and q.b != 0 and q.c != 0:
        verdicts.append(quadrinomial.check_gcd_six(q))
    if q.a == 0 and q.b != 0:
        # x^6 + bx + c is the trinomial family with the term at x^1
        verdicts.append(quadrinomial.check_trinomial(q.b, q.c, 1))
    elif q.b == 0:
        verdicts.append(quadrinomial.check_trinomial(q.a, q.c, q.m))
    return tuple(verdicts)


def _family_notes(q: Quadrinomial | None) -> tuple[str, ...]:
    if q is None:
        return ()
    if (
        q.m == 2
        and q.a % 112 == 105
        and q.b % 112 == 56
        and q.c % 896 == 0
    ):
        return (
            "coefficients match the a=-7 (mod 112), b=56 (mod 112), "
            "c=0 (mod 896) example family: the v2(i(K))=1 advertised for it "
            "rests on the gate 8 | a+1, which these coefficients fail "
            "(v2(a+1)=1), so no criterion applies; the index entry above "
            "comes from the computed splitting alone",
        )
    return ()


def analyze(poly, primes=(2, 3)) -> AnalysisReport:
    """Analyze a monic polynomial at the given primes.

    ``poly`` may be an IntPoly or polynomial text.  Non-sextic input runs
    the splitting pipeline but skips the index lookup.  Per-prime failures
    (not p-regular, zero mod p, reducible input detected) are recorded in
    the report rather than raised.
    """
    if isinstance(poly, IntPoly):
        text, f = poly_str(poly), poly
    else:
        text = poly
        f = parse_poly(poly)
    if not f.is_monic():
        raise ValueError("analysis requires a monic polynomial")

    irr = quadrinomial.irreducibility(f) if f.degree == 6 else None
    shape = quadrinomial_shape(f)
    verdicts = run_verdicts(shape) if shape is not None else ()

    blocks = []
    index_results = []
    for p in primes:
        try:
            d = decompose(f, p)
        except ZeroModPError as exc:
            blocks.append(PrimeBlock(p, error=ZERO_MOD_P, error_detail=str(exc)))
            continue
        except PhiDividesError as exc:
            blocks.append(PrimeBlock(p, error=REDUCIBLE, error_detail=str(exc)))
            continue
        if not d.regularity.regular:
            blocks.append(
                PrimeBlock(
                    p,
                    decomposition=d,
                    error=NOT_REGULAR,
                    error_detail="; ".join(str(w) for w in d.regularity.witnesses),
                )
            )
            continue
        index = None
        if f.degree == 6 and p in (2, 3):
            index = engstrom.index_valuation(
                d.splitting, p, squarefree_mod_p=d.squarefree_mod_p
            )
            index_results.append(index)
        blocks.append(PrimeBlock(p, decomposition=d, index=index))

    return AnalysisReport(
        input_text=text,
        poly=f,
        irreducibility=irr,
        shape=shape,
        primes=tuple(blocks),
        verdicts=verdicts,
        monogenic=monogenity_verdict(index_results),
        notes=_family_notes(shape),
    )


def render_text(report: AnalysisReport) -> str:
    """Human-readable rendering of an analysis report."""
    lines = [f"input: {report.input_text}", f"poly:  {poly_str(report.poly)}"]
    if report.irreducibility is not None:
        irr = report.irreducibility
        line = f"irreducibility: {irr.status} ({irr.method})"
        if irr.witness is not None:
            line += f", witness {poly_str(irr.witness)}"
        lines.append(line)
    for block in report.primes:
        lines.append(f"\np = {block.p}")
        if block.error:
            lines.append(f"  error: {block.error} -- {block.error_detail}")
            continue
        d = block.decomposition
        lines.append(
            "  factorization mod p: "
            + " * ".join(
                f"({poly_str(pd.phi)})^{pd.multiplicity}" for pd in d.phi_data
            )
        )
        for pd in d.phi_data:
            if pd.polygon is None:
                lines.append(f"  phi = {poly_str(pd.phi)}: inert (Dedekind)")
                continue
            pts = " ".join(f"({pt.x},{pt.y})" for pt in pd.polygon.points)
            lines.append(f"  phi = {poly_str(pd.phi)}: points {pts}")
            for ed in pd.edges:
                factors = ", ".join(
                    f"{u.text()}^{m}" if m > 1 else u.text() for u, m in ed.factors
                )
                lines.append(
                    f"    edge {ed.edge}: residual {ed.residual.text()}"
                    f" = {factors}"
                )
        lines.append(f"  splitting: {d.splitting}")
        if block.index is not None:
            iv = block.index
            shown = iv.value if iv.value is not None else "?"
            lines.append(f"  v_{block.p}(i(K)) = {shown} [{iv.status}: {iv.reason}]")
    if report.verdicts:
        lines.append("\ncriteria:")
        for v in report.verdicts:
            if v.applies:
                claims = ", ".join(f"v_{p}(i(K))={val}" for p, val in v.claims)
                lines.append(f"  {v.criterion}: applies ({v.case}) -> {claims}")
            else:
                lines.append(f"  {v.criterion}: not applicable [{'; '.join(v.failed)}]")
    lines.append(f"\nmonogenity: {report.monogenic.verdict}")
    for p, v in report.monogenic.certifying:
        lines.append(f"  certified by p={p} with v_{p}(i(K))={v}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
