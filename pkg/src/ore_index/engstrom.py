"""Index valuations of sextic fields from the splitting type at p in {2, 3}.

Engstrom determined v_p(i(K)) for fields of degree <= 7 as a function of
the splitting type of p alone.  This module embeds the six degree-6 rows
needed here (exactly as tabulated: a residue-degree list paired
positionally with a ramification-index list, plus the v_2 and v_3 cells)
and exposes the lookup.

A blank cell in the printed table is interpreted as v_p(i(K)) = 0 for that
splitting type: a blank only appears where the residue-degree counts fit
inside the monic irreducibles available over F_p, so no common index
divisor is forced.  Results carry a ``reason`` string so reports can show
which rule fired ("tabulated", "tabulated blank cell, v=0", or the
squarefree-reduction zero rule).

Splitting types not among the six rows return status "not-tabulated";
inventing values beyond the tabulated ones is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Mapping

from .ore import Splitting


@dataclass(frozen=True)
class IndexEntry:
    """One tabulated row: f-list and e-list paired positionally."""

    number: int
    residue_degrees: tuple[int, ...]
    ram_indices: tuple[int, ...]
    v2: int | None
    v3: int | None

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Sorted multiset of (e, f) pairs for matching."""
        return tuple(sorted(zip(self.ram_indices, self.residue_degrees)))

    def cell(self, p: int) -> int | None:
        return self.v2 if p == 2 else self.v3


#: The six tabulated degree-6 rows, stored exactly as printed.
TABLE: tuple[IndexEntry, ...] = (
    IndexEntry(1, (2, 2, 1, 1), (1, 1, 1, 1), 2, None),
    IndexEntry(2, (1, 1, 1, 1), (2, 2, 1, 1), 2, 1),
    IndexEntry(3, (1, 1, 1, 1, 1), (2, 1, 1, 1, 1), 4, None),
    IndexEntry(4, (2, 1, 1, 1), (1, 2, 1, 1), 1, None),
    IndexEntry(5, (1, 1, 1, 1), (3, 1, 1, 1), 2, 1),
    IndexEntry(6, (2, 1, 1, 1, 1), (1, 1, 1, 1, 1), 2, 1),
)

KNOWN = "known"
ZERO = "zero"
NOT_TABULATED = "not-tabulated"


@dataclass(frozen=True)
class IndexValuation:
    """Result of the table lookup for one prime."""

    p: int
    status: str  # KNOWN | ZERO | NOT_TABULATED
    value: int | None = None
    reason: str = ""

    def certifies_nonmonogenic(self) -> bool:
        return self.status == KNOWN and self.value is not None and self.value >= 1


def _as_pairs(st) -> tuple[tuple[int, int], ...]:
    if isinstance(st, Splitting):
        return st.pairs()
    return tuple(sorted((int(e), int(f)) for e, f in st))


def index_valuation(st, p: int, *, squarefree_mod_p: bool = False) -> IndexValuation:
    """v_p(i(K)) for a sextic splitting type, p in {2, 3}.

    ``st`` is a Splitting or an iterable of (e, f) pairs summing to 6.
    ``squarefree_mod_p`` attests that the defining polynomial was squarefree
    mod p, in which case p does not divide ind(theta) and hence not i(K);
    without it, types outside the table come back "not-tabulated".
    """
    if p not in (2, 3):
        raise ValueError(f"index table covers p in {{2, 3}} only, got {p}")
    pairs = _as_pairs(st)
    total = sum(e * f for e, f in pairs)
    if total != 6:
        raise ValueError(f"splitting type sums to {total}, expected 6 (sextic)")

    for row in TABLE:
        if row.pairs() == pairs:
            v = row.cell(p)
            if v is None:
                # blank cells can only be hit by realizable-over-F_p types
                return IndexValuation(
                    p, ZERO, 0, f"tabulated row {row.number}: blank cell, v=0"
                )
            return IndexValuation(p, KNOWN, v, f"tabulated row {row.number}")
    if squarefree_mod_p:
        return IndexValuation(
            p, ZERO, 0, "squarefree mod p: p does not divide ind(theta)"
        )
    return IndexValuation(p, NOT_TABULATED, None, "splitting type not tabulated")


@dataclass(frozen=True)
class MonogenityVerdict:
    verdict: str  # "non-monogenic" | "inconclusive"
    certifying: tuple[tuple[int, int], ...] = ()  # (p, v_p(i(K))) pairs

    @property
    def non_monogenic(self) -> bool:
        return self.verdict == "non-monogenic"


def monogenity_verdict(
    results: Mapping[int, IndexValuation] | Iterable[IndexValuation],
) -> MonogenityVerdict:
    """Combine per-prime index valuations into a monogenity verdict.

    Any Known(v >= 1) certifies non-monogenity; otherwise the verdict is
    inconclusive -- a positive monogenity certificate is never issued.
    """
    vals = list(results.values()) if isinstance(results, Mapping) else list(results)
    certifying = tuple(
        (iv.p, iv.value) for iv in vals if iv.certifies_nonmonogenic()
    )
    if certifying:
        return MonogenityVerdict("non-monogenic", certifying)
    return MonogenityVerdict("inconclusive")


def format_table() -> str:
    """Human-auditable rendering of the embedded table ('-' for blanks)."""
    lines = [
        "Index of sextic number fields at p = 2 and p = 3",
        "no.  f1,f2,f3,f4,f5   e1,e2,e3,e4,e5   v2(i(K))  v3(i(K))",
    ]
    for row in TABLE:
        fs = ",".join(str(v) for v in row.residue_degrees)
        es = ",".join(str(v) for v in row.ram_indices)
        v2 = "-" if row.v2 is None else str(row.v2)
        v3 = "-" if row.v3 is None else str(row.v3)
        lines.append(f"{row.number:<4} {fs:<16} {es:<16} {v2:<9} {v3}")
    return "\n".join(lines) + "\n"


def packaged_table_text() -> str:
    """Contents of the shipped human-auditable table file."""
    return (
        resources.files("ore_index").joinpath("data/engstrom_degree6.txt").read_text()
    )
