"""Non-monogenity criteria for sextic quadrinomials x^6 + a*x^m + b*x + c.

Each checker is pure congruence/valuation arithmetic on (a, b, c, m) and
returns a verdict naming the index valuations it claims; it never runs the
polygon pipeline itself.  Cross-validation of every claim against the
pipeline lives in the test suite, so a disagreement is a loud failure
rather than a silently corrected verdict.

The module also carries closed-form base-(x+1), base-(x-1) and
base-(x^2+x+1) expansions of the quadrinomial (exact digit formulas, used
as oracles against ``phi_expand``) and an irreducibility helper.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt

from .fq import _fp_divmod, factor_mod_p, squarefree_degree_pattern
from .zpoly import (
    IntPoly,
    PhiExpansion,
    Valuation,
    _require_prime,
    poly_divmod,
    vp_int,
)

X_PLUS_1 = IntPoly((1, 1))
X_MINUS_1 = IntPoly((-1, 1))
CYCLO3 = IntPoly((1, 1, 1))


@dataclass(frozen=True)
class Quadrinomial:
    """Coefficients of x^6 + a*x^m + b*x + c with m in 1..5.

    For m = 1 the two linear contributions merge: the x-coefficient of the
    encoded polynomial is a + b.
    """

    a: int
    b: int
    c: int
    m: int

    def __post_init__(self):
        if self.m not in (1, 2, 3, 4, 5):
            raise ValueError(f"m must be in 1..5, got {self.m}")

    def poly(self) -> IntPoly:
        cs = [self.c, self.b, 0, 0, 0, 0, 1]
        cs[self.m] += self.a
        return IntPoly(cs)


@dataclass(frozen=True)
class CriterionVerdict:
    """Outcome of one non-monogenity criterion.

    ``claims`` lists (p, v_p(i(K))) pairs asserted when the criterion
    applies; ``failed`` names the hypotheses that did not hold otherwise.
    """

    criterion: str
    applies: bool
    claims: tuple[tuple[int, int], ...] = ()
    failed: tuple[str, ...] = ()
    case: str = ""

    def __post_init__(self):
        if self.applies and not self.claims:
            raise ValueError("an applicable verdict must claim something")
        if any(v < 1 for _, v in self.claims):
            raise ValueError("claimed valuations must be >= 1")


def _require_m(q: Quadrinomial, allowed: tuple[int, ...]) -> None:
    if q.m not in allowed:
        raise ValueError(f"criterion requires m in {allowed}, got m={q.m}")


def check_eight_nine(q: Quadrinomial) -> CriterionVerdict:
    """a, b, c+1 all divisible by 8 gives v_2(i(K)) = 2; by 9, v_3(i(K)) = 1.

    Both divisibilities may hold at once, in which case both valuations are
    claimed.  Requires m in 2..5.
    """
    _require_m(q, (2, 3, 4, 5))
    claims = []
    failed = []
    cases = []
    for modulus, p, v in ((8, 2, 2), (9, 3, 1)):
        bad = [
            f"{modulus} | {name}"
            for name, value in (("a", q.a), ("b", q.b), ("c+1", q.c + 1))
            if value % modulus != 0
        ]
        if bad:
            failed.extend(bad)
        else:
            claims.append((p, v))
            cases.append(f"mod{modulus}")
    if claims:
        return CriterionVerdict("eight-nine", True, tuple(claims), case="+".join(cases))
    return CriterionVerdict("eight-nine", False, failed=tuple(failed))


def _two_adic_gates(q: Quadrinomial, p: int, modulus: int) -> list[str]:
    """Shared gate conditions of the 2-adic/3-adic ramified criteria."""
    if q.b == 0 or q.c == 0:
        raise ValueError("b and c must be nonzero (their valuations must be finite)")
    failed = []
    shift = q.a + (-1) ** q.m
    if shift % modulus != 0:
        failed.append(f"{modulus} | a+(-1)^m")
    if q.b % modulus != 0:
        failed.append(f"{modulus} | b")
    if q.c % modulus != 0:
        failed.append(f"{modulus} | c")
    vb, vc = vp_int(q.b, p), vp_int(q.c, p)
    if not q.m * vb < (q.m - 1) * vc:
        failed.append(f"m*v{p}(b) < (m-1)*v{p}(c)")
    return failed


def check_two_adic(q: Quadrinomial) -> CriterionVerdict:
    """8 | a+(-1)^m, b, c with m*v2(b) < (m-1)*v2(c): ramified-at-2 family.

    Case split (m in 2..4): m=2 with v2(a+1-b+c) > 3 claims v2(i(K)) = 4 and
    with = 3 claims 1 (below 3 the criterion is silent); m=3 needs v2(b)
    odd and claims 1; m=4 needs 3 not dividing v2(b) and claims 2.
    """
    _require_m(q, (2, 3, 4))
    failed = _two_adic_gates(q, 2, 8)
    if failed:
        return CriterionVerdict("two-adic", False, failed=tuple(failed))
    if q.m == 2:
        w: Valuation = vp_int(q.a + 1 - q.b + q.c, 2)
        if w > 3:
            return CriterionVerdict("two-adic", True, ((2, 4),), case="m2-deep")
        if w == 3:
            return CriterionVerdict("two-adic", True, ((2, 1),), case="m2-boundary")
        return CriterionVerdict("two-adic", False, failed=("v2(a+1-b+c) >= 3",))
    vb = vp_int(q.b, 2)
    if q.m == 3:
        if vb % 2 == 1:
            return CriterionVerdict("two-adic", True, ((2, 1),), case="m3")
        return CriterionVerdict("two-adic", False, failed=("v2(b) odd",))
    if vb % 3 != 0:
        return CriterionVerdict("two-adic", True, ((2, 2),), case="m4")
    return CriterionVerdict("two-adic", False, failed=("3 does not divide v2(b)",))


def check_three_adic(q: Quadrinomial) -> CriterionVerdict:
    """9 | a+(-1)^m, b, c with m*v3(b) < (m-1)*v3(c): ramified-at-3 family.

    Claims v3(i(K)) = 1 for m=2 unconditionally, for m=3 when v3(b) is odd
    and for m=4 when 3 does not divide v3(b).
    """
    _require_m(q, (2, 3, 4))
    failed = _two_adic_gates(q, 3, 9)
    if failed:
        return CriterionVerdict("three-adic", False, failed=tuple(failed))
    if q.m == 2:
        return CriterionVerdict("three-adic", True, ((3, 1),), case="m2")
    vb = vp_int(q.b, 3)
    if q.m == 3:
        if vb % 2 == 1:
            return CriterionVerdict("three-adic", True, ((3, 1),), case="m3")
        return CriterionVerdict("three-adic", False, failed=("v3(b) odd",))
    if vb % 3 != 0:
        return CriterionVerdict("three-adic", True, ((3, 1),), case="m4")
    return CriterionVerdict("three-adic", False, failed=("3 does not divide v3(b)",))


def check_trinomial(a: int, b: int, m: int) -> CriterionVerdict:
    """Trinomial x^6 + a*x^m + b, m in 1..5: 8 | a, b+1 or 9 | a, b+1.

    Embeds the trinomial into the quadrinomial shape (zero x-coefficient;
    for m = 1 the a-term *is* the x-coefficient) and delegates to
    check_eight_nine.  Irreducibility is the caller's concern.
    """
    if m not in (1, 2, 3, 4, 5):
        raise ValueError(f"m must be in 1..5, got {m}")
    if m == 1:
        q = Quadrinomial(0, a, b, 2)
    else:
        q = Quadrinomial(a, 0, b, m)
    inner = check_eight_nine(q)
    return CriterionVerdict(
        "trinomial", inner.applies, inner.claims, inner.failed, inner.case
    )


def check_gcd_six(q: Quadrinomial) -> CriterionVerdict:
    """m in {3, 4} with gcd(v_p(b), 6) = 1: both ramified families at once.

    For each p in {2, 3} whose gates hold (a+(-1)^m, b, c divisible by 8
    resp. 9, and m*v_p(b) < (m-1)*v_p(c)) and gcd(v_p(b), 6) = 1, claims
    v_2(i(K)) = 1 (m=3) or 2 (m=4), resp. v_3(i(K)) = 1.
    """
    _require_m(q, (3, 4))
    claims = []
    failed = []
    for p, modulus in ((2, 8), (3, 9)):
        bad = _two_adic_gates(q, p, modulus)
        if gcd(vp_int(q.b, p), 6) != 1:
            bad.append(f"gcd(v{p}(b), 6) = 1")
        if bad:
            failed.extend(bad)
        elif p == 2:
            claims.append((2, 1 if q.m == 3 else 2))
        else:
            claims.append((3, 1))
    if claims:
        return CriterionVerdict("gcd-six", True, tuple(claims), case=f"m{q.m}")
    return CriterionVerdict("gcd-six", False, failed=tuple(failed))


ALL_CHECKS = (check_eight_nine, check_two_adic, check_three_adic, check_gcd_six)


# -- closed-form expansions ---------------------------------------------------

def expansion_base_x_plus_1(q: Quadrinomial) -> PhiExpansion:
    """Exact digits of the base-(x+1) expansion of the quadrinomial.

    Digit i (1 <= i <= 6) is (-1)^i C(6,i) + a (-1)^(m-i) C(m,i), plus b at
    i = 1 (the linear term contributes b*(x+1) - b); the constant digit is
    a(-1)^m - b + 1 + c.  Must agree with phi_expand coefficient for
    coefficient -- that equality is a hard test.
    """
    _require_m(q, (2, 3, 4, 5))
    a, b, c, m = q.a, q.b, q.c, q.m
    digits = [IntPoly.const(a * (-1) ** m - b + 1 + c)]
    for i in range(1, 7):
        coef = (-1) ** i * comb(6, i) + a * (-1) ** (m - i) * comb(m, i)
        if i == 1:
            coef += b
        digits.append(IntPoly.const(coef))
    return PhiExpansion(X_PLUS_1, tuple(digits))


def expansion_base_x_minus_1(q: Quadrinomial) -> PhiExpansion:
    """Exact digits of the base-(x-1) expansion; constant digit a+b+c+1."""
    _require_m(q, (2, 3, 4, 5))
    a, b, c, m = q.a, q.b, q.c, q.m
    digits = [IntPoly.const(1 + a + b + c)]
    for i in range(1, 7):
        coef = comb(6, i) + a * comb(m, i)
        if i == 1:
            coef += b
        digits.append(IntPoly.const(coef))
    return PhiExpansion(X_MINUS_1, tuple(digits))


def expansion_base_cyclo3(q: Quadrinomial) -> PhiExpansion:
    """Exact digits of the base-(x^2+x+1) expansion, per case on m."""
    _require_m(q, (2, 3, 4, 5))
    a, b, c, m = q.a, q.b, q.c, q.m
    if m == 2:
        digs = ((1 + c - a, b - a), (a - 2, 2), (0, -3))
    elif m == 3:
        digs = ((1 + c + a, b), (-(a + 2), a + 2), (0, -3))
    elif m == 4:
        digs = ((1 + c, a + b), (-(a + 2), 2 - 2 * a), (a, -3))
    else:
        digs = ((1 + c - a, b - a), (3 * a - 2, a + 2), (-2 * a, a - 3))
    digits = tuple(IntPoly(d) for d in digs) + (IntPoly.one(),)
    return PhiExpansion(CYCLO3, digits)


@dataclass(frozen=True)
class ConstantDigits:
    """The constant digits driving the three showcase polygons.

    ``base_cyclo3`` is the (possibly linear) constant digit of the
    base-(x^2+x+1) expansion; the other two are the integers f(-1) and
    f(1), i.e. the constant digits at bases x+1 and x-1.
    """

    base_cyclo3: IntPoly
    base_x_plus_1: int
    base_x_minus_1: int


def constant_digits(q: Quadrinomial) -> ConstantDigits:
    """Closed forms for the constant digits; must match phi_expand exactly."""
    _require_m(q, (2, 3, 4, 5))
    a, b, c, m = q.a, q.b, q.c, q.m
    if m == 2:
        d = IntPoly((1 + c - a, b - a))
    elif m == 3:
        d = IntPoly((1 + c + a, b))
    elif m == 4:
        d = IntPoly((1 + c, a + b))
    else:
        d = IntPoly((1 + c - a, b - a))
    return ConstantDigits(d, a * (-1) ** m - b + 1 + c, 1 + a + b + c)


# -- irreducibility -----------------------------------------------------------

def eisenstein(f: IntPoly, q: int) -> bool:
    """Eisenstein criterion at the prime q for a monic polynomial."""
    _require_prime(q)
    if not f.is_monic():
        raise ValueError("Eisenstein test expects a monic polynomial")
    if any(c % q != 0 for c in f.coeffs[:-1]):
        return False
    return f.coeff(0) % (q * q) != 0


IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Irreducibility:
    status: str
    witness: IntPoly | None = None  # a proper integer factor when reducible
    method: str = ""

    def __bool__(self) -> bool:
        return self.status == IRREDUCIBLE


_SMALL_PRIME_LIMIT = 10**4
_small_primes_cache: list[int] = []


def _small_primes() -> list[int]:
    if not _small_primes_cache:
        sieve = bytearray([1]) * (_SMALL_PRIME_LIMIT + 1)
        sieve[0] = sieve[1] = 0
        for n in range(2, isqrt(_SMALL_PRIME_LIMIT) + 1):
            if sieve[n]:
                sieve[n * n :: n] = bytearray(len(sieve[n * n :: n]))
        _small_primes_cache.extend(i for i, b in enumerate(sieve) if b)
    return _small_primes_cache


def _rational_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Euclidean gcd over Q, returned as a primitive integer polynomial."""
    def trim(u):
        while u and not u[-1]:
            u.pop()
        return u

    a = trim([Fraction(c) for c in f.coeffs])
    b = trim([Fraction(c) for c in g.coeffs])
    while b:
        r = list(a)
        db = len(b) - 1
        while len(r) - 1 >= db:
            q = r[-1] / b[-1]
            k = len(r) - 1 - db
            for j in range(db + 1):
                r[k + j] -= q * b[j]
            r.pop()  # leading term cancelled exactly
            trim(r)
        a, b = b, r
    if not a:
        return IntPoly.zero()
    denom = 1
    for c in a:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in a]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(ints)


# -- Hensel lifting over Z/p^E (int coefficient lists) ------------------------

def _ptrim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _pmul(u: list[int], v: list[int], m: int) -> list[int]:
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] = (out[i + j] + a * b) % m
    return _ptrim(out)


def _padd(u: list[int], v: list[int], m: int) -> list[int]:
    out = list(u) + [0] * max(0, len(v) - len(u))
    for i, b in enumerate(v):
        out[i] = (out[i] + b) % m
    return _ptrim(out)


def _psub(u: list[int], v: list[int], m: int) -> list[int]:
    out = list(u) + [0] * max(0, len(v) - len(u))
    for i, b in enumerate(v):
        out[i] = (out[i] - b) % m
    return _ptrim(out)


def _pdivmod_monic(u: list[int], g: list[int], m: int) -> tuple[list[int], list[int]]:
    assert g and g[-1] == 1, "Hensel division requires a monic divisor"
    rem = [c % m for c in u]
    rem = _ptrim(rem)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], rem
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            quot[k - dg] = c
            for j in range(dg + 1):
                rem[k - dg + j] = (rem[k - dg + j] - c * g[j]) % m
    return _ptrim(quot), _ptrim(rem[:dg])


def _bezout_mod_p(G: list[int], H: list[int], p: int) -> tuple[list[int], list[int]]:
    """s, t with s*G + t*H = 1 mod p, deg s < deg H, deg t < deg G."""
    r0, r1 = list(G), list(H)
    s0, s1 = [1], []
    while r1:
        q, r = _fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        raise ValueError("factors are not coprime mod p")
    inv = pow(r0[0], -1, p)
    s = [c * inv % p for c in s0]
    qs, s = _fp_divmod(s, H, p)
    t_num = _psub([1], _pmul(s, G, p), p)
    t, rem = _fp_divmod(t_num, H, p)
    assert not rem, "Bezout reconstruction must divide exactly"
    return s, t


def _hensel_pair(
    fint: tuple[int, ...], G: list[int], H: list[int], p: int, E: int
) -> tuple[list[int], list[int]]:
    """Lift f = G*H from mod p to mod p^E (E a power of two), all monic."""
    g, h = [c % p for c in G], [c % p for c in H]
    s, t = _bezout_mod_p(g, h, p)
    exp = 1
    while exp < E:
        exp *= 2
        m2 = p**exp
        fm = [c % m2 for c in fint]
        e = _psub(fm, _pmul(g, h, m2), m2)
        q, r = _pdivmod_monic(_pmul(s, e, m2), h, m2)
        g = _padd(g, _padd(_pmul(t, e, m2), _pmul(q, g, m2), m2), m2)
        h = _padd(h, r, m2)
        b = _psub(_padd(_pmul(s, g, m2), _pmul(t, h, m2), m2), [1], m2)
        q2, d = _pdivmod_monic(_pmul(s, b, m2), h, m2)
        s = _psub(s, d, m2)
        t = _psub(t, _padd(_pmul(t, b, m2), _pmul(q2, g, m2), m2), m2)
        if not (g and g[-1] == 1 and h and h[-1] == 1):
            raise AssertionError("Hensel step lost monicity")
    return g, h


def _hensel_list(
    fint: tuple[int, ...], gs: list[list[int]], p: int, E: int
) -> list[list[int]]:
    """Lift pairwise-coprime monic mod-p factors of f to mod p^E."""
    if len(gs) == 1:
        M = p**E
        return [_ptrim([c % M for c in fint])]
    half = len(gs) // 2
    L, R = gs[:half], gs[half:]
    G: list[int] = [1]
    for u in L:
        G = _pmul(G, u, p)
    H: list[int] = [1]
    for u in R:
        H = _pmul(H, u, p)
    Gstar, Hstar = _hensel_pair(fint, G, H, p, E)
    return _hensel_list(tuple(Gstar), L, p, E) + _hensel_list(tuple(Hstar), R, p, E)


def _bounded_factor_search(f: IntPoly, p: int) -> IntPoly | None:
    """Complete search for a monic factor of degree <= deg(f)//2.

    Requires f squarefree mod p.  Lifts the mod-p factorization past twice
    the Mignotte bound and tries every subset of modular factors with small
    enough total degree; any true factor of that degree must appear.
    """
    max_deg = f.degree // 2
    bound = 2 ** max_deg * (isqrt(sum(c * c for c in f.coeffs)) + 1)
    E = 1
    while p**E <= 2 * bound:
        E *= 2
    M = p**E

    factors = [list(g.coeffs_as_ints()) for g, _ in factor_mod_p(f, p)]
    lifted = _hensel_list(f.coeffs, factors, p, E)
    degs = [len(g) - 1 for g in lifted]

    for size in range(1, len(lifted)):
        for combo in itertools.combinations(range(len(lifted)), size):
            d = sum(degs[i] for i in combo)
            if not 1 <= d <= max_deg:
                continue
            prod = [1]
            for i in combo:
                prod = _pmul(prod, lifted[i], M)
            sym = [c - M if c > M // 2 else c for c in prod]
            cand = IntPoly(sym)
            if not cand.is_monic():
                continue
            if poly_divmod(f, cand)[1].is_zero():
                return cand
    return None


_SIEVE_PRIME_BOUND = 300
_SIEVE_GOOD_PRIMES = 25
_LIFT_PRIMES = (2, 3, 5, 7, 11, 13)


def irreducibility(f: IntPoly) -> Irreducibility:
    """Decide irreducibility of a monic sextic over Q, or report unknown.

    Fast paths: Eisenstein at primes dividing every non-leading coefficient;
    a nonconstant gcd with the derivative (a genuine factor); factor-degree
    patterns mod up to 25 squarefree primes whose subset sums leave no
    proper degree possible.  Otherwise a bounded lift-and-recombine search
    at the first small squarefree prime settles the question; if no such
    prime exists the result is unknown.
    """
    if not f.is_monic() or f.degree != 6:
        raise ValueError("expected a monic polynomial of degree 6")
    if f.coeff(0) == 0:
        return Irreducibility(REDUCIBLE, IntPoly.x(), "zero constant term")

    g = 0
    for c in f.coeffs[:-1]:
        g = gcd(g, c)
    if g > 1:
        for q in _small_primes():
            if q > g:
                break
            if g % q == 0 and eisenstein(f, q):
                return Irreducibility(IRREDUCIBLE, method=f"eisenstein at {q}")

    sq = _rational_gcd(f, f.derivative())
    if sq.degree >= 1:
        return Irreducibility(REDUCIBLE, sq, "repeated factor (gcd with derivative)")

    possible = set(range(7))
    good = 0
    lift_prime = None
    for p in _small_primes():
        if p > _SIEVE_PRIME_BOUND or good >= _SIEVE_GOOD_PRIMES:
            break
        pattern = squarefree_degree_pattern(f, p)
        if pattern is None:
            continue
        good += 1
        if lift_prime is None and p in _LIFT_PRIMES:
            lift_prime = p
        sums = {0}
        for d in pattern:
            sums |= {s + d for s in sums}
        possible &= sums
        if not possible & {1, 2, 3, 4, 5}:
            return Irreducibility(
                IRREDUCIBLE, method=f"degree patterns at {good} primes"
            )

    if lift_prime is None:
        return Irreducibility(UNKNOWN, method="no small squarefree reduction")
    witness = _bounded_factor_search(f, lift_prime)
    if witness is not None:
        return Irreducibility(REDUCIBLE, witness, f"lift search at {lift_prime}")
    return Irreducibility(
        IRREDUCIBLE, method=f"lift search at {lift_prime}: no factor of degree <= 3"
    )
