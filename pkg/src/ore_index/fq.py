"""Arithmetic and polynomial factorization over F_p and F_q = F_p[x]/(phi).

Field elements are canonical residues: trimmed tuples of ints in [0, p),
constant term first, so the zero element is ``()`` and one is ``(1,)``.
Factorization is exhaustive trial division over enumerated monic
irreducibles of degree <= deg/2 -- trivially auditable and more than fast
enough for the intended range (p in {2, 3}, q <= 27, degree <= 6).

``squarefree_degree_pattern`` additionally exposes a distinct-degree
(Frobenius/gcd) computation of the factor-degree multiset of a squarefree
reduction; it never constructs the factors and is cheap for primes far
beyond the enumeration range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .zpoly import IntPoly, _require_prime

#: Canonical field element: trimmed coefficient tuple of the residue.
Elem = tuple[int, ...]


class ReducibleModulusError(ValueError):
    """Modulus of an FqField factored; carries a witness factor."""

    def __init__(self, modulus: IntPoly, witness: IntPoly):
        super().__init__(f"{modulus} is reducible: divisible by {witness}")
        self.modulus = modulus
        self.witness = witness


def _trim(cs: list[int]) -> Elem:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _fp_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    """Division with remainder in F_p[x]; g need not be monic."""
    g = list(g)
    while g and g[-1] % p == 0:
        g.pop()
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    inv_lead = pow(g[-1], -1, p)
    rem = [c % p for c in f]
    while rem and rem[-1] == 0:
        rem.pop()
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], rem
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] * inv_lead % p
        if c:
            quot[k - dg] = c
            for j in range(dg + 1):
                rem[k - dg + j] = (rem[k - dg + j] - c * g[j]) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


@dataclass(frozen=True)
class FqField:
    """The field F_p[x]/(modulus), modulus monic and irreducible mod p."""

    p: int
    modulus: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    # -- element arithmetic --------------------------------------------------

    def zero(self) -> Elem:
        return ()

    def one(self) -> Elem:
        return (1,)

    def from_int(self, c: int) -> Elem:
        return _trim([c % self.p])

    def from_intpoly(self, g: IntPoly) -> Elem:
        """Reduce an integer polynomial mod (p, modulus)."""
        _, rem = _fp_divmod([c % self.p for c in g.coeffs], list(self.modulus), self.p)
        return _trim(rem)

    def add(self, u: Elem, v: Elem) -> Elem:
        if len(u) < len(v):
            u, v = v, u
        out = list(u)
        for i, c in enumerate(v):
            out[i] = (out[i] + c) % self.p
        return _trim(out)

    def neg(self, u: Elem) -> Elem:
        return tuple((-c) % self.p for c in u)

    def sub(self, u: Elem, v: Elem) -> Elem:
        return self.add(u, self.neg(v))

    def mul(self, u: Elem, v: Elem) -> Elem:
        if not u or not v:
            return ()
        prod = [0] * (len(u) + len(v) - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    prod[i + j] += a * b
        _, rem = _fp_divmod([c % self.p for c in prod], list(self.modulus), self.p)
        return _trim(rem)

    def inv(self, u: Elem) -> Elem:
        if not u:
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid in F_p[x] against the modulus
        r0, r1 = list(self.modulus), list(u)
        t0, t1 = [], [1]
        while r1:
            q, r = _fp_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            qt = self._fp_mul_list(q, t1)
            t0, t1 = t1, self._fp_sub_list(t0, qt)
        # r0 is a nonzero constant gcd
        c_inv = pow(r0[0], -1, self.p)
        return _trim([c * c_inv % self.p for c in t0])

    def pow(self, u: Elem, n: int) -> Elem:
        result, base = self.one(), u
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def _fp_mul_list(self, a: list[int], b: list[int]) -> list[int]:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % self.p
        return out

    def _fp_sub_list(self, a: list[int], b: list[int]) -> list[int]:
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, y in enumerate(b):
            out[i] = (out[i] - y) % self.p
        return out

    # -- enumeration ---------------------------------------------------------

    def elements(self) -> Iterator[Elem]:
        """All q elements, constant-digit-fastest counting order."""
        d, p = self.degree, self.p
        for idx in range(p**d):
            cs = []
            v = idx
            for _ in range(d):
                cs.append(v % p)
                v //= p
            yield _trim(cs)

    def elem_index(self, u: Elem) -> int:
        """Rank of an element in the elements() order (sort key helper)."""
        return sum(c * self.p**i for i, c in enumerate(u))

    def elem_str(self, u: Elem, var: str = "x") -> str:
        from .zpoly import poly_str

        return poly_str(IntPoly(u), var)


def fq_make(p: int, modulus: IntPoly) -> FqField:
    """Build F_p[x]/(modulus), verifying irreducibility mod p eagerly.

    A reducible modulus is rejected with a witness factor.
    """
    _require_prime(p)
    red = tuple(c % p for c in modulus.coeffs)
    while red and red[-1] == 0:
        red = red[:-1]
    if len(red) < 2:
        raise ValueError("modulus must have degree >= 1 mod p")
    if red[-1] != 1:
        raise ValueError(f"modulus must be monic mod {p}")
    field = FqField(p, red)
    witness = _find_irreducible_factor(field)
    if witness is not None:
        raise ReducibleModulusError(IntPoly(red), IntPoly(witness.coeffs_as_ints()))
    return field


_PRIME_FIELDS: dict[int, FqField] = {}


def prime_field(p: int) -> FqField:
    """F_p, realized as F_p[x]/(x); instances are cached."""
    if p not in _PRIME_FIELDS:
        _require_prime(p)
        _PRIME_FIELDS[p] = FqField(p, (0, 1))
    return _PRIME_FIELDS[p]


@dataclass(frozen=True)
class FqPoly:
    """Polynomial over an FqField, trimmed coefficient tuple of elements."""

    field: FqField
    coeffs: tuple[Elem, ...]

    def __init__(self, field: FqField, coeffs=()):
        cs = [tuple(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_intpoly(cls, field: FqField, g: IntPoly) -> "FqPoly":
        return cls(field, [field.from_int(c) for c in g.coeffs])

    @classmethod
    def variable(cls, field: FqField) -> "FqPoly":
        return cls(field, [(), field.one()])

    @classmethod
    def constant(cls, field: FqField, u: Elem) -> "FqPoly":
        return cls(field, [u])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> Elem:
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == (1,)

    def coeff(self, k: int) -> Elem:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ()

    def coeffs_as_ints(self) -> tuple[int, ...]:
        """Coefficients as ints; only valid over a prime field."""
        if self.field.degree != 1:
            raise ValueError("coeffs_as_ints requires a prime field")
        return tuple(c[0] if c else 0 for c in self.coeffs)

    def __add__(self, other: "FqPoly") -> "FqPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return FqPoly(F, out)

    def __neg__(self) -> "FqPoly":
        F = self.field
        return FqPoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        return self + (-other)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FqPoly(F, ())
        out = [F.zero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(ca, cb))
        return FqPoly(F, out)

    def scale(self, u: Elem) -> "FqPoly":
        F = self.field
        return FqPoly(F, [F.mul(u, c) for c in self.coeffs])

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        inv_lead = F.inv(other.leading)
        rem = list(self.coeffs)
        dg = other.degree
        if len(rem) - 1 < dg:
            return FqPoly(F, ()), self
        quot = [F.zero()] * (len(rem) - dg)
        oc = other.coeffs
        for k in range(len(rem) - 1, dg - 1, -1):
            c = F.mul(rem[k], inv_lead)
            if c:
                quot[k - dg] = c
                for j in range(dg + 1):
                    rem[k - dg + j] = F.sub(rem[k - dg + j], F.mul(c, oc[j]))
        return FqPoly(F, quot), FqPoly(F, rem[:dg])

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FqPoly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.leading))

    def gcd(self, other: "FqPoly") -> "FqPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "FqPoly":
        F = self.field
        return FqPoly(
            F,
            [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs) if i >= 1],
        )

    def pow_mod(self, n: int, mod: "FqPoly") -> "FqPoly":
        result = FqPoly(self.field, [self.field.one()])
        base = self % mod
        while n:
            if n & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            n >>= 1
        return result

    def evaluate(self, u: Elem) -> Elem:
        F = self.field
        acc = F.zero()
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, u), c)
        return acc

    def sort_key(self) -> tuple:
        F = self.field
        return (self.degree, tuple(F.elem_index(c) for c in self.coeffs))

    def text(self, var: str = "Y") -> str:
        """Render with coefficients as F_p-polynomial strings in x."""
        F = self.field
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            cs = F.elem_str(c)
            if k == 0:
                body = cs if len(c) == 1 else f"({cs})"
                parts.append(("+" if parts else "") + body)
                continue
            xk = var if k == 1 else f"{var}^{k}"
            if c == (1,):
                body = xk
            elif len(c) == 1:
                body = f"{cs}{xk}"
            else:
                body = f"({cs}){xk}"
            parts.append(("+" if parts else "") + body)
        return "".join(parts)


#: Factorization into distinct monic irreducibles with multiplicities.
FactorList = tuple[tuple[FqPoly, int], ...]


def monic_polys(field: FqField, degree: int) -> Iterator[FqPoly]:
    """All monic polynomials of the exact degree, in a fixed order."""
    if degree == 0:
        yield FqPoly(field, [field.one()])
        return
    elems = list(field.elements())
    q = len(elems)

    def count(idx: int) -> list[Elem]:
        out = []
        for _ in range(degree):
            out.append(elems[idx % q])
            idx //= q
        return out

    for idx in range(q**degree):
        yield FqPoly(field, count(idx) + [field.one()])


_IRR_CACHE: dict[tuple[int, tuple[int, ...], int], tuple[FqPoly, ...]] = {}


def irreducible_polys(field: FqField, degree: int) -> tuple[FqPoly, ...]:
    """Monic irreducibles of the exact degree over the field (cached)."""
    key = (field.p, field.modulus, degree)
    if key not in _IRR_CACHE:
        found = []
        for g in monic_polys(field, degree):
            if _is_irreducible(g):
                found.append(g)
        _IRR_CACHE[key] = tuple(found)
    return _IRR_CACHE[key]


def _has_root(g: FqPoly) -> bool:
    return any(not g.evaluate(u) for u in g.field.elements())


def _is_irreducible(g: FqPoly) -> bool:
    d = g.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    if d <= 3:
        # degree 2 or 3: reducible iff it has a root
        return not _has_root(g)
    for k in range(1, d // 2 + 1):
        for h in irreducible_polys(g.field, k):
            if (g % h).is_zero():
                return False
    return True


def _find_irreducible_factor(field: FqField) -> FqPoly | None:
    """Smallest monic irreducible factor of the field modulus over F_p, if any."""
    base = prime_field(field.p)
    g = FqPoly(base, [base.from_int(c) for c in field.modulus])
    d = g.degree
    if d == 1:
        return None
    for k in range(1, d // 2 + 1):
        for h in irreducible_polys(base, k):
            if (g % h).is_zero():
                return h
    return None


def factor_over_fq(T: FqPoly) -> FactorList:
    """Complete factorization into distinct monic irreducibles over F_q.

    Exhaustive trial division, smallest factors first; the product of the
    factors with multiplicities times the leading coefficient reproduces T.
    """
    if T.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    field = T.field
    rem = T.monic()
    found: list[tuple[FqPoly, int]] = []
    deg = 1
    while rem.degree >= 1:
        if 2 * deg > rem.degree:
            found.append((rem, 1))
            break
        for g in irreducible_polys(field, deg):
            mult = 0
            while True:
                q, r = divmod(rem, g)
                if not r.is_zero():
                    break
                rem = q
                mult += 1
            if mult:
                found.append((g, mult))
            if rem.degree < 1:
                break
        deg += 1
    found.sort(key=lambda fm: fm[0].sort_key())
    return tuple(found)


def factor_mod_p(f: IntPoly, p: int) -> FactorList:
    """Factor f mod p into distinct monic irreducibles over F_p."""
    field = prime_field(p)
    fbar = FqPoly.from_intpoly(field, f)
    if fbar.is_zero():
        raise ValueError(f"polynomial is zero mod {p}")
    return factor_over_fq(fbar)


def is_separable(T: FqPoly) -> bool:
    """True iff gcd(T, T') is constant, i.e. no repeated roots anywhere."""
    if T.degree < 1:
        raise ValueError("separability is only defined for nonconstant input")
    d = T.derivative()
    if d.is_zero():
        return False
    return T.gcd(d).degree == 0


def lift_to_intpoly(g: FqPoly) -> IntPoly:
    """Canonical lift of a prime-field polynomial to Z[x], coeffs in [0, p)."""
    return IntPoly(g.coeffs_as_ints())


def squarefree_degree_pattern(f: IntPoly, p: int) -> tuple[int, ...] | None:
    """Factor-degree multiset of f mod p, or None if f mod p is not squarefree.

    Distinct-degree computation: gcds against x^(p^d) - x, so the factors are
    never constructed and large p costs only a few modular exponentiations.
    """
    field = prime_field(p)
    g = FqPoly.from_intpoly(field, f)
    if g.is_zero():
        raise ValueError(f"polynomial is zero mod {p}")
    g = g.monic()
    if g.degree < 1:
        return ()
    if g.gcd(g.derivative()).degree != 0:
        return None
    pattern: list[int] = []
    x = FqPoly.variable(field)
    frob = x
    d = 0
    rem = g
    while rem.degree >= 1:
        d += 1
        if 2 * d > rem.degree:
            pattern.append(rem.degree)
            break
        frob = frob.pow_mod(p, rem)
        part = rem.gcd(frob - x)
        if part.degree:
            pattern.extend([d] * (part.degree // d))
            rem = rem // part
            frob = frob % rem
    return tuple(sorted(pattern))
