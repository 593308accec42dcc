"""Exact integer-polynomial arithmetic, p-adic valuations and phi-adic expansion.

Everything downstream (Newton polygons, residual polynomials, splitting
types) is built on the three primitives in this module:

* ``vp_int`` / ``gauss_valuation`` -- the p-adic valuation of an integer and
  its extension to polynomials (minimum over coefficient valuations),
* exact division with remainder by a monic polynomial,
* ``phi_expand`` -- the base-phi representation f = sum a_i * phi^i with
  deg a_i < deg phi.

Coefficients are arbitrary-precision ints throughout; there is no floating
point and no modular approximation anywhere in this module.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union


class Infinity:
    """Valuation of zero.  A single shared instance, ``INF``, is used.

    Compares strictly greater than every int and equal only to itself, so it
    can participate in ``min``/``max`` and threshold checks without turning
    exact integers into floats.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("ore_index.Infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, Infinity)

    def __gt__(self, other):
        return not isinstance(other, Infinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INF = Infinity()

#: Result type of the valuation functions: an exact exponent, or INF for zero.
Valuation = Union[int, Infinity]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for n < 3.3e24 via the fixed witness set; for larger n a
    few random witnesses are added, so compositeness may in principle go
    undetected (the intended range here is tiny primes anyway).
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases: Iterable[int] = _MR_BASES
    if n >= 3317044064679887385961981:
        rng = random.Random(n)
        bases = list(_MR_BASES) + [rng.randrange(2, n - 1) for _ in range(8)]
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 2, got {p!r}")


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial over Z.

    ``coeffs[i]`` is the coefficient of x^i.  Trailing zeros are stripped on
    construction, so the last stored coefficient is nonzero and the zero
    polynomial is the empty tuple.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        """c * x^k"""
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> int:
        """Coefficient of x^k (0 beyond the stored degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] += ci * cj
        return IntPoly(out)

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(tuple(k * c for c in self.coeffs))

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = IntPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return poly_divmod(self, other)[1]

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __str__(self) -> str:
        return poly_str(self)


def poly_divmod(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Exact division with remainder by a monic divisor.

    Returns (q, r) with f = q*g + r over Z and deg r < deg g.  Non-monic
    divisors are rejected: integer division would not be exact.
    """
    if not g.is_monic():
        raise ValueError(f"divisor must be monic, got {g}")
    if g.degree < 1:
        # monic degree-0 divisor is the constant 1
        return f, IntPoly.zero()
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return IntPoly.zero(), f
    quot = [0] * (len(rem) - dg)
    gc = g.coeffs
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            quot[k - dg] = c
            for j in range(dg + 1):
                rem[k - dg + j] -= c * gc[j]
    return IntPoly(quot), IntPoly(rem[:dg])


def vp_int(n: int, p: int) -> Valuation:
    """Exponent of the prime p in n; INF for n = 0."""
    _require_prime(p)
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def gauss_valuation(g: IntPoly, p: int) -> Valuation:
    """Gauss valuation: minimum of vp_int over all coefficients.

    Extends v_p from Z to Z[x]; INF for the zero polynomial.
    """
    _require_prime(p)
    if g.is_zero():
        return INF
    return min(vp_int(c, p) for c in g.coeffs if c != 0)


@dataclass(frozen=True)
class PhiExpansion:
    """The base-phi representation of a polynomial.

    ``digits[i]`` is the coefficient a_i(x) of phi^i; every digit has degree
    strictly less than deg phi and the leading digit is nonzero.
    Reconstruction is exact: sum(digits[i] * base**i) equals the expanded
    polynomial.
    """

    base: IntPoly
    digits: tuple[IntPoly, ...]

    def __post_init__(self):
        if not self.base.is_monic() or self.base.degree < 1:
            raise ValueError("expansion base must be monic of degree >= 1")
        if not self.digits or self.digits[-1].is_zero():
            raise ValueError("leading digit must be nonzero")
        for d in self.digits:
            if d.degree >= self.base.degree:
                raise ValueError("digit degree must be < deg(base)")

    @property
    def order(self) -> int:
        """The phi-adic degree n (index of the leading digit)."""
        return len(self.digits) - 1

    def reconstruct(self) -> IntPoly:
        acc = IntPoly.zero()
        for d in reversed(self.digits):
            acc = acc * self.base + d
        return acc


def phi_expand(f: IntPoly, phi: IntPoly) -> PhiExpansion:
    """Expand f in base phi by dividing by successive powers of phi.

    Requires phi monic with 1 <= deg phi <= deg f.
    """
    if not phi.is_monic() or phi.degree < 1:
        raise ValueError("phi must be monic of degree >= 1")
    if f.degree < phi.degree:
        raise ValueError("deg phi must not exceed deg f")
    digits = []
    cur = f
    while not cur.is_zero():
        cur, r = poly_divmod(cur, phi)
        digits.append(r)
    return PhiExpansion(phi, tuple(digits))


# -- text format ------------------------------------------------------------

class PolyParseError(ValueError):
    """Raised for text that is not an integer polynomial in one variable."""


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>[a-zA-Z]+)|(?P<pow>\^|\*\*)|(?P<mul>\*)"
    r"|(?P<sign>[+-])|(?P<bad>\S))"
)


def parse_poly(text: str, var: str | None = None) -> IntPoly:
    """Parse ``"x^6+15x^2+8x+128"``-style text into an IntPoly.

    Accepts sums of monomials with integer coefficients, unary minus,
    implicit coefficient 1 and an optional ``*`` between coefficient and
    variable; both ``^`` and ``**`` denote powers.  Rejects non-integer
    coefficients and any second variable name.
    """
    tokens = []
    for mo in _TOKEN.finditer(text):
        kind = mo.lastgroup
        if kind == "bad":
            raise PolyParseError(f"unexpected character {mo.group()!r} in {text!r}")
        tokens.append((kind, mo.group().strip()))
    if not tokens:
        raise PolyParseError("empty polynomial text")

    coeffs: dict[int, int] = {}
    seen_var = var
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        saw_sign = False
        while i < n and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                sign = -sign
            saw_sign = True
            i += 1
        if i >= n:
            raise PolyParseError("dangling sign")
        if i > 0 and not saw_sign and tokens[i - 1][0] != "sign":
            raise PolyParseError(f"missing operator before {tokens[i][1]!r}")

        coef = None
        if tokens[i][0] == "num":
            coef = int(tokens[i][1])
            i += 1
            if i < n and tokens[i][0] == "mul":
                i += 1
                if i >= n or tokens[i][0] != "var":
                    raise PolyParseError("'*' must be followed by the variable")
        exp = 0
        if i < n and tokens[i][0] == "var":
            name = tokens[i][1]
            if len(name) > 1:
                raise PolyParseError(f"unknown symbol {name!r}")
            if seen_var is None:
                seen_var = name
            elif name != seen_var:
                raise PolyParseError(
                    f"multivariate input: saw both {seen_var!r} and {name!r}"
                )
            i += 1
            exp = 1
            if i < n and tokens[i][0] == "pow":
                i += 1
                if i >= n or tokens[i][0] != "num":
                    raise PolyParseError("exponent must be a nonnegative integer")
                exp = int(tokens[i][1])
                i += 1
        elif coef is None:
            raise PolyParseError(f"expected a term near {tokens[i][1]!r}")
        coeffs[exp] = coeffs.get(exp, 0) + sign * (1 if coef is None else coef)

    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPoly(out)


def poly_str(f: IntPoly, var: str = "x") -> str:
    """Canonical text form, highest power first; inverse of parse_poly."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xk = var if k == 1 else f"{var}^{k}"
            body = xk if mag == 1 else f"{mag}{xk}"
        parts.append(sign + body)
    return "".join(parts)


def random_poly(rng: random.Random, degree: int, bound: int, monic: bool = False) -> IntPoly:
    """Uniform random polynomial with |coeffs| <= bound (test/scan helper)."""
    cs = [rng.randint(-bound, bound) for _ in range(degree + 1)]
    if monic:
        cs[-1] = 1
    elif cs[-1] == 0:
        cs[-1] = rng.choice((-1, 1)) * rng.randint(1, bound)
    return IntPoly(cs)
