"""Exact arithmetic over the rationals: univariate polynomials in t,
reduced rational functions, and truncated Laurent expansions.

Representation invariants:

  * Rational numbers are ``fractions.Fraction`` (arbitrary precision,
    positive denominator, gcd(|num|, den) = 1 by construction).
  * ``Polynomial`` stores a tuple of Fractions by ascending power of t;
    the last entry is nonzero, the zero polynomial is the empty tuple.
  * ``RationalFunction`` stores num/den with gcd(num, den) = 1 and a
    monic denominator; this canonical form makes ``==`` structural.
  * ``LaurentSeries`` is a finite coefficient window of the expansion of
    a rational function at t = 0, t = infinity, or a finite point c.
    At infinity the window runs in descending powers of t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

Rat = Fraction
RatLike = Union[Fraction, int, str]


def rat(value: RatLike) -> Fraction:
    """Coerce ints and 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Encode a Fraction as 'p/q', or 'p' when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def is_odd_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value.numerator % 2 != 0


class Polynomial:
    """Univariate polynomial in t with exact rational coefficients.

    Heavy operations (products, division, gcd) run on a lazily cached
    primitive-integer image with one rational scale, which avoids a
    bigint gcd per coefficient operation.
    """

    __slots__ = ("coeffs", "_ints")

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._ints = None

    def _int_form(self):
        """(primitive integer coefficients, rational scale) with
        coeffs[i] == scale * ints[i]."""
        if self._ints is None:
            if not self.coeffs:
                self._ints = ((), Fraction(0))
            else:
                lcm = 1
                for c in self.coeffs:
                    lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
                ints = [c.numerator * (lcm // c.denominator) for c in self.coeffs]
                content = 0
                for v in ints:
                    content = _gcd_int(content, v)
                    if content == 1:
                        break
                if content > 1:
                    ints = [v // content for v in ints]
                self._ints = (tuple(ints), Fraction(content, lcm))
        return self._ints

    @staticmethod
    def _from_scaled(ints, scale: Fraction) -> "Polynomial":
        sn, sd = scale.numerator, scale.denominator
        return Polynomial([Fraction(v * sn, sd) for v in ints])

    @staticmethod
    def const(c: RatLike) -> "Polynomial":
        return Polynomial([rat(c)])

    @staticmethod
    def t(power: int = 1, coeff: RatLike = 1) -> "Polynomial":
        """The monomial coeff * t**power."""
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        return Polynomial([0] * power + [rat(coeff)])

    ZERO: "Polynomial"
    ONE: "Polynomial"

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        a, sa = self._int_form()
        b, sb = other._int_form()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial._from_scaled(out, sa * sb)

    def scale(self, c: RatLike) -> "Polynomial":
        c = rat(c)
        return Polynomial([c * a for a in self.coeffs])

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        while rem and len(rem) - 1 >= dd:
            k = len(rem) - 1 - dd
            q = rem[-1] / lead
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= q * b
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        # exact divisions (the hot path after a gcd) run on the integer
        # images; anything with a remainder falls back to plain division
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial()
        a, sa = self._int_form()
        b, sb = other._int_form()
        quo = _int_exact_div(a, b)
        if quo is not None:
            return Polynomial._from_scaled(quo, sa / sb)
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd, computed over Z by the subresultant remainder
        sequence (with a modular coprimality fast path) to avoid the
        coefficient blow-up of the plain Euclidean algorithm."""
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        if self.degree == 0 or other.degree == 0:
            return Polynomial.ONE
        g = _int_poly_gcd(self._int_form()[0], other._int_form()[0])
        return Polynomial(g).monic()

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, point: RatLike) -> Fraction:
        point = rat(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def evaluate_float(self, point: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * point + float(c)
        return acc

    def compose_shift(self, c: RatLike) -> "Polynomial":
        """p(t + c), by Horner's scheme in the shifted variable."""
        c = rat(c)
        shift = Polynomial([c, 1])
        acc = Polynomial()
        for a in reversed(self.coeffs):
            acc = acc * shift + Polynomial.const(a)
        return acc

    def compose_negate(self) -> "Polynomial":
        """p(-t)."""
        return Polynomial([(-c if i % 2 else c) for i, c in enumerate(self.coeffs)])

    def reversed_coeffs(self) -> "Polynomial":
        """t**deg * p(1/t); used for expansions at infinity."""
        return Polynomial(list(reversed(self.coeffs)))

    def trailing_order(self) -> int:
        """Multiplicity of the root t = 0 (0 for nonzero constant term)."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unnormalized polynomial")

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(rat_str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                parts.append(mono if c == 1 else f"{rat_str(c)}*{mono}")
        return "Polynomial(" + " + ".join(parts) + ")"


Polynomial.ZERO = Polynomial()
Polynomial.ONE = Polynomial([1])


def _int_exact_div(a, b):
    """Quotient of primitive integer polynomials when the division is
    exact over the rationals (then the quotient is integral, by Gauss's
    lemma, and every synthetic-division step divides); None otherwise."""
    rem = list(a)
    lb = b[-1]
    if len(rem) < len(b):
        return None
    quo = [0] * (len(rem) - len(b) + 1)
    while rem and len(rem) >= len(b):
        top = rem[-1]
        if top % lb:
            return None
        q = top // lb
        k = len(rem) - len(b)
        quo[k] = q
        rem.pop()
        for j in range(len(b) - 1):
            rem[k + j] -= q * b[j]
        while rem and rem[-1] == 0:
            rem.pop()
    if rem:
        return None
    return quo


_GCD_PRIMES = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
    2147483423, 2147483399, 2147483353, 2147483323, 2147483269,
    2147483249, 2147483237, 2147483179, 2147483171, 2147483137,
    2147483123, 2147483077, 2147483069, 2147483059, 2147483053,
    2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
    2147482937, 2147482921, 2147482877, 2147482873, 2147482867,
    2147482859, 2147482819, 2147482817, 2147482811, 2147482801,
)


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b over Z."""
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - 1 - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        r = [lb * c for c in r]
        s = len(r) - 1 - db
        for i, c in enumerate(b):
            r[s + i] -= lr * c
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0 and r:
        m = lb ** e
        r = [c * m for c in r]
    return r


def _int_poly_gcd(a, b) -> list:
    """Primitive gcd of primitive integer polynomials.

    Modular images with CRT reconstruction do the heavy lifting (each
    lifted candidate is verified by exact trial division, so wrong or
    unlucky primes cannot leak through); the subresultant remainder
    sequence remains as the deterministic fallback should the prime
    pool run out.
    """
    if len(a) < len(b):
        a, b = b, a
    g = _int_poly_gcd_modular(a, b)
    if g is not None:
        return g
    return _int_poly_gcd_subresultant(list(a), list(b))


def _mod_gcd(f, g, p: int):
    """Monic gcd of f, g over GF(p), as an int64 numpy array."""
    f = np.array([c % p for c in f], dtype=np.int64)
    g = np.array([c % p for c in g], dtype=np.int64)
    while True:
        nz = np.nonzero(g)[0]
        if len(nz) == 0:
            break
        g = g[: nz[-1] + 1]
        inv = pow(int(g[-1]), p - 2, p)
        m = len(g)
        while len(f) >= m:
            top = int(f[-1]) * inv % p
            if top:
                k = len(f) - m
                f[k:] = (f[k:] - top * g) % p
            f = f[:-1]
        f, g = g, f
    inv = pow(int(f[-1]), p - 2, p)
    return (f * inv) % p


def _int_poly_gcd_modular(a, b):
    """Brown's modular gcd; None if the prime pool is exhausted."""
    gamma = _gcd_int(a[-1], b[-1])
    modulus = 0
    lifted = None
    deg = None
    for p in _GCD_PRIMES:
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        gp = _mod_gcd(a, b, p)
        dp = len(gp) - 1
        if dp == 0:
            return [1]
        if deg is None or dp < deg:
            deg, modulus, lifted = dp, 0, None
        elif dp > deg:
            continue  # unlucky prime
        scaled = [int(c) * gamma % p for c in gp]
        if modulus == 0:
            lifted, modulus = scaled, p
        else:
            lifted = _crt_combine(lifted, modulus, scaled, p)
            modulus *= p
        candidate = _symmetric_lift(lifted, modulus)
        content = 0
        for c in candidate:
            content = _gcd_int(content, c)
        if content:
            candidate = [c // content for c in candidate]
        if candidate[-1] < 0:
            candidate = [-c for c in candidate]
        if _int_exact_div(a, candidate) is not None and _int_exact_div(b, candidate) is not None:
            return candidate
    return None


def _crt_combine(old: list, m: int, new: list, p: int) -> list:
    inv = pow(m % p, p - 2, p)
    out = []
    for c_old, c_new in zip(old, new):
        delta = (c_new - c_old) % p
        out.append((c_old + m * (delta * inv % p)) % (m * p))
    return out


def _symmetric_lift(coeffs: list, m: int) -> list:
    half = m // 2
    return [c - m if c > half else c for c in coeffs]


def _int_poly_gcd_subresultant(a: list, b: list) -> list:
    g = h = 1
    while True:
        if len(b) == 1:
            return [1]  # nonzero constant remainder: coprime
        delta = (len(a) - 1) - (len(b) - 1)
        r = _int_prem(a, b)
        if not r:
            ints = b
            content = 0
            for c in ints:
                content = _gcd_int(content, c)
            return [c // content for c in ints]
        divisor = g * h ** delta
        a, b = b, [c // divisor for c in r]
        g = a[-1]
        if delta > 0:
            h = g ** delta // h ** (delta - 1)


def rational_roots(p: Polynomial) -> dict:
    """All rational roots of p with multiplicities.

    The square-free part is searched by exact divisor candidates of the
    extreme coefficients when those are small enough to factor by trial
    division; for larger coefficients, candidates come from numeric root
    finding plus continued-fraction rounding.  Either way every reported
    root is verified exactly; irrational and complex roots are never
    reported, and numerically found candidates are exact divisors of the
    polynomial by construction.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    roots: dict = {}
    k = p.trailing_order()
    if k > 0:
        roots[Fraction(0)] = k
        p = Polynomial(p.coeffs[k:])
    if p.degree < 1:
        return roots
    square_free = p
    g = p.gcd(p.derivative())
    if g.degree > 0:
        square_free = p // g
    for cand in _rational_root_candidates(square_free):
        if cand in roots or square_free.evaluate(cand) != 0:
            continue
        mult = 0
        factor = Polynomial([-cand, 1])
        q = p
        while True:
            quo, rem = divmod(q, factor)
            if not rem.is_zero():
                break
            q = quo
            mult += 1
        roots[cand] = mult
    return roots


_DIVISOR_SEARCH_BOUND = 10 ** 12


def _rational_root_candidates(p: Polynomial):
    ints, _ = p._int_form()
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 <= _DIVISOR_SEARCH_BOUND and an <= _DIVISOR_SEARCH_BOUND:
        for num in _divisors(a0):
            for den in _divisors(an):
                yield Fraction(num, den)
                yield Fraction(-num, den)
        return
    # extremes too large for divisor enumeration: identify candidates
    # numerically and let the exact evaluation above filter them
    scale = max(abs(c) for c in ints)
    coeffs = [float(Fraction(c, scale)) for c in reversed(ints)]
    try:
        approx = np.roots(coeffs)
    except Exception:
        return
    for r in approx:
        if abs(r.imag) > 1e-7:
            continue
        for bound in (10 ** 3, 10 ** 6, 10 ** 9):
            yield Fraction(float(r.real)).limit_denominator(bound)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int):
    if n == 0:
        return
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    yield from small
    yield from reversed(large)


class RationalFunction:
    """Quotient of two Polynomials in canonical reduced form.

    Canonical: gcd(num, den) = 1 and den monic; den is never zero.
    Equality is structural, which is sound on canonical forms.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Polynomial.ONE):
        if not isinstance(num, Polynomial):
            num = Polynomial(num) if isinstance(num, (list, tuple)) else Polynomial.const(num)
        if not isinstance(den, Polynomial):
            den = Polynomial(den) if isinstance(den, (list, tuple)) else Polynomial.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = Polynomial.ZERO
            self.den = Polynomial.ONE
            return
        if num.degree > 0 and den.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @staticmethod
    def const(c: RatLike) -> "RationalFunction":
        return RationalFunction(Polynomial.const(c))

    @staticmethod
    def t(power: int = 1, coeff: RatLike = 1) -> "RationalFunction":
        """coeff * t**power for any integer power (negative allowed)."""
        if power >= 0:
            return RationalFunction(Polynomial.t(power, coeff))
        return RationalFunction(Polynomial.const(coeff), Polynomial.t(-power))

    ZERO: "RationalFunction"
    ONE: "RationalFunction"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(other)
        return NotImplemented

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # cancel the common denominator factor first; the residual gcd of
        # the sum is a divisor of that factor, which keeps reductions small
        g = self.den.gcd(other.den)
        if g.degree > 0:
            b = self.den // g
            d = other.den // g
            return RationalFunction(self.num * d + other.num * b, self.den * d)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = _cross_cancel(self.num, other.den)
        c, d = _cross_cancel(other.num, self.den)
        return RationalFunction(a * c, d * b)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        a, b = _cross_cancel(self.num, other.num)
        c, d = _cross_cancel(other.den, self.den)
        return RationalFunction(a * c, d * b)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def derivative(self) -> "RationalFunction":
        """Exact quotient-rule derivative."""
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        g = num.gcd(self.den)
        if g.degree > 0:
            return RationalFunction(num // g, (self.den // g) * self.den)
        return RationalFunction(num, self.den * self.den)

    def evaluate(self, point: RatLike) -> Fraction:
        point = rat(point)
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"pole at t = {rat_str(point)}")
        return self.num.evaluate(point) / d

    def evaluate_float(self, point: float) -> float:
        return self.num.evaluate_float(point) / self.den.evaluate_float(point)

    def substitute_negate(self) -> "RationalFunction":
        """f(-t)."""
        return RationalFunction(self.num.compose_negate(), self.den.compose_negate())

    def poles(self) -> dict:
        """Rational poles with multiplicities (irrational poles not found)."""
        if self.den.degree < 1:
            return {}
        return rational_roots(self.den)

    def __repr__(self) -> str:
        if self.den == Polynomial.ONE:
            return f"RF({self.num!r})"
        return f"RF({self.num!r} / {self.den!r})"


def _cross_cancel(num: Polynomial, den: Polynomial):
    g = num.gcd(den)
    if g.degree > 0:
        return num // g, den // g
    return num, den


RationalFunction.ZERO = RationalFunction(Polynomial.ZERO)
RationalFunction.ONE = RationalFunction(Polynomial.ONE)

RF = RationalFunction


class ExpansionPoint:
    """Expansion point of a Laurent series: Zero, Infinity, or Finite(c)."""

    __slots__ = ("kind", "c")

    def __init__(self, kind: str, c: Fraction | None = None):
        if kind not in ("zero", "infinity", "finite"):
            raise ValueError(f"bad expansion point kind: {kind}")
        if (kind == "finite") != (c is not None):
            raise ValueError("finite points need c, others must not carry one")
        self.kind = kind
        self.c = c

    def __eq__(self, other):
        return (
            isinstance(other, ExpansionPoint)
            and self.kind == other.kind
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.kind, self.c))

    def __repr__(self):
        if self.kind == "finite":
            return f"Finite({rat_str(self.c)})"
        return self.kind.capitalize()


ZERO_POINT = ExpansionPoint("zero")
INFINITY = ExpansionPoint("infinity")


def finite_point(c: RatLike) -> ExpansionPoint:
    return ExpansionPoint("finite", rat(c))


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated Laurent expansion.

    ``coeffs[i]`` is the coefficient of t**(lead - i) at infinity and of
    (t - c)**(lead + i) elsewhere; ``order`` is the last exponent inside
    the truncation window (the smallest kept at infinity, the largest
    kept at finite points).  The first coefficient is nonzero unless the
    function vanishes identically up to the truncation.
    """

    point: ExpansionPoint
    lead: int
    coeffs: tuple
    order: int

    def exponents(self):
        step = -1 if self.point.kind == "infinity" else 1
        return range(self.lead, self.lead + step * len(self.coeffs), step)

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of exponent k; raises outside the known window."""
        if self.point.kind == "infinity":
            if k > self.lead:
                return Fraction(0)
            if k < self.order:
                raise ValueError(f"exponent {k} below truncation {self.order}")
            i = self.lead - k
        else:
            if k < self.lead:
                return Fraction(0)
            if k > self.order:
                raise ValueError(f"exponent {k} above truncation {self.order}")
            i = k - self.lead
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def mul(self, other: "LaurentSeries") -> "LaurentSeries":
        """Product, truncated to the window both factors can support."""
        if self.point != other.point:
            raise ValueError("series expanded at different points")
        at_inf = self.point.kind == "infinity"
        lead = self.lead + other.lead
        if at_inf:
            order = max(self.order + other.lead, other.order + self.lead)
            n = lead - order + 1
        else:
            order = min(self.order + other.lead, other.order + self.lead)
            n = order - lead + 1
        out = [Fraction(0)] * max(n, 0)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j < len(out):
                    out[i + j] += a * b
        return _normalize_series(self.point, lead, out, order)


def _normalize_series(point, lead, coeffs, order) -> LaurentSeries:
    step = -1 if point.kind == "infinity" else 1
    i = 0
    while i < len(coeffs) and coeffs[i] == 0:
        i += 1
    if i == len(coeffs):
        return LaurentSeries(point, order, (), order)
    return LaurentSeries(point, lead + step * i, tuple(coeffs[i:]), order)


def _series_quotient(num: Polynomial, den: Polynomial, terms: int) -> list:
    """Power-series coefficients of num/den at t = 0; den(0) must be nonzero."""
    d0 = den.coefficient(0)
    if d0 == 0:
        raise ValueError("denominator vanishes at the expansion point")
    out = []
    for k in range(terms):
        acc = num.coefficient(k)
        for j in range(1, k + 1):
            if j <= den.degree:
                acc -= den.coefficient(j) * out[k - j]
        out.append(acc / d0)
    return out


def laurent_expand(f: RationalFunction, point: ExpansionPoint, order: int | None = None) -> LaurentSeries:
    """Laurent expansion of f at the point, truncated at ``order``.

    At finite points the window keeps exponents lead..order (ascending);
    at infinity ``order`` bounds the depth in powers of 1/t: exponents
    lead..-order (descending) are kept.  By default the window extends 8
    exponents past the lead.
    """
    if point.kind == "finite":
        shifted = RationalFunction(
            f.num.compose_shift(point.c), f.den.compose_shift(point.c)
        )
        inner = laurent_expand(shifted, ZERO_POINT, order)
        return LaurentSeries(point, inner.lead, inner.coeffs, inner.order)

    if f.is_zero():
        if point.kind == "infinity":
            edge = -order if order is not None else 0
        else:
            edge = order if order is not None else 0
        return LaurentSeries(point, edge, (), edge)

    if point.kind == "zero":
        a = f.num.trailing_order()
        b = f.den.trailing_order()
        lead = a - b
        n0 = Polynomial(f.num.coeffs[a:])
        d0 = Polynomial(f.den.coeffs[b:])
        if order is None:
            order = lead + 8
        if order < lead:
            return LaurentSeries(point, order, (), order)
        coeffs = _series_quotient(n0, d0, order - lead + 1)
        return _normalize_series(point, lead, coeffs, order)

    # Infinity: substitute s = 1/t, expand at s = 0, then flip exponents.
    rev_num = f.num.reversed_coeffs()
    rev_den = f.den.reversed_coeffs()
    lead_s = f.den.degree - f.num.degree  # f(1/s) = s**lead_s * rev_num/rev_den
    lead_t = -lead_s
    low = -order if order is not None else lead_t - 8
    if low > lead_t:
        return LaurentSeries(point, low, (), low)
    coeffs = _series_quotient(rev_num, rev_den, lead_t - low + 1)
    return _normalize_series(point, lead_t, coeffs, low)


def residue(f: RationalFunction, c: RatLike) -> Fraction:
    """Coefficient of (t-c)**(-1) in the Laurent expansion of f at c."""
    return laurent_expand(f, finite_point(c), order=-1).coefficient(-1)


def residue_at_infinity_coefficient(f: RationalFunction) -> Fraction:
    """Coefficient of t**(-1) in the expansion of f at infinity."""
    return laurent_expand(f, INFINITY, order=1).coefficient(-1)


# JSON encoding helpers (shared wire format of the package).

def poly_to_json(p: Polynomial) -> list:
    return [rat_str(c) for c in p.coeffs]


def poly_from_json(data) -> Polynomial:
    return Polynomial([rat(c) for c in data])


def rf_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def rf_from_json(data) -> RationalFunction:
    return RationalFunction(poly_from_json(data["num"]), poly_from_json(data["den"]))


def series_to_json(s: LaurentSeries) -> dict:
    if s.point.kind == "finite":
        pt = f"c={rat_str(s.point.c)}"
    else:
        pt = {"zero": "0", "infinity": "inf"}[s.point.kind]
    return {
        "point": pt,
        "lead": s.lead,
        "coeffs": [rat_str(c) for c in s.coeffs],
        "order": s.order,
    }
