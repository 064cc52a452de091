"""Exact arithmetic for multiplicative number theory and cyclotomic-type polynomials.

Everything in this module is integer-exact: multiplicative functions computed
from trial-division factorizations, dense integer-coefficient polynomials with
exact division and gcd, cyclotomic polynomials Phi_n, and the modified
cyclotomic rational functions prod_{d|n} (1 - x^d)^mu(d).

Intended argument range is n <= 10**6 (trial division dominates beyond that).
All functions are pure; caches are append-only, so concurrent use is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "ArithValue",
    "IntPolynomial",
    "RationalPolyFraction",
    "cyclotomic",
    "divisors",
    "factorize",
    "jacobi_symbol",
    "mobius",
    "one_minus_x_power",
    "poly_gcd",
    "psi_by_definition",
    "psi_reduced",
    "radical",
    "totient",
    "von_mangoldt",
]


def _check_positive(n: int, what: str = "n") -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{what} must be a positive integer, got {n!r}")
    if n < 1:
        raise ValueError(f"{what} must be >= 1, got {n}")
    return n


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) with primes ascending."""
    _check_positive(n)
    out: list[tuple[int, int]] = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    f = 5
    # trial divisors 5, 7, 11, 13, ... (6k +- 1)
    step = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            out.append((f, e))
        f += step
        step = 6 - step
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return tuple(sorted(ds))


def mobius(n: int) -> int:
    """Moebius function: 0 if n has a squared prime factor, else (-1)^(number of prime factors)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    """Euler totient, the number of 1 <= a <= n coprime to n."""
    t = n
    for p, _ in factorize(n):
        t -= t // p
    return t


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; rad(1) = 1."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


@dataclass(frozen=True)
class ArithValue:
    """Exact value of an arithmetic function, kept symbolic where floats would lie.

    kind is one of "integer", "sign", "prime-power-log".  A prime-power-log
    value stands for log(prime) and is only produced for inputs of the form
    prime**exponent; converting it to a number at some working precision is
    the caller's job.
    """

    kind: str
    value: int = 0
    prime: int | None = None
    exponent: int | None = None

    @classmethod
    def integer(cls, value: int) -> "ArithValue":
        return cls(kind="integer", value=value)

    @classmethod
    def sign(cls, value: int) -> "ArithValue":
        if value not in (-1, 0, 1):
            raise ValueError(f"sign value must be -1, 0, or 1, got {value}")
        return cls(kind="sign", value=value)

    @classmethod
    def prime_power_log(cls, prime: int, exponent: int) -> "ArithValue":
        return cls(kind="prime-power-log", prime=prime, exponent=exponent)

    @property
    def is_zero(self) -> bool:
        return self.kind in ("integer", "sign") and self.value == 0


def von_mangoldt(n: int) -> ArithValue:
    """Von Mangoldt function: log p when n = p**a, else 0, returned exactly."""
    _check_positive(n)
    fac = factorize(n)
    if len(fac) == 1:
        p, e = fac[0]
        return ArithValue.prime_power_log(p, e)
    return ArithValue.integer(0)


def jacobi_symbol(n: int, m: int) -> int:
    """Jacobi symbol (n|m) for odd positive m, extending the Legendre symbol."""
    if not isinstance(m, int) or m <= 0 or m % 2 == 0:
        raise ValueError(f"modulus must be a positive odd integer, got {m!r}")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"numerator must be an integer, got {n!r}")
    n %= m
    result = 1
    while n:
        while n % 2 == 0:
            n //= 2
            if m % 8 in (3, 5):
                result = -result
        n, m = m, n
        if n % 4 == 3 and m % 4 == 3:
            result = -result
        n %= m
    return result if m == 1 else 0


# ---------------------------------------------------------------------------
# Integer-coefficient polynomials


class IntPolynomial:
    """Dense integer-coefficient polynomial, coefficients stored lowest degree first.

    Immutable.  All arithmetic is exact; exact_div raises if the division
    leaves a remainder.  The zero polynomial has an empty coefficient tuple
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficients must be integers, got {c!r}")
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x_power_minus_one(cls, n: int) -> "IntPolynomial":
        """x**n - 1."""
        _check_positive(n)
        return cls((-1,) + (0,) * (n - 1) + (1,))

    # -- structure

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self == IntPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        a, b = self.coeffs, other.coeffs
        # iterate over the operand with fewer nonzero terms; binomials like
        # 1 - x^d then cost O(degree) instead of O(degree^2)
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return IntPolynomial(out)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact polynomial division; raises ValueError on any nonzero remainder."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return IntPolynomial(())
        if self.degree < other.degree:
            raise ValueError("exact division leaves a remainder")
        if other.leading in (1, -1):
            q, r = self._divmod_int(other)
        else:
            q, r = self._divmod_fraction(other)
        if r is None or not r.is_zero:
            raise ValueError("exact division leaves a remainder")
        return q

    def _divmod_int(self, other: "IntPolynomial"):
        # long division staying in the integers; valid when lc(other) is +-1
        rem = list(self.coeffs)
        db = other.degree
        lc = other.leading
        quot = [0] * (len(rem) - db)
        bcs = other.coeffs
        for i in range(len(rem) - db - 1, -1, -1):
            c = rem[i + db]
            if c == 0:
                continue
            qc = c // lc
            quot[i] = qc
            for j, bj in enumerate(bcs):
                if bj:
                    rem[i + j] -= qc * bj
        return IntPolynomial(quot), IntPolynomial(rem[:db])

    def _divmod_fraction(self, other: "IntPolynomial"):
        # general case: divide over the rationals, demand an integer quotient
        rem = [Fraction(c) for c in self.coeffs]
        db = other.degree
        lc = Fraction(other.leading)
        quot = [Fraction(0)] * (len(rem) - db)
        bcs = other.coeffs
        for i in range(len(rem) - db - 1, -1, -1):
            c = rem[i + db]
            if c == 0:
                continue
            qc = c / lc
            quot[i] = qc
            for j, bj in enumerate(bcs):
                if bj:
                    rem[i + j] -= qc * bj
        if any(r != 0 for r in rem[:db]) or any(q.denominator != 1 for q in quot):
            return IntPolynomial(()), None
        return IntPolynomial(int(q) for q in quot), IntPolynomial(())

    def substitute_power(self, e: int) -> "IntPolynomial":
        """Return p(x**e)."""
        _check_positive(e, "e")
        if self.is_zero:
            return self
        out = [0] * (self.degree * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return IntPolynomial(out)

    def evaluate(self, x):
        """Horner evaluation; x may be an int, Fraction, or any numeric type."""
        acc = 0 * x  # a zero of the caller's numeric type
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*(abs(c) for c in self.coeffs)) if self.coeffs else 0

    # -- presentation

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                mag = str(abs(c))
            elif abs(c) == 1:
                mag = "x" if i == 1 else f"x^{i}"
            else:
                mag = f"{abs(c)}*x" if i == 1 else f"{abs(c)}*x^{i}"
            if not parts:
                parts.append(mag if c > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def to_json(self) -> list[int]:
        """Coefficient list, lowest degree first."""
        return list(self.coeffs)

    @classmethod
    def from_json(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(coeffs)


def one_minus_x_power(d: int) -> IntPolynomial:
    """1 - x**d."""
    _check_positive(d, "d")
    return IntPolynomial((1,) + (0,) * (d - 1) + (-1,))


# -- gcd machinery

_GCD_PRIME = (1 << 61) - 1  # Mersenne prime, large enough for every lift we attempt


def _poly_mod_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Monic gcd of a and b over GF(p) by plain Euclid on coefficient lists."""
    fa = [c % p for c in a]
    fb = [c % p for c in b]
    while fb and any(fb):
        while fb and fb[-1] == 0:
            fb.pop()
        if not fb:
            break
        inv = pow(fb[-1], p - 2, p)
        db = len(fb) - 1
        while len(fa) - 1 >= db and any(fa):
            while fa and fa[-1] == 0:
                fa.pop()
            if len(fa) - 1 < db:
                break
            scale = fa[-1] * inv % p
            off = len(fa) - 1 - db
            for j, c in enumerate(fb):
                fa[off + j] = (fa[off + j] - scale * c) % p
        fa, fb = fb, fa
    while fa and fa[-1] == 0:
        fa.pop()
    if not fa:
        return []
    inv = pow(fa[-1], p - 2, p)
    return [c * inv % p for c in fa]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, integer arithmetic."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        lr = r[-1]
        off = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, c in enumerate(b):
            r[off + j] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return r


def _subresultant_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd via the subresultant PRS; correct for any integer inputs."""
    def primitive(cs: list[int]) -> list[int]:
        g = math.gcd(*(abs(c) for c in cs))
        return [c // g for c in cs]

    if len(a) < len(b):
        a, b = b, a
    a, b = primitive(a), primitive(b)
    g, h = 1, 1
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            result = primitive(b)
            break
        if len(r) == 1:
            result = [1]
            break
        scale = g * h**delta
        a, b = b, [c // scale for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
    if result[-1] < 0:
        result = [-c for c in result]
    return result


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[x], normalized to a positive leading coefficient.

    Fast path: compute the gcd modulo a large prime, lift the monic image to
    symmetric integer residues, and verify by exact division.  Whenever the
    lift fails to divide both inputs (unlucky prime, non-unit leading
    coefficient) the subresultant remainder sequence settles it exactly.
    """
    if f.is_zero and g.is_zero:
        return IntPolynomial(())
    if f.is_zero or g.is_zero:
        h = g if f.is_zero else f
        cs = h.coeffs
        return IntPolynomial(cs) if cs[-1] > 0 else IntPolynomial(tuple(-c for c in cs))
    cf, cg = f.content(), g.content()
    cont = math.gcd(cf, cg)
    a = [c // cf for c in f.coeffs]
    b = [c // cg for c in g.coeffs]
    if len(a) == 1 or len(b) == 1:
        return IntPolynomial((cont,))

    p = _GCD_PRIME
    cand = _poly_mod_gcd(a, b, p)
    pp: list[int] | None
    if not cand:
        pp = None
    elif len(cand) == 1:
        pp = [1]
    else:
        lifted = [c - p if c > p // 2 else c for c in cand]
        gpoly = IntPolynomial(lifted)
        try:
            IntPolynomial(a).exact_div(gpoly)
            IntPolynomial(b).exact_div(gpoly)
            pp = lifted
        except ValueError:
            pp = None
    if pp is None:
        pp = _subresultant_gcd(a, b)
    if pp[-1] < 0:
        pp = [-c for c in pp]
    return IntPolynomial([c * cont for c in pp])


# ---------------------------------------------------------------------------
# Rational functions


class RationalPolyFraction:
    """Quotient of two integer polynomials, kept in lowest terms.

    Normalization divides out the polynomial gcd (integer content included)
    and flips signs so the denominator has a positive leading coefficient.
    Equality is decided by cross-multiplication, so it holds for any two
    representations of the same rational function.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: IntPolynomial, denominator: IntPolynomial = IntPolynomial((1,))):
        if denominator.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if numerator.is_zero:
            self.numerator = IntPolynomial(())
            self.denominator = IntPolynomial((1,))
            return
        g = poly_gcd(numerator, denominator)
        num = numerator.exact_div(g)
        den = denominator.exact_div(g)
        if den.leading < 0:
            num, den = -num, -den
        self.numerator = num
        self.denominator = den

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolyFraction):
            return (self.numerator * other.denominator) == (other.numerator * self.denominator)
        if isinstance(other, IntPolynomial):
            return self == RationalPolyFraction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.numerator.coeffs, self.denominator.coeffs))

    def __mul__(self, other: "RationalPolyFraction") -> "RationalPolyFraction":
        return RationalPolyFraction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __truediv__(self, other: "RationalPolyFraction") -> "RationalPolyFraction":
        if other.numerator.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalPolyFraction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    @property
    def is_polynomial(self) -> bool:
        return self.denominator == IntPolynomial((1,))

    def evaluate(self, x):
        den = self.denominator.evaluate(x)
        return self.numerator.evaluate(x) / den

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalPolyFraction({self.numerator!r}, {self.denominator!r})"

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RationalPolyFraction":
        return cls(IntPolynomial(obj["numerator"]), IntPolynomial(obj["denominator"]))


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and their modified products


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial Phi_n, by exact division of x**n - 1.

    Phi_n = (x**n - 1) / prod_{d | n, d < n} Phi_d; the recursion bottoms out
    at Phi_1 = x - 1 and every division is checked to be remainder-free.
    """
    _check_positive(n)
    if n == 1:
        return IntPolynomial((-1, 1))
    num = IntPolynomial.x_power_minus_one(n)
    den = IntPolynomial.one()
    for d in divisors(n):
        if d < n:
            den = den * cyclotomic(d)
    return num.exact_div(den)


def psi_by_definition(n: int) -> RationalPolyFraction:
    """The modified cyclotomic rational function prod_{d|n} (1 - x**d)**mu(d).

    Built literally from the divisor product, with Moebius +1 factors in the
    numerator and -1 factors in the denominator, then normalized to lowest
    terms.  For n = 1 this is simply 1 - x.
    """
    _check_positive(n)
    num = IntPolynomial.one()
    den = IntPolynomial.one()
    for d in divisors(n):
        m = mobius(d)
        if m == 1:
            num = num * one_minus_x_power(d)
        elif m == -1:
            den = den * one_minus_x_power(d)
    return RationalPolyFraction(num, den)


def psi_reduced(n: int) -> tuple[IntPolynomial, int]:
    """Closed form of psi_by_definition(n) as (base polynomial, exponent in {-1, +1}).

    For n >= 2 the product collapses to Phi_rad(n) ** mu(rad(n)).  n = 1 is the
    lone exception: the value is 1 - x, which is -Phi_1, returned here with
    exponent +1 and the sign folded into the base.
    """
    _check_positive(n)
    if n == 1:
        return IntPolynomial((1, -1)), 1
    r = radical(n)
    return cyclotomic(r), mobius(r)
