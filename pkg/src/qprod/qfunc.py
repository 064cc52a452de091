"""Working-precision numerics: q-Pochhammer, q-gamma, classical gamma.

Precision is explicit everywhere.  Each public function takes a Precision and
does its work inside a private mpmath context carrying digits + guard decimal
digits, so there is no global precision state and identical inputs at an
identical Precision give bit-identical results.

q is restricted to real 0 < q < 1; arguments x may be complex.  q**x always
means exp(x * log q) with the real (principal) logarithm of q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .numtheory import ArithValue

__all__ = [
    "DEFAULT_PRECISION",
    "INFINITY",
    "JACKSON_IDS",
    "Precision",
    "QParam",
    "SingularArgumentError",
    "context",
    "gamma_classical",
    "gamma_ctx",
    "hp_complex",
    "hp_real",
    "hp_str",
    "jackson_value",
    "parse_number",
    "qgamma",
    "qgamma_ctx",
    "qpochhammer",
    "qpoch_inf_ctx",
    "to_hp",
    "von_mangoldt_number",
]

INFINITY = math.inf


class SingularArgumentError(ArithmeticError):
    """A gamma-type function was evaluated at (or within working epsilon of) a pole."""


@dataclass(frozen=True)
class Precision:
    """Target decimal digits plus guard digits actually carried while computing."""

    digits: int = 50
    guard: int = 10

    def __post_init__(self):
        if not isinstance(self.digits, int) or isinstance(self.digits, bool) or self.digits < 10:
            raise ValueError(f"digits must be an integer >= 10, got {self.digits!r}")
        if not isinstance(self.guard, int) or isinstance(self.guard, bool) or self.guard < 0:
            raise ValueError(f"guard must be a non-negative integer, got {self.guard!r}")

    @property
    def workdps(self) -> int:
        return self.digits + self.guard


DEFAULT_PRECISION = Precision()


def context(prec: Precision = DEFAULT_PRECISION):
    """A fresh mpmath context with prec.digits + prec.guard working digits."""
    ctx = mpmath.mp.clone()
    ctx.dps = prec.workdps
    return ctx


# ---------------------------------------------------------------------------
# Value construction and serialization

_EXP_PI_LITERALS = {"e^-pi": 1, "e^-2pi": 2, "e^-4pi": 4, "e^-8pi": 8}


def parse_number(text: str, ctx):
    """Parse a decimal string, optionally complex ("0.25+0.25i"), in ctx.

    The exponential literals e^-pi, e^-2pi, e^-4pi, e^-8pi are accepted and
    evaluated at the context's working precision.
    """
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty numeric string")
    if t in _EXP_PI_LITERALS:
        return ctx.exp(-_EXP_PI_LITERALS[t] * ctx.pi)
    if t[-1] in "ij":
        core = t[:-1]
        for pos in range(len(core) - 1, 0, -1):
            if core[pos] in "+-" and core[pos - 1] not in "eE+-":
                re_s, im_s = core[:pos], core[pos:]
                if im_s in ("+", "-"):
                    im_s += "1"
                return ctx.mpc(ctx.mpf(re_s), ctx.mpf(im_s))
        if core in ("", "+", "-"):
            core += "1"
        return ctx.mpc(0, ctx.mpf(core))
    return ctx.mpf(t)


def to_hp(value, ctx):
    """Convert to an mpf/mpc in ctx, rejecting NaN and infinities."""
    if isinstance(value, str):
        v = parse_number(value, ctx)
    elif isinstance(value, Fraction):
        v = ctx.mpf(value.numerator) / value.denominator
    elif isinstance(value, complex):
        v = ctx.mpc(value.real, value.imag)
    else:
        try:
            v = ctx.convert(value)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"cannot interpret {value!r} as a number") from exc
    if not ctx.isfinite(v):
        raise ValueError(f"non-finite value {value!r} rejected")
    return v


def hp_real(value, prec: Precision = DEFAULT_PRECISION):
    """A finite real at working precision; complex inputs must have zero imag part."""
    ctx = context(prec)
    v = to_hp(value, ctx)
    if isinstance(v, ctx.mpc):
        if v.imag != 0:
            raise ValueError(f"{value!r} is not real")
        v = v.real
    return v


def hp_complex(value, prec: Precision = DEFAULT_PRECISION):
    """A finite real or complex value at working precision."""
    return to_hp(value, context(prec))


def hp_str(value, digits: int = DEFAULT_PRECISION.digits) -> str:
    """Decimal-string form with the requested digit count ("a+bi" when complex)."""
    if hasattr(value, "imag") and value.imag != 0:
        re_s = mpmath.nstr(value.real, digits)
        im_s = mpmath.nstr(abs(value.imag), digits)
        sign = "+" if value.imag >= 0 else "-"
        return f"{re_s}{sign}{im_s}i"
    v = value.real if hasattr(value, "real") else value
    return mpmath.nstr(v, digits)


@dataclass(frozen=True)
class QParam:
    """A validated base q, strictly inside (0, 1) on the real line."""

    q: object  # str, Fraction, float, or mpf; kept as given for exact re-conversion

    def __post_init__(self):
        # validate eagerly at low precision; consumers re-convert per context
        as_q(self.q, context(Precision(10, 0)))

    def at(self, ctx):
        return as_q(self.q, ctx)


def as_q(q, ctx):
    """Convert q to a real in ctx and enforce 0 < q < 1 strictly."""
    if isinstance(q, QParam):
        q = q.q
    v = to_hp(q, ctx)
    if isinstance(v, ctx.mpc):
        if v.imag != 0:
            raise ValueError(f"q must be real, got {q!r}")
        v = v.real
    if not (0 < v < 1):
        raise ValueError(f"q must satisfy 0 < q < 1, got {q!r}")
    return v


# ---------------------------------------------------------------------------
# q-Pochhammer


def qpoch_inf_ctx(a, q, ctx, pole_eps=None):
    """(a; q)_inf inside an existing context.

    Truncates at the smallest N with |a| q^N / (1-q) below the working
    epsilon 10^-(dps).  When pole_eps is given, any factor 1 - a q^k smaller
    than it in modulus raises SingularArgumentError (used by qgamma, whose
    reciprocal factors must stay away from zero).
    """
    if isinstance(q, ctx.mpc):
        if q.imag != 0:
            raise ValueError("base q must be real with 0 < q < 1")
        q = q.real
    if not 0 < q < 1:
        raise ValueError(f"base q must lie in (0, 1), got {q}")
    eps = ctx.mpf(10) ** (-ctx.dps)
    one_minus_q = 1 - q
    p = ctx.mpf(1)
    t = a
    while not abs(t) / one_minus_q < eps:
        f = 1 - t
        if pole_eps is not None and abs(f) < pole_eps:
            raise SingularArgumentError(
                f"vanishing factor 1 - a*q^k (|factor| < {pole_eps})"
            )
        p *= f
        t *= q
    return p


def qpochhammer(a, q, n=INFINITY, prec: Precision = DEFAULT_PRECISION):
    """(a; q)_n = prod_{k=0}^{n-1} (1 - a q^k); n may be INFINITY.

    The infinite product truncates once the geometric tail bound drops below
    one unit in the last working digit, so results are deterministic for
    fixed inputs and Precision.
    """
    ctx = context(prec)
    qv = as_q(q, ctx)
    av = to_hp(a, ctx)
    if n == INFINITY or n == mpmath.inf:
        return qpoch_inf_ctx(av, qv, ctx)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a non-negative integer or INFINITY, got {n!r}")
    p = ctx.mpf(1)
    t = av
    for _ in range(n):
        p *= 1 - t
        t *= qv
    return p


# ---------------------------------------------------------------------------
# q-gamma


def qgamma_ctx(x, q, ctx):
    """Gamma_q(x) = (1-q)^(1-x) (q;q)_inf / (q^x;q)_inf inside an existing context."""
    lq = ctx.log(q)
    qx = ctx.exp(x * lq)
    pole_eps = ctx.mpf(10) ** (-ctx.dps)
    num = qpoch_inf_ctx(q, q, ctx)
    den = qpoch_inf_ctx(qx, q, ctx, pole_eps=pole_eps)
    return ctx.exp((1 - x) * ctx.log(1 - q)) * num / den


def qgamma(x, q, prec: Precision = DEFAULT_PRECISION):
    """The q-gamma function for 0 < q < 1 and complex x.

    q**x is exp(x log q) with the principal (real) logarithm.  Arguments
    where some 1 - q^(x+n) falls below the working epsilon in modulus are
    reported as SingularArgumentError.
    """
    ctx = context(prec)
    qv = as_q(q, ctx)
    xv = to_hp(x, ctx)
    return qgamma_ctx(xv, qv, ctx)


# ---------------------------------------------------------------------------
# Classical gamma

_BERNOULLI: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli_fraction(m: int) -> Fraction:
    """Exact Bernoulli number B_m (convention B_1 = -1/2), by recurrence."""
    if m < 0:
        raise ValueError("Bernoulli index must be non-negative")
    while len(_BERNOULLI) <= m:
        j = len(_BERNOULLI)
        if j % 2 == 1:
            _BERNOULLI.append(Fraction(0))
            continue
        s = sum(Fraction(math.comb(j + 1, i)) * _BERNOULLI[i] for i in range(j))
        _BERNOULLI.append(-s / (j + 1))
    return _BERNOULLI[m]


def _log10_abs_bernoulli(m: int) -> float:
    """Upper estimate of log10 |B_m| for even m >= 2, via |B_m| ~ 2 m!/(2 pi)^m."""
    return math.log10(2.2) + math.lgamma(m + 1) / math.log(10) - m * math.log10(2 * math.pi)


def _stirling_shift(workdps: int, terms: int) -> float:
    """Radius R such that the truncated series remainder is < 10^-(workdps+2).

    The remainder after the B_2, ..., B_(2J) terms is bounded by
    |B_(2J+2)| / ((2J+2)(2J+1) R^(2J+1)) * sec(arg/2)^(2J+2); shifting keeps
    |arg| <= pi/4, so sec(pi/8) applies.
    """
    m = 2 * terms + 2
    log_b = _log10_abs_bernoulli(m)
    log_sec = m * math.log10(1 / math.cos(math.pi / 8))
    log_denom = math.log10(m * (m - 1))
    return 10 ** ((log_b + log_sec - log_denom + workdps + 2) / (m - 1))


def gamma_ctx(x, ctx):
    """Gamma(x) inside an existing context; raises at non-positive integers."""
    if isinstance(x, ctx.mpc) and x.imag == 0:
        x = x.real
    is_complex = isinstance(x, ctx.mpc)
    re_x = x.real if is_complex else x
    if not is_complex and re_x <= 0 and re_x == ctx.floor(re_x):
        raise SingularArgumentError(f"gamma pole at non-positive integer {ctx.nstr(re_x, 8)}")
    if re_x < ctx.mpf(1) / 2:
        s = ctx.sinpi(x)
        if s == 0:
            raise SingularArgumentError("gamma pole at non-positive integer")
        return ctx.pi / (s * gamma_ctx(1 - x, ctx))

    terms = max(8, int(0.75 * ctx.dps))
    radius = _stirling_shift(ctx.dps, terms)
    im_x = x.imag if is_complex else ctx.mpf(0)
    shift = max(0, math.ceil(radius - float(re_x)), math.ceil(float(abs(im_x)) - float(re_x)))
    w = x + shift
    # log-gamma asymptotic series at w
    lg = (w - ctx.mpf(1) / 2) * ctx.log(w) - w + ctx.log(2 * ctx.pi) / 2
    u = 1 / (w * w)
    pw = 1 / w
    for j in range(1, terms + 1):
        b = bernoulli_fraction(2 * j)
        coeff = ctx.mpf(b.numerator) / b.denominator / ((2 * j) * (2 * j - 1))
        lg += coeff * pw
        pw *= u
    g = ctx.exp(lg)
    for i in range(shift):
        g /= x + i
    return g


def gamma_classical(x, prec: Precision = DEFAULT_PRECISION):
    """Gamma(x) to the target digits, for complex x away from the non-positive integers.

    Uses the asymptotic log-gamma series with exact Bernoulli coefficients;
    the argument is shifted right until the explicit remainder bound for the
    truncated series is below the working epsilon, and Re(x) < 1/2 goes
    through the reflection formula.
    """
    ctx = context(prec)
    return gamma_ctx(to_hp(x, ctx), ctx)


# ---------------------------------------------------------------------------
# Jackson closed-form values

JACKSON_IDS = ("J_QTR_4PI", "J_HALF_4PI", "J_HALF_8PI", "J_QTR_8PI")


def jackson_value(value_id: str, prec: Precision = DEFAULT_PRECISION):
    """Closed-form q-gamma special values at q = e^(-4*pi) and q = e^(-8*pi).

    J_QTR_* are the products Gamma_q(1/4) * Gamma_q(3/4); J_HALF_* are the
    values Gamma_q(1/2).  All reduce to pi and Gamma(1/4).
    """
    ctx = context(prec)
    pi = ctx.pi
    g4 = gamma_ctx(ctx.mpf(1) / 4, ctx)
    two = ctx.mpf(2)
    if value_id == "J_QTR_4PI":
        return (
            ctx.exp(-29 * pi / 8) * (ctx.exp(4 * pi) - 1) * g4**2
            / (two ** (ctx.mpf(23) / 8) * pi ** (ctx.mpf(3) / 2))
        )
    if value_id == "J_HALF_4PI":
        return (
            ctx.exp(-7 * pi / 4) * ctx.sqrt(ctx.exp(4 * pi) - 1) * g4
            / (two ** (ctx.mpf(7) / 4) * pi ** (ctx.mpf(3) / 4))
        )
    if value_id == "J_HALF_8PI":
        return (
            ctx.exp(-7 * pi / 2) * ctx.sqrt(ctx.exp(8 * pi) - 1) * g4
            / (two ** (ctx.mpf(9) / 4) * pi ** (ctx.mpf(3) / 4) * ctx.sqrt(1 + ctx.sqrt(two)))
        )
    if value_id == "J_QTR_8PI":
        return (
            ctx.exp(-29 * pi / 4) * (ctx.exp(8 * pi) - 1) * g4**2
            / (16 * pi ** (ctx.mpf(3) / 2) * ctx.sqrt(1 + ctx.sqrt(two)))
        )
    raise ValueError(f"unknown Jackson value id {value_id!r}; expected one of {JACKSON_IDS}")


def von_mangoldt_number(value: ArithValue, prec: Precision = DEFAULT_PRECISION):
    """Numeric value of a von Mangoldt ArithValue: log p for p^a, else 0."""
    ctx = context(prec)
    if value.kind == "prime-power-log":
        return ctx.log(value.prime)
    return ctx.mpf(value.value)
