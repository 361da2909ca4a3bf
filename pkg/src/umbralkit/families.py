"""Named polynomial families, defined by series extraction from their
generating functions, plus the Sheffer pairs they belong to.

Everything here is deliberately independent of the umbral operator engine:
polynomials are read off truncated series, so the identity registry can use
these as one side of a genuine cross-check.

Frobenius-parameter conventions: ``lam=None`` means the symbolic
indeterminate (computation over Q(L)); a Fraction value specializes to Q.
``lam = 1`` is a pole of every Frobenius denominator and is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DivisionByZero, DomainError, EvalPole
from .fields import QL, QQ, LAMBDA, RatFunc
from .series import (
    Poly,
    Series,
    exp_ct,
    falling_factorial,
    log1p_series,
    one_plus_t_pow,
    t_series,
    working_trunc,
)
from .umbral import ShefferPair

FAMILY_NAMES = (
    "bernoulli",
    "euler",
    "frobenius_euler",
    "frobenius_eulerian",
    "narumi",
    "daehee",
    "poisson_charlier",
    "bernoulli_2nd",
)

BESPOKE_TAGS = ("T2", "T3", "T4", "R27", "T6", "P8", "T10", "DAE")


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def gen_binom(c, m: int):
    """Generalized binomial coefficient C(c, m) = c(c-1)...(c-m+1)/m!."""
    if m < 0:
        raise DomainError("generalized binomial needs m >= 0")
    acc = Fraction(1)
    for i in range(m):
        acc = acc * (c - i)
    return acc / factorial(m)


def multinomial(parts) -> int:
    """Multinomial coefficient (sum parts)! / prod parts_i!."""
    total = 0
    acc = 1
    for p in parts:
        total += p
        acc *= comb(total, p)
    return acc


# ---------------------------------------------------------------------------
# field / lambda plumbing
# ---------------------------------------------------------------------------


def _lam_field(lam):
    """(field, lambda element) for symbolic (None) or rational lambda."""
    if lam is None:
        return QL, LAMBDA
    lam = Fraction(lam)
    if lam == 1:
        raise EvalPole("lambda = 1 is excluded for Frobenius families")
    return QQ, lam


# ---------------------------------------------------------------------------
# generating-series building blocks (all cached; Series is immutable)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bern_base(a: int, T: int) -> Series:
    """((e^t - 1)/t)^a over Q."""
    base = (exp_ct(QQ, 1, T + 1) - 1).shift_div(1)
    return base.pow_int(a).truncate(T)


@lru_cache(maxsize=None)
def _euler_base(alpha: int, T: int) -> Series:
    """((e^t + 1)/2)^alpha over Q."""
    base = (exp_ct(QQ, 1, T) + 1) * Fraction(1, 2)
    return base.pow_int(alpha)


@lru_cache(maxsize=None)
def _fe_g(a: int, lam, T: int) -> Series:
    """((e^t - lam)/(1 - lam))^a over Q(L) (lam None) or Q."""
    fld, lam_el = _lam_field(lam)
    base = (exp_ct(fld, 1, T) - lam_el) * (fld.one / (fld.one - lam_el))
    return base.pow_int(a)


@lru_cache(maxsize=None)
def _fte_g(a: int, lam, T: int) -> Series:
    """((e^{(lam-1)t} - lam)/(1 - lam))^a over Q(L) or Q."""
    fld, lam_el = _lam_field(lam)
    base = (exp_ct(fld, lam_el - fld.one, T) - lam_el) * (fld.one / (fld.one - lam_el))
    return base.pow_int(a)


@lru_cache(maxsize=None)
def _narumi_base(a: int, T: int) -> Series:
    """(log(1+t)/t)^a over Q."""
    base = log1p_series(QQ, T + 1).shift_div(1)
    return base.pow_int(a).truncate(T)


@lru_cache(maxsize=None)
def _bern2nd_base(T: int) -> Series:
    """t/log(1+t) over Q."""
    return log1p_series(QQ, T + 1).shift_div(1).inverse().truncate(T)


# ---------------------------------------------------------------------------
# extraction helpers
# ---------------------------------------------------------------------------


def _appell_poly(factor: Series, n: int) -> Poly:
    """P_n(x) = n! sum_j factor[n-j] x^j / j! for GF factor(t) e^{xt}."""
    fld = factor.field
    nfact = factorial(n)
    coeffs = [
        factor.coeffs[n - j] * fld.coerce(Fraction(nfact, factorial(j)))
        for j in range(n + 1)
    ]
    return Poly(fld, coeffs)


def _binomial_kernel_poly(factor: Series, n: int) -> Poly:
    """P_n(x) = n! sum_m factor[n-m] (x)_m / m! for GF factor(t) (1+t)^x."""
    fld = factor.field
    out = Poly(fld)
    nfact = factorial(n)
    for m in range(n + 1):
        c = factor.coeffs[n - m]
        if c:
            out = out + falling_factorial(fld, m) * (
                c * fld.coerce(Fraction(nfact, factorial(m)))
            )
    return out


# ---------------------------------------------------------------------------
# the families
# ---------------------------------------------------------------------------


def bernoulli_poly(a: int, n: int) -> Poly:
    """Bernoulli polynomial of (any integer) order a, degree n, over Q."""
    T = n + 1
    return _appell_poly(_bern_base(-a, T), n)


def bernoulli_value(a: int, n: int, at) -> Fraction:
    """B_n^(a) evaluated at a rational point."""
    return bernoulli_poly(a, n).eval(Fraction(at))


def bernoulli_number(a: int, n: int) -> Fraction:
    """B_n^(a) = B_n^(a)(0) = n! [t^n] (t/(e^t-1))^a."""
    return factorial(n) * _bern_base(-a, n + 1).coeffs[n]


def euler_poly(alpha: int, n: int) -> Poly:
    """Euler polynomial of order alpha, degree n, over Q."""
    return _appell_poly(_euler_base(-alpha, n + 1), n)


def frobenius_euler_poly(a: int, n: int, lam=None) -> Poly:
    """Frobenius-Euler H_n^(a)(x|lam); symbolic over Q(L) when lam is None."""
    return _appell_poly(_fe_g(-a, lam, n + 1), n)


def frobenius_eulerian_poly(a: int, n: int, lam=None) -> Poly:
    """Frobenius-type Eulerian A_n^(a)(x|lam)."""
    return _appell_poly(_fte_g(-a, lam, n + 1), n)


def narumi_poly(a: int, n: int) -> Poly:
    """Narumi polynomial N_n^(a)(x) over Q (note the GF carries n!, not 1/n!...
    precisely: (log(1+t)/t)^a (1+t)^x = sum_n N_n^(a)(x) t^n / n!)."""
    return _binomial_kernel_poly(_narumi_base(a, n + 1), n)


def narumi_value(a: int, n: int, shift=0):
    """N_n^(a)(shift) = n! [t^n] (log(1+t)/t)^a (1+t)^shift.

    ``shift`` may be any field element; rational shifts stay in Q.
    """
    T = n + 1
    base = _narumi_base(a, T)
    if isinstance(shift, RatFunc) and not shift.is_constant():
        base = Series(QL, base.coeffs)
        kernel = one_plus_t_pow(QL, shift, T)
    else:
        shift = Fraction(shift) if not isinstance(shift, RatFunc) else shift.as_rat()
        if not shift:
            return factorial(n) * base.coeffs[n]
        kernel = one_plus_t_pow(QQ, shift, T)
    return factorial(n) * (base * kernel).coeffs[n]


def narumi_number(a: int, n: int) -> Fraction:
    return narumi_value(a, n, 0)


def stirling2(n: int, k: int) -> Fraction:
    """Stirling numbers of the second kind, from (e^t - 1)^k."""
    if k < 0 or k > n:
        return Fraction(0)
    T = n + 1
    s = (exp_ct(QQ, 1, T) - 1).pow_int(k)
    return Fraction(factorial(n), factorial(k)) * s.coeffs[n]


def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling numbers of the first kind: [x^k] (x)_n."""
    if k < 0 or k > n:
        return Fraction(0)
    return falling_factorial(QQ, n).coefficient(k)


def poisson_charlier(n: int, a, x_eval=None):
    """C_n(x; a) = sum_k C(n,k) (-1)^(n-k) a^(-k) (x)_k; a != 0.

    Returns the polynomial, or its value when ``x_eval`` is given.
    """
    a = Fraction(a)
    if not a:
        raise DivisionByZero("Poisson-Charlier parameter a must be nonzero")
    out = Poly(QQ)
    for k in range(n + 1):
        c = Fraction(binom(n, k)) * (-1) ** (n - k) * a ** (-k)
        out = out + falling_factorial(QQ, k) * c
    if x_eval is None:
        return out
    return out.eval(Fraction(x_eval))


def bernoulli_2nd(n: int, x_shift=0) -> Fraction:
    """Bernoulli polynomial of the second kind value b_n(x_shift)."""
    T = n + 1
    base = _bern2nd_base(T)
    shift = Fraction(x_shift)
    if shift:
        base = base * one_plus_t_pow(QQ, shift, T)
    return factorial(n) * base.coeffs[n]


# ---------------------------------------------------------------------------
# Sheffer pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its order and parameters.

    ``params`` keys: ``lam`` (None for symbolic, Fraction otherwise) for the
    Frobenius and Daehee families, ``a`` for Poisson-Charlier.
    """

    name: str
    order: int = 1
    params: tuple = ()

    def param(self, key, default=None):
        return dict(self.params).get(key, default)

    @staticmethod
    def make(name: str, order: int = 1, **params) -> "FamilySpec":
        return FamilySpec(name, order, tuple(sorted(params.items())))


def catalog_pair(spec: FamilySpec, T: int | None = None, n_max: int = 10) -> ShefferPair:
    """The classical (g, f) Sheffer pair of a named family."""
    if T is None:
        T = working_trunc(n_max)
    name = spec.name
    a = spec.order
    if name not in FAMILY_NAMES:
        raise DomainError(f"unknown family {name!r}")
    if name == "bernoulli":
        return ShefferPair(_bern_base(a, T), t_series(QQ, T))
    if name == "euler":
        return ShefferPair(_euler_base(a, T), t_series(QQ, T))
    if name == "frobenius_euler":
        fld, _ = _lam_field(spec.param("lam"))
        return ShefferPair(_fe_g(a, spec.param("lam"), T), t_series(fld, T))
    if name == "frobenius_eulerian":
        fld, _ = _lam_field(spec.param("lam"))
        return ShefferPair(_fte_g(a, spec.param("lam"), T), t_series(fld, T))
    if name == "narumi":
        return ShefferPair(_bern_base(a, T), exp_ct(QQ, 1, T) - 1)
    if name == "daehee":
        fld, lam_el = _lam_field(spec.param("lam"))
        e = exp_ct(fld, 1, T)
        g = ((e - lam_el) * (fld.one / (fld.one - lam_el))).inverse()
        f = (e - 1) / (e + 1)
        return ShefferPair(g, f.truncate(T))
    if name == "poisson_charlier":
        pa = Fraction(spec.param("a", 1))
        if not pa:
            raise DivisionByZero("Poisson-Charlier parameter a must be nonzero")
        de = (exp_ct(QQ, 1, T) - 1) * pa
        return ShefferPair(de.exp(), de)
    # bernoulli_2nd
    return ShefferPair(_bern_base(-1, T), exp_ct(QQ, 1, T) - 1)


def family_polys(name: str, order: int, n_max: int, lam=None, a=None) -> list:
    """P_0 .. P_{n_max} for a named family, straight from its generating
    function (the Daehee family, defined only by its pair, goes through the
    generating-function Sheffer construction)."""
    if name not in FAMILY_NAMES:
        raise DomainError(f"unknown family {name!r}")
    T = n_max + 1
    if name == "bernoulli":
        return [bernoulli_poly(order, n) for n in range(n_max + 1)]
    if name == "euler":
        return [euler_poly(order, n) for n in range(n_max + 1)]
    if name == "frobenius_euler":
        return [frobenius_euler_poly(order, n, lam) for n in range(n_max + 1)]
    if name == "frobenius_eulerian":
        return [frobenius_eulerian_poly(order, n, lam) for n in range(n_max + 1)]
    if name == "narumi":
        base = _narumi_base(order, T)
        return [_binomial_kernel_poly(base, n) for n in range(n_max + 1)]
    if name == "bernoulli_2nd":
        base = _bern2nd_base(T)
        return [_binomial_kernel_poly(base, n) for n in range(n_max + 1)]
    if name == "poisson_charlier":
        pa = Fraction(a if a is not None else 1)
        return [poisson_charlier(n, pa) for n in range(n_max + 1)]
    # daehee: defined by its Sheffer pair
    from .umbral import sheffer_gf

    spec = FamilySpec.make("daehee", order, lam=lam)
    return sheffer_gf(catalog_pair(spec, T=n_max + 1), n_max)


def bespoke_pair(tag: str, T: int, order: int = 1, b=None, c=None, m=None, lam=None) -> ShefferPair:
    """The parameterized pairs behind the registry identities (tags as in
    the identities module).

    Built with internal margin so both members come out truncated at exactly T.
    """
    Tw = T + 2
    if tag in ("T2", "T6"):
        fld, _ = _lam_field(lam)
        g = _fe_g(order, lam, Tw)
    elif tag in ("P8", "T10", "DAE"):
        fld, _ = _lam_field(lam)
        g = _fte_g(order, lam, Tw) if tag != "DAE" else None
    elif tag == "T4":
        fld = QQ
        g = _euler_base(order, Tw)
    elif tag in ("T3", "R27"):
        fld = QQ
        g = _bern_base(order, Tw)
    else:
        raise DomainError(f"unknown bespoke pair {tag!r}")

    if tag == "T2":
        if b is None or not Fraction(b):
            raise DomainError("T2 requires b != 0")
        base = (exp_ct(fld, fld.coerce(Fraction(b)), Tw) - 1).shift_div(1)
        f = base.inverse().mul_t(1)
    elif tag == "T3":
        if c is None or not Fraction(c):
            raise DomainError("T3 requires c != 0")
        bq = Fraction(b if b is not None else 0)
        base = (exp_ct(fld, Fraction(c), Tw) - 1).shift_div(1)
        f = base.inverse() * exp_ct(fld, bq, Tw - 1)
        f = f.mul_t(1)
    elif tag == "T4":
        f = log1p_series(fld, Tw).shift_div(1).inverse().mul_t(1)
    elif tag == "R27":
        f = log1p_series(fld, Tw)
    elif tag == "T6":
        if c is None or not Fraction(c):
            raise DomainError("T6 requires c != 0")
        f = log1p_series(fld, Tw) * one_plus_t_pow(fld, fld.coerce(-Fraction(c)), Tw)
    elif tag == "P8":
        if c is None or not Fraction(c):
            raise DomainError("P8 requires c != 0")
        base = log1p_series(fld, Tw).shift_div(1).inverse()
        f = (base * one_plus_t_pow(fld, fld.coerce(Fraction(c)), Tw - 1)).mul_t(1)
    elif tag == "T10":
        if b is None or c is None or not Fraction(b) or not Fraction(c):
            raise DomainError("T10 requires b != 0 and c != 0")
        if m is None or int(m) < 0:
            raise DomainError("T10 requires m to be a nonnegative integer")
        lin = Series(fld, [fld.one, fld.coerce(Fraction(b))], trunc=Tw)
        f = exp_ct(fld, fld.coerce(-Fraction(c)), Tw) * lin.pow_int(-int(m))
        f = f.mul_t(1)
    else:  # DAE
        fld, lam_el = _lam_field(lam)
        e = exp_ct(fld, 1, Tw)
        g = ((e - lam_el) * (fld.one / (fld.one - lam_el))).inverse()
        f = (e - 1) / (e + 1)

    return ShefferPair(g.truncate(T), f.truncate(T))
