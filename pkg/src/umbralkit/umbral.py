"""The umbral algebra: functionals, operators, and Sheffer sequences.

A linear functional is just a :class:`~umbralkit.series.Series` (the
classical vector-space isomorphism between functionals and formal power
series), so there is no separate functional type.  Two independent constructions of the
Sheffer sequence for a pair (g, f) are provided:

* :func:`sheffer_gf` expands 1/g(fbar(t)) * e^{y fbar(t)} and reads the
  polynomials off the t-coefficients;
* :func:`sheffer_transfer` evaluates the operator chain
  (1/g(t)) x (t/f(t))^n x^{n-1}.

Their exact agreement is the transfer formula, checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NotDelta, NotInvertible, TruncationTooShort
from .series import Poly, Series


def functional_apply(f: Series, p: Poly):
    """<f(t) | p(x)> = sum_n n! f[n] p_n."""
    if p.degree >= f.trunc:
        raise TruncationTooShort(
            f"functional truncated at {f.trunc} applied to degree {p.degree}"
        )
    acc = f.field.zero
    fact = 1
    for n, pn in enumerate(p.coeffs):
        if n:
            fact *= n
        if pn:
            acc += f.field.coerce(Fraction(fact)) * f.coeffs[n] * pn
    return acc

def operator_apply(f: Series, p: Poly) -> Poly:
    """f(t) p(x) = sum_k f[k] p^(k)(x); t^k acts as d^k/dx^k."""
    if p.degree >= f.trunc:
        raise TruncationTooShort(
            f"operator truncated at {f.trunc} applied to degree {p.degree}"
        )
    out = Poly(p.field)
    deriv = p
    for k in range(0, p.degree + 1):
        ck = f.coeffs[k]
        if ck:
            out = out + deriv * ck
        deriv = deriv.derivative()
    return out


@dataclass(frozen=True)
class ShefferPair:
    """An invertible series g and a delta series f over one field."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.field is not self.f.field:
            raise ValueError("g and f must share a coefficient field")
        if self.g.order() != 0:
            raise NotInvertible("g must be an invertible series (order 0)")
        if self.f.order() != 1 or not self.f.coeffs[1]:
            raise NotDelta("f must be a delta series (order exactly 1)")

    @property
    def field(self):
        return self.g.field

    @property
    def trunc(self) -> int:
        return min(self.g.trunc, self.f.trunc)


def sheffer_gf(pair: ShefferPair, n_max: int) -> list[Poly]:
    """S_0 .. S_{n_max} from the generating-function route.

    The y^j coefficient of S_n is (n!/j!) [t^n] fbar(t)^j / g(fbar(t)).
    """
    T = pair.trunc
    if T < n_max + 1:
        raise TruncationTooShort(f"need truncation >= {n_max + 1}, have {T}")
    field = pair.field
    fbar = pair.f.revert()
    ginv = pair.g.compose(fbar).inverse()
    # cols[j] = fbar^j / g(fbar)
    acc = ginv
    cols = [acc]
    for _ in range(n_max):
        acc = acc * fbar
        cols.append(acc)
    fact = [Fraction(1)] * (n_max + 1)
    for k in range(1, n_max + 1):
        fact[k] = fact[k - 1] * k
    polys = []
    for n in range(n_max + 1):
        coeffs = [
            field.coerce(fact[n] / fact[j]) * cols[j].coeffs[n] for j in range(n + 1)
        ]
        polys.append(Poly(field, coeffs))
    return polys


def _transfer_step(ginv: Series, q: Series, n: int) -> Poly:
    """(1/g) x q x^{n-1} for q = (t/f)^n, evaluated right to left."""
    p = operator_apply(q, Poly.monomial(ginv.field, n - 1))
    p = p.mul_by_x()
    return operator_apply(ginv, p)


def sheffer_transfer(pair: ShefferPair, n: int) -> Poly:
    """S_n(x) by the operator route (1/g) x (t/f)^n x^{n-1}; n >= 1 only."""
    if n < 1:
        raise DomainError("the transfer route is stated for n >= 1 only")
    if pair.trunc < 2 * n:
        raise TruncationTooShort(f"need truncation >= {2 * n}, have {pair.trunc}")
    t_over_f = pair.f.shift_div(1).inverse()
    return _transfer_step(pair.g.inverse(), t_over_f.pow_int(n), n)


def sheffer_transfer_all(pair: ShefferPair, n_max: int) -> list[Poly]:
    """[S_1 .. S_{n_max}] by the operator route, sharing the inversions."""
    if n_max < 1:
        raise DomainError("the transfer route is stated for n >= 1 only")
    if pair.trunc < 2 * n_max:
        raise TruncationTooShort(f"need truncation >= {2 * n_max}, have {pair.trunc}")
    ginv = pair.g.inverse()
    t_over_f = pair.f.shift_div(1).inverse()
    out = []
    q = t_over_f
    for n in range(1, n_max + 1):
        out.append(_transfer_step(ginv, q, n))
        if n < n_max:
            q = q * t_over_f
    return out


def orthogonality_failure(pair: ShefferPair, polys: list[Poly], n_max: int):
    """First (n, k, value) with <g f^k | S_n> != n! delta_{n,k}, or None."""
    field = pair.field
    fact = Fraction(1)
    facts = [Fraction(1)]
    for n in range(1, n_max + 1):
        fact *= n
        facts.append(fact)
    acc = pair.g
    for k in range(n_max + 1):
        for n in range(n_max + 1):
            value = functional_apply(acc, polys[n])
            want = field.coerce(facts[n]) if n == k else field.zero
            if value != want:
                return (n, k, value)
        acc = acc * pair.f
    return None


def orthogonality_check(pair: ShefferPair, polys: list[Poly], n_max: int) -> bool:
    """True iff polys is the Sheffer sequence of the pair up to n_max."""
    return orthogonality_failure(pair, polys, n_max) is None
