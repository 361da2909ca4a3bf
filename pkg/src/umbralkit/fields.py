"""Exact coefficient fields: arbitrary-precision rationals and Q(L).

``Rat`` is the stdlib ``fractions.Fraction`` (already canonical: reduced,
positive denominator).  ``RatFunc`` is the field of rational functions in
one indeterminate ``L`` over Q, kept in canonical form (gcd-reduced, monic
denominator) so equality is plain structural comparison.

Internally a RatFunc is a reduced rational scale times a ratio of primitive
integer polynomials with positive leading coefficients; polynomial work
stays in machine/big ints and only the scale pays Fraction overhead.  The
public ``num``/``den`` views are the canonical monic-denominator form over
Q.

Every series/polynomial in this package is parameterized by a field object
(``QQ`` or ``QL``) that knows how to coerce scalars and render elements.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import DivisionByZero, EvalPole

Rat = Fraction

__all__ = [
    "Rat",
    "RatFunc",
    "LAMBDA",
    "QQ",
    "QL",
    "RationalField",
    "LambdaField",
    "rat",
    "rat_str",
]


def rat(value, den=None) -> Fraction:
    """Build a Fraction from ints, strings like ``"3/4"``, or a pair."""
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def rat_str(q: Fraction) -> str:
    """Canonical rendering: ``p/q``, or just ``p`` when q = 1."""
    return str(q)


# ---------------------------------------------------------------------------
# primitive integer polynomials in L, as tuples (ascending powers)
# ---------------------------------------------------------------------------


def _ztrim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ztrim(out)


def _zmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _zscale(a, s: int):
    if not s:
        return ()
    return tuple(x * s for x in a)


def _zcontent(a) -> int:
    g = 0
    for v in a:
        g = _int_gcd(g, v if v >= 0 else -v)
        if g == 1:
            break
    return g


def _zprimitive(a):
    """(content, primitive part with positive leading coefficient)."""
    if not a:
        return 0, ()
    g = _zcontent(a)
    if a[-1] < 0:
        g = -g
    if g != 1:
        return g, tuple(v // g for v in a)
    return g, tuple(a)


def _zexact_div(a, b):
    """Exact division of integer polynomials (remainder known to be zero)."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if not a:
        return ()
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = r[i + db] // lb
        q[i] = c
        if c:
            for j in range(db + 1):
                r[i + j] -= c * b[j]
    return _ztrim(q)


def _zeval(a, x: Fraction):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _zprem_primitive(f, g):
    """Primitive part of the pseudo-remainder of f mod g (both integer)."""
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    while len(r) - 1 >= dg:
        dr = len(r) - 1
        lr = r[-1]
        shift = dr - dg
        r = [c * lg for c in r]
        for i, gc in enumerate(g):
            r[shift + i] -= lr * gc
        del r[dr:]
        while r and not r[-1]:
            r.pop()
        if not r:
            return ()
    return _zprimitive(r)[1]


def _zgcd(f, g):
    """gcd of integer polynomials, primitive with positive leading coeff."""
    if not f:
        return _zprimitive(g)[1]
    if not g:
        return _zprimitive(f)[1]
    if len(f) == 1 or len(g) == 1:
        return (1,)
    f = _zprimitive(f)[1]
    g = _zprimitive(g)[1]
    while g:
        f, g = g, _zprem_primitive(f, g)
    return f


def _zpstr(coeffs_q, var: str = "L") -> str:
    """Descending-power rendering of a Q-coefficient tuple."""
    if not coeffs_q:
        return "0"
    parts = []
    for k in range(len(coeffs_q) - 1, -1, -1):
        c = coeffs_q[k]
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = str(mag)
        else:
            x = var if k == 1 else f"{var}^{k}"
            body = x if mag == 1 else f"{mag}*{x}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------


class RatFunc:
    """An element of Q(L), canonical and immutable.

    Value = ``scale * N / D`` with N, D primitive integer polynomials with
    positive leading coefficients and gcd 1; ``scale`` a reduced Fraction.
    The public ``num``/``den`` are the equivalent reduced Q-polynomials
    with monic denominator.
    """

    __slots__ = ("scale", "_n", "_d")

    def __init__(self, num=0, den=1):
        sn, n = _as_zpoly(num)
        sd, d = _as_zpoly(den)
        if not d:
            raise DivisionByZero("zero denominator in Q(L)")
        if not n:
            self._become(Fraction(0), (), (1,))
            return
        g = _zgcd(n, d)
        if len(g) > 1:
            n = _zexact_div(n, g)
            d = _zexact_div(d, g)
        self._become(sn / sd, n, d)

    def _become(self, scale, n, d):
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_d", d)

    @classmethod
    def _raw(cls, scale: Fraction, n, d) -> "RatFunc":
        obj = object.__new__(cls)
        obj._become(scale, n, d)
        return obj

    @classmethod
    def from_rat(cls, q) -> "RatFunc":
        q = Fraction(q)
        if not q:
            return _RF_ZERO
        return cls._raw(q, (1,), (1,))

    # views -------------------------------------------------------------------

    @property
    def num(self):
        """Numerator over Q in the monic-denominator canonical form."""
        if not self._n:
            return ()
        s = self.scale / self._d[-1]
        return tuple(c * s for c in self._n)

    @property
    def den(self):
        """Monic denominator over Q."""
        lc = self._d[-1]
        if lc == 1:
            return tuple(Fraction(c) for c in self._d)
        return tuple(Fraction(c, lc) for c in self._d)

    # predicates ---------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._n)

    def is_constant(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def as_rat(self) -> Fraction:
        if not self._n:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self.scale * self._n[0] / self._d[0]

    # arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._n:
            return other
        if not other._n:
            return self
        pa, qa = self.scale.numerator, self.scale.denominator
        pb, qb = other.scale.numerator, other.scale.denominator
        da, db = self._d, other._d
        if da == db:
            num = _zadd(_zscale(self._n, pa * qb), _zscale(other._n, pb * qa))
            if not num:
                return _RF_ZERO
            den = da
        else:
            g = _zgcd(da, db)
            if len(g) > 1:
                da_r = _zexact_div(da, g)
                db_r = _zexact_div(db, g)
            else:
                da_r, db_r = da, db
            num = _zadd(
                _zscale(_zmul(self._n, db_r), pa * qb),
                _zscale(_zmul(other._n, da_r), pb * qa),
            )
            if not num:
                return _RF_ZERO
            den = _zmul(da, db_r)
        cont, num = _zprimitive(num)
        dcont, den = _zprimitive(den)
        g2 = _zgcd(num, den)
        if len(g2) > 1:
            num = _zexact_div(num, g2)
            den = _zexact_div(den, g2)
        return RatFunc._raw(Fraction(cont, qa * qb * dcont), num, den)

    __radd__ = __add__

    def __neg__(self):
        if not self._n:
            return self
        return RatFunc._raw(-self.scale, self._n, self._d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.__add__(-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other.__add__(-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._n or not other._n:
            return _RF_ZERO
        na, da = self._n, self._d
        nb, db = other._n, other._d
        g1 = _zgcd(na, db)
        if len(g1) > 1:
            na = _zexact_div(na, g1)
            db = _zexact_div(db, g1)
        g2 = _zgcd(nb, da)
        if len(g2) > 1:
            nb = _zexact_div(nb, g2)
            da = _zexact_div(da, g2)
        return RatFunc._raw(self.scale * other.scale, _zmul(na, nb), _zmul(da, db))

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if not self._n:
            raise DivisionByZero("division by zero in Q(L)")
        # N always has positive lead; flipping keeps both leads positive
        return RatFunc._raw(Fraction(1) / self.scale, self._d, self._n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.__mul__(other.reciprocal())

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other.__mul__(self.reciprocal())

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            base = self.reciprocal()
            n = -n
        else:
            base = self
        out = _RF_ONE
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # comparison / hashing --------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (
            self.scale == other.scale and self._n == other._n and self._d == other._d
        )

    def __hash__(self):
        if self.is_constant():
            return hash(self.as_rat())
        return hash((self.scale, self._n, self._d))

    # evaluation / rendering --------------------------------------------------------

    def evaluate(self, lam0) -> Fraction:
        """Specialize L to a rational; raises EvalPole at denominator roots."""
        lam0 = Fraction(lam0)
        dv = _zeval(self._d, lam0)
        if not dv:
            raise EvalPole(f"pole of {self} at L = {lam0}")
        return self.scale * _zeval(self._n, lam0) / dv

    def __str__(self) -> str:
        num = self.num
        if self._d == (1,):
            return _zpstr(num)
        return f"({_zpstr(num)})/({_zpstr(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _as_zpoly(v):
    """(rational scale, primitive int tuple) from assorted inputs."""
    if isinstance(v, RatFunc):
        if len(v._d) != 1:
            raise ValueError("nested RatFunc with non-unit denominator")
        return v.scale / v._d[0], v._n
    if isinstance(v, (int, Fraction)):
        q = Fraction(v)
        if not q:
            return Fraction(1), ()
        return q, (1,)
    if isinstance(v, (tuple, list)):
        qs = [Fraction(c) for c in v]
        while qs and not qs[-1]:
            qs.pop()
        if not qs:
            return Fraction(1), ()
        den = 1
        for c in qs:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        ints = [int(c * den) for c in qs]
        cont, prim = _zprimitive(ints)
        return Fraction(cont, den), prim
    raise TypeError(f"cannot build polynomial from {type(v).__name__}")


def _coerce(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)):
        return RatFunc.from_rat(v)
    return NotImplemented


_RF_ZERO = RatFunc._raw(Fraction(0), (), (1,))
_RF_ONE = RatFunc._raw(Fraction(1), (1,), (1,))

LAMBDA = RatFunc._raw(Fraction(1), (0, 1), (1,))


# ---------------------------------------------------------------------------
# field objects
# ---------------------------------------------------------------------------


class RationalField:
    """Q with Fraction elements."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, RatFunc) and v.is_constant():
            return v.as_rat()
        raise TypeError(f"cannot coerce {v!r} into Q")

    def to_str(self, v) -> str:
        return rat_str(v)

    def __repr__(self):
        return "QQ"


class LambdaField:
    """Q(L) with RatFunc elements."""

    name = "Q(L)"
    zero = _RF_ZERO
    one = _RF_ONE
    lam = LAMBDA

    def coerce(self, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)):
            return RatFunc.from_rat(v)
        raise TypeError(f"cannot coerce {v!r} into Q(L)")

    def to_str(self, v) -> str:
        return str(v)

    def __repr__(self):
        return "QL"


QQ = RationalField()
QL = LambdaField()
