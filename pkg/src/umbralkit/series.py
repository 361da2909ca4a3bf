"""Truncated formal power series in t and polynomials in x over a field.

A :class:`Series` stores plain Taylor coefficients: ``coeffs[k]`` is the
coefficient of ``t^k``, for ``k = 0 .. T-1`` where ``T`` is the truncation
order.  Binary operations truncate to the shorter operand.  Everything is
exact; there are no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CompositionOrder,
    NotDelta,
    NotInvertible,
    OrderTooLow,
    UnitConstantRequired,
)
from .fields import QQ


def working_trunc(n_max: int) -> int:
    """Default truncation for answers of degree <= n_max: 2*n_max + 2."""
    return 2 * n_max + 2


class Series:
    """Truncated formal power series over a coefficient field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs, trunc: int | None = None):
        coeffs = [field.coerce(c) for c in coeffs]
        if trunc is not None:
            if trunc < 1:
                raise ValueError("truncation order must be >= 1")
            if len(coeffs) < trunc:
                coeffs += [field.zero] * (trunc - len(coeffs))
            else:
                coeffs = coeffs[:trunc]
        elif not coeffs:
            raise ValueError("a series needs at least one stored coefficient")
        self.field = field
        self.coeffs = tuple(coeffs)

    # ------------------------------------------------------------------ basic

    @property
    def trunc(self) -> int:
        return len(self.coeffs)

    def order(self) -> int:
        """Smallest k with a nonvanishing t^k coefficient; T if none."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.trunc

    def coefficient(self, k):
        return self.coeffs[k]

    def truncate(self, T: int) -> "Series":
        if T == self.trunc:
            return self
        return Series(self.field, self.coeffs, trunc=T)

    def is_zero(self) -> bool:
        return self.order() == self.trunc

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def agrees(self, other: "Series", upto: int | None = None) -> bool:
        """Coefficientwise equality modulo t^min(T, upto)."""
        n = min(self.trunc, other.trunc)
        if upto is not None:
            n = min(n, upto)
        return self.coeffs[:n] == other.coeffs[:n]

    # ------------------------------------------------------------------- ring

    def _scalar(self, v):
        try:
            return self.field.coerce(v)
        except TypeError:
            return None

    def __add__(self, other):
        if not isinstance(other, Series):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            out = list(self.coeffs)
            out[0] = out[0] + s
            return Series(self.field, out)
        T = min(self.trunc, other.trunc)
        return Series(self.field, [self.coeffs[k] + other.coeffs[k] for k in range(T)])

    __radd__ = __add__

    def __neg__(self):
        return Series(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Series):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            return self.__add__(-s)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            return Series(self.field, [c * s for c in self.coeffs])
        T = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        zero = self.field.zero
        out = [zero] * T
        for i in range(T):
            ai = a[i]
            if not ai:
                continue
            for j in range(T - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return Series(self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division that tolerates a common zero of order k at t = 0."""
        if not isinstance(other, Series):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            if not s:
                raise NotInvertible("division by zero scalar")
            return self.__mul__(self.field.one / s)
        k = other.order()
        if k == other.trunc:
            raise NotInvertible("division by the zero series")
        if k == 0:
            return self * other.inverse()
        if self.order() < k:
            raise OrderTooLow(
                f"cannot divide a series of order {self.order()} by one of order {k}"
            )
        return self.shift_div(k) * other.shift_div(k).inverse()

    def __rtruediv__(self, other):
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return self.inverse() * s

    # ------------------------------------------------------------- operations

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if not a[0]:
            raise NotInvertible("series has zero constant term")
        T = self.trunc
        inv0 = self.field.one / a[0]
        out = [inv0] + [self.field.zero] * (T - 1)
        for k in range(1, T):
            acc = self.field.zero
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * out[k - j]
            out[k] = -inv0 * acc
        return Series(self.field, out)

    def shift_div(self, k: int) -> "Series":
        """Exact division by t^k; truncation drops by k."""
        if k == 0:
            return self
        if self.order() < k:
            raise OrderTooLow(f"order {self.order()} < shift {k}")
        if self.trunc <= k:
            raise OrderTooLow("truncation too short for the requested shift")
        return Series(self.field, self.coeffs[k:])

    def mul_t(self, k: int = 1) -> "Series":
        """Multiply by t^k, keeping the truncation order."""
        if k >= self.trunc:
            return zero(self.field, self.trunc)
        return Series(self.field, (self.field.zero,) * k + self.coeffs[: self.trunc - k])

    def pow_int(self, n: int) -> "Series":
        """Integer power; negative n needs an invertible base."""
        if n == 0:
            return one(self.field, self.trunc)
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = None
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def compose(self, inner: "Series") -> "Series":
        """outer(inner(t)); inner must have order >= 1."""
        if inner.order() == 0:
            raise CompositionOrder("inner series has a nonzero constant term")
        T = min(self.trunc, inner.trunc)
        inner = inner.truncate(T)
        acc = constant(self.field, self.coeffs[T - 1], T)
        for k in range(T - 2, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def revert(self) -> "Series":
        """Compositional inverse of a delta series (triangular solve).

        The compose round-trip is checked before returning.
        """
        T = self.trunc
        if self.order() != 1 or not self.coeffs[1]:
            raise NotDelta("compositional inverse needs order exactly 1")
        zero, one_ = self.field.zero, self.field.one
        # powers[k] = self^k truncated at T
        powers = [one(self.field, T), self]
        for k in range(2, T):
            powers.append(powers[-1] * self)
        c = [zero] * T
        for m in range(1, T):
            acc = one_ if m == 1 else zero
            for k in range(1, m):
                if c[k]:
                    acc -= c[k] * powers[k].coeffs[m]
            c[m] = acc / powers[m].coeffs[m]
        out = Series(self.field, c)
        if not self.compose(out).agrees(t_series(self.field, T)):
            raise NotDelta("reversion failed its round-trip check")
        return out

    def exp(self) -> "Series":
        """exp(f) for f of order >= 1 (or the zero series)."""
        if self.order() == 0:
            raise CompositionOrder("exp needs a zero constant term")
        T = self.trunc
        # E' = f' E, solved degree by degree
        out = [self.field.one] + [self.field.zero] * (T - 1)
        for k in range(1, T):
            acc = self.field.zero
            for j in range(1, k + 1):
                cj = self.coeffs[j]
                if cj:
                    acc += j * cj * out[k - j]
            out[k] = acc / k
        return Series(self.field, out)

    def log(self) -> "Series":
        """log(f) for f with constant term exactly 1."""
        if self.coeffs[0] != self.field.one:
            raise UnitConstantRequired("log needs constant term 1")
        T = self.trunc
        # L' = f'/f, integrated termwise
        fprime = [k * self.coeffs[k] for k in range(1, T)] + [self.field.zero]
        quot = Series(self.field, fprime) * self.inverse()
        out = [self.field.zero] * T
        for k in range(1, T):
            out[k] = quot.coeffs[k - 1] / k
        return Series(self.field, out)

    def pow_field(self, c) -> "Series":
        """u^c for a field-element exponent; u must have constant term 1."""
        if self.coeffs[0] != self.field.one:
            raise UnitConstantRequired("field-exponent power needs constant term 1")
        c = self.field.coerce(c)
        return (self.log() * c).exp()

    # ------------------------------------------------------------- rendering

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c and not (k == 0 and len(parts) == 0 and self.is_zero()):
                continue
            cs = self.field.to_str(c)
            if k == 0:
                parts.append(cs)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                parts.append(f"({cs})*{mono}" if ("/" in cs or " " in cs or cs.startswith("-")) else f"{cs}*{mono}")
        if not parts:
            parts = ["0"]
        return " + ".join(parts) + f" + O(t^{self.trunc})"

    def __repr__(self) -> str:
        return f"Series[{self.field.name}; T={self.trunc}]({', '.join(self.field.to_str(c) for c in self.coeffs)})"


# ---------------------------------------------------------------------- named


def constant(field, c, T: int) -> Series:
    return Series(field, [field.coerce(c)], trunc=T)


def zero(field, T: int) -> Series:
    return Series(field, [], trunc=T)


def one(field, T: int) -> Series:
    return constant(field, field.one, T)


def t_series(field, T: int) -> Series:
    return monomial(field, 1, T)


def monomial(field, k: int, T: int) -> Series:
    out = [field.zero] * T
    if k < T:
        out[k] = field.one
    return Series(field, out)


def exp_ct(field, c, T: int) -> Series:
    """e^{c t}: coefficient of t^k is c^k / k!."""
    c = field.coerce(c)
    out = [field.one]
    fact = Fraction(1)
    acc = field.one
    for k in range(1, T):
        acc = acc * c
        fact *= k
        out.append(acc * field.coerce(Fraction(1, 1) / fact))
    return Series(field, out)


def log1p_series(field, T: int) -> Series:
    """log(1+t): coefficient of t^k is (-1)^(k+1)/k for k >= 1."""
    out = [field.zero]
    for k in range(1, T):
        q = Fraction(1, k) if k % 2 else Fraction(-1, k)
        out.append(field.coerce(q))
    return Series(field, out)


def one_plus_t_pow(field, c, T: int) -> Series:
    """(1+t)^c with generalized binomial coefficients C(c, k)."""
    c = field.coerce(c)
    out = [field.one]
    acc = field.one
    for k in range(1, T):
        acc = acc * (c - (k - 1)) * field.coerce(Fraction(1, k))
        out.append(acc)
    return Series(field, out)


def make_series(kind: str, T: int, field=QQ, c=None, k: int | None = None) -> Series:
    """Dispatch constructor for the named generating-series building blocks."""
    if kind == "exp_ct":
        return exp_ct(field, c if c is not None else 1, T)
    if kind == "log1p":
        return log1p_series(field, T)
    if kind == "monomial":
        return monomial(field, k if k is not None else 1, T)
    if kind == "one_plus_t_pow":
        return one_plus_t_pow(field, c if c is not None else 1, T)
    raise ValueError(f"unknown series kind {kind!r}")


# ---------------------------------------------------------------------- Poly


class Poly:
    """Dense polynomial in x over a field; no trailing zero coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = [field.coerce(c) for c in coeffs]
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    # constructors ----------------------------------------------------------

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, [field.zero, field.one])

    @classmethod
    def monomial(cls, field, n: int, c=1) -> "Poly":
        return cls(field, [field.zero] * n + [field.coerce(c)])

    @classmethod
    def constant(cls, field, c) -> "Poly":
        return cls(field, [field.coerce(c)])

    # structure ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k):
        if k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    # arithmetic ---------------------------------------------------------------

    def _scalar(self, v):
        try:
            return self.field.coerce(v)
        except TypeError:
            return None

    def __add__(self, other):
        if not isinstance(other, Poly):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            other = Poly.constant(self.field, s)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, Poly):
            return self.__add__(-other)
        return self.__add__(-self.field.coerce(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            return Poly(self.field, [c * s for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def mul_by_x(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly(self.field, (self.field.zero,) + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(self.field, [k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, at):
        at = self.field.coerce(at)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift_arg(self, s) -> "Poly":
        """p(x + s)."""
        return self.compose(Poly(self.field, [self.field.coerce(s), self.field.one]))

    def to_field(self, field) -> "Poly":
        return Poly(field, [field.coerce(c) for c in self.coeffs])

    # rendering -----------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = self.field.to_str(c)
            neg = cs.startswith("-") and " " not in cs
            mag = cs[1:] if neg else cs
            if " " in mag:  # a genuine Q(L) coefficient: parenthesize whole
                mag = f"({cs})"
            if k == 0:
                body = mag
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == "1" else f"{mag}*{xs}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly[{self.field.name}]({self})"


def falling_factorial(field, n: int) -> Poly:
    """(x)_n = x (x-1) ... (x-n+1); (x)_0 = 1."""
    out = Poly.constant(field, field.one)
    x = Poly.x(field)
    for i in range(n):
        out = out * (x - field.coerce(i))
    return out
