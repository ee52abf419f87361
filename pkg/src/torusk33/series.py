"""Exact truncated power series in x with polynomial coefficients.

The x variable is exponential (the labelled count of ``x^n y^m`` is
``n!`` times the coefficient) and the coefficient variables are ordinary.
Coefficients of x^n are sparse polynomials in one or more ordinary
variables, stored as ``{exponent tuple: Fraction}``; one variable gives the
usual (x, y) series, two give the (x, y, z) series used for crowns.
Everything is exact; there is no floating point here.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

Poly = dict[tuple[int, ...], Fraction]


class SeriesError(ArithmeticError):
    pass


class NonNilpotentInner(SeriesError):
    pass


class NonNilpotentInput(SeriesError):
    pass


class IllFormedIntegrand(SeriesError):
    pass


class NonIntegralCount(SeriesError):
    pass


def _padd(a: Poly, b: Poly, scale: Fraction = Fraction(1)) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(i + j for i, j in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


class BivariateSeries:
    """A series ``sum_n p_n(y, ...) x^n`` known through ``x^order_x``."""

    __slots__ = ("order_x", "nvars", "coeffs")

    def __init__(self, order_x: int, coeffs: Iterable[Mapping] | None = None, nvars: int = 1):
        if order_x < 0:
            raise ValueError("order must be nonnegative")
        self.order_x = order_x
        self.nvars = nvars
        cs = [dict() for _ in range(order_x + 1)]
        if coeffs is not None:
            for n, p in enumerate(coeffs):
                if n > order_x:
                    break
                cs[n] = {tuple(e): Fraction(c) for e, c in p.items() if c}
        self.coeffs: list[Poly] = cs

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, order_x: int, nvars: int = 1) -> "BivariateSeries":
        return cls(order_x, nvars=nvars)

    @classmethod
    def from_terms(cls, terms: Mapping, order_x: int, nvars: int = 1) -> "BivariateSeries":
        """``terms`` maps ``(n, m)`` (or ``(n, (m1, m2, ...))``) to a coefficient."""
        s = cls(order_x, nvars=nvars)
        for key, c in terms.items():
            n, e = key
            if isinstance(e, int):
                e = (e,)
            if len(e) != nvars:
                raise ValueError("exponent arity does not match nvars")
            if n <= order_x and c:
                s.coeffs[n][tuple(e)] = s.coeffs[n].get(tuple(e), 0) + Fraction(c)
        return s

    @classmethod
    def monomial(cls, n: int, e, c, order_x: int, nvars: int = 1) -> "BivariateSeries":
        return cls.from_terms({(n, e): c}, order_x, nvars)

    @classmethod
    def one(cls, order_x: int, nvars: int = 1) -> "BivariateSeries":
        return cls.monomial(0, (0,) * nvars, 1, order_x, nvars)

    @classmethod
    def var(cls, i: int, order_x: int, nvars: int = 1) -> "BivariateSeries":
        """The ordinary variable with index ``i`` (0 is y)."""
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls.monomial(0, e, 1, order_x, nvars)

    @classmethod
    def x(cls, order_x: int, nvars: int = 1) -> "BivariateSeries":
        return cls.monomial(1, (0,) * nvars, 1, order_x, nvars)

    # access ---------------------------------------------------------------

    def coefficient(self, n: int, m) -> Fraction:
        if isinstance(m, int):
            m = (m,)
        if n > self.order_x:
            raise IndexError(f"x^{n} beyond truncation order {self.order_x}")
        return self.coeffs[n].get(tuple(m), Fraction(0))

    def labelled_count(self, n: int, m) -> int:
        v = self.coefficient(n, m) * factorial(n)
        if v.denominator != 1:
            raise NonIntegralCount(f"n!*c at ({n}, {m}) is {v}")
        return int(v)

    def terms(self):
        """Nonzero ``(n, exponents, coefficient)`` triples sorted by n then exponents."""
        for n, p in enumerate(self.coeffs):
            for e in sorted(p):
                yield n, e, p[e]

    def counts(self) -> dict[tuple[int, int], int]:
        """Labelled counts ``{(n, m): n! c[n][m]}`` of a single-variable series."""
        if self.nvars != 1:
            raise ValueError("counts are defined for (x, y) series")
        return {(n, e[0]): self.labelled_count(n, e) for n, e, _ in self.terms()}

    def row(self, n: int) -> dict:
        return dict(self.coeffs[n])

    def assert_integral(self, nonnegative: bool = True) -> None:
        for n, e, c in self.terms():
            v = c * factorial(n)
            if v.denominator != 1 or (nonnegative and v < 0):
                raise NonIntegralCount(f"n!*c at ({n}, {e}) is {v}")

    def min_x_degree(self) -> int | None:
        return next((n for n, p in enumerate(self.coeffs) if p), None)

    def is_zero(self) -> bool:
        return self.min_x_degree() is None

    # arithmetic -----------------------------------------------------------

    def _check(self, other: "BivariateSeries") -> int:
        if self.nvars != other.nvars:
            raise ValueError("series have different coefficient rings")
        return min(self.order_x, other.order_x)

    def truncate(self, order_x: int) -> "BivariateSeries":
        return BivariateSeries(min(order_x, self.order_x), self.coeffs, self.nvars)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        N = self._check(other)
        return BivariateSeries(N, [_padd(self.coeffs[n], other.coeffs[n]) for n in range(N + 1)], self.nvars)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        N = self._check(other)
        return BivariateSeries(N, [_padd(self.coeffs[n], other.coeffs[n], Fraction(-1)) for n in range(N + 1)], self.nvars)

    def __neg__(self) -> "BivariateSeries":
        return self.scale(-1)

    def scale(self, q) -> "BivariateSeries":
        q = Fraction(q)
        return BivariateSeries(self.order_x, [{e: c * q for e, c in p.items()} for p in self.coeffs], self.nvars)

    def __mul__(self, other):
        if not isinstance(other, BivariateSeries):
            return self.scale(other)
        N = self._check(other)
        out: list[Poly] = [{} for _ in range(N + 1)]
        for i in range(N + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(N + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = _padd(out[i + j], _pmul(a, b))
        return BivariateSeries(N, out, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        N = self._check(other)
        return all(self.coeffs[n] == other.coeffs[n] for n in range(N + 1))

    def __repr__(self) -> str:
        return f"BivariateSeries(order_x={self.order_x}, terms={sum(len(p) for p in self.coeffs)})"

    def power(self, k: int) -> "BivariateSeries":
        out = BivariateSeries.one(self.order_x, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift_x(self, k: int) -> "BivariateSeries":
        """Multiply by ``x^k``; negative ``k`` divides and lowers the order."""
        if k >= 0:
            return BivariateSeries(self.order_x, [{}] * k + self.coeffs[: self.order_x + 1 - k], self.nvars)
        k = -k
        if any(self.coeffs[n] for n in range(min(k, self.order_x + 1))):
            raise SeriesError(f"series is not divisible by x^{k}")
        if k > self.order_x:
            raise SeriesError("division leaves no known coefficients")
        return BivariateSeries(self.order_x - k, self.coeffs[k:], self.nvars)

    def shift_var(self, i: int, k: int) -> "BivariateSeries":
        """Multiply by the k-th power of ordinary variable ``i`` (k may be negative)."""
        out = []
        for p in self.coeffs:
            q = {}
            for e, c in p.items():
                e2 = list(e)
                e2[i] += k
                if e2[i] < 0:
                    raise SeriesError("negative exponent after division")
                q[tuple(e2)] = c
            out.append(q)
        return BivariateSeries(self.order_x, out, self.nvars)

    # calculus ---------------------------------------------------------------

    def diff_var(self, i: int = 0) -> "BivariateSeries":
        out = []
        for p in self.coeffs:
            q = {}
            for e, c in p.items():
                if e[i]:
                    e2 = list(e)
                    e2[i] -= 1
                    q[tuple(e2)] = c * e[i]
            out.append(q)
        return BivariateSeries(self.order_x, out, self.nvars)

    def diff_y(self) -> "BivariateSeries":
        return self.diff_var(0)

    def integrate_x(self) -> "BivariateSeries":
        """``integral_0^x s(t)/t dt``; ``s`` must have no x^0 term."""
        if self.coeffs[0]:
            raise IllFormedIntegrand("x^0 term present before division by t")
        out = [{}] + [{e: c / n for e, c in self.coeffs[n].items()} for n in range(1, self.order_x + 1)]
        return BivariateSeries(self.order_x, out, self.nvars)

    def log1m(self) -> "BivariateSeries":
        """``-ln(1 - u)`` for ``u`` without x^0 term."""
        if self.coeffs[0]:
            raise NonNilpotentInput("u has a nonzero x^0 coefficient")
        out = BivariateSeries.zero(self.order_x, self.nvars)
        pw = BivariateSeries.one(self.order_x, self.nvars)
        for k in range(1, self.order_x + 1):
            pw = pw * self
            if pw.is_zero():
                break
            out = out + pw.scale(Fraction(1, k))
        return out

    # substitution -----------------------------------------------------------

    def substitute_var(self, i: int, inner: "BivariateSeries") -> "BivariateSeries":
        """Replace ordinary variable ``i`` by ``inner``.

        ``inner`` lives in the same coefficient ring.  Its x^0 coefficient may
        not have a constant term, otherwise the substitution need not converge.
        The result keeps the outer order when ``inner`` is known through
        ``order_x - (lowest x-degree of self)``, which is all that is used.
        """
        if self.nvars != inner.nvars:
            raise ValueError("series have different coefficient rings")
        if inner.coeffs[0].get((0,) * self.nvars):
            raise NonNilpotentInner("inner series has a nonzero constant term")
        lo = self.min_x_degree() or 0
        N = min(self.order_x, inner.order_x + lo)
        top = max((e[i] for p in self.coeffs for e in p), default=0)
        powers = [BivariateSeries.one(N - lo, self.nvars)]
        inner = inner.truncate(N - lo)
        for _ in range(top):
            powers.append(powers[-1] * inner)
        out: list[Poly] = [{} for _ in range(N + 1)]
        for n in range(N + 1):
            for e, c in self.coeffs[n].items():
                rest = tuple(0 if j == i else x for j, x in enumerate(e))
                mono = {rest: c}
                pw = powers[e[i]]
                for k in range(N + 1 - n):
                    if pw.coeffs[k]:
                        out[n + k] = _padd(out[n + k], _pmul(mono, pw.coeffs[k]))
        return BivariateSeries(N, out, self.nvars)

    def substitute_y(self, inner: "BivariateSeries") -> "BivariateSeries":
        return self.substitute_var(0, inner)

    def drop_var(self, i: int) -> "BivariateSeries":
        """Remove ordinary variable ``i``, which must not occur."""
        out = []
        for p in self.coeffs:
            q = {}
            for e, c in p.items():
                if e[i]:
                    raise SeriesError(f"variable {i} still occurs")
                q[e[:i] + e[i + 1:]] = c
            out.append(q)
        return BivariateSeries(self.order_x, out, self.nvars - 1)

    def add_var(self) -> "BivariateSeries":
        """Embed into a ring with one more ordinary variable (appended last)."""
        return BivariateSeries(self.order_x, [{e + (0,): c for e, c in p.items()} for p in self.coeffs], self.nvars + 1)


def mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a * b


def add(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a + b


def scale(a: BivariateSeries, q) -> BivariateSeries:
    return a.scale(q)


def substitute_y(outer: BivariateSeries, inner: BivariateSeries) -> BivariateSeries:
    return outer.substitute_y(inner)


def log1m(u: BivariateSeries) -> BivariateSeries:
    return u.log1m()


def diff_y(s: BivariateSeries) -> BivariateSeries:
    return s.diff_y()


def integrate_x(s: BivariateSeries) -> BivariateSeries:
    return s.integrate_x()
