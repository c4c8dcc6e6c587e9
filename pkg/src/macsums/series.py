"""Exact truncated power series in one variable q.

A Series stores the coefficients of q^0..q^N for an explicit truncation
order N.  Coefficients are exact rationals (Python int, or Fraction when a
value is not integral); nothing is ever rounded.  Binary operations
truncate to the smaller operand order, and no operation silently extends a
series beyond the coefficients it was constructed with.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _norm(c):
    # collapse integral Fractions so equality stays structural
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _is_exact_scalar(c):
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


class Series:
    """Coefficient prefix of a formal power series, with exact arithmetic."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [_norm(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than order allows; truncate explicitly")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, order):
        return cls([0] * (order + 1), order)

    @classmethod
    def one(cls, order):
        c = [0] * (order + 1)
        c[0] = 1
        return cls(c, order)

    @classmethod
    def monomial(cls, coeff, exp, order):
        c = [0] * (order + 1)
        if 0 <= exp <= order:
            c[exp] = coeff
        return cls(c, order)

    # ------------------------------------------------------------------
    # inspection

    def __getitem__(self, n):
        return self.coeffs[n]

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def valuation(self):
        """Lowest exponent with a nonzero coefficient, or None for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def agrees(self, other, upto=None):
        """True if coefficients match for exponents 0..upto (default: min order)."""
        return self.first_mismatch(other, upto) is None

    def first_mismatch(self, other, upto=None):
        n = min(self.order, other.order)
        if upto is not None:
            if upto > n:
                raise ValueError("comparison beyond truncation order")
            n = upto
        a, b = self.coeffs, other.coeffs
        for i in range(n + 1):
            if a[i] != b[i]:
                return i
        return None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*q^{i}" if i else f"{c}")
            if len(terms) >= 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"Series({body}; order={self.order})"

    # ------------------------------------------------------------------
    # truncation and shifts (always explicit)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a series by truncation")
        return Series(self.coeffs[: order + 1], order)

    def shift(self, k):
        """Multiply by q^k; order is preserved, the top k coefficients drop."""
        if k < 0:
            raise ValueError("negative shifts would leave the power-series ring")
        if k == 0:
            return self
        n = self.order
        if k > n:
            return Series.zero(n)
        return Series([0] * k + self.coeffs[: n + 1 - k], n)

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other):
        if _is_exact_scalar(other):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return Series(c, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return Series([a[i] + b[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other):
        if _is_exact_scalar(other):
            return self.__add__(-other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return Series([a[i] - b[i] for i in range(n + 1)], n)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if _is_exact_scalar(other):
            if other == 0:
                return Series.zero(self.order)
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a = self.coeffs
        b = other.coeffs
        # run the sparser operand on the outside
        na = sum(1 for c in a[: n + 1] if c)
        nb = sum(1 for c in b[: n + 1] if c)
        if nb < na:
            a, b = b, a
        out = [0] * (n + 1)
        for i in range(n + 1):
            c = a[i]
            if not c:
                continue
            for j, d in enumerate(b[: n - i + 1]):
                if d:
                    out[i + j] += c * d
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("series powers take a nonnegative integer exponent")
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def invert(self):
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        n = self.order
        if a[0] == 0:
            raise ZeroDivisionError("non-unit series: constant term is zero")
        inv0 = _norm(Fraction(1) / Fraction(a[0]))
        tail = [(i, c) for i, c in enumerate(a[1 : n + 1], 1) if c]
        out = [inv0]
        for m in range(1, n + 1):
            acc = 0
            for i, c in tail:
                if i > m:
                    break
                acc += c * out[m - i]
            out.append(_norm(-acc * inv0) if acc else 0)
        return Series(out, n)

    def q_derivative(self):
        """Apply q*d/dq: the coefficient of q^n becomes n times itself."""
        return Series([i * c for i, c in enumerate(self.coeffs)], self.order)

    # ------------------------------------------------------------------

    def reduce(self, p):
        """Reduce coefficients modulo the odd prime p, returning a ModSeries."""
        return ModSeries.from_series(self, p)


def q_derivative(a: Series) -> Series:
    return a.q_derivative()


def geometric_pow(k: int, r: int, order: int) -> Series:
    """Series for 1/(1-q^k)^r: the coefficient of q^(k*m) is C(m+r-1, r-1)."""
    if k < 1 or r < 1:
        raise ValueError("geometric_pow needs k >= 1 and r >= 1")
    out = [0] * (order + 1)
    for m in range(order // k + 1):
        out[k * m] = comb(m + r - 1, r - 1)
    return Series(out, order)


def euler_function(order: int) -> Series:
    """Product of (1-q^k) for k >= 1, via the pentagonal number expansion."""
    out = [0] * (order + 1)
    out[0] = 1
    m = 1
    while True:
        g = m * (3 * m - 1) // 2
        if g > order:
            break
        s = -1 if m % 2 else 1
        out[g] += s
        g2 = m * (3 * m + 1) // 2
        if g2 <= order:
            out[g2] += s
        m += 1
    return Series(out, order)


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ModSeries:
    """Truncated series with coefficients in Z/p for an odd prime p < 2^31."""

    __slots__ = ("coeffs", "order", "modulus")

    def __init__(self, coeffs, modulus, order=None):
        if not _is_odd_prime(modulus) or modulus >= 1 << 31:
            raise ValueError(f"modulus must be an odd prime below 2^31, got {modulus}")
        coeffs = [c % modulus for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than order allows")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order
        self.modulus = modulus

    @classmethod
    def from_series(cls, a: Series, p: int) -> "ModSeries":
        out = []
        for c in a.coeffs:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise ZeroDivisionError(f"coefficient denominator divisible by {p}")
                out.append(c.numerator * pow(c.denominator, p - 2, p) % p)
            else:
                out.append(c % p)
        return cls(out, p, a.order)

    @classmethod
    def zero(cls, order, p):
        return cls([0] * (order + 1), p, order)

    @classmethod
    def one(cls, order, p):
        c = [0] * (order + 1)
        c[0] = 1
        return cls(c, p, order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, ModSeries):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:10])
        return f"ModSeries([{head}, ...] mod {self.modulus}; order={self.order})"

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")

    def __add__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        p = self.modulus
        a, b = self.coeffs, other.coeffs
        return ModSeries([(a[i] + b[i]) % p for i in range(n + 1)], p, n)

    def __sub__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        p = self.modulus
        a, b = self.coeffs, other.coeffs
        return ModSeries([(a[i] - b[i]) % p for i in range(n + 1)], p, n)

    def __mul__(self, other):
        p = self.modulus
        if isinstance(other, int):
            return ModSeries([c * other % p for c in self.coeffs], p, self.order)
        self._check(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        na = sum(1 for c in a[: n + 1] if c)
        nb = sum(1 for c in b[: n + 1] if c)
        if nb < na:
            a, b = b, a
        out = [0] * (n + 1)
        for i in range(n + 1):
            c = a[i]
            if not c:
                continue
            for j, d in enumerate(b[: n - i + 1]):
                if d:
                    out[i + j] = (out[i + j] + c * d) % p
        return ModSeries(out, p, n)

    __rmul__ = __mul__

    def shift(self, k):
        if k < 0:
            raise ValueError("negative shift")
        n = self.order
        if k > n:
            return ModSeries.zero(n, self.modulus)
        return ModSeries([0] * k + self.coeffs[: n + 1 - k], self.modulus, n)

    def invert(self):
        a = self.coeffs
        n = self.order
        p = self.modulus
        if a[0] == 0:
            raise ZeroDivisionError("non-unit series: constant term is zero")
        inv0 = pow(a[0], p - 2, p)
        tail = [(i, c) for i, c in enumerate(a[1 : n + 1], 1) if c]
        out = [inv0]
        for m in range(1, n + 1):
            acc = 0
            for i, c in tail:
                if i > m:
                    break
                acc += c * out[m - i]
            out.append(-acc * inv0 % p if acc else 0)
        return ModSeries(out, p, n)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)
