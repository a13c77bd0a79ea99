"""Exact scalars in Q(i, sqrt2) and truncated formal power series in z.

Every quantity in the engine is built from these two types; there is no
floating point anywhere.  "r2" denotes sqrt(2) in the text form.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Q


class OrderMismatchError(ValueError):
    """Raised when series with different truncation orders are mixed."""


def _rat(x):
    if isinstance(x, (int, str)):
        return _Q(x)
    return x


class Scalar:
    """a + b*i + c*r2 + d*i*r2 with exact rational components.

    i^2 = -1 and r2^2 = 2; the components are kept in lowest terms by the
    underlying rational type.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _rat(a)
        self.b = _rat(b)
        self.c = _rat(c)
        self.d = _rat(d)

    @classmethod
    def of(cls, x):
        if isinstance(x, Scalar):
            return x
        return cls(x)

    @classmethod
    def rational(cls, p, q=1):
        return cls(_Q(p, q))

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def is_rational(self):
        return not (self.b or self.c or self.d)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __add__(self, other):
        other = Scalar.of(other)
        return Scalar(self.a + other.a, self.b + other.b,
                      self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar.of(other)
        return Scalar(self.a - other.a, self.b - other.b,
                      self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        other = Scalar.of(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        if not (b1 or c1 or d1):
            return Scalar(a1 * a2, a1 * b2, a1 * c2, a1 * d2)
        if not (b2 or c2 or d2):
            return Scalar(a1 * a2, b1 * a2, c1 * a2, d1 * a2)
        return Scalar(
            a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def conj(self):
        """Complex conjugation: negates the i-components."""
        return Scalar(self.a, -self.b, self.c, -self.d)

    def conj_r2(self):
        """Galois conjugation r2 -> -r2."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    def inv(self):
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        # x * conj(x) lies in Q(r2); a second conjugation lands in Q.
        y = self * self.conj()
        yc = y.conj_r2()
        n = (y * yc).a
        num = self.conj() * yc
        r = 1 / n if not isinstance(n, int) else _Q(1, n)
        return Scalar(num.a * r, num.b * r, num.c * r, num.d * r)

    def __truediv__(self, other):
        other = Scalar.of(other)
        if other.is_rational():
            if not other.a:
                raise ZeroDivisionError("division by zero scalar")
            r = 1 / other.a
            return Scalar(self.a * r, self.b * r, self.c * r, self.d * r)
        return self * other.inv()

    def __str__(self):
        parts = []
        for q, unit in ((self.a, ""), (self.b, "i"), (self.c, "r2"),
                        (self.d, "i*r2")):
            if not q:
                continue
            if not unit:
                text = str(q)
            elif q == 1:
                text = unit
            elif q == -1:
                text = "-" + unit
            else:
                text = "%s*%s" % (q, unit)
            parts.append(text)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__

    @classmethod
    def parse(cls, text):
        """Parse the canonical text form, e.g. "1/2 - 1/2*i + r2"."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar text")
        # split into signed terms
        terms, cur = [], ""
        for ch in s:
            if ch in "+-" and cur and cur[-1] not in "+-*/":
                terms.append(cur)
                cur = ch
            else:
                cur += ch
        terms.append(cur)
        a = b = c = d = _Q(0)
        for term in terms:
            sign = 1
            while term and term[0] in "+-":
                if term[0] == "-":
                    sign = -sign
                term = term[1:]
            if not term:
                raise ValueError("malformed scalar text: %r" % text)
            toks = term.split("*")
            has_i = has_r2 = False
            coef = None
            for tok in toks:
                if tok == "i" and not has_i:
                    has_i = True
                elif tok == "r2" and not has_r2:
                    has_r2 = True
                elif coef is None:
                    try:
                        coef = _Q(tok)
                    except (ValueError, ZeroDivisionError):
                        raise ValueError("bad coefficient %r in %r" % (tok, text))
                else:
                    raise ValueError("malformed term %r in %r" % (term, text))
            q = sign * (coef if coef is not None else _Q(1))
            if has_i and has_r2:
                d += q
            elif has_i:
                b += q
            elif has_r2:
                c += q
            else:
                a += q
        return cls(a, b, c, d)


S_ZERO = Scalar(0)
S_ONE = Scalar(1)
S_I = Scalar(0, 1)
S_R2 = Scalar(0, 0, 1)
S_HALF = Scalar(_Q(1, 2))


def srat(p, q=1):
    """Shorthand for a rational Scalar p/q."""
    return Scalar(_Q(p, q))


class ZSeries:
    """Polynomial in the deformation parameter z, truncated mod z^(N+1).

    The truncation order N is part of the value; combining series of
    different orders raises OrderMismatchError rather than coercing.
    """

    __slots__ = ("order", "coeffs", "zorder")

    def __init__(self, order, coeffs=()):
        cs = list(coeffs)[: order + 1]
        cs += [S_ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)
        zo = order + 1
        for k, ck in enumerate(cs):
            if ck:
                zo = k
                break
        self.zorder = zo

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls(order, (S_ONE,))

    @classmethod
    def term(cls, order, k, coeff=S_ONE):
        """coeff * z^k at the given truncation order."""
        coeff = Scalar.of(coeff)
        if k > order:
            return cls(order)
        return cls(order, (S_ZERO,) * k + (coeff,))

    @classmethod
    def const(cls, order, scalar):
        return cls(order, (Scalar.of(scalar),))

    def _check(self, other):
        if self.order != other.order:
            raise OrderMismatchError(
                "truncation orders differ: %d vs %d" % (self.order, other.order))

    def __bool__(self):
        return self.zorder <= self.order

    def is_zero(self):
        return self.zorder > self.order

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __add__(self, other):
        self._check(other)
        return ZSeries(self.order,
                       [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return ZSeries(self.order,
                       [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return ZSeries(self.order, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        self._check(other)
        n = self.order
        if self.zorder + other.zorder > n:
            return ZSeries(n)
        out = [S_ZERO] * (n + 1)
        for j in range(self.zorder, n + 1 - other.zorder):
            cj = self.coeffs[j]
            if not cj:
                continue
            for k in range(other.zorder, n + 1 - j):
                ck = other.coeffs[k]
                if ck:
                    out[j + k] = out[j + k] + cj * ck
        return ZSeries(n, out)

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = Scalar.of(scalar)
        if not scalar:
            return ZSeries(self.order)
        return ZSeries(self.order, [x * scalar for x in self.coeffs])

    def inv(self):
        if not self.coeffs[0]:
            raise ZeroDivisionError("series with zero constant term")
        n = self.order
        c0 = self.coeffs[0].inv()
        out = [c0] + [S_ZERO] * n
        for k in range(1, n + 1):
            acc = S_ZERO
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -(c0 * acc)
        return ZSeries(n, out)

    def zmul(self, k):
        """Multiply by z^k, staying at the same truncation order."""
        return ZSeries(self.order, (S_ZERO,) * k + self.coeffs[: self.order + 1 - k])

    def divz(self, k=1):
        """Exact division by z^k; the truncation order drops by k."""
        if any(self.coeffs[j] for j in range(min(k, self.order + 1))):
            raise ValueError("series not divisible by z^%d" % k)
        if self.order < k:
            raise OrderMismatchError("order too low for division by z^%d" % k)
        return ZSeries(self.order - k, self.coeffs[k:])

    def truncate(self, m):
        if m > self.order:
            raise OrderMismatchError("cannot extend a truncated series")
        return ZSeries(m, self.coeffs[: m + 1])

    def __str__(self):
        parts = []
        for k, ck in enumerate(self.coeffs):
            if not ck:
                continue
            cs = str(ck)
            if k == 0:
                parts.append(cs)
            else:
                zs = "z" if k == 1 else "z^%d" % k
                if cs == "1":
                    parts.append(zs)
                elif cs == "-1":
                    parts.append("-" + zs)
                elif "+" in cs or " - " in cs:
                    parts.append("(%s)*%s" % (cs, zs))
                else:
                    parts.append("%s*%s" % (cs, zs))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__
