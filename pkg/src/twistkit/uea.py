"""PBW-normal-form arithmetic in U(g) and its tensor square and cube.

Monomials are nondecreasing tuples of generator indices in the fixed basis
order of the LieAlgebraDef; the empty tuple is the unit.  Multiplication
rewrites X_j X_i -> X_i X_j + [X_j, X_i] for j > i until normal form is
reached, memoizing per word.  All coefficients are ZSeries sharing one
truncation order; z-order bookkeeping prunes products that vanish
mod z^(N+1).
"""

from __future__ import annotations

from math import comb

from .scalars import Scalar, ZSeries, S_ONE, S_ZERO, srat


def _straighten(alg, word):
    """Normal form of a product word as {monomial: Scalar}."""
    cache = alg._straighten_cache
    res = cache.get(word)
    if res is not None:
        return res
    k = -1
    for p in range(len(word) - 1):
        if word[p] > word[p + 1]:
            k = p
            break
    if k < 0:
        res = {word: S_ONE}
        cache[word] = res
        return res
    a, b = word[k], word[k + 1]
    out = dict(_straighten(alg, word[:k] + (b, a) + word[k + 2:]))
    for g, c in alg.bracket_idx(a, b):
        sub = word[:k] + (g,) + word[k + 2:]
        for mono, c2 in _straighten(alg, sub).items():
            cc = c * c2
            s = out.get(mono)
            out[mono] = cc if s is None else s + cc
    out = {m: c for m, c in out.items() if c}
    cache[word] = out
    return out


def mono_mul(alg, m, n):
    """Product of two PBW monomials as ((monomial, Scalar), ...)."""
    if not m:
        return ((n, S_ONE),)
    if not n:
        return ((m, S_ONE),)
    key = (m, n)
    cache = alg._mono_mul_cache
    r = cache.get(key)
    if r is None:
        if m[-1] <= n[0]:
            r = ((m + n, S_ONE),)
        else:
            r = tuple(_straighten(alg, m + n).items())
        cache[key] = r
    return r


def mono_coproduct(alg, m):
    """Undeformed coproduct of a monomial as (((left, right), Scalar), ...).

    Splitting a sorted monomial leaves both legs sorted, so no rewriting
    is needed; the coefficients are products of binomials.
    """
    cache = alg._cop_cache
    r = cache.get(m)
    if r is None:
        runs = []
        for g in m:
            if runs and runs[-1][0] == g:
                runs[-1][1] += 1
            else:
                runs.append([g, 1])
        acc = {((), ()): 1}
        for g, e in runs:
            new = {}
            for (l, rt), c in acc.items():
                for j in range(e + 1):
                    key = (l + (g,) * j, rt + (g,) * (e - j))
                    new[key] = new.get(key, 0) + c * comb(e, j)
            acc = new
        r = tuple((pair, Scalar(c)) for pair, c in acc.items())
        cache[m] = r
    return r


def mono_antipode(alg, m):
    """Undeformed antipode of a monomial: (-1)^deg times the reversed word."""
    cache = alg._antipode_cache
    r = cache.get(m)
    if r is None:
        if len(m) % 2:
            r = tuple((mono, -c) for mono, c in
                      _straighten(alg, tuple(reversed(m))).items())
        else:
            r = tuple(_straighten(alg, tuple(reversed(m))).items())
        cache[m] = r
    return r


def monomial_text(alg, m):
    if not m:
        return "1"
    parts = []
    prev, count = None, 0
    for g in m + (None,):
        if g == prev:
            count += 1
            continue
        if prev is not None:
            lab = alg.labels[prev]
            parts.append(lab if count == 1 else "%s^%d" % (lab, count))
        prev, count = g, 1
    return "*".join(parts)


def _term_text(alg, monos, zs):
    mono = "⊗".join(monomial_text(alg, m) for m in monos) \
        if isinstance(monos, tuple) and monos and isinstance(monos[0], tuple) \
        else monomial_text(alg, monos)
    cs = str(zs)
    if cs == "1":
        return mono
    if cs == "-1":
        return "-" + mono
    if " + " in cs or " - " in cs:
        cs = "(%s)" % cs
    return "%s*%s" % (cs, mono)


def _join_terms(parts):
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _sort_key(m):
    return (len(m), m)


class UEAElement:
    """Element of U(g) with ZSeries coefficients at a fixed truncation order."""

    __slots__ = ("algebra", "order", "terms")

    def __init__(self, algebra, order, terms):
        self.algebra = algebra
        self.order = order
        self.terms = terms

    @classmethod
    def zero(cls, algebra, order):
        return cls(algebra, order, {})

    @classmethod
    def one(cls, algebra, order):
        return cls(algebra, order, {(): ZSeries.one(order)})

    @classmethod
    def monomial(cls, algebra, order, mono, coeff=None):
        zs = ZSeries.one(order) if coeff is None else coeff
        return cls(algebra, order, {tuple(mono): zs})

    @classmethod
    def from_lie(cls, x, order):
        """Degree-one element from an AlgebraElement."""
        return cls(x.algebra, order,
                   {(i,): ZSeries.const(order, c) for i, c in x.comps.items()})

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements over different algebras")
        if self.order != other.order:
            raise ValueError("truncation orders differ: %d vs %d"
                             % (self.order, other.order))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def zorder(self):
        if not self.terms:
            return self.order + 1
        return min(zs.zorder for zs in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, zs in other.terms.items():
            s = out.get(m)
            t = zs if s is None else s + zs
            if t:
                out[m] = t
            elif s is not None:
                del out[m]
        return UEAElement(self.algebra, self.order, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UEAElement(self.algebra, self.order,
                          {m: -zs for m, zs in self.terms.items()})

    def scale(self, c):
        if isinstance(c, ZSeries):
            out = {}
            for m, zs in self.terms.items():
                t = zs * c
                if t:
                    out[m] = t
            return UEAElement(self.algebra, self.order, out)
        c = Scalar.of(c)
        if not c:
            return UEAElement.zero(self.algebra, self.order)
        return UEAElement(self.algebra, self.order,
                          {m: zs.scale(c) for m, zs in self.terms.items()})

    def zmul(self, k):
        out = {}
        for m, zs in self.terms.items():
            t = zs.zmul(k)
            if t:
                out[m] = t
        return UEAElement(self.algebra, self.order, out)

    def divz(self, k=1):
        """Exact division by z^k; the truncation order drops by k."""
        return UEAElement(self.algebra, self.order - k,
                          {m: zs.divz(k) for m, zs in self.terms.items()})

    def truncate(self, order):
        out = {}
        for m, zs in self.terms.items():
            t = zs.truncate(order)
            if t:
                out[m] = t
        return UEAElement(self.algebra, order, out)

    def __mul__(self, other):
        if isinstance(other, (Scalar, ZSeries, int)):
            return self.scale(other)
        self._check(other)
        alg, n = self.algebra, self.order
        out = {}
        items2 = other.terms.items()
        for m, a in self.terms.items():
            za = a.zorder
            if za > n:
                continue
            for mm, b in items2:
                if za + b.zorder > n:
                    continue
                c = a * b
                if not c:
                    continue
                for mono, sc in mono_mul(alg, m, mm):
                    t = c if sc is S_ONE or sc == S_ONE else c.scale(sc)
                    s = out.get(mono)
                    t = t if s is None else s + t
                    if t:
                        out[mono] = t
                    elif s is not None:
                        del out[mono]
        return UEAElement(alg, n, out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, ZSeries, int)):
            return self.scale(other)
        return NotImplemented

    def exp(self):
        return _exp(self, UEAElement.one(self.algebra, self.order))

    def log(self):
        return _log(self, UEAElement.one(self.algebra, self.order))

    def inv(self):
        return _neumann_inv(self, UEAElement.one(self.algebra, self.order))

    def counit0(self):
        """epsilon_0: the coefficient of the unit monomial."""
        return self.terms.get((), ZSeries.zero(self.order))

    def coproduct0(self):
        """Delta_0 as a rank-2 TensorElement."""
        out = {}
        for m, zs in self.terms.items():
            for pair, sc in mono_coproduct(self.algebra, m):
                t = zs if sc == S_ONE else zs.scale(sc)
                s = out.get(pair)
                out[pair] = t if s is None else s + t
        return TensorElement(self.algebra, self.order, 2,
                             {k: v for k, v in out.items() if v})

    def antipode0(self):
        """S_0: anti-homomorphism with S_0(X) = -X on generators."""
        out = {}
        for m, zs in self.terms.items():
            for mono, sc in mono_antipode(self.algebra, m):
                t = zs if sc == S_ONE else zs.scale(sc)
                s = out.get(mono)
                t = t if s is None else s + t
                if t:
                    out[mono] = t
                elif s is not None:
                    del out[mono]
        return UEAElement(self.algebra, self.order, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [_term_text(self.algebra, m, self.terms[m])
                 for m in sorted(self.terms, key=_sort_key)]
        return _join_terms(parts)

    __repr__ = __str__


class TensorElement:
    """Element of U(g) tensor-power (rank 2 or 3), leg-wise PBW normal form."""

    __slots__ = ("algebra", "order", "rank", "terms")

    def __init__(self, algebra, order, rank, terms):
        self.algebra = algebra
        self.order = order
        self.rank = rank
        self.terms = terms

    @classmethod
    def unit(cls, algebra, order, rank=2):
        return cls(algebra, order, rank, {((),) * rank: ZSeries.one(order)})

    @classmethod
    def from_pair(cls, x, y):
        """x tensor y for UEAElements over the same algebra and order."""
        x._check(y)
        n = x.order
        out = {}
        for m1, a in x.terms.items():
            za = a.zorder
            for m2, b in y.terms.items():
                if za + b.zorder > n:
                    continue
                t = a * b
                if t:
                    out[(m1, m2)] = t
        return cls(x.algebra, n, 2, out)

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("tensors over different algebras")
        if self.order != other.order:
            raise ValueError("truncation orders differ: %d vs %d"
                             % (self.order, other.order))
        if self.rank != other.rank:
            raise ValueError("tensor ranks differ: %d vs %d"
                             % (self.rank, other.rank))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def zorder(self):
        if not self.terms:
            return self.order + 1
        return min(zs.zorder for zs in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, zs in other.terms.items():
            s = out.get(m)
            t = zs if s is None else s + zs
            if t:
                out[m] = t
            elif s is not None:
                del out[m]
        return TensorElement(self.algebra, self.order, self.rank, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.algebra, self.order, self.rank,
                             {m: -zs for m, zs in self.terms.items()})

    def scale(self, c):
        if isinstance(c, ZSeries):
            out = {}
            for m, zs in self.terms.items():
                t = zs * c
                if t:
                    out[m] = t
            return TensorElement(self.algebra, self.order, self.rank, out)
        c = Scalar.of(c)
        if not c:
            return TensorElement(self.algebra, self.order, self.rank, {})
        return TensorElement(self.algebra, self.order, self.rank,
                             {m: zs.scale(c) for m, zs in self.terms.items()})

    def zmul(self, k):
        out = {}
        for m, zs in self.terms.items():
            t = zs.zmul(k)
            if t:
                out[m] = t
        return TensorElement(self.algebra, self.order, self.rank, out)

    def truncate(self, order):
        out = {}
        for m, zs in self.terms.items():
            t = zs.truncate(order)
            if t:
                out[m] = t
        return TensorElement(self.algebra, order, self.rank, out)

    def __mul__(self, other):
        if isinstance(other, (Scalar, ZSeries, int)):
            return self.scale(other)
        self._check(other)
        alg, n, rank = self.algebra, self.order, self.rank
        out = {}
        items2 = other.terms.items()
        if rank == 2:
            for (m1, m2), a in self.terms.items():
                za = a.zorder
                if za > n:
                    continue
                for (n1, n2), b in items2:
                    if za + b.zorder > n:
                        continue
                    c = a * b
                    if not c:
                        continue
                    p1 = mono_mul(alg, m1, n1)
                    p2 = mono_mul(alg, m2, n2)
                    for u1, s1 in p1:
                        for u2, s2 in p2:
                            s = s1 * s2
                            t = c if s == S_ONE else c.scale(s)
                            if not t:
                                continue
                            key = (u1, u2)
                            prev = out.get(key)
                            t = t if prev is None else prev + t
                            if t:
                                out[key] = t
                            elif prev is not None:
                                del out[key]
        else:
            for (m1, m2, m3), a in self.terms.items():
                za = a.zorder
                if za > n:
                    continue
                for (n1, n2, n3), b in items2:
                    if za + b.zorder > n:
                        continue
                    c = a * b
                    if not c:
                        continue
                    p1 = mono_mul(alg, m1, n1)
                    p2 = mono_mul(alg, m2, n2)
                    p3 = mono_mul(alg, m3, n3)
                    for u1, s1 in p1:
                        for u2, s2 in p2:
                            s12 = s1 * s2
                            for u3, s3 in p3:
                                s = s12 * s3
                                t = c if s == S_ONE else c.scale(s)
                                if not t:
                                    continue
                                key = (u1, u2, u3)
                                prev = out.get(key)
                                t = t if prev is None else prev + t
                                if t:
                                    out[key] = t
                                elif prev is not None:
                                    del out[key]
        return TensorElement(alg, n, rank, out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, ZSeries, int)):
            return self.scale(other)
        return NotImplemented

    def exp(self):
        return _exp(self, TensorElement.unit(self.algebra, self.order, self.rank))

    def inverse(self):
        """Neumann-series inverse; requires unit leading term."""
        return _neumann_inv(self, TensorElement.unit(self.algebra, self.order,
                                                     self.rank))

    def swap(self):
        if self.rank != 2:
            raise ValueError("swap is defined for rank-2 tensors")
        return TensorElement(self.algebra, self.order, 2,
                             {(m2, m1): zs for (m1, m2), zs in self.terms.items()})

    def embed_12(self):
        return self._embed(lambda m: (m[0], m[1], ()))

    def embed_23(self):
        return self._embed(lambda m: ((), m[0], m[1]))

    def embed_13(self):
        return self._embed(lambda m: (m[0], (), m[1]))

    def _embed(self, place):
        if self.rank != 2:
            raise ValueError("embedding is defined for rank-2 tensors")
        return TensorElement(self.algebra, self.order, 3,
                             {place(m): zs for m, zs in self.terms.items()})

    def cop_leg(self, leg):
        """Apply Delta_0 to one leg of a rank-2 tensor (1-based)."""
        if self.rank != 2:
            raise ValueError("cop_leg is defined for rank-2 tensors")
        alg = self.algebra
        out = {}
        for (m1, m2), zs in self.terms.items():
            target = m1 if leg == 1 else m2
            for (a, b), sc in mono_coproduct(alg, target):
                key = (a, b, m2) if leg == 1 else (m1, a, b)
                t = zs if sc == S_ONE else zs.scale(sc)
                s = out.get(key)
                out[key] = t if s is None else s + t
        return TensorElement(alg, self.order, 3,
                             {k: v for k, v in out.items() if v})

    def counit_leg(self, leg):
        """Apply epsilon_0 to one leg of a rank-2 tensor, leaving a UEAElement."""
        if self.rank != 2:
            raise ValueError("counit_leg is defined for rank-2 tensors")
        out = {}
        for (m1, m2), zs in self.terms.items():
            if leg == 1 and not m1:
                key = m2
            elif leg == 2 and not m2:
                key = m1
            else:
                continue
            s = out.get(key)
            t = zs if s is None else s + zs
            if t:
                out[key] = t
            elif s is not None:
                del out[key]
        return UEAElement(self.algebra, self.order, out)

    def first_term_text(self):
        """Canonical text of the lexicographically first term (for witnesses)."""
        if not self.terms:
            return ""
        key = min(self.terms, key=lambda ms: tuple(_sort_key(m) for m in ms))
        return _term_text(self.algebra, key, self.terms[key])

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda ms: tuple(_sort_key(m) for m in ms))
        return _join_terms([_term_text(self.algebra, k, self.terms[k])
                            for k in keys])

    __repr__ = __str__


def _exp(x, unit):
    if x.zorder < 1:
        raise ValueError("exp argument must vanish at z=0")
    acc, term = unit + x, x
    k = 2
    while k <= x.order:
        term = (term * x).scale(srat(1, k))
        if term.is_zero():
            break
        acc = acc + term
        k += 1
    return acc


def _log(u, unit):
    w = u - unit
    if w.zorder < 1:
        raise ValueError("log argument must be 1 + O(z)")
    acc, wp = w, w
    k = 2
    while k <= u.order:
        wp = wp * w
        if wp.is_zero():
            break
        acc = acc + wp.scale(srat(1 if k % 2 else -1, k))
        k += 1
    return acc


def _neumann_inv(u, unit):
    w = u - unit
    if w.zorder < 1:
        raise ValueError("inverse requires unit leading term")
    acc, term = unit, unit
    while True:
        term = -(term * w)
        if term.is_zero():
            break
        acc = acc + term
    return acc


def fold_antipode(t, antipode_leg=2):
    """Multiply the legs of a rank-2 tensor after S_0 on one leg.

    With antipode_leg=2 this is sum f_i S_0(f^i), the element conjugating
    the undeformed antipode into the twisted one.
    """
    if t.rank != 2:
        raise ValueError("fold_antipode is defined for rank-2 tensors")
    alg, n = t.algebra, t.order
    out = {}
    for (m1, m2), zs in t.terms.items():
        target = m2 if antipode_leg == 2 else m1
        other = m1 if antipode_leg == 2 else m2
        for mono, sc in mono_antipode(alg, target):
            pair = mono_mul(alg, other, mono) if antipode_leg == 2 \
                else mono_mul(alg, mono, other)
            for u, s2 in pair:
                s = sc * s2
                v = zs if s == S_ONE else zs.scale(s)
                if not v:
                    continue
                prev = out.get(u)
                v = v if prev is None else prev + v
                if v:
                    out[u] = v
                elif prev is not None:
                    del out[u]
    return UEAElement(alg, n, out)
