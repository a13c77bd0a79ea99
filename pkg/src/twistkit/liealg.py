"""Host Lie algebras and the six-generator subalgebra embeddings.

Algebras are given by exact structure constants over Q(i, r2).  The
catalog covers sl(n), so(n), sp(2n), the conformal algebra of
(2+1)-dimensional Minkowski spacetime, the abstract six-generator
algebra itself, and custom algebras loaded from a config file.
"""

from __future__ import annotations

from .scalars import Scalar, S_ONE, S_I, srat

SL_MIN_N = 4
SO_MIN_N = 5
SP_MIN_N = 2

SIXDIM_LABELS = ("H1", "E1", "H2", "E2", "A", "B")

# Bracket table of the six-generator algebra: [x, y] = sum of (coeff, gen).
SIXDIM_RELATIONS = (
    ("H1", "E1", (("E1", 2),)),
    ("H1", "H2", ()),
    ("H1", "E2", ()),
    ("H2", "E1", ()),
    ("E1", "E2", ()),
    ("H2", "E2", (("E2", 2),)),
    ("H1", "A", (("A", -1),)),
    ("H1", "B", (("B", 1),)),
    ("H2", "A", (("A", 1),)),
    ("H2", "B", (("B", 1),)),
    ("A", "E1", (("B", 2),)),
    ("A", "E2", ()),
    ("E1", "B", ()),
    ("E2", "B", ()),
    ("A", "B", (("E2", 1),)),
)


class EmbeddingError(ValueError):
    """A six-generator embedding violates its bracket relations."""


class CoefficientConditionError(ValueError):
    """Embedding coefficients violate the family's exact condition."""


class LieAlgebraDef:
    """Structure-constant presentation of a finite-dimensional Lie algebra.

    Immutable after construction; the PBW caches hung off the instance are
    filled under single-assignment discipline.
    """

    def __init__(self, name, labels, brackets, family=None, n=None):
        self.name = name
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.dim = len(self.labels)
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        self.family = family
        self.n = n
        table = {}
        for (i, j), terms in brackets.items():
            if i == j:
                raise ValueError("bracket of a generator with itself")
            if i > j:
                i, j, terms = j, i, tuple((k, -c) for k, c in terms)
            terms = tuple((k, Scalar.of(c)) for k, c in terms if Scalar.of(c))
            if terms:
                table[(i, j)] = terms
        self._table = table
        # caches used by the enveloping-algebra engine
        self._straighten_cache = {}
        self._mono_mul_cache = {}
        self._cop_cache = {}
        self._antipode_cache = {}

    def bracket_idx(self, i, j):
        """[x_i, x_j] as ((k, Scalar), ...)."""
        if i == j:
            return ()
        if i < j:
            return self._table.get((i, j), ())
        return tuple((k, -c) for k, c in self._table.get((j, i), ()))

    def zero(self):
        return AlgebraElement(self, {})

    def gen(self, label):
        return AlgebraElement(self, {self.index[label]: S_ONE})

    def basis_element(self, i):
        return AlgebraElement(self, {i: S_ONE})

    def element(self, components):
        """Element from {label: scalar-like}."""
        comps = {}
        for lab, c in components.items():
            c = Scalar.of(c)
            if c:
                comps[self.index[lab]] = c
        return AlgebraElement(self, comps)

    def __repr__(self):
        return "LieAlgebraDef(%s, dim=%d)" % (self.name, self.dim)


class AlgebraElement:
    """Sparse vector over the basis of a LieAlgebraDef."""

    __slots__ = ("algebra", "comps")

    def __init__(self, algebra, comps):
        self.algebra = algebra
        self.comps = {i: c for i, c in comps.items() if c}

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements over different algebras")

    def __bool__(self):
        return bool(self.comps)

    def is_zero(self):
        return not self.comps

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return self.comps == other.comps

    def __add__(self, other):
        self._check(other)
        out = dict(self.comps)
        for i, c in other.comps.items():
            s = out.get(i)
            out[i] = c if s is None else s + c
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.algebra, {i: -c for i, c in self.comps.items()})

    def scale(self, scalar):
        scalar = Scalar.of(scalar)
        return AlgebraElement(self.algebra,
                              {i: c * scalar for i, c in self.comps.items()})

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def bracket(self, other):
        self._check(other)
        g = self.algebra
        out = {}
        for i, ci in self.comps.items():
            for j, cj in other.comps.items():
                cij = ci * cj
                for k, c in g.bracket_idx(i, j):
                    s = out.get(k)
                    t = c * cij
                    out[k] = t if s is None else s + t
        return AlgebraElement(g, out)

    def __str__(self):
        if not self.comps:
            return "0"
        parts = []
        for i in sorted(self.comps):
            c, lab = self.comps[i], self.algebra.labels[i]
            cs = str(c)
            if cs == "1":
                parts.append(lab)
            elif cs == "-1":
                parts.append("-" + lab)
            elif "+" in cs or " - " in cs:
                parts.append("(%s)*%s" % (cs, lab))
            else:
                parts.append("%s*%s" % (cs, lab))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


def bracket(g, x, y):
    if x.algebra is not g or y.algebra is not g:
        raise ValueError("elements do not belong to the given algebra")
    return x.bracket(y)


def jacobi_check(g):
    """All violating basis triples; empty iff the Jacobi identity holds."""
    bad = []
    basis = [g.basis_element(i) for i in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            xij = basis[i].bracket(basis[j])
            for k in range(j + 1, g.dim):
                res = (basis[i].bracket(basis[j].bracket(basis[k]))
                       + basis[j].bracket(basis[k].bracket(basis[i]))
                       + basis[k].bracket(xij))
                if res:
                    bad.append(((g.labels[i], g.labels[j], g.labels[k]), res))
    return bad


# ---------------------------------------------------------------------------
# algebra constructors
# ---------------------------------------------------------------------------

def _sl_algebra(n):
    # basis: off-diagonal E_{a,b}, then traceless diagonals H_k = E_kk - E_k+1,k+1
    labels = ["E%d,%d" % (a, b) for a in range(1, n + 1)
              for b in range(1, n + 1) if a != b]
    labels += ["H%d" % k for k in range(1, n)]
    mats = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b:
                mats["E%d,%d" % (a, b)] = {(a, b): S_ONE}
    for k in range(1, n):
        mats["H%d" % k] = {(k, k): S_ONE, (k + 1, k + 1): -S_ONE}

    def decompose(mat):
        terms = []
        diag = [mat.get((j, j), None) for j in range(1, n + 1)]
        for (a, b), c in mat.items():
            if a != b and c:
                terms.append(("E%d,%d" % (a, b), c))
        run = Scalar(0)
        for j in range(1, n):
            if diag[j - 1] is not None:
                run = run + diag[j - 1]
            if run:
                terms.append(("H%d" % j, run))
        return terms

    brackets = _brackets_from_matrices(labels, mats, decompose)
    return LieAlgebraDef("sl(%d)" % n, labels, brackets, family="sl", n=n)


def _brackets_from_matrices(labels, mats, decompose):
    index = {lab: k for k, lab in enumerate(labels)}
    brackets = {}
    for i, li in enumerate(labels):
        mi = mats[li]
        for j in range(i + 1, len(labels)):
            mj = mats[labels[j]]
            comm = {}
            for (a, b), c in mi.items():
                for (bb, d), e in mj.items():
                    if b == bb:
                        key = (a, d)
                        comm[key] = comm.get(key, Scalar(0)) + c * e
            for (a, b), c in mj.items():
                for (bb, d), e in mi.items():
                    if b == bb:
                        key = (a, d)
                        comm[key] = comm.get(key, Scalar(0)) - c * e
            terms = [(index[lab], c) for lab, c in decompose(comm) if c]
            if terms:
                brackets[(i, j)] = tuple(terms)
    return brackets


def _so_algebra(n):
    labels = ["Y%d,%d" % (a, b) for a in range(1, n + 1)
              for b in range(a + 1, n + 1)]
    index = {lab: k for k, lab in enumerate(labels)}

    def canon(a, b):
        # returns (index, sign) of Y_ab, or None when a == b
        if a == b:
            return None
        if a < b:
            return index["Y%d,%d" % (a, b)], 1
        return index["Y%d,%d" % (b, a)], -1

    brackets = {}
    for i, li in enumerate(labels):
        a, b = li[1:].split(",")
        a, b = int(a), int(b)
        for j in range(i + 1, len(labels)):
            c, d = labels[j][1:].split(",")
            c, d = int(c), int(d)
            acc = {}
            # [Y_ab, Y_cd] = i(Y_ad d_bc + Y_bc d_ad - Y_ac d_bd - Y_bd d_ac)
            for (x, y), s in (((a, d), 1 if b == c else 0),
                              ((b, c), 1 if a == d else 0),
                              ((a, c), -1 if b == d else 0),
                              ((b, d), -1 if a == c else 0)):
                if not s:
                    continue
                cn = canon(x, y)
                if cn is None:
                    continue
                k, sg = cn
                acc[k] = acc.get(k, 0) + s * sg
            terms = [(k, S_I * Scalar(v)) for k, v in acc.items() if v]
            if terms:
                brackets[(i, j)] = tuple(terms)
    return LieAlgebraDef("so(%d)" % n, labels, brackets, family="so", n=n)


def _sp_index_order(n):
    # positive indices first, then negative, both by absolute value
    return {x: (x - 1 if x > 0 else n - x - 1) for x in
            list(range(1, n + 1)) + list(range(-1, -n - 1, -1))}


def _sp_algebra(n):
    """sp(2n) in the Z_ab basis, a,b in {+-1..+-n}, Z_ab = -sign(ab) Z_-b,-a."""
    order = _sp_index_order(n)
    pairs = []
    seen = set()
    allidx = sorted(order, key=order.get)
    for a in allidx:
        for b in allidx:
            mirror = (-b, -a)
            if (order[mirror[0]], order[mirror[1]]) < (order[a], order[b]):
                continue
            if (a, b) in seen:
                continue
            seen.add((a, b))
            pairs.append((a, b))
    pairs.sort(key=lambda p: (order[p[0]], order[p[1]]))
    labels = ["Z%d,%d" % p for p in pairs]
    index = {p: k for k, p in enumerate(pairs)}

    def sign(v):
        return 1 if v > 0 else -1

    def canon(a, b):
        # (index, sign) of Z_ab after reduction to the canonical pair
        if (a, b) in index:
            return index[(a, b)], 1
        return index[(-b, -a)], -sign(a * b)

    brackets = {}
    for i, (a, b) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            c, d = pairs[j]
            s = sign(b * c)
            acc = {}
            for (x, y), present in (((a, d), b == c),
                                    ((-b, -c), a == d),
                                    ((a, -c), -b == d),
                                    ((-b, d), c == -a)):
                if not present:
                    continue
                k, sg = canon(x, y)
                acc[k] = acc.get(k, 0) + s * sg
            terms = [(k, Scalar(v)) for k, v in acc.items() if v]
            if terms:
                brackets[(i, j)] = tuple(terms)
    return LieAlgebraDef("sp(%d)" % (2 * n), labels, brackets, family="sp", n=n)


# (2+1)D conformal algebra, metric diag(+,-,-); J = M_12, K_i = M_i0.
_M3_LABELS = ("J", "K1", "K2", "P0", "P1", "P2", "C0", "C1", "C2", "D")

_M3_TABLE = {
    ("J", "K1"): (("K2", 1),),
    ("J", "K2"): (("K1", -1),),
    ("K1", "K2"): (("J", -1),),
    ("J", "P1"): (("P2", 1),),
    ("J", "P2"): (("P1", -1),),
    ("K1", "P0"): (("P1", 1),),
    ("K1", "P1"): (("P0", 1),),
    ("K2", "P0"): (("P2", 1),),
    ("K2", "P2"): (("P0", 1),),
    ("J", "C1"): (("C2", 1),),
    ("J", "C2"): (("C1", -1),),
    ("K1", "C0"): (("C1", 1),),
    ("K1", "C1"): (("C0", 1),),
    ("K2", "C0"): (("C2", 1),),
    ("K2", "C2"): (("C0", 1),),
    ("D", "P0"): (("P0", 1),),
    ("D", "P1"): (("P1", 1),),
    ("D", "P2"): (("P2", 1),),
    ("D", "C0"): (("C0", -1),),
    ("D", "C1"): (("C1", -1),),
    ("D", "C2"): (("C2", -1),),
    # [P_mu, C_nu] = 2(eta_mu,nu D + M_mu,nu), M_01 = -K1, M_02 = -K2, M_12 = J
    ("P0", "C0"): (("D", 2),),
    ("P0", "C1"): (("K1", -2),),
    ("P0", "C2"): (("K2", -2),),
    ("P1", "C0"): (("K1", 2),),
    ("P1", "C1"): (("D", -2),),
    ("P1", "C2"): (("J", 2),),
    ("P2", "C0"): (("K2", 2),),
    ("P2", "C1"): (("J", -2),),
    ("P2", "C2"): (("D", -2),),
}


def _table_to_brackets(labels, table):
    index = {lab: k for k, lab in enumerate(labels)}
    return {(index[x], index[y]): tuple((index[lab], c) for lab, c in terms)
            for (x, y), terms in table.items()}


def _m3_algebra():
    return LieAlgebraDef("conformal_m3", _M3_LABELS,
                         _table_to_brackets(_M3_LABELS, _M3_TABLE),
                         family="conformal_m3")


def _abstract6_algebra():
    table = {(x, y): terms for x, y, terms in SIXDIM_RELATIONS if terms}
    return LieAlgebraDef("abstract6", SIXDIM_LABELS,
                         _table_to_brackets(SIXDIM_LABELS, table),
                         family="abstract6")


FAMILIES = ("sl", "so", "sp", "conformal_m3", "abstract6",
            "galilei_conf", "carroll_conf")


def build_algebra(family, n=None, custom_constants=None):
    """Construct a host algebra; custom families require a constants table.

    The returned definition always passes jacobi_check; a failure raises.
    """
    if family == "sl":
        if n is None or n < 2:
            raise ValueError("sl(n) requires n >= 2")
        return _sl_algebra(n)
    if family == "so":
        if n is None or n < 3:
            raise ValueError("so(n) requires n >= 3")
        return _so_algebra(n)
    if family == "sp":
        if n is None or n < 1:
            raise ValueError("sp(2n) requires n >= 1")
        return _sp_algebra(n)
    if family == "conformal_m3":
        return _m3_algebra()
    if family == "abstract6":
        return _abstract6_algebra()
    if family in ("galilei_conf", "carroll_conf", "custom"):
        if custom_constants is None:
            raise ValueError("family %r requires custom structure constants"
                             % family)
        g = parse_algebra_config(custom_constants, family=family)
        bad = jacobi_check(g)
        if bad:
            raise ValueError("Jacobi identity fails at %s" % (bad[0][0],))
        return g
    raise ValueError("unknown family %r" % family)


# ---------------------------------------------------------------------------
# six-generator embeddings
# ---------------------------------------------------------------------------

class SixDimEmbedding:
    """Realization of the six generators H1,E1,H2,E2,A,B in a host algebra."""

    def __init__(self, algebra, elements, coefficients=None):
        self.algebra = algebra
        self.elements = dict(elements)
        missing = [lab for lab in SIXDIM_LABELS if lab not in self.elements]
        if missing:
            raise ValueError("embedding missing generators %s" % missing)
        self.coefficients = dict(coefficients or {})

    def __getitem__(self, lab):
        return self.elements[lab]

    def relation_residuals(self):
        """(name, residual) for all fifteen defining relations."""
        out = []
        for x, y, terms in SIXDIM_RELATIONS:
            expect = self.algebra.zero()
            for lab, c in terms:
                expect = expect + self.elements[lab].scale(c)
            res = self.elements[x].bracket(self.elements[y]) - expect
            rhs = "0" if not terms else " + ".join(
                ("%s" % lab if c == 1 else "%s*%s" % (c, lab)) for lab, c in terms)
            out.append(("[%s,%s] = %s" % (x, y, rhs), res))
        return out

    def check(self):
        bad = [(name, res) for name, res in self.relation_residuals() if res]
        if bad:
            raise EmbeddingError("relation %s has residual %s"
                                 % (bad[0][0], bad[0][1]))


def default_coefficients(family, n=None):
    """Simplest exact choices satisfying the family's condition."""
    if family == "sl":
        kmax = n // 2
        coeffs = {}
        for lam in range(kmax + 1, n):
            coeffs["b1_%d" % lam] = Scalar(0)
        for k in range(2, n - kmax + 1):
            coeffs["b%d_%d" % (k, n)] = Scalar(0)
        coeffs["b1_%d" % (n - 1)] = srat(1, 2)
        coeffs["b2_%d" % n] = srat(1, 2)
        return coeffs
    if family == "so":
        coeffs = {"a%d" % k: Scalar(0) for k in range(3, n - 1)}
        coeffs["a3"] = Scalar.parse("1/2*r2")
        return coeffs
    if family == "sp":
        coeffs = {"a%d" % k: Scalar(0) for k in range(2, n + 1)}
        coeffs["a2"] = S_ONE
        return coeffs
    return {}


def coefficient_condition(family, n, coeffs):
    """(description, residual) of the exact coefficient condition."""
    if family == "sl":
        kmax = n // 2
        acc = Scalar(0)
        for k in range(2, kmax + 1):
            acc = acc + coeffs["b1_%d" % (n - k + 1)] * coeffs["b%d_%d" % (k, n)]
        return ("4*sum b^{1,n-k+1} b^{k,n} = 1", Scalar(4) * acc - S_ONE)
    if family == "so":
        acc = Scalar(0)
        for k in range(3, n - 1):
            a = coeffs["a%d" % k]
            acc = acc + a * a
        return ("2*sum (a^k)^2 = 1", Scalar(2) * acc - S_ONE)
    if family == "sp":
        acc = Scalar(0)
        for k in range(2, n + 1):
            a = coeffs["a%d" % k]
            acc = acc + a * a
        return ("sum (a^k)^2 = 1", acc - S_ONE)
    return ("none", Scalar(0))


def _merge_coefficients(family, n, params):
    coeffs = default_coefficients(family, n)
    if params:
        # an explicit non-default choice replaces the default weights
        if family == "sl" and any(k.startswith("b") for k in params):
            coeffs["b1_%d" % (n - 1)] = Scalar(0)
            coeffs["b2_%d" % n] = Scalar(0)
        if family in ("so", "sp") and any(k.startswith("a") for k in params):
            for k in coeffs:
                coeffs[k] = Scalar(0)
        for key, val in params.items():
            if key not in coeffs:
                raise ValueError("unknown coefficient %r for %s" % (key, family))
            coeffs[key] = Scalar.of(val) if not isinstance(val, str) \
                else Scalar.parse(val)
    return coeffs


def build_embedding(g, params=None, check=True):
    """The six generators inside g, with exact coefficient validation.

    Raises CoefficientConditionError when the family condition fails and
    EmbeddingError when any of the fifteen bracket relations has a nonzero
    residual (unless check=False, for negative controls).
    """
    family, n = g.family, g.n
    if family == "sl":
        if n < SL_MIN_N:
            raise ValueError("sl(n) embedding requires n >= %d" % SL_MIN_N)
        coeffs = _merge_coefficients(family, n, params)
        emb = _sl_embedding(g, n, coeffs)
    elif family == "so":
        if n < SO_MIN_N:
            raise ValueError("so(n) embedding requires n >= %d" % SO_MIN_N)
        coeffs = _merge_coefficients(family, n, params)
        emb = _so_embedding(g, n, coeffs)
    elif family == "sp":
        if n < SP_MIN_N:
            raise ValueError("sp(2n) embedding requires n >= %d" % SP_MIN_N)
        coeffs = _merge_coefficients(family, n, params)
        emb = _sp_embedding(g, n, coeffs)
    elif family == "conformal_m3":
        emb = SixDimEmbedding(g, {
            "H1": g.gen("D") + g.gen("K1"),
            "E1": g.gen("P0") + g.gen("P1"),
            "H2": g.gen("D") - g.gen("K1"),
            "E2": g.gen("P0") - g.gen("P1"),
            "A": g.gen("K2") + g.gen("J"),
            "B": g.gen("P2"),
        })
    elif family == "abstract6":
        emb = SixDimEmbedding(g, {lab: g.gen(lab) for lab in SIXDIM_LABELS})
    else:
        raise ValueError("no six-generator embedding for family %r" % family)

    if check and family in ("sl", "so", "sp"):
        desc, res = coefficient_condition(family, n, emb.coefficients)
        if res:
            raise CoefficientConditionError(
                "coefficient condition %s violated (residual %s)" % (desc, res))
    if check:
        emb.check()
    return emb


def _sl_embedding(g, n, coeffs):
    kmax = n // 2
    zero = g.zero()
    H1, E1 = zero, zero
    for k in range(2, kmax + 1):
        H1 = H1 + _sl_diag(g, n, k) - _sl_diag(g, n, n - k + 1)
        E1 = E1 + g.gen("E%d,%d" % (k, n - k + 1))
    H2 = _sl_diag(g, n, 1) - _sl_diag(g, n, n)
    E2 = g.gen("E1,%d" % n)
    A, B = zero, zero
    for k in range(2, kmax + 1):
        A = A + g.gen("E1,%d" % k).scale(Scalar(2) * coeffs["b1_%d" % (n - k + 1)])
    for lam in range(kmax + 1, n):
        A = A - g.gen("E%d,%d" % (lam, n)).scale(
            Scalar(2) * coeffs["b%d_%d" % (n - lam + 1, n)])
    for k in range(2, kmax + 1):
        B = B + g.gen("E%d,%d" % (k, n)).scale(coeffs["b%d_%d" % (k, n)])
    for lam in range(kmax + 1, n):
        B = B + g.gen("E1,%d" % lam).scale(coeffs["b1_%d" % lam])
    return SixDimEmbedding(g, {"H1": H1, "E1": E1, "H2": H2, "E2": E2,
                               "A": A, "B": B}, coeffs)


def _sl_diag(g, n, a):
    """E_aa - E_nn in the traceless diagonal basis.

    Only differences of two of these are ever used, so the -E_nn tail
    cancels and the result is the exact E_aa - E_bb.
    """
    comps = {}
    for k in range(a, n):
        comps["H%d" % k] = S_ONE
    return g.element(comps)


def _so_Y(g, a, b):
    if a == b:
        return g.zero()
    if a < b:
        return g.gen("Y%d,%d" % (a, b))
    return -g.gen("Y%d,%d" % (b, a))


def _so_embedding(g, n, coeffs):
    # The Cartan pair must use disjoint index pairs to commute:
    # H1,H2 combine Y_{1,n} with Y_{2,n-1}.
    i = S_I
    H1 = _so_Y(g, 1, n) + _so_Y(g, 2, n - 1)
    E1 = (_so_Y(g, 1, n - 1) - _so_Y(g, 2, n)
          + _so_Y(g, 1, 2).scale(i) + _so_Y(g, n - 1, n).scale(i))
    H2 = _so_Y(g, 1, n) - _so_Y(g, 2, n - 1)
    E2 = (_so_Y(g, 1, n - 1) + _so_Y(g, 2, n)
          - _so_Y(g, 1, 2).scale(i) + _so_Y(g, n - 1, n).scale(i)).scale(srat(1, 2))
    A, B = g.zero(), g.zero()
    for k in range(3, n - 1):
        a = coeffs["a%d" % k]
        A = A + (_so_Y(g, n - 1, k) - _so_Y(g, 2, k).scale(i)).scale(a)
        B = B + (_so_Y(g, k, n) - _so_Y(g, 1, k).scale(i)).scale(a)
    return SixDimEmbedding(g, {"H1": H1, "E1": E1, "H2": H2, "E2": E2,
                               "A": A, "B": B}, coeffs)


def _sp_Z(g, a, b):
    lab = "Z%d,%d" % (a, b)
    if lab in g.index:
        return g.gen(lab)
    sign = 1 if a * b > 0 else -1
    return g.gen("Z%d,%d" % (-b, -a)).scale(Scalar(-sign))


def _sp_embedding(g, n, coeffs):
    H1, E1 = g.zero(), g.zero()
    for k in range(2, n + 1):
        H1 = H1 + _sp_Z(g, k, k)
        E1 = E1 + _sp_Z(g, k, -k)
    H2 = _sp_Z(g, 1, 1)
    E2 = _sp_Z(g, 1, -1)
    A, B = g.zero(), g.zero()
    for k in range(2, n + 1):
        a = coeffs["a%d" % k]
        A = A + _sp_Z(g, 1, k).scale(a)
        B = B + _sp_Z(g, k, -1).scale(a)
    return SixDimEmbedding(g, {"H1": H1, "E1": E1, "H2": H2, "E2": E2,
                               "A": A, "B": B}, coeffs)


# ---------------------------------------------------------------------------
# config-file format for custom algebras
# ---------------------------------------------------------------------------

def parse_algebra_config(text, family="custom"):
    """Parse the key-value config format:

        name: galilei_conformal
        basis: J K1 K2 P0 P1 P2 C0 C1 C2 D
        bracket: K1 P1 = 1 P0
        bracket: D C0 = -1 C0

    Bracket right-hand sides are '+'-joined "scalar label" terms (a bare
    label means coefficient 1); omitted pairs vanish.
    """
    name = family
    labels = None
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError("line %d: expected 'key: value'" % lineno)
        key, _, rest = line.partition(":")
        key, rest = key.strip(), rest.strip()
        if key == "name":
            name = rest
        elif key == "basis":
            labels = rest.split()
        elif key == "bracket":
            if "=" not in rest:
                raise ValueError("line %d: bracket needs '='" % lineno)
            lhs, _, rhs = rest.partition("=")
            pair = lhs.split()
            if len(pair) != 2:
                raise ValueError("line %d: bracket takes two generators" % lineno)
            raw.append((lineno, pair[0], pair[1], rhs.strip()))
        else:
            raise ValueError("line %d: unknown key %r" % (lineno, key))
    if not labels:
        raise ValueError("config has no basis line")
    index = {lab: k for k, lab in enumerate(labels)}
    brackets = {}
    for lineno, x, y, rhs in raw:
        if x not in index or y not in index:
            raise ValueError("line %d: unknown generator in bracket" % lineno)
        i, j = index[x], index[y]
        if i == j:
            raise ValueError("line %d: bracket of generator with itself" % lineno)
        terms = []
        if rhs not in ("", "0"):
            for part in rhs.split("+"):
                toks = part.split()
                if len(toks) == 1:
                    coeff, lab = S_ONE, toks[0]
                elif len(toks) == 2:
                    coeff, lab = Scalar.parse(toks[0]), toks[1]
                else:
                    raise ValueError("line %d: malformed term %r" % (lineno, part))
                if lab not in index:
                    raise ValueError("line %d: unknown generator %r" % (lineno, lab))
                terms.append((index[lab], coeff))
        key = (i, j) if i < j else (j, i)
        if key in brackets:
            raise ValueError("line %d: duplicate bracket for %s %s" % (lineno, x, y))
        if i > j:
            terms = [(k, -c) for k, c in terms]
        brackets[key] = tuple(terms)
    return LieAlgebraDef(name, labels, brackets, family=family)
