"""Twist elements kept as ordered products of exponential factors.

Each factor is exp(coeff * z^zpow * left⊗right) where the legs are small
expression trees over host-algebra elements.  Keeping the factored form
makes inversion exact (reverse the factors, negate the arguments) and lets
the same recipe be evaluated both in the truncated enveloping algebra and
exactly in a matrix representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import Scalar, srat, S_ONE
from .liealg import SIXDIM_LABELS
from .uea import UEAElement, TensorElement

TWIST_KINDS = ("jordanian", "extended", "sixdim", "galilei", "carroll")


class Expr:
    """Expression tree for exponential-factor legs."""
    __slots__ = ()


@dataclass(frozen=True, eq=False)
class EGen(Expr):
    """A host-algebra element (degree one in the enveloping algebra)."""
    elem: object


@dataclass(frozen=True, eq=False)
class EScale(Expr):
    coeff: Scalar
    arg: Expr


@dataclass(frozen=True, eq=False)
class EZ(Expr):
    """Multiplication by z^k."""
    k: int
    arg: Expr


@dataclass(frozen=True, eq=False)
class ESum(Expr):
    args: tuple


@dataclass(frozen=True, eq=False)
class EProd(Expr):
    args: tuple


@dataclass(frozen=True, eq=False)
class EExp(Expr):
    arg: Expr


@dataclass(frozen=True, eq=False)
class ENegLog1m(Expr):
    """-ln(1 - arg); the argument must vanish at z = 0."""
    arg: Expr


def eval_uea(expr, algebra, order):
    """Evaluate a leg expression in U(g) at the given truncation order."""
    if isinstance(expr, EGen):
        return UEAElement.from_lie(expr.elem, order)
    if isinstance(expr, EScale):
        return eval_uea(expr.arg, algebra, order).scale(expr.coeff)
    if isinstance(expr, EZ):
        return eval_uea(expr.arg, algebra, order).zmul(expr.k)
    if isinstance(expr, ESum):
        acc = UEAElement.zero(algebra, order)
        for a in expr.args:
            acc = acc + eval_uea(a, algebra, order)
        return acc
    if isinstance(expr, EProd):
        acc = UEAElement.one(algebra, order)
        for a in expr.args:
            acc = acc * eval_uea(a, algebra, order)
        return acc
    if isinstance(expr, EExp):
        return eval_uea(expr.arg, algebra, order).exp()
    if isinstance(expr, ENegLog1m):
        u = UEAElement.one(algebra, order) - eval_uea(expr.arg, algebra, order)
        return -u.log()
    raise TypeError("unknown expression node %r" % type(expr).__name__)


@dataclass(frozen=True, eq=False)
class TwistFactor:
    """One factor exp(coeff * z^zpow * left⊗right)."""
    left: Expr
    right: Expr
    coeff: Scalar
    zpow: int = 0

    def argument(self, algebra, order):
        l = eval_uea(self.left, algebra, order)
        r = eval_uea(self.right, algebra, order)
        arg = TensorElement.from_pair(l, r).scale(self.coeff)
        return arg.zmul(self.zpow) if self.zpow else arg


class TwistorFactorization:
    """Ordered product of exponential twist factors, F = 1⊗1 + O(z)."""

    def __init__(self, algebra, factors, kind, embedding=None):
        self.algebra = algebra
        self.factors = tuple(factors)
        self.kind = kind
        self.embedding = embedding
        self._flat = {}
        self._inv = {}

    def factor_arguments(self, order):
        return [f.argument(self.algebra, order) for f in self.factors]

    def factor_elements(self, order):
        return [arg.exp() for arg in self.factor_arguments(order)]

    def element(self, order):
        """The twist flattened to a rank-2 TensorElement mod z^(order+1)."""
        flat = self._flat.get(order)
        if flat is None:
            flat = TensorElement.unit(self.algebra, order, 2)
            for arg in self.factor_arguments(order):
                flat = flat * arg.exp()
            self._flat[order] = flat
        return flat

    def inverse(self, order):
        """Exact inverse: reversed product of exp(-argument)."""
        inv = self._inv.get(order)
        if inv is None:
            inv = TensorElement.unit(self.algebra, order, 2)
            for arg in reversed(self.factor_arguments(order)):
                inv = inv * (-arg).exp()
            self._inv[order] = inv
        return inv

    def __repr__(self):
        return "TwistorFactorization(%s on %s, %d factors)" % (
            self.kind, self.algebra.name, len(self.factors))


def invert_twistor(twist, order):
    return twist.inverse(order)


def identity_twistor(algebra):
    return TwistorFactorization(algebra, (), "identity")


def _require_bracket(x, y, expect, what):
    if x.bracket(y) != expect:
        raise ValueError("precondition fails: %s" % what)


def _sigma_expr(e_elem):
    return ENegLog1m(EZ(1, EGen(e_elem)))


def build_jordanian(algebra, H, E):
    """exp(-1/2 H⊗sigma) with sigma = -ln(1 - zE); needs [H,E] = 2E."""
    _require_bracket(H, E, E.scale(2), "[H,E] = 2E")
    factor = TwistFactor(EGen(H), _sigma_expr(E), srat(-1, 2))
    return TwistorFactorization(algebra, (factor,), "jordanian")


def build_extended(algebra, H, E, A, B, alpha=S_ONE, beta=S_ONE,
                   gamma=S_ONE):
    """Extension of the Jordanian twist by a two-element abelian pair.

    The subalgebra relations are [H,E] = dE with d = alpha+beta,
    [H,A] = alpha*A, [H,B] = beta*B, [A,B] = gamma*E and E central among
    {E,A,B}.  The extension factor carries an explicit z so that the
    z = 0 limit is 1⊗1.
    """
    alpha, beta, gamma = Scalar.of(alpha), Scalar.of(beta), Scalar.of(gamma)
    delta = alpha + beta
    if not delta:
        raise ValueError("alpha + beta must be nonzero")
    _require_bracket(H, E, E.scale(delta), "[H,E] = (alpha+beta)E")
    _require_bracket(H, A, A.scale(alpha), "[H,A] = alpha*A")
    _require_bracket(H, B, B.scale(beta), "[H,B] = beta*B")
    _require_bracket(A, B, E.scale(gamma), "[A,B] = gamma*E")
    _require_bracket(E, A, algebra.zero(), "[E,A] = 0")
    _require_bracket(E, B, algebra.zero(), "[E,B] = 0")
    sigma = _sigma_expr(E)
    extension = TwistFactor(
        EGen(A), EProd((EGen(B), EExp(EScale(beta / delta, sigma)))),
        Scalar(-1), 1)
    jordanian = TwistFactor(EGen(H), sigma, -(delta.inv()))
    return TwistorFactorization(algebra, (extension, jordanian), "extended")


def build_sixdim(emb):
    """The six-generator twist

        F = exp(-1/2 H1⊗sigma1) exp(-z A⊗B e^{sigma2/2}) exp(-1/2 H2⊗sigma2)

    with sigma2 = -ln(1 - zE2) and sigma1 = -ln(1 - z(E1 + zB^2 e^{sigma2})).
    The two right factors form the extended twist on {H2,E2,A,B}.
    """
    emb.check()
    sigma2 = _sigma_expr(emb["E2"])
    sigma1 = ENegLog1m(EZ(1, ESum((
        EGen(emb["E1"]),
        EZ(1, EProd((EGen(emb["B"]), EGen(emb["B"]), EExp(sigma2)))),
    ))))
    factors = (
        TwistFactor(EGen(emb["H1"]), sigma1, srat(-1, 2)),
        TwistFactor(EGen(emb["A"]),
                    EProd((EGen(emb["B"]), EExp(EScale(srat(1, 2), sigma2)))),
                    Scalar(-1), 1),
        TwistFactor(EGen(emb["H2"]), sigma2, srat(-1, 2)),
    )
    return TwistorFactorization(emb.algebra, factors, "sixdim", embedding=emb)


def build_contracted(kind, algebra):
    """Twists for the contracted conformal algebras (config-supplied)."""
    for lab in ("K1", "K2", "P0", "P1", "P2", "D"):
        if lab not in algebra.index:
            raise ValueError("algebra lacks generator %r" % lab)
    K1, K2 = algebra.gen("K1"), algebra.gen("K2")
    P1, P2 = algebra.gen("P1"), algebra.gen("P2")
    if kind == "galilei":
        factors = (
            TwistFactor(EGen(K1), EGen(P1), Scalar(-1), 1),
            TwistFactor(EGen(K2), EGen(P2), Scalar(-1), 1),
        )
        return TwistorFactorization(algebra, factors, "galilei")
    if kind == "carroll":
        sigma = _sigma_expr(algebra.gen("P0"))
        factors = (
            TwistFactor(EGen(algebra.gen("D")), sigma, Scalar(-1)),
            TwistFactor(EGen(K1), EProd((EGen(P1), EExp(sigma))), Scalar(-1), 1),
            TwistFactor(EGen(K2), EProd((EGen(P2), EExp(sigma))), Scalar(-1), 1),
        )
        return TwistorFactorization(algebra, factors, "carroll")
    raise ValueError("unknown contracted twist kind %r" % kind)


def sixdim_sigmas(emb, order):
    """sigma1, sigma2 of the six-generator twist as UEAElements."""
    sigma2 = _sigma_expr(emb["E2"])
    sigma1 = ENegLog1m(EZ(1, ESum((
        EGen(emb["E1"]),
        EZ(1, EProd((EGen(emb["B"]), EGen(emb["B"]), EExp(sigma2)))),
    ))))
    return (eval_uea(sigma1, emb.algebra, order),
            eval_uea(sigma2, emb.algebra, order))
