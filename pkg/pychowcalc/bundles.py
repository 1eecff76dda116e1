"""
Bundle calculus

Bundle expression trees (atoms, Whitney sums, duals, twists by line
bundles, determinants, exterior powers and pullbacks) with total Chern
class semantics, plus Segre classes, the Chern character and the Todd
class of a catalog variety.

Created on 3 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from pychowcalc.catalog import VarietyModel
from pychowcalc.exceptions import MalformedInputError, UnsupportedError
from pychowcalc.globals import FAMILY_QUADRIC, MAX_EXT_RANK, todd_log_coefficients
from pychowcalc.ring import GradedClass
from pychowcalc.strings import (
    ATOMRINGERROR,
    ATOMSCALARERROR,
    DIVISORERROR,
    EXTRANKERROR,
    RANKERROR,
    SPINORERROR,
    SPINORINDEXERROR,
)

LOGGER = logging.getLogger(__name__)


class BundleExpr:
    """
    Base class of bundle expression nodes. Every node exposes its rank.
    """

    def __add__(self, other):
        if not isinstance(other, BundleExpr):
            return NotImplemented
        return Sum(self, other)


@dataclass(frozen=True)
class Atom(BundleExpr):
    """
    Bundle given by its rank and total Chern class.
    """

    name: str
    rank: int
    total: GradedClass


@dataclass(frozen=True)
class Sum(BundleExpr):
    """
    Whitney sum.
    """

    left: BundleExpr
    right: BundleExpr

    @property
    def rank(self) -> int:
        return self.left.rank + self.right.rank


@dataclass(frozen=True)
class Dual(BundleExpr):
    """
    Dual bundle.
    """

    inner: BundleExpr

    @property
    def rank(self) -> int:
        return self.inner.rank


@dataclass(frozen=True)
class TwistByLine(BundleExpr):
    """
    Tensor product with the line bundle of a degree 1 class.
    """

    inner: BundleExpr
    divisor: GradedClass

    @property
    def rank(self) -> int:
        return self.inner.rank


@dataclass(frozen=True)
class Det(BundleExpr):
    """
    Determinant line bundle.
    """

    inner: BundleExpr

    @property
    def rank(self) -> int:
        return 1


@dataclass(frozen=True)
class Ext(BundleExpr):
    """
    p-th exterior power.
    """

    p: int
    inner: BundleExpr

    @property
    def rank(self) -> int:
        return comb(self.inner.rank, self.p)


@dataclass(frozen=True)
class Pullback(BundleExpr):
    """
    Pullback along a registered projection of the ambient variety.
    """

    index: int
    inner: BundleExpr

    @property
    def rank(self) -> int:
        return self.inner.rank


@dataclass(frozen=True)
class ChernData:
    """
    Rank and total Chern class of a bundle.
    """

    rank: int
    total: GradedClass

    def c(self, i: int) -> GradedClass:
        """
        i-th Chern class (zero above the rank and the dimension).
        """

        if i > self.rank:
            return self.total.ring.zero()
        return self.total.part(i)


def atom(X: VarietyModel, name: str, rank: int, total: GradedClass) -> Atom:
    """
    Build an atom on X, checking its data.

    :param VarietyModel X: variety
    :param str name: label
    :param int rank: rank >= 0
    :param GradedClass total: total Chern class on X
    :return: atom
    :rtype: Atom
    :raises: MalformedInputError
    """

    if rank < 0:
        raise MalformedInputError(RANKERROR.format(rank))
    if total.ring is not X.presentation:
        raise MalformedInputError(ATOMRINGERROR.format(name, total.ring.name, X.name))
    if total.scalar() != 1:
        raise MalformedInputError(ATOMSCALARERROR.format(name))
    return Atom(name, rank, total.truncate(min(rank, X.n)))


def line_bundle(X: VarietyModel, divisor: GradedClass, name: str = None) -> Atom:
    """
    Line bundle O(D) of a degree 1 class D.
    """

    _check_divisor(X, divisor)
    return atom(X, name or f"O({divisor})", 1, 1 + divisor)


def trivial(X: VarietyModel, rank: int) -> Atom:
    """
    Trivial bundle of the given rank.
    """

    return atom(X, f"O^{rank}", rank, X.presentation.one())


def tangent_bundle(X: VarietyModel) -> Atom:
    """
    Tangent bundle of X.
    """

    return atom(X, f"T{X.name}", X.n, X.tangent_chern)


def direct_sum(*bundles) -> BundleExpr:
    """
    Whitney sum of two or more bundles.
    """

    result = bundles[0]
    for bundle in bundles[1:]:
        result = Sum(result, bundle)
    return result


def spinor_bundle(X: VarietyModel, index: int = 1) -> Atom:
    """
    Spinor bundles registered on Q2, Q3 and Q4.

    On Q2 the two are the line bundles of the rulings, on Q4 the rank 2
    bundles with c2 one of the two middle classes, and on Q3 the single
    rank 2 spinor bundle.

    :param VarietyModel X: quadric
    :param int index: 1 or 2 (always 1 on Q3)
    :return: atom
    :rtype: Atom
    :raises: UnsupportedError, MalformedInputError
    """

    if X.family != FAMILY_QUADRIC or X.n not in (2, 3, 4):
        raise UnsupportedError(SPINORERROR.format(X.name))
    valid = (1,) if X.n == 3 else (1, 2)
    if index not in valid:
        raise MalformedInputError(SPINORINDEXERROR.format(valid, index))
    H = X.H
    if X.n == 2:
        return atom(X, f"S{index}", 1, 1 + X.gen("e1" if index == 1 else "e1p"))
    if X.n == 3:
        return atom(X, "S", 2, 1 + H + X.gen("b2"))
    return atom(X, f"S{index}", 2, 1 + H + X.gen("e2" if index == 1 else "e2p"))


def _check_divisor(X: VarietyModel, divisor: GradedClass):
    if divisor.ring is not X.presentation or not divisor.is_homogeneous(1):
        raise MalformedInputError(DIVISORERROR.format(divisor))


def power_sums(cd: ChernData, n: int) -> list:
    """
    Newton power sums p_0..p_n of the Chern roots.

    :param ChernData cd: Chern data
    :param int n: highest degree
    :return: list of GradedClass, p_d homogeneous of degree d
    :rtype: list
    """

    ring = cd.total.ring
    p = [ring.scalar(cd.rank)]
    for d in range(1, n + 1):
        acc = (-1) ** (d - 1) * d * cd.c(d)
        for i in range(1, d):
            acc = acc + (-1) ** (i - 1) * cd.c(i) * p[d - i]
        p.append(acc)
    return p


def chern_from_power_sums(p: list, rank: int) -> ChernData:
    """
    Inverse Newton identities: elementary symmetric functions of the roots.

    :param list p: power sums p_0..p_n
    :param int rank: rank of the result
    :return: Chern data
    :rtype: ChernData
    """

    ring = p[0].ring
    e = [ring.one()]
    for d in range(1, len(p)):
        acc = ring.zero()
        for i in range(1, d + 1):
            acc = acc + (-1) ** (i - 1) * e[d - i] * p[i]
        e.append(acc * Fraction(1, d))
    total = ring.zero()
    for d, cls in enumerate(e):
        if d <= rank:
            total = total + cls
    return ChernData(rank, total)


def _exterior_power(cd: ChernData, p: int, n: int) -> ChernData:
    """
    Lambda^p via the lambda-ring recursion on power sums:
    lambda^j = (1/j) sum_{i=1..j} (-1)^{i-1} psi^i * lambda^{j-i},
    where the Adams operation psi^i scales the degree d power sum by i^d.
    """

    if cd.rank > MAX_EXT_RANK:
        raise UnsupportedError(EXTRANKERROR.format(MAX_EXT_RANK, cd.rank))
    ring = cd.total.ring
    base = power_sums(cd, n)
    lam = [[ring.scalar(1)] + [ring.zero()] * n]
    for j in range(1, p + 1):
        acc = [ring.zero()] * (n + 1)
        for i in range(1, j + 1):
            sign = (-1) ** (i - 1)
            psi = [base[d] * i**d for d in range(n + 1)]
            prev = lam[j - i]
            # degree d part of psi^i(E) * lambda^{j-i}, both in power-sum form
            for d in range(n + 1):
                for a in range(d + 1):
                    acc[d] = acc[d] + sign * _ps_product(psi, prev, a, d - a)
        lam.append([x * Fraction(1, j) for x in acc])
    return chern_from_power_sums(lam[p], comb(cd.rank, p))


def _ps_product(left: list, right: list, a: int, b: int) -> GradedClass:
    """
    Degree a+b power sum of a product of virtual bundles whose power sums
    are given: p_{a+b}(E*F) collects binom(a+b, a) p_a(E) p_b(F).
    """

    return comb(a + b, a) * left[a] * right[b]


def chern(e: BundleExpr, X: VarietyModel) -> ChernData:
    """
    Rank and total Chern class of a bundle expression on X.

    :param BundleExpr e: expression
    :param VarietyModel X: ambient variety
    :return: Chern data
    :rtype: ChernData
    :raises: MalformedInputError, UnsupportedError
    """

    n = X.n
    if isinstance(e, Atom):
        if e.total.ring is not X.presentation:
            raise MalformedInputError(ATOMRINGERROR.format(e.name, e.total.ring.name, X.name))
        return ChernData(e.rank, e.total.truncate(min(e.rank, n)))
    if isinstance(e, Sum):
        left, right = chern(e.left, X), chern(e.right, X)
        return ChernData(left.rank + right.rank, (left.total * right.total).truncate(n))
    if isinstance(e, Dual):
        inner = chern(e.inner, X)
        total = X.presentation.zero()
        for i in range(inner.rank + 1):
            total = total + (-1) ** i * inner.c(i)
        return ChernData(inner.rank, total)
    if isinstance(e, TwistByLine):
        _check_divisor(X, e.divisor)
        inner = chern(e.inner, X)
        r = inner.rank
        total = X.presentation.one()
        for k in range(1, min(r, n) + 1):
            for i in range(k + 1):
                total = total + comb(r - i, k - i) * inner.c(i) * e.divisor ** (k - i)
        return ChernData(r, total)
    if isinstance(e, Det):
        inner = chern(e.inner, X)
        return ChernData(1, 1 + inner.c(1))
    if isinstance(e, Ext):
        inner = chern(e.inner, X)
        if e.p < 0:
            raise MalformedInputError(RANKERROR.format(e.p))
        if inner.rank > MAX_EXT_RANK:
            raise UnsupportedError(EXTRANKERROR.format(MAX_EXT_RANK, inner.rank))
        if e.p == 0:
            return ChernData(1, X.presentation.one())
        if e.p > inner.rank:
            return ChernData(0, X.presentation.one())
        return _exterior_power(inner, e.p, n)
    if isinstance(e, Pullback):
        proj = X.projection(e.index)
        inner = chern(e.inner, proj.base)
        return ChernData(inner.rank, X.pullback(e.index, inner.total).truncate(n))
    raise MalformedInputError(f"Not a bundle expression: {e!r}")


def segre(e: BundleExpr, X: VarietyModel) -> GradedClass:
    """
    Total Segre class, the inverse of the total Chern class.
    """

    return chern(e, X).total.inverse()


def chern_character(e: BundleExpr, X: VarietyModel) -> GradedClass:
    """
    Chern character sum_d p_d / d!.
    """

    p = power_sums(chern(e, X), X.n)
    total = X.presentation.zero()
    for d, cls in enumerate(p):
        total = total + cls * Fraction(1, factorial(d))
    return total


def todd(X: VarietyModel) -> GradedClass:
    """
    Todd class of X, the exponential of sum_k a_k p_k(T_X) where
    a_k are the coefficients of log(x / (1 - exp(-x))).
    """

    p = power_sums(ChernData(X.n, X.tangent_chern), X.n)
    coeffs = todd_log_coefficients(X.n)
    log_td = X.presentation.zero()
    for k in range(1, X.n + 1):
        if coeffs[k]:
            log_td = log_td + coeffs[k] * p[k]
    return log_td.exp()
