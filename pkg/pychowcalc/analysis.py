"""
Invariant analysis

Euler characteristics by Hirzebruch-Riemann-Roch, degeneracy locus
classes, the Porteous singular class, bigness via top Segre classes,
the banded-determinant polynomials P_n, Hilbert polynomials of
degeneracy loci from the Eagon-Northcott complex, the threefold
Riemann-Roch cross-check and Ulrich numerical reports.

Created on 4 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from pychowcalc.bundles import (
    BundleExpr,
    Det,
    Dual,
    Ext,
    TwistByLine,
    chern,
    chern_character,
    line_bundle,
    segre,
    todd,
    trivial,
)
from pychowcalc.catalog import VarietyModel
from pychowcalc.exceptions import (
    ConsistencyError,
    MalformedInputError,
    UnsupportedError,
)
from pychowcalc.globals import (
    CHECK_BOGOMOLOV,
    CHECK_C2_C1SQ,
    CHECK_C2_DEGREE,
    CHECK_C2_RANK,
    CHECK_CHI,
    CHECK_SLOPE,
    MAX_EN_K,
    MAX_SCHUR_CHECK,
    is_integral,
)
from pychowcalc.ring import GradedClass
from pychowcalc.strings import (
    CHIERROR,
    ENCAPERROR,
    ENCONSTERROR,
    ENTOPERROR,
    GGNOTE,
    KRANGEERROR,
    PORTEOUSNOTE,
    RRDIMERROR,
    RRRANKERROR,
    SCHURDEGERROR,
    SCHURERROR,
    SEGREERROR,
    ULRICHCONDNOTE,
)

LOGGER = logging.getLogger(__name__)


def hrr_integral(X: VarietyModel, e: BundleExpr) -> Fraction:
    """
    The integral of ch(e)*td(X), for any Chern data.
    """

    return X.integrate(chern_character(e, X) * todd(X))


def euler_char(X: VarietyModel, e: BundleExpr) -> Fraction:
    """
    Euler characteristic by HRR, the integral of ch(e)*td(X).

    :param VarietyModel X: variety
    :param BundleExpr e: bundle
    :return: chi (always integral)
    :rtype: Fraction
    :raises: ConsistencyError if the result is not an integer
    """

    value = hrr_integral(X, e)
    if not is_integral(value):
        raise ConsistencyError(CHIERROR.format(value, X.name))
    return value


def structure_chi(X: VarietyModel) -> Fraction:
    """
    chi(O_X).
    """

    return euler_char(X, trivial(X, 1))


def check_k(X: VarietyModel, e: BundleExpr, k: int):
    """
    Validate 1 <= k <= min(rank, n).

    :raises: MalformedInputError
    """

    bound = min(e.rank, X.n)
    if not 1 <= k <= bound:
        raise MalformedInputError(KRANGEERROR.format(bound, k))


@dataclass(frozen=True)
class DegeneracyLocus:
    """
    Class c_k of the degeneracy locus D_{r-k} and its emptiness.
    """

    k: int
    cls: GradedClass
    empty: bool
    notes: tuple = (GGNOTE,)


def degeneracy_class(X: VarietyModel, e: BundleExpr, k: int) -> DegeneracyLocus:
    """
    Class of the locus where r+1-k general sections become dependent.

    :param VarietyModel X: variety
    :param BundleExpr e: globally generated bundle (assumed)
    :param int k: codimension
    :return: locus class and emptiness
    :rtype: DegeneracyLocus
    :raises: MalformedInputError
    """

    check_k(X, e, k)
    ck = chern(e, X).c(k)
    return DegeneracyLocus(k, ck, ck.is_zero())


def porteous_singular_class(X: VarietyModel, e: BundleExpr, k: int) -> GradedClass:
    """
    Class c_{k+1}^2 - c_k*c_{k+2} of the next degeneracy locus.
    """

    check_k(X, e, k)
    cd = chern(e, X)
    return cd.c(k + 1) ** 2 - cd.c(k) * cd.c(k + 2)


def porteous_notes(X: VarietyModel, k: int) -> list:
    """
    Notes attached to a Porteous class (truncation above the dimension).
    """

    if 2 * k + 2 > X.n:
        return [PORTEOUSNOTE.format(2 * k + 2, X.n)]
    return []


@dataclass(frozen=True)
class Bigness:
    """
    Top Segre number of the dual and the resulting bigness verdict.
    """

    s_n: Fraction
    big: bool
    closed_form: Fraction = None


def bigness(X: VarietyModel, e: BundleExpr) -> Bigness:
    """
    s_n(E*) and big iff s_n(E*) > 0. When c2^2 = 0 and every c_i with
    i >= 3 vanishes, the value is also checked against
    c1^n - (n-1)*c1^(n-2)*c2.

    :param VarietyModel X: variety
    :param BundleExpr e: bundle
    :return: bigness data
    :rtype: Bigness
    :raises: ConsistencyError on closed form mismatch
    """

    n = X.n
    s_n = X.integrate(segre(Dual(e), X).part(n))
    cd = chern(e, X)
    closed = None
    if (cd.c(2) ** 2).is_zero() and all(cd.c(i).is_zero() for i in range(3, n + 1)):
        c1, c2 = cd.c(1), cd.c(2)
        if n == 1:
            closed = X.integrate(c1)
        else:
            closed = X.integrate(c1**n - (n - 1) * c1 ** (n - 2) * c2)
        if closed != s_n:
            raise ConsistencyError(SEGREERROR.format(s_n, closed))
    return Bigness(s_n, s_n > 0, closed)


class SchurPoly:
    """
    SchurPoly class.

    Integer polynomial in x1 (weight 1) and x2 (weight 2), stored as
    {(i, j): coefficient} for x1^i * x2^j.
    """

    def __init__(self, terms: dict):
        """
        Constructor.

        :param dict terms: {(i, j): int}
        """

        self._terms = {(int(i), int(j)): int(c) for (i, j), c in terms.items() if c}

    @property
    def terms(self) -> dict:
        """
        Getter for coefficients.
        """

        return dict(self._terms)

    @property
    def weights(self) -> set:
        """
        Set of weights i + 2j occurring.
        """

        return {i + 2 * j for i, j in self._terms}

    def times_x1(self) -> "SchurPoly":
        """
        Multiply by x1.
        """

        return SchurPoly({(i + 1, j): c for (i, j), c in self._terms.items()})

    def times_x2(self) -> "SchurPoly":
        """
        Multiply by x2.
        """

        return SchurPoly({(i, j + 1): c for (i, j), c in self._terms.items()})

    def __add__(self, other: "SchurPoly") -> "SchurPoly":
        terms = dict(self._terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return SchurPoly(terms)

    def __neg__(self) -> "SchurPoly":
        return SchurPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SchurPoly") -> "SchurPoly":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return self._terms == other.terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def reduce_mod_x2_squared(self) -> "SchurPoly":
        """
        Drop every term divisible by x2^2.
        """

        return SchurPoly({(i, j): c for (i, j), c in self._terms.items() if j < 2})

    def evaluate(self, c1: GradedClass, c2: GradedClass) -> GradedClass:
        """
        Substitute classes for x1 and x2.
        """

        result = c1.ring.zero()
        for (i, j), c in self._terms.items():
            result = result + c * c1**i * c2**j
        return result

    def to_dict(self) -> dict:
        """
        Serializable form {"x1^i*x2^j": coefficient}.
        """

        return {_schur_mono(i, j): c for (i, j), c in sorted(self._terms.items(), reverse=True)}

    def __str__(self) -> str:
        text = ""
        for (i, j), c in sorted(self._terms.items(), reverse=True):
            mono = _schur_mono(i, j)
            mag = abs(c)
            body = mono if mag == 1 and mono != "1" else (str(mag) if mono == "1" else f"{mag}*{mono}")
            if not text:
                text = ("-" if c < 0 else "") + body
            else:
                text += (" - " if c < 0 else " + ") + body
        return text or "0"

    def __repr__(self) -> str:
        return f"SchurPoly({self})"


def _schur_mono(i: int, j: int) -> str:
    parts = []
    for name, exp in (("x1", i), ("x2", j)):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts) if parts else "1"


def schur_P(n: int) -> SchurPoly:
    """
    P_n by the recurrence P_n = x1*P_{n-1} - x2*P_{n-2}, P_0 = 1, P_1 = x1.

    The reduction modulo x2^2 is checked against x1^n - (n-1)*x1^(n-2)*x2
    up to n = MAX_SCHUR_CHECK.

    :param int n: n >= 2
    :return: polynomial
    :rtype: SchurPoly
    :raises: MalformedInputError, ConsistencyError
    """

    if n < 2:
        raise MalformedInputError(SCHURDEGERROR.format(n))
    prev, cur = SchurPoly({(0, 0): 1}), SchurPoly({(1, 0): 1})
    for _ in range(2, n + 1):
        prev, cur = cur, cur.times_x1() - prev.times_x2()
    if n <= MAX_SCHUR_CHECK:
        expected = SchurPoly({(n, 0): 1, (n - 2, 1): -(n - 1)})
        reduced = cur.reduce_mod_x2_squared()
        if reduced != expected:
            raise ConsistencyError(SCHURERROR.format(n, reduced, expected))
    return cur


def en_hilbert_polynomial(
    X: VarietyModel, e: BundleExpr, k: int, m_values: list
) -> list:
    """
    chi(O_Z(m)) for the degeneracy locus Z of codimension k, from the
    Eagon-Northcott resolution of its ideal twisted by D = det e:

    chi(O_Z(m)) = chi(O(mH)) - sum_i (-1)^i binom(r-k+i, i) chi(L^{k-1-i} e (-D + mH))

    where L^j is the j-th exterior power. When n = k the values must be
    constant and equal to the integral of c_k.

    :param VarietyModel X: variety
    :param BundleExpr e: bundle
    :param int k: codimension, at most 3
    :param list m_values: twists
    :return: list of chi values
    :rtype: list
    :raises: UnsupportedError, MalformedInputError, ConsistencyError
    """

    if k > MAX_EN_K:
        raise UnsupportedError(ENCAPERROR.format(k))
    check_k(X, e, k)
    r = e.rank
    D = chern(e, X).c(1)
    values = []
    for m in m_values:
        twist = m * X.H - D
        value = euler_char(X, line_bundle(X, m * X.H))
        for i in range(k):
            term = TwistByLine(Ext(k - 1 - i, e), twist)
            value -= (-1) ** i * comb(r - k + i, i) * euler_char(X, term)
        values.append(value)
    if X.n == k and values:
        if len(set(values)) != 1:
            raise ConsistencyError(ENCONSTERROR.format(values))
        top = X.integrate(chern(e, X).c(k))
        if values[0] != top:
            raise ConsistencyError(ENTOPERROR.format(values[0], top))
    LOGGER.debug("Eagon-Northcott values for k=%d: %s", k, values)
    return values


@dataclass(frozen=True)
class RRCheck:
    """
    Both sides of the threefold Riemann-Roch identity for c_3.
    """

    lhs: Fraction
    rhs: Fraction
    chi_Y: Fraction
    chi_Y_hrr: Fraction

    @property
    def passed(self) -> bool:
        """
        True when both sides and both evaluations of chi(O_Y) agree.
        """

        return self.lhs == self.rhs and self.chi_Y == self.chi_Y_hrr


def rr_c3_crosscheck(X: VarietyModel, e: BundleExpr) -> RRCheck:
    """
    On a threefold, with Y the divisor of D = c1(e) and Z the locus of c2:

    lhs = 2*[r*chi(O) - chi(e*) - chi(O_Y) - 1/2 * c2*(c1(X) - c1(e))]
    rhs = c3(e)

    chi(O_Y) is evaluated by the closed form
    (1/12)*D*(D - c1)*(2D - c1) + (1/12)*D*c2 and compared with
    chi(O) - chi(O(-D)).

    :param VarietyModel X: threefold
    :param BundleExpr e: bundle of rank >= 2
    :return: both sides
    :rtype: RRCheck
    :raises: UnsupportedError, MalformedInputError
    """

    if X.n != 3:
        raise UnsupportedError(RRDIMERROR.format(X.n))
    r = e.rank
    if r < 2:
        raise MalformedInputError(RRRANKERROR.format(r))
    cd = chern(e, X)
    d1 = cd.c(1)
    c1X, c2X = X.tangent_chern.part(1), X.tangent_chern.part(2)
    chi_O = structure_chi(X)
    chi_dual = hrr_integral(X, Dual(e))
    chi_Y = X.integrate(
        Fraction(1, 12) * d1 * (d1 - c1X) * (2 * d1 - c1X) + Fraction(1, 12) * d1 * c2X
    )
    chi_Y_hrr = chi_O - euler_char(X, Dual(Det(e)))
    correction = X.integrate(cd.c(2) * (c1X - d1))
    lhs = 2 * (r * chi_O - chi_dual - chi_Y - correction / 2)
    rhs = X.integrate(cd.c(3))
    return RRCheck(lhs, rhs, chi_Y, chi_Y_hrr)


@dataclass(frozen=True)
class UlrichCheck:
    """
    One numerical check of an Ulrich report.
    """

    name: str
    left: object
    right: object
    relation: str
    passed: bool
    note: str = None


@dataclass(frozen=True)
class UlrichReport:
    """
    Named numerical checks for a candidate Ulrich bundle.
    """

    r: int
    d: int
    checks: tuple = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        """
        True when every check passed.
        """

        return all(chk.passed for chk in self.checks)

    def check(self, name: str) -> UlrichCheck:
        """
        Look up a check by name.
        """

        for chk in self.checks:
            if chk.name == name:
                return chk
        raise KeyError(name)


def ulrich_report(X: VarietyModel, e: BundleExpr, r: int = None, d: int = None) -> UlrichReport:
    """
    Numerical consequences of Ulrichness: slope of c1, chi = r*d,
    Bogomolov margin and, on surfaces with c2 = 1, the rank 2 constraints
    c1^2 = 2d - 2 and 2 <= d <= 3.

    :param VarietyModel X: variety
    :param BundleExpr e: bundle
    :param int r: rank (default rank of e)
    :param int d: degree (default catalog degree)
    :return: report
    :rtype: UlrichReport
    """

    r = e.rank if r is None else r
    d = X.d if d is None else d
    n = X.n
    H = X.H
    cd = chern(e, X)
    c1, c2 = cd.c(1), cd.c(2)
    checks = []

    left = X.integrate(c1 * H ** (n - 1))
    right = Fraction(r, 2) * X.integrate((X.K + (n + 1) * H) * H ** (n - 1))
    checks.append(UlrichCheck(CHECK_SLOPE, left, right, "=", left == right))

    chi = euler_char(X, e)
    checks.append(UlrichCheck(CHECK_CHI, chi, r * d, "=", chi == r * d, ULRICHCONDNOTE))

    if n >= 2:
        margin = X.integrate((4 * c2 - c1**2) * H ** (n - 2))
        checks.append(UlrichCheck(CHECK_BOGOMOLOV, margin, 0, ">=", margin >= 0))

    if n == 2 and X.integrate(c2) == 1:
        checks.append(UlrichCheck(CHECK_C2_RANK, r, 2, "=", r == 2))
        c1sq = X.integrate(c1**2)
        checks.append(UlrichCheck(CHECK_C2_C1SQ, c1sq, 2 * d - 2, "=", c1sq == 2 * d - 2))
        checks.append(UlrichCheck(CHECK_C2_DEGREE, d, "[2, 3]", "in", 2 <= d <= 3))

    for chk in checks:
        LOGGER.debug("Ulrich check %s: %s %s %s", chk.name, chk.left, chk.relation, chk.right)
    return UlrichReport(r, d, tuple(checks))
