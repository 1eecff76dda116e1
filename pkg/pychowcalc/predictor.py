"""
Connectedness predictor

Rule cascade turning the Chern data of a globally generated bundle plus
user-supplied cohomological inputs (s = h0(E*), h = h1(E*)) and flags
into a verdict on the number of connected components of the degeneracy
locus of codimension k.

Created on 5 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name

import logging
from dataclasses import dataclass, field

from pychowcalc.analysis import check_k
from pychowcalc.bundles import BundleExpr, Pullback, chern
from pychowcalc.catalog import VarietyModel
from pychowcalc.exceptions import InconsistentInputsError, MalformedInputError
from pychowcalc.globals import (
    ATLEAST,
    CONNECTED,
    DISCONNECTED,
    EMPTY,
    EXACTLY,
    FAMILY_PRODUCT,
    FAMILY_PROJECTIVE,
    FLAG_ACM,
    FLAG_H1_ZERO,
    FLAG_NGE4,
    FLAG_ULRICH,
    FLAG_VBIG,
    FLAGS,
    INCONCLUSIVE,
    RULE_CODIM3_BOUND,
    RULE_CODIM3_EXACT,
    RULE_CONNECTED,
    RULE_DISCONNECTED,
    RULE_EMPTY,
    RULE_EXACT_H_POSITIVE,
    RULE_EXACT_H_ZERO,
    RULE_LOWER_BOUND,
    RULE_PLANES_PATTERN,
    RULE_ULRICH_BOUND,
    RULE_ULRICH_CONNECTED,
    RULE_VBIG,
)
from pychowcalc.strings import (
    C1CUBENOTE,
    CONFLICTERROR,
    FLAGERROR,
    GGNOTE,
    NEGINPUTERROR,
    NGE4ERROR,
    RANKMISMATCHERROR,
    REDUCEDNOTE,
    RKSERROR,
    ULRICHSERROR,
)

LOGGER = logging.getLogger(__name__)

# strongest conclusion first
PRIORITY = (EMPTY, EXACTLY, CONNECTED, DISCONNECTED, ATLEAST, INCONCLUSIVE)


@dataclass(frozen=True)
class PredictorInput:
    """
    Hypotheses of the predictor.
    """

    k: int
    s: int = 0
    h: int = 0
    flags: frozenset = frozenset()
    r: int = None

    def validate(self, X: VarietyModel, e: BundleExpr) -> int:
        """
        Check the input invariants against the bundle.

        :return: the rank r
        :rtype: int
        :raises: MalformedInputError, InconsistentInputsError
        """

        for name, value in (("s", self.s), ("h", self.h)):
            if value < 0:
                raise MalformedInputError(NEGINPUTERROR.format(name, value))
        for flag in self.flags:
            if flag not in FLAGS:
                raise MalformedInputError(FLAGERROR.format(flag, ", ".join(FLAGS)))
        if self.r is not None and self.r != e.rank:
            raise MalformedInputError(RANKMISMATCHERROR.format(self.r, e.rank))
        check_k(X, e, self.k)
        if FLAG_NGE4 in self.flags and X.n < 4:
            raise InconsistentInputsError(NGE4ERROR.format(X.n))
        return e.rank


@dataclass(frozen=True)
class Conclusion:
    """
    A single conclusion drawn by one rule.
    """

    kind: str
    count: int
    rule: str

    def to_dict(self) -> dict:
        """
        Serializable form.
        """

        return {"kind": self.kind, "count": self.count, "rule": self.rule}


@dataclass(frozen=True)
class Verdict:
    """
    Final verdict with the rules that fired, the inputs they consumed and
    the standing assumptions.
    """

    kind: str
    count: int = None
    conclusions: tuple = ()
    inputs: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def citations(self) -> list:
        """
        Rule identifiers in firing order.
        """

        return [c.rule for c in self.conclusions]

    def to_dict(self) -> dict:
        """
        Tagged record form.
        """

        return {"kind": self.kind, "count": self.count}


def _conflict(a: Conclusion, b: Conclusion) -> bool:
    pair = {a.kind, b.kind}
    if pair == {CONNECTED, DISCONNECTED}:
        return True
    if CONNECTED in pair and pair & {ATLEAST, EXACTLY}:
        other = a if a.kind != CONNECTED else b
        return other.count >= 2
    if a.kind == EXACTLY and b.kind == EXACTLY:
        return a.count != b.count
    if pair == {EXACTLY, ATLEAST}:
        exact, bound = (a, b) if a.kind == EXACTLY else (b, a)
        return exact.count < bound.count
    if pair == {EXACTLY, DISCONNECTED}:
        exact = a if a.kind == EXACTLY else b
        return exact.count == 1
    return False


def planes_pattern_count(X: VarietyModel, e: BundleExpr):
    """
    Generic component count for pullbacks of O(2)^r from one factor of
    P2 x P2: the count 2r(r-1) is the integral of c2 over the base.

    :return: count, or None when the pattern does not apply
    """

    if X.family != FAMILY_PRODUCT or len(X.factors) != 2:
        return None
    if not all(f.family == FAMILY_PROJECTIVE and f.n == 2 for f in X.factors):
        return None
    if not isinstance(e, Pullback):
        return None
    base = X.projection(e.index).base
    r = e.rank
    cd = chern(e.inner, base)
    if cd.total != (1 + 2 * base.H) ** r:
        return None
    count = base.integrate(cd.c(2))
    if count != 2 * r * (r - 1):
        return None
    return int(count)


def predict_components(X: VarietyModel, e: BundleExpr, inp: PredictorInput) -> Verdict:
    """
    Run the rule cascade.

    :param VarietyModel X: variety
    :param BundleExpr e: globally generated bundle (assumed)
    :param PredictorInput inp: hypotheses
    :return: verdict
    :rtype: Verdict
    :raises: MalformedInputError, InconsistentInputsError
    """

    r = inp.validate(X, e)
    k, s, h, flags = inp.k, inp.s, inp.h, inp.flags
    cd = chern(e, X)
    c = cd.c
    inputs = {"k": k, "r": r, "s": s, "h": h, "flags": sorted(flags)}
    notes = [GGNOTE, REDUCEDNOTE]

    if c(k).is_zero():
        return Verdict(EMPTY, None, (Conclusion(EMPTY, None, RULE_EMPTY),), inputs, tuple(notes))

    if r < k + s:
        raise InconsistentInputsError(RKSERROR.format(r, k + s, k))
    if FLAG_ULRICH in flags and s > 0 and not c(2).is_zero():
        raise InconsistentInputsError(ULRICHSERROR.format(s))

    found = []

    def add(kind, count, rule):
        found.append(Conclusion(kind, count, rule))
        LOGGER.debug("Rule %s fired: %s %s", rule, kind, count)

    if k in (1, 2):
        if not c(k + 1).is_zero():
            add(CONNECTED, None, RULE_CONNECTED)
        else:
            add(ATLEAST, r + 1 - k - s, RULE_LOWER_BOUND)
            if r >= k + s + 1:
                add(DISCONNECTED, None, RULE_DISCONNECTED)
            if k == 2:
                if not (c(1) ** 3).is_zero():
                    if h == 0:
                        add(EXACTLY, r - s - 1, RULE_EXACT_H_ZERO)
                    elif s == 0 and FLAG_H1_ZERO in flags:
                        add(EXACTLY, r + h - 1, RULE_EXACT_H_POSITIVE)
                else:
                    notes.append(C1CUBENOTE)

    if k == 3 and FLAG_H1_ZERO in flags and c(4).is_zero():
        add(ATLEAST, r - 2 - s, RULE_CODIM3_BOUND)
        if FLAG_ACM in flags and FLAG_NGE4 in flags:
            add(EXACTLY, r - s - 2, RULE_CODIM3_EXACT)

    if FLAG_VBIG in flags and k <= min(2, r - 1, X.n - 1):
        add(CONNECTED, None, RULE_VBIG)

    if FLAG_ULRICH in flags and k == 2 and r >= 3:
        if c(3).is_zero():
            add(ATLEAST, r - 1, RULE_ULRICH_BOUND)
        else:
            add(CONNECTED, None, RULE_ULRICH_CONNECTED)

    if FLAG_ULRICH in flags and k == 2:
        count = planes_pattern_count(X, e)
        if count is not None:
            add(EXACTLY, count, RULE_PLANES_PATTERN)

    for i, a in enumerate(found):
        for b in found[i + 1 :]:
            if _conflict(a, b):
                raise InconsistentInputsError(
                    CONFLICTERROR.format(a.kind, a.rule, b.kind, b.rule)
                )

    if not found:
        return Verdict(INCONCLUSIVE, None, (), inputs, tuple(notes))
    best = min(found, key=lambda c_: PRIORITY.index(c_.kind))
    count = best.count
    if best.kind == DISCONNECTED:
        count = max([f.count for f in found if f.kind == ATLEAST] + [2])
    elif best.kind == ATLEAST:
        count = max(f.count for f in found if f.kind == ATLEAST)
    return Verdict(best.kind, count, tuple(found), inputs, tuple(notes))
