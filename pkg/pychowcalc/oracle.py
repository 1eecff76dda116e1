"""
Brute force oracles

Independent verifiers for the closed formulas used elsewhere: Chern root
expansion with sympy for duals, twists and exterior powers, literal
expansion of the banded determinant defining P_n, and factor-by-factor
Kunneth multiplication on product varieties.

Created on 8 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name

import logging
import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from itertools import product as cartesian

import sympy as sp
from sympy import Matrix, Poly, symbols
from sympy.polys.polyfuncs import symmetrize

from pychowcalc.analysis import SchurPoly, schur_P
from pychowcalc.bundles import ChernData, Dual, Ext, TwistByLine, atom, chern
from pychowcalc.catalog import VarietyModel, product, projective_space
from pychowcalc.exceptions import MalformedInputError, UnsupportedError
from pychowcalc.globals import MAX_DET_ORACLE, MAX_ORACLE_RANK
from pychowcalc.ring import GradedClass, RingPresentation
from pychowcalc.strings import EXTRANKERROR

LOGGER = logging.getLogger(__name__)

OP_DUAL = "dual"
OP_TWIST = "twist"
OP_EXT = "ext"


@lru_cache(maxsize=None)
def _universal(op: str, r: int, p: int, n: int) -> tuple:
    """
    Universal Chern polynomials of the transformed bundle in c1..cr (and l,
    the first Chern class of the twisting line bundle), degrees 0..n.

    :return: (rank, tuple of sympy expressions indexed by degree)
    :rtype: tuple
    """

    xs = symbols(f"x1:{r + 1}")
    cs = symbols(f"c1:{r + 1}")
    l, t = symbols("l t")
    if op == OP_DUAL:
        roots = [-x for x in xs]
    elif op == OP_TWIST:
        roots = [x + l for x in xs]
    else:
        roots = [sum(combo) for combo in combinations(xs, p)]
    total = Poly(sp.prod([1 + t * y for y in roots]), t)
    rank = len(roots)
    result = [sp.Integer(1)]
    for i in range(1, min(rank, n) + 1):
        coeff = sp.expand(total.coeff_monomial(t**i))
        sym, rem, defs = symmetrize(coeff, *xs, formal=True)
        if rem != 0:
            raise MalformedInputError(f"Non symmetric root expansion for {op}")
        subs = {s: c for (s, _), c in zip(defs, cs)}
        result.append(sp.expand(sym.subs(subs)))
    return rank, tuple(result)


@lru_cache(maxsize=None)
def _terms(expr, gens: tuple) -> tuple:
    return tuple(Poly(expr, *gens).terms())


def _to_class(expr, ring: RingPresentation, values: dict) -> GradedClass:
    """
    Evaluate a sympy polynomial with class-valued symbols.
    """

    gens = list(values)
    result = ring.zero()
    if not gens:
        return ring.scalar(Fraction(int(sp.numer(expr)), int(sp.denom(expr))))
    for exps, coeff in _terms(expr, tuple(gens)):
        term = ring.scalar(Fraction(int(coeff.p), int(coeff.q)))
        for gen, exp in zip(gens, exps):
            if exp:
                term = term * values[gen] ** exp
        result = result + term
    return result


def roots_chern(
    op: str, r: int, X: VarietyModel, c: ChernData, line: GradedClass = None, p: int = 1
) -> ChernData:
    """
    Chern data of dual, twist or exterior power by formal Chern roots.

    :param str op: "dual", "twist" or "ext"
    :param int r: rank
    :param VarietyModel X: variety
    :param ChernData c: Chern data of the bundle
    :param GradedClass line: c1 of the twisting line bundle (twist only)
    :param int p: exterior power (ext only)
    :return: transformed Chern data
    :rtype: ChernData
    :raises: UnsupportedError
    """

    if r > MAX_ORACLE_RANK:
        raise UnsupportedError(EXTRANKERROR.format(MAX_ORACLE_RANK, r))
    rank, exprs = _universal(op, r, p if op == OP_EXT else 0, X.n)
    ring = X.presentation
    values = {symbols(f"c{i}"): c.c(i) for i in range(1, r + 1)}
    if op == OP_TWIST:
        values[symbols("l")] = line if line is not None else ring.zero()
    total = ring.zero()
    for expr in exprs:
        total = total + _to_class(expr, ring, values)
    return ChernData(rank, total)


def determinant_P(n: int) -> SchurPoly:
    """
    Literal expansion of the n x n banded determinant with x1 on the
    diagonal, x2 above it and 1 below it.

    :param int n: 1 <= n <= MAX_DET_ORACLE
    :return: polynomial
    :rtype: SchurPoly
    :raises: UnsupportedError
    """

    if not 1 <= n <= MAX_DET_ORACLE:
        raise UnsupportedError(f"determinant oracle supports 1 <= n <= {MAX_DET_ORACLE}")
    x1, x2 = symbols("x1 x2")

    def entry(i, j):
        if i == j:
            return x1
        if j == i + 1:
            return x2
        if i == j + 1:
            return 1
        return 0

    det = Matrix(n, n, entry).det(method="berkowitz")
    return SchurPoly(dict(Poly(sp.expand(det), x1, x2).terms()))


def kunneth_product(a: GradedClass, b: GradedClass, X: VarietyModel) -> GradedClass:
    """
    Product of two classes on a product variety computed factor by factor
    in the tensor monomial basis, without the product ring's own rules.
    """

    sizes = [len(f.presentation.generator_names) for f in X.factors]
    result = {}
    for ma, ca in a.coefficients.items():
        for mb, cb in b.coefficients.items():
            forms = []
            offset = 0
            for factor, size in zip(X.factors, sizes):
                mono = tuple(
                    x + y for x, y in zip(ma[offset : offset + size], mb[offset : offset + size])
                )
                forms.append(list(factor.presentation.normal_form(mono).coefficients.items()))
                offset += size
            for combo in cartesian(*forms):
                mono = sum((m for m, _ in combo), ())
                coef = ca * cb
                for _, c in combo:
                    coef *= c
                result[mono] = result.get(mono, 0) + coef
    return GradedClass(X.presentation, result)


def kunneth_check(a: GradedClass, b: GradedClass, X: VarietyModel) -> bool:
    """
    Compare factor-wise multiplication with the product ring.
    """

    return kunneth_product(a, b, X) == a * b


def random_class(ring: RingPresentation, rng: random.Random, low: int = -3, high: int = 3):
    """
    Random class with integer coefficients on every basis monomial.
    """

    coeffs = {}
    for d in range(ring.dimension + 1):
        for mono in ring.basis(d):
            coeffs[mono] = rng.randint(low, high)
    return GradedClass(ring, coeffs)


def random_chern(X: VarietyModel, rank: int, rng: random.Random) -> ChernData:
    """
    Random Chern data of the given rank on X (degree 0 part 1).
    """

    cls = random_class(X.presentation, rng).truncate(min(rank, X.n))
    return ChernData(rank, cls - cls.part(0) + 1)


def sweep(seed: int = 0) -> list:
    """
    Fixed oracle sample run by selftest.

    :param int seed: random seed
    :return: list of (check name, passed)
    :rtype: list
    """

    rng = random.Random(seed)
    results = []
    for n in range(2, MAX_DET_ORACLE + 1):
        results.append((f"determinant_P({n})", determinant_P(n) == schur_P(n)))

    P1xP2 = product([projective_space(1), projective_space(2)])
    H = P1xP2.H
    results.append(("kunneth (h_1+h_2)^3", kunneth_check(H**2, H, P1xP2)))
    for i in range(20):
        a = random_class(P1xP2.presentation, rng)
        b = random_class(P1xP2.presentation, rng)
        results.append((f"kunneth random {i}", kunneth_check(a, b, P1xP2)))

    P3 = projective_space(3)
    for r in (2, 3):
        cd = random_chern(P3, r, rng)
        e = atom(P3, "E", r, cd.total)
        line = P3.H * rng.randint(-2, 2)
        checks = (
            ("dual", chern(Dual(e), P3), roots_chern(OP_DUAL, r, P3, cd)),
            ("twist", chern(TwistByLine(e, line), P3), roots_chern(OP_TWIST, r, P3, cd, line)),
            ("ext2", chern(Ext(2, e), P3), roots_chern(OP_EXT, r, P3, cd, p=2)),
        )
        for label, formula, oracle in checks:
            results.append((f"roots {label} rank {r}", formula == oracle))
    for name, passed in results:
        LOGGER.debug("oracle %s: %s", name, passed)
    return results
