'''
Created on 15 Sep 2026

Invariant analysis tests

@author: semuadmin
'''

import random
import unittest
from fractions import Fraction

from pychowcalc.analysis import (
    bigness,
    check_k,
    degeneracy_class,
    en_hilbert_polynomial,
    euler_char,
    hrr_integral,
    porteous_notes,
    porteous_singular_class,
    rr_c3_crosscheck,
    schur_P,
    structure_chi,
    ulrich_report,
)
from pychowcalc.bundles import (
    Dual,
    Ext,
    Pullback,
    TwistByLine,
    atom,
    chern,
    direct_sum,
    line_bundle,
    segre,
    spinor_bundle,
    tangent_bundle,
    trivial,
)
from pychowcalc.catalog import (
    blown_up_plane,
    hirzebruch,
    product,
    projective_bundle_over_curve,
    projective_space,
    quadric,
)
from pychowcalc.exceptions import ConsistencyError, MalformedInputError, UnsupportedError
from pychowcalc.globals import CHECK_BOGOMOLOV, CHECK_C2_C1SQ, CHECK_CHI, CHECK_SLOPE
from pychowcalc.oracle import random_chern
from pychowcalc.strings import GGNOTE


def random_split_bundle(X, rank, rng):
    """
    Sum of line bundles with random degree 1 classes, optionally dualized,
    twisted or raised to an exterior power.
    """

    gens = [X.presentation.normal_form(m) for m in X.presentation.basis(1)]

    def divisor():
        D = X.presentation.zero()
        for g in gens:
            D = D + rng.randint(-2, 2) * g
        return D

    lines = [line_bundle(X, divisor()) for _ in range(rank)]
    E = direct_sum(*lines) if rank > 1 else lines[0]
    choice = rng.randint(0, 3)
    if choice == 1:
        E = Dual(E)
    elif choice == 2:
        E = TwistByLine(E, divisor())
    elif choice == 3 and rank >= 3:
        E = Ext(2, E)
    return E


class AnalysisTest(unittest.TestCase):

    def setUp(self):
        self.P2 = projective_space(2)
        self.P3 = projective_space(3)

    def tearDown(self):
        pass

    def testeulerchar(self):
        h = self.P2.H
        for a in range(-3, 5):
            expected = Fraction((a + 1) * (a + 2), 2)
            self.assertEqual(euler_char(self.P2, line_bundle(self.P2, a * h)), expected)
        self.assertEqual(euler_char(self.P3, tangent_bundle(self.P3)), 15)
        self.assertEqual(structure_chi(quadric(4)), 1)

    def testintegrality(self):
        rng = random.Random(200)
        varieties = [
            projective_space(2),
            projective_space(3),
            quadric(3),
            quadric(4),
            hirzebruch(1),
            blown_up_plane(3),
            projective_bundle_over_curve(3, 4, 1),
            product([projective_space(1), projective_space(2)]),
        ]
        for i in range(200):
            X = varieties[i % len(varieties)]
            E = random_split_bundle(X, rng.randint(1, 3), rng)
            chi = euler_char(X, E)
            self.assertEqual(chi.denominator, 1, f"{X.name} {E}")

    def testcheckk(self):
        E = direct_sum(line_bundle(self.P2, self.P2.H), line_bundle(self.P2, self.P2.H))
        check_k(self.P2, E, 2)
        for k in (0, 3):
            with self.assertRaises(MalformedInputError):
                check_k(self.P2, E, k)

    def testdegeneracy(self):
        h = self.P3.H
        E = direct_sum(line_bundle(self.P3, h), line_bundle(self.P3, h))
        locus = degeneracy_class(self.P3, E, 2)
        self.assertEqual(locus.cls, h**2)
        self.assertFalse(locus.empty)
        self.assertEqual(locus.notes, (GGNOTE,))
        self.assertTrue(degeneracy_class(self.P3, trivial(self.P3, 2), 2).empty)

    def testporteous(self):
        P4 = projective_space(4)
        h = P4.H
        E = direct_sum(*[line_bundle(P4, h) for _ in range(3)])
        self.assertEqual(porteous_singular_class(P4, E, 1), 6 * h**4)
        for k in (0, 4, -1):
            with self.assertRaises(MalformedInputError):
                porteous_singular_class(P4, E, k)
        self.assertEqual(porteous_notes(P4, 1), [])
        self.assertEqual(len(porteous_notes(self.P3, 1)), 1)

    def testbignessgrid(self):
        for g in (0, 1, 2):
            for n in (2, 3, 4):
                for r in (2, 3):
                    degF = n + g + 1
                    X = projective_bundle_over_curve(n, degF, g)
                    xi, f = X.gen("xi"), X.gen("f")
                    N = (r - 1) * (degF + g - 1)
                    E = atom(X, "E", r, (1 + xi + (g - 1) * f) * (1 + N * f))
                    cd = chern(E, X)
                    self.assertTrue((cd.c(2) ** 2).is_zero())
                    for i in range(3, n + 1):
                        self.assertTrue(cd.c(i).is_zero())
                    big = bigness(X, E)
                    expected = r * degF + (r + n - 1) * (g - 1)
                    self.assertEqual(big.s_n, expected, f"g={g} n={n} r={r}")
                    self.assertEqual(big.closed_form, expected)
                    self.assertEqual(big.big, expected > 0)

    def testbignessnoclosedform(self):
        # c3 of the tangent bundle of P3 is nonzero
        E = tangent_bundle(self.P3)
        big = bigness(self.P3, E)
        self.assertIsNone(big.closed_form)
        self.assertEqual(big.s_n, self.P3.integrate(segre(Dual(E), self.P3).part(3)))

    def testschur(self):
        self.assertEqual(str(schur_P(2)), "x1^2 - x2")
        self.assertEqual(str(schur_P(5)), "x1^5 - 4*x1^3*x2 + 3*x1*x2^2")
        for n in range(2, 13):
            P = schur_P(n)
            self.assertEqual(
                P.reduce_mod_x2_squared().terms, {(n, 0): 1, (n - 2, 1): -(n - 1)}
            )
            self.assertEqual(P.weights, {n})
        with self.assertRaises(MalformedInputError):
            schur_P(1)

    def testschursegre(self):
        # P_n(c1, c2) is the degree n Segre class of the dual of a rank 2 bundle
        P4 = projective_space(4)
        h = P4.H
        E = atom(P4, "E", 2, 1 + 3 * h + 4 * h**2)
        cd = chern(E, P4)
        for n in range(2, 5):
            self.assertEqual(
                schur_P(n).evaluate(cd.c(1), cd.c(2)), segre(Dual(E), P4).part(n)
            )

    def testenhilbert(self):
        h = self.P2.H
        E = direct_sum(line_bundle(self.P2, h), line_bundle(self.P2, h))
        self.assertEqual(en_hilbert_polynomial(self.P2, E, 2, [0, 1, 2, 3]), [1, 1, 1, 1])
        self.assertEqual(en_hilbert_polynomial(self.P2, E, 1, [0, 1, 2]), [1, 3, 5])
        F = direct_sum(line_bundle(self.P3, self.P3.H), line_bundle(self.P3, self.P3.H))
        self.assertEqual(en_hilbert_polynomial(self.P3, F, 2, [0, 1, 2]), [1, 2, 3])
        X1 = hirzebruch(1, 1, 2)
        L = line_bundle(X1, X1.gen("C0") + X1.gen("f"))
        self.assertEqual(en_hilbert_polynomial(X1, L + L, 2, [0, 2]), [1, 1])

    def testenhilbertcap(self):
        P4 = projective_space(4)
        E = direct_sum(*[line_bundle(P4, P4.H) for _ in range(4)])
        with self.assertRaises(UnsupportedError):
            en_hilbert_polynomial(P4, E, 4, [0])

    def testrrc3(self):
        h = self.P3.H
        E = direct_sum(line_bundle(self.P3, h), line_bundle(self.P3, 2 * h))
        chk = rr_c3_crosscheck(self.P3, E)
        self.assertEqual((chk.lhs, chk.rhs), (0, 0))
        self.assertTrue(chk.passed)
        chk = rr_c3_crosscheck(self.P3, tangent_bundle(self.P3))
        self.assertEqual((chk.lhs, chk.rhs), (4, 4))
        self.assertEqual(chk.chi_Y, 2)

    def testrrc3random(self):
        rng = random.Random(25)
        P1, P2 = projective_space(1), projective_space(2)
        threefolds = [
            projective_space(3),
            quadric(3),
            product([P1, P2]),
            product([P1, P1, P1]),
            projective_bundle_over_curve(3, 5, 0),
            projective_bundle_over_curve(3, 4, 1),
        ]
        for i in range(48):
            X = threefolds[i % len(threefolds)]
            r = rng.randint(2, 4)
            E = atom(X, "E", r, random_chern(X, r, rng).total)
            self.assertTrue(rr_c3_crosscheck(X, E).passed, f"{X.name} {chern(E, X).total}")
        Q3 = quadric(3)
        b2 = Q3.gen("b2")
        for c in (1 + Q3.H + b2, 1 + 3 * b2, 1 - Q3.H + 5 * b2 + 2 * Q3.gen("b3")):
            chk = rr_c3_crosscheck(Q3, atom(Q3, "F", 3, c))
            self.assertTrue(chk.passed, str(c))
        self.assertTrue(rr_c3_crosscheck(Q3, spinor_bundle(Q3)).passed)

    def testrrc3nonintegral(self):
        # c1 c2 odd: no rank 2 bundle on P3 has these classes, but the identity still holds
        h = self.P3.H
        E = atom(self.P3, "E", 2, 1 + h + h**2)
        self.assertEqual(hrr_integral(self.P3, E), Fraction(5, 2))
        self.assertEqual(hrr_integral(self.P3, Dual(E)), Fraction(-1, 2))
        with self.assertRaises(ConsistencyError):
            euler_char(self.P3, E)
        chk = rr_c3_crosscheck(self.P3, E)
        self.assertEqual((chk.lhs, chk.rhs, chk.chi_Y), (0, 0, 1))
        self.assertTrue(chk.passed)

    def testrrc3errors(self):
        with self.assertRaises(UnsupportedError):
            rr_c3_crosscheck(self.P2, tangent_bundle(self.P2))
        with self.assertRaises(MalformedInputError):
            rr_c3_crosscheck(self.P3, line_bundle(self.P3, self.P3.H))

    def testulrichsurfaces(self):
        X1 = hirzebruch(1, 1, 2)
        L = line_bundle(X1, X1.gen("C0") + X1.gen("f"))
        rep = ulrich_report(X1, L + L)
        self.assertTrue(rep.all_passed)
        self.assertEqual((rep.r, rep.d), (2, 3))
        self.assertEqual(rep.check(CHECK_CHI).left, 6)
        self.assertEqual(rep.check(CHECK_BOGOMOLOV).left, 0)
        self.assertEqual(rep.check(CHECK_C2_C1SQ).left, 4)

        Q2 = quadric(2)
        rep = ulrich_report(Q2, spinor_bundle(Q2, 1) + spinor_bundle(Q2, 2))
        self.assertTrue(rep.all_passed)
        self.assertEqual(rep.check(CHECK_C2_C1SQ).left, 2)

        S = blown_up_plane(6)
        T = line_bundle(S, S.gen("l"))
        rep = ulrich_report(S, T + T)
        self.assertTrue(rep.all_passed)
        self.assertEqual(rep.d, 3)

    def testulrichthreefold(self):
        P1, P2 = projective_space(1), projective_space(2)
        X = product([P1, P2])
        E = Pullback(2, direct_sum(line_bundle(P2, P2.H), line_bundle(P2, P2.H)))
        rep = ulrich_report(X, E)
        self.assertEqual(rep.d, 3)
        self.assertEqual(rep.check(CHECK_BOGOMOLOV).left, 6 - 2 * rep.d)
        self.assertTrue(rep.all_passed)
        self.assertEqual(len(rep.checks), 3)

    def testulrichfails(self):
        h = self.P2.H
        E = direct_sum(line_bundle(self.P2, h), line_bundle(self.P2, h))
        rep = ulrich_report(self.P2, E)
        self.assertFalse(rep.check(CHECK_SLOPE).passed)
        self.assertFalse(rep.all_passed)
        with self.assertRaises(KeyError):
            rep.check("nonexistent")

    def testulrichoverrides(self):
        rep = ulrich_report(self.P2, trivial(self.P2, 2), r=2, d=1)
        self.assertEqual(rep.check(CHECK_CHI).right, 2)
        self.assertTrue(rep.check(CHECK_CHI).passed)


if __name__ == "__main__":
    # import sys;sys.argv = ['', 'Test.testName']
    unittest.main()
