'''
Created on 13 Sep 2026

Variety catalog tests

@author: semuadmin
'''

import unittest

from pychowcalc.analysis import structure_chi
from pychowcalc.catalog import (
    blown_up_plane,
    curve,
    hirzebruch,
    product,
    projective_bundle_over_curve,
    projective_space,
    quadric,
)
from pychowcalc.exceptions import MalformedInputError, UnsupportedError
from pychowcalc.globals import FAMILY_PRODUCT
from pychowcalc.strings import VERYAMPLENOTE


class CatalogTest(unittest.TestCase):

    def setUp(self):
        pass

    def tearDown(self):
        pass

    def testprojective(self):
        for n in range(1, 6):
            X = projective_space(n)
            self.assertEqual(X.n, n)
            self.assertEqual(X.d, 1)
            self.assertEqual(X.euler_number(), n + 1)
            self.assertEqual(X.K, -(n + 1) * X.H)

    def testquadric(self):
        for n, e in ((2, 4), (3, 4), (4, 6), (5, 6), (6, 8)):
            X = quadric(n)
            self.assertEqual(X.d, 2)
            self.assertEqual(X.euler_number(), e)

    def testmemoized(self):
        self.assertIs(projective_space(2), projective_space(2))
        self.assertIs(curve(1), projective_bundle_over_curve(2, 4, 1).projection(1).base)
        self.assertIs(hirzebruch(1), hirzebruch(1, 1, 2))
        self.assertIs(hirzebruch(1), hirzebruch(1, beta=2))
        self.assertIsNot(hirzebruch(1), hirzebruch(1, 1, 3))

    def testproduct(self):
        X = product([projective_space(1), projective_space(2)])
        self.assertEqual(X.family, FAMILY_PRODUCT)
        self.assertEqual(X.n, 3)
        self.assertEqual(X.d, 3)
        self.assertEqual(X.euler_number(), 6)
        self.assertEqual(X.presentation.generator_names, ("h_1", "h_2"))
        P2 = X.projection(2).base
        self.assertEqual(X.pullback(2, P2.H**2), X.gen("h_2") ** 2)
        with self.assertRaises(MalformedInputError):
            X.projection(3)
        with self.assertRaises(MalformedInputError):
            product([projective_space(1)])

    def testhirzebruch(self):
        X = hirzebruch(1, 1, 2)
        self.assertEqual(X.d, 3)
        self.assertEqual(X.integrate(X.gen("C0") ** 2), -1)
        self.assertEqual(X.integrate(X.K**2), 8)
        self.assertEqual(X.euler_number(), 4)

    def testhirzebruchproduct(self):
        # X0 is P1 x P1 with C0 and f the two rulings
        X0 = hirzebruch(0)
        Y = product([projective_space(1), projective_space(1)])
        images = {"C0": Y.gen("h_1"), "f": Y.gen("h_2")}
        phi = lambda cls: cls.map_to(Y.presentation, images)
        ring = X0.presentation
        monos = [m for d in range(3) for m in ring.basis(d)]
        for a in monos:
            for b in monos:
                A, B = ring.element({a: 1}), ring.element({b: 1})
                self.assertEqual(phi(A * B), phi(A) * phi(B))
                self.assertEqual(X0.integrate(A * B), Y.integrate(phi(A * B)))
        self.assertEqual(phi(X0.H), Y.H)
        self.assertEqual(phi(X0.K), Y.K)
        self.assertEqual(phi(X0.tangent_chern), Y.tangent_chern)

    def testscrollcanonical(self):
        # K = -n xi + (degF + 2g - 2) f integrates to (-1)^(n-1) n^n (2g - 2)
        for n in range(2, 5):
            for degF in range(1, 7):
                for g in range(4):
                    X = projective_bundle_over_curve(n, degF, g)
                    xi, f = X.gen("xi"), X.gen("f")
                    K = -n * xi + (degF + 2 * g - 2) * f
                    self.assertEqual(X.K, K)
                    self.assertEqual(X.integrate(X.K**n), (-1) ** (n - 1) * n**n * (2 * g - 2), X.name)
                    self.assertEqual(X.K, -X.tangent_chern.part(1))

    def testhirzebruchnotnef(self):
        with self.assertLogs("pychowcalc.catalog", level="WARNING"):
            X = hirzebruch(5, 1, 3)
        self.assertEqual(len(X.notes), 2)
        self.assertIn(VERYAMPLENOTE, X.notes)

    def testblowup(self):
        for k in range(0, 9):
            X = blown_up_plane(k)
            self.assertEqual(X.euler_number(), 3 + k)
            self.assertEqual(X.integrate(X.K**2), 9 - k)
        self.assertEqual(blown_up_plane(6).d, 3)
        self.assertEqual(blown_up_plane(0).d, 1)
        self.assertEqual(blown_up_plane(6).notes, ())
        self.assertEqual(len(blown_up_plane(7).notes), 1)
        with self.assertRaises(UnsupportedError):
            blown_up_plane(9)

    def testscroll(self):
        X = projective_bundle_over_curve(3, 4, 0)
        xi, f = X.gen("xi"), X.gen("f")
        self.assertEqual(X.integrate(xi**3), 4)
        self.assertEqual(X.integrate(xi**2 * f), 1)
        self.assertTrue((f**2).is_zero())
        self.assertEqual(X.pullback(1, curve(0).H), f)
        self.assertIn(VERYAMPLENOTE, X.notes)

    def testnoether(self):
        surfaces = [
            projective_space(2),
            quadric(2),
            hirzebruch(0),
            hirzebruch(2),
            projective_bundle_over_curve(2, 3, 0),
            projective_bundle_over_curve(2, 4, 1),
            projective_bundle_over_curve(2, 5, 2),
            product([projective_space(1), projective_space(1)]),
        ] + [blown_up_plane(k) for k in range(9)]
        for X in surfaces:
            lhs = 12 * structure_chi(X)
            rhs = X.integrate(X.K**2) + X.euler_number()
            self.assertEqual(lhs, rhs, X.name)

    def testcurve(self):
        X = curve(3)
        self.assertEqual(X.euler_number(), -4)
        self.assertEqual(structure_chi(X), -2)

    def testunsupported(self):
        with self.assertRaises(UnsupportedError):
            projective_space(0)
        with self.assertRaises(UnsupportedError):
            quadric(1)
        with self.assertRaises(UnsupportedError):
            hirzebruch(-1)
        with self.assertRaises(UnsupportedError):
            projective_bundle_over_curve(1, 2, 0)
        with self.assertRaises(UnsupportedError):
            curve(-1)

    def testdegreeerror(self):
        # H = C0 on X1 has H^2 = -1
        with self.assertRaises(UnsupportedError):
            hirzebruch(1, 1, 0)


if __name__ == "__main__":
    # import sys;sys.argv = ['', 'Test.testName']
    unittest.main()
