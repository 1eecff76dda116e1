'''
Created on 16 Sep 2026

Connectedness predictor tests

@author: semuadmin
'''

import random
import unittest

from pychowcalc.bundles import Pullback, atom, chern, direct_sum, line_bundle, trivial
from pychowcalc.catalog import (
    blown_up_plane,
    hirzebruch,
    product,
    projective_bundle_over_curve,
    projective_space,
    quadric,
)
from pychowcalc.exceptions import InconsistentInputsError, MalformedInputError
from pychowcalc.globals import (
    ATLEAST,
    CONNECTED,
    DISCONNECTED,
    EMPTY,
    EXACTLY,
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
    RULE_VBIG,
)
from pychowcalc.oracle import random_chern
from pychowcalc.predictor import (
    Conclusion,
    PredictorInput,
    planes_pattern_count,
    predict_components,
)
from pychowcalc.strings import C1CUBENOTE, GGNOTE, REDUCEDNOTE


class PredictorTest(unittest.TestCase):

    def setUp(self):
        self.P2 = projective_space(2)
        self.P3 = projective_space(3)
        self.P4 = projective_space(4)
        self.X = product([self.P2, self.P2])

    def tearDown(self):
        pass

    def _split(self, X, *degrees):
        return direct_sum(*[line_bundle(X, a * X.H) for a in degrees])

    def _pulled(self, *degrees):
        return Pullback(1, self._split(self.P2, *degrees))

    def testexactpositive(self):
        F = atom(self.P4, "F", 2, 1 + self.P4.H + 2 * self.P4.H**2)
        inp = PredictorInput(2, s=0, h=1, flags=frozenset({FLAG_H1_ZERO}))
        res = predict_components(self.P4, F, inp)
        self.assertEqual((res.kind, res.count), (EXACTLY, 2))
        self.assertEqual(res.citations, [RULE_LOWER_BOUND, RULE_EXACT_H_POSITIVE])
        self.assertEqual(res.notes, (GGNOTE, REDUCEDNOTE))
        self.assertEqual(
            res.inputs, {"k": 2, "r": 2, "s": 0, "h": 1, "flags": [FLAG_H1_ZERO]}
        )

    def testexactzero(self):
        F = atom(self.P4, "F", 2, 1 + self.P4.H + 2 * self.P4.H**2)
        res = predict_components(self.P4, F, PredictorInput(2))
        self.assertEqual((res.kind, res.count), (EXACTLY, 1))
        self.assertEqual(res.citations, [RULE_LOWER_BOUND, RULE_EXACT_H_ZERO])

    def testc1cube(self):
        # c1 = 0 gives no exact count, whatever h is
        F = atom(self.P4, "F", 2, 1 + self.P4.H**2)
        for h in (0, 1, 3):
            res = predict_components(self.P4, F, PredictorInput(2, h=h))
            self.assertEqual((res.kind, res.count), (ATLEAST, 1))
            self.assertEqual(res.citations, [RULE_LOWER_BOUND])
            self.assertIn(C1CUBENOTE, res.notes)

    def testrandomverdicts(self):
        # Exactly(m >= 2) is never issued alongside Connected, and Empty means c_k = 0
        rng = random.Random(53)
        varieties = [
            self.P2,
            self.P3,
            self.P4,
            quadric(4),
            self.X,
            product([projective_space(1), self.P2]),
            hirzebruch(1),
            blown_up_plane(6),
            projective_bundle_over_curve(3, 4, 0),
        ]
        seen = set()
        for _ in range(400):
            X = varieties[rng.randrange(len(varieties))]
            r = rng.randint(1, 5)
            choice = rng.randint(0, 3)
            if choice == 0:
                E = trivial(X, r)
            elif choice == 1:
                E = atom(X, "E", r, random_chern(X, r, rng).total)
            elif choice == 2:
                E = direct_sum(*[line_bundle(X, rng.randint(0, 2) * X.H) for _ in range(r)])
            elif X is self.X:
                E = self._pulled(*[2] * r)
            else:
                E = direct_sum(*[line_bundle(X, X.H) for _ in range(r)])
            k = rng.randint(1, min(r, X.n))
            flags = frozenset(f for f in FLAGS if rng.random() < 0.25)
            inp = PredictorInput(k, s=rng.randint(0, 3), h=rng.randint(0, 3), flags=flags)
            try:
                res = predict_components(X, E, inp)
            except InconsistentInputsError:
                continue
            seen.add(res.kind)
            kinds = {c.kind for c in res.conclusions}
            exact = [c.count for c in res.conclusions if c.kind == EXACTLY]
            bounds = [c.count for c in res.conclusions if c.kind == ATLEAST]
            self.assertEqual(res.kind == EMPTY, chern(E, X).c(k).is_zero())
            if CONNECTED in kinds:
                self.assertTrue(all(m < 2 for m in exact), res.conclusions)
                self.assertTrue(all(m < 2 for m in bounds), res.conclusions)
                self.assertNotIn(DISCONNECTED, kinds)
            for m in exact:
                self.assertGreaterEqual(m, 1)
                self.assertTrue(all(m >= b for b in bounds), res.conclusions)
            if res.kind == EXACTLY:
                self.assertGreaterEqual(res.count, 1)
        self.assertIn(EMPTY, seen)
        self.assertIn(CONNECTED, seen)

    def testconnected(self):
        U = self._split(self.P3, 1, 1, 1)
        res = predict_components(self.P3, U, PredictorInput(2))
        self.assertEqual(res.kind, CONNECTED)
        self.assertIsNone(res.count)
        self.assertEqual(res.citations, [RULE_CONNECTED])

    def testvbig(self):
        U = self._split(self.P3, 1, 1, 1)
        res = predict_components(self.P3, U, PredictorInput(1, flags=frozenset({FLAG_VBIG})))
        self.assertEqual(res.kind, CONNECTED)
        self.assertEqual(res.citations, [RULE_CONNECTED, RULE_VBIG])

    def testempty(self):
        res = predict_components(self.P3, trivial(self.P3, 2), PredictorInput(2))
        self.assertEqual(res.kind, EMPTY)
        self.assertEqual(res.citations, [RULE_EMPTY])

    def testdisconnected(self):
        G = self._pulled(1, 1, 1)
        res = predict_components(self.X, G, PredictorInput(2))
        self.assertEqual((res.kind, res.count), (DISCONNECTED, 2))
        self.assertEqual(res.citations, [RULE_LOWER_BOUND, RULE_DISCONNECTED])

    def testulrichbound(self):
        G = self._pulled(1, 1, 1)
        res = predict_components(self.X, G, PredictorInput(2, flags=frozenset({FLAG_ULRICH})))
        self.assertEqual((res.kind, res.count), (DISCONNECTED, 2))
        self.assertEqual(
            res.citations, [RULE_LOWER_BOUND, RULE_DISCONNECTED, RULE_ULRICH_BOUND]
        )

    def testplanespattern(self):
        for r, count in ((2, 4), (3, 12), (4, 24)):
            F = self._pulled(*[2] * r)
            self.assertEqual(planes_pattern_count(self.X, F), count)
            res = predict_components(self.X, F, PredictorInput(2, flags=frozenset({FLAG_ULRICH})))
            self.assertEqual((res.kind, res.count), (EXACTLY, count))
            self.assertEqual(res.citations[-1], RULE_PLANES_PATTERN)
        self.assertIsNone(planes_pattern_count(self.X, self._pulled(1, 1, 1)))
        self.assertIsNone(planes_pattern_count(self.P3, self._split(self.P3, 2, 2)))

    def testcodim3(self):
        E = self._split(self.P4, 1, 1, 1)
        flags = frozenset({FLAG_H1_ZERO, FLAG_ACM, FLAG_NGE4})
        res = predict_components(self.P4, E, PredictorInput(3, flags=flags))
        self.assertEqual((res.kind, res.count), (EXACTLY, 1))
        self.assertEqual(res.citations, [RULE_CODIM3_BOUND, RULE_CODIM3_EXACT])
        res = predict_components(self.P4, E, PredictorInput(3, flags=frozenset({FLAG_H1_ZERO})))
        self.assertEqual((res.kind, res.count), (ATLEAST, 1))

    def testinconclusive(self):
        E = self._split(self.P4, 1, 1, 1)
        res = predict_components(self.P4, E, PredictorInput(3))
        self.assertEqual(res.kind, INCONCLUSIVE)
        self.assertIsNone(res.count)
        self.assertEqual(res.citations, [])

    def testconflict(self):
        G = self._pulled(1, 1, 1)
        with self.assertRaises(InconsistentInputsError):
            predict_components(self.X, G, PredictorInput(2, flags=frozenset({FLAG_VBIG})))

    def testvalidation(self):
        U = self._split(self.P3, 1, 1, 1)
        bad = [
            (PredictorInput(2, r=4), MalformedInputError),
            (PredictorInput(2, s=-1), MalformedInputError),
            (PredictorInput(2, h=-2), MalformedInputError),
            (PredictorInput(2, flags=frozenset({"nonsense"})), MalformedInputError),
            (PredictorInput(4), MalformedInputError),
            (PredictorInput(2, flags=frozenset({FLAG_NGE4})), InconsistentInputsError),
            (PredictorInput(2, s=2), InconsistentInputsError),
            (PredictorInput(2, s=1, flags=frozenset({FLAG_ULRICH})), InconsistentInputsError),
        ]
        for inp, err in bad:
            with self.assertRaises(err, msg=str(inp)):
                predict_components(self.P3, U, inp)

    def testlogging(self):
        U = self._split(self.P3, 1, 1, 1)
        with self.assertLogs("pychowcalc.predictor", level="DEBUG") as log:
            predict_components(self.P3, U, PredictorInput(2))
        self.assertIn(RULE_CONNECTED, log.output[0])

    def testtodict(self):
        self.assertEqual(
            Conclusion(ATLEAST, 2, RULE_LOWER_BOUND).to_dict(),
            {"kind": ATLEAST, "count": 2, "rule": RULE_LOWER_BOUND},
        )
        res = predict_components(self.P3, trivial(self.P3, 2), PredictorInput(2))
        self.assertEqual(res.to_dict(), {"kind": EMPTY, "count": None})


if __name__ == "__main__":
    # import sys;sys.argv = ['', 'Test.testName']
    unittest.main()
