'''
Created on 18 Sep 2026

Scenario parser and handler tests

@author: semuadmin
'''

import json
import unittest

from pychowcalc.exceptions import ScenarioSyntaxError
from pychowcalc.scenario_handler import ScenarioHandler, to_json, to_text
from pychowcalc.scenario_parser import (
    QUERY_SIGNATURES,
    BinOp,
    BundleDecl,
    ListExpr,
    Name,
    Neg,
    Num,
    Power,
    QueryStmt,
    VarietyDecl,
    bind_arguments,
    format_node,
    format_scenario,
    parse,
    tokenize,
)

SOURCE = """# plane and a pair of bundles
variety P = projective_space(2)

bundle E = sum(line(P, h), line(P, 2*h))
bundle T = tangent(P)
query chern(E)
query euler(T)  # trailing comment
query integrate(P, (1 + h)^2 - -h)
"""


class ScenarioParserTest(unittest.TestCase):

    def setUp(self):
        pass

    def tearDown(self):
        pass

    def testtokenize(self):
        toks = tokenize("query c(E, 2)^3\n")
        self.assertEqual(
            [t.kind for t in toks],
            ["NAME", "NAME", "OP", "NAME", "OP", "INT", "OP", "OP", "INT", "NEWLINE", "EOF"],
        )
        self.assertEqual((toks[5].text, toks[5].line, toks[5].column), ("2", 1, 12))

    def testparse(self):
        scn = parse(SOURCE)
        self.assertEqual(len(scn.statements), 6)
        self.assertEqual(len(scn.declarations), 3)
        self.assertEqual(len(scn.queries), 3)
        decl = scn.statements[0]
        self.assertIsInstance(decl, VarietyDecl)
        self.assertEqual((decl.name, decl.call.func, decl.line), ("P", "projective_space", 2))
        self.assertIsInstance(scn.statements[1], BundleDecl)
        self.assertEqual(scn.statements[1].line, 4)
        query = scn.statements[4]
        self.assertIsInstance(query, QueryStmt)
        self.assertEqual(query.call.func, "euler")

    def testprecedence(self):
        expr = parse(SOURCE).statements[5].call.args[1].value
        self.assertEqual(
            expr,
            BinOp(
                "-",
                Power(BinOp("+", Num(1), Name("h")), 2),
                Neg(Name("h")),
            ),
        )
        self.assertEqual(format_node(expr), "(1 + h)^2 - -h")

    def testformat(self):
        cases = {
            "2*h^2": "2*h^2",
            "h - (h - 1)": "h - (h - 1)",
            "(h - 1) - h": "h - 1 - h",
            "-(h + 1)": "-(h + 1)",
            "(2*h)^3": "(2*h)^3",
            "c(E, 1)*H + K/2": "c(E, 1)*H + K/2",
        }
        for text, expected in cases.items():
            scn = parse(f"variety P = projective_space(2)\nbundle E = tangent(P)\nquery integrate(P, {text})\n")
            self.assertEqual(format_node(scn.queries[0].call.args[1].value), expected, text)

    def testroundtrip(self):
        scn = parse(SOURCE)
        text = format_scenario(scn)
        self.assertEqual(parse(text), scn)
        self.assertEqual(format_scenario(parse(text)), text)
        self.assertTrue(text.startswith("variety P = projective_space(2)\n"))

    def testpredictgrammar(self):
        scn = parse(
            "variety P = projective_space(4)\n"
            "bundle F = atom(P, rank=2, chern=1 + h + 2*h^2)\n"
            "query predict(F, k=2, s=0, h=1, flags=[h1_structure_zero, n_ge_4])\n"
        )
        call = scn.queries[0].call
        bound = bind_arguments(call, QUERY_SIGNATURES["predict"])
        self.assertEqual(bound["bundle"], Name("F"))
        self.assertEqual(bound["k"], Num(2))
        self.assertEqual(bound["flags"], ListExpr((Name("h1_structure_zero"), Name("n_ge_4"))))
        self.assertNotIn("r", bound)

    def testmissingparen(self):
        with self.assertRaises(ScenarioSyntaxError) as ctx:
            parse("variety P = projective_space(2)\nbundle E = line(P, h\nquery chern(E)\n")
        err = ctx.exception
        self.assertEqual((err.line, err.column), (2, 21))
        self.assertEqual(err.kind, "syntax")
        self.assertIn("')'", err.message)
        self.assertTrue(str(err).startswith("line 2, column 21:"))

    def testerrors(self):
        pre = "variety P = projective_space(2)\nbundle E = tangent(P)\n"
        bad = {
            "query chern(F)": 3,
            "query describe(Q)": 3,
            "variety P = quadric(3)": 3,
            "variety Q = projective_space(2, 3)": 3,
            "variety Q = quadric()": 3,
            "variety Q = quadric(m=3)": 3,
            "variety Q = projective_space(2, n=3)": 3,
            "variety Q = hirzebruch(e=1, 2)": 3,
            "variety Q = product(P)": 3,
            "variety Q = torus(2)": 3,
            "query predict(E, k=1, flags=[tidy])": 3,
            "query predict(E, k=1, flags=v_big)": 3,
            "query en_hilbert(E, 1, 2)": 3,
            "query chern(P)": 3,
            "query integrate(P, c(E))": 3,
            "query integrate(P, [h])": 3,
            "query schur(h)": 3,
            "variety query = quadric(3)": 3,
            "bogus X = quadric(3)": 3,
            "query chern(E) chern(E)": 3,
            "query euler(E) $": 3,
        }
        for stmt, line in bad.items():
            with self.assertRaises(ScenarioSyntaxError, msg=stmt) as ctx:
                parse(pre + stmt + "\n")
            self.assertEqual(ctx.exception.line, line, stmt)

    def testnegativeint(self):
        scn = parse("variety X = hirzebruch(1, beta=2)\nvariety C = curve(2)\nquery schur(-2)\n")
        self.assertEqual(scn.statements[0].call.args[1].keyword, "beta")


class ScenarioHandlerTest(unittest.TestCase):

    def setUp(self):
        self.handler = ScenarioHandler()

    def tearDown(self):
        pass

    def _run(self, text):
        return self.handler.execute(parse(text))

    def testempty(self):
        self.assertEqual(self._run(""), [])
        self.assertEqual(self._run("# nothing here\n\n"), [])
        self.assertEqual(to_text([]), "")

    def testresults(self):
        res = self._run(SOURCE)
        self.assertEqual(len(res), 3)
        chern_rec, euler_rec, int_rec = res
        self.assertEqual(chern_rec["status"], "ok")
        self.assertEqual(chern_rec["line"], 6)
        self.assertEqual(chern_rec["query"], "query chern(E)")
        self.assertEqual(chern_rec["result"]["rank"], 2)
        self.assertEqual(chern_rec["result"]["c"]["2"], {"2": {"h^2": "2"}})
        self.assertEqual(euler_rec["result"], {"chi": "8"})
        # (1 + h)^2 + h integrates to the h^2 coefficient
        self.assertEqual(int_rec["result"]["integral"], "1")

    def testerrorrecords(self):
        res = self._run(
            "variety P = projective_space(2)\n"
            "variety Q = quadric(1)\n"
            "query describe(Q)\n"
            "variety P3 = projective_space(3)\n"
            "bundle E = tangent(P3)\n"
            "query integrate(P, c(E, 1))\n"
            "query schur(1)\n"
            "query integrate(P, h/h)\n"
            "query integrate(P, x)\n"
            "query integrate(P, h^2/2)\n"
        )
        kinds = [(r["line"], r["status"], r.get("error", {}).get("kind")) for r in res]
        self.assertEqual(
            kinds,
            [
                (2, "error", "unsupported"),
                (3, "error", "malformed"),
                (6, "error", "malformed"),
                (7, "error", "malformed"),
                (8, "error", "malformed"),
                (9, "error", "malformed"),
                (10, "ok", None),
            ],
        )
        self.assertEqual(res[0]["query"], "variety Q = quadric(1)")
        self.assertEqual(res[-1]["result"]["integral"], "1/2")

    def testaliases(self):
        res = self._run("variety X = hirzebruch(1)\nquery integrate(X, K^2)\nquery integrate(X, H*f)\n")
        self.assertEqual(res[0]["result"]["integral"], "8")
        self.assertEqual(res[1]["status"], "ok")

    def testpullbackbase(self):
        res = self._run(
            "variety P1 = projective_space(1)\n"
            "variety P2 = projective_space(2)\n"
            "variety A = product(P1, P2)\n"
            "bundle L = line(P2, h)\n"
            "bundle G = pullback(A, 2, L)\n"
            "bundle B = pullback(A, 1, L)\n"
            "query chern(G)\n"
        )
        self.assertEqual(res[0]["line"], 6)
        self.assertEqual(res[0]["error"]["kind"], "malformed")
        self.assertEqual(res[1]["result"]["c"]["1"], {"1": {"h_2": "1"}})

    def testsamevariety(self):
        res = self._run(
            "variety A = projective_space(2)\n"
            "variety B = projective_space(2)\n"
            "bundle E = sum(line(A, h), line(B, h))\n"
            "query euler(E)\n"
        )
        # equal constructor arguments give the same model
        self.assertEqual(res[0]["status"], "ok")
        self.assertEqual(res[0]["result"]["chi"], "6")

    def testdeterminism(self):
        first = to_json(self._run(SOURCE))
        second = to_json(ScenarioHandler().execute(parse(SOURCE)))
        self.assertEqual(first, second)
        self.assertTrue(first.endswith("\n"))
        self.assertEqual(len(json.loads(first)["results"]), 3)

    def testreset(self):
        self._run(SOURCE)
        res = self._run("variety P = projective_space(3)\nquery integrate(P, h^3)\n")
        self.assertEqual(res[0]["result"]["integral"], "1")

    def testtext(self):
        res = self._run(SOURCE + "query predict(E, k=2)\nquery schur(1)\n")
        text = to_text(res)
        self.assertIn("[line 6] query chern(E)", text)
        self.assertIn("  rank: 2", text)
        self.assertIn("  cites ", text)
        self.assertIn("  note: ", text)
        self.assertIn("  error (malformed): ", text)
        self.assertTrue(text.endswith("\n"))

    def testlogging(self):
        with self.assertLogs("pychowcalc.scenario_handler", level="WARNING") as log:
            self._run("query schur(1)\n")
        self.assertIn("Line 1", log.output[0])


if __name__ == "__main__":
    # import sys;sys.argv = ['', 'Test.testName']
    unittest.main()
