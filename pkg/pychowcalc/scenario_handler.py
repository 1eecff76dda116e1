"""
ScenarioHandler class for PyChowCalc application

Evaluates a parsed scenario statement by statement against the catalog,
bundle calculus and analysis modules, producing one result record per
query. A failing statement yields an error record and evaluation carries
on with the next one.

Created on 9 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name

import json
import logging
from fractions import Fraction

from pychowcalc.analysis import (
    bigness,
    degeneracy_class,
    en_hilbert_polynomial,
    euler_char,
    porteous_notes,
    porteous_singular_class,
    rr_c3_crosscheck,
    schur_P,
    structure_chi,
    ulrich_report,
)
from pychowcalc.bundles import (
    Det,
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
    curve,
    hirzebruch,
    product,
    projective_bundle_over_curve,
    projective_space,
    quadric,
)
from pychowcalc.exceptions import ChowCalcError, MalformedInputError
from pychowcalc.globals import (
    FAMILY_QUADRIC,
    JSON_INDENT,
    MAX_DET_ORACLE,
    RULE_EMPTY,
    format_rational,
)
from pychowcalc.oracle import determinant_P
from pychowcalc.predictor import PredictorInput, predict_components
from pychowcalc.scenario_parser import (
    BUNDLE_SIGNATURES,
    POLY_FUNCTIONS,
    QUERY_SIGNATURES,
    VARIETY_SIGNATURES,
    BinOp,
    BundleDecl,
    Call,
    Name,
    Neg,
    Num,
    Power,
    QueryStmt,
    Scenario,
    VarietyDecl,
    bind_arguments,
    format_node,
    int_value,
)
from pychowcalc.strings import (
    GGNOTE,
    H3NOTE,
    POLYVARIETYERROR,
    UNBOUNDERROR,
    UNKNOWNGENERROR,
)

LOGGER = logging.getLogger(__name__)

CONSTRUCTORS = {
    "projective_space": projective_space,
    "quadric": quadric,
    "projective_bundle_over_curve": projective_bundle_over_curve,
    "hirzebruch": hirzebruch,
    "blown_up_plane": blown_up_plane,
    "curve": curve,
}


def _value(value):
    """
    JSON form of a scalar: rationals as "p/q" strings, the rest unchanged.
    """

    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


class ScenarioHandler:
    """
    Scenario evaluation class.
    """

    def __init__(self):
        """
        Constructor.
        """

        self._varieties = {}
        self._bundles = {}

    def reset(self):
        """
        Forget all declarations.
        """

        self._varieties = {}
        self._bundles = {}

    def execute(self, scenario: Scenario) -> list:
        """
        Evaluate every statement in order.

        :param Scenario scenario: parsed scenario
        :return: list of result records, one per query or failed declaration
        :rtype: list
        """

        self.reset()
        results = []
        for stmt in scenario.statements:
            try:
                if isinstance(stmt, VarietyDecl):
                    self._varieties[stmt.name] = self._variety(stmt.call)
                    LOGGER.debug("Bound variety %s", stmt.name)
                elif isinstance(stmt, BundleDecl):
                    self._bundles[stmt.name] = self._bundle(stmt.expr, stmt.name)
                    LOGGER.debug("Bound bundle %s", stmt.name)
                else:
                    LOGGER.info("Evaluating %s", format_node(stmt))
                    results.append(self._query(stmt))
            except ChowCalcError as err:
                LOGGER.warning("Line %d: %s", stmt.line, err)
                results.append(self._error_record(stmt, err))
        return results

    @staticmethod
    def _error_record(stmt, err: ChowCalcError) -> dict:
        return {
            "line": stmt.line,
            "column": stmt.column,
            "query": format_node(stmt),
            "status": "error",
            "error": {"kind": err.kind, "message": str(err)},
        }

    # declarations

    def _lookup_variety(self, node):
        if not isinstance(node, Name) or node.ident not in self._varieties:
            raise MalformedInputError(UNBOUNDERROR.format("variety", format_node(node)))
        return self._varieties[node.ident]

    def _variety(self, call: Call):
        args = bind_arguments(call, VARIETY_SIGNATURES[call.func])
        if call.func == "product":
            return product([self._lookup_variety(node) for node in args["*"]])
        # positional where possible so memoized constructors see one key
        params = VARIETY_SIGNATURES[call.func].params
        positional = []
        for param in params:
            if param.name not in args:
                break
            positional.append(int_value(args[param.name], param.name, call.func))
        kwargs = {
            p.name: int_value(args[p.name], p.name, call.func)
            for p in params[len(positional) :]
            if p.name in args
        }
        return CONSTRUCTORS[call.func](*positional, **kwargs)

    def _bundle(self, node, label: str = None) -> tuple:
        """
        Evaluate a bundle expression.

        :return: (VarietyModel, BundleExpr)
        :rtype: tuple
        """

        if isinstance(node, Name):
            if node.ident not in self._bundles:
                raise MalformedInputError(UNBOUNDERROR.format("bundle", node.ident))
            return self._bundles[node.ident]
        func = node.func
        args = bind_arguments(node, BUNDLE_SIGNATURES[func])

        def num(name, default=None):
            return int_value(args[name], name, func) if name in args else default

        if func == "atom":
            X = self._lookup_variety(args["variety"])
            total = self._poly(args["chern"], X)
            return X, atom(X, label or format_node(node), num("rank"), total)
        if func == "line":
            X = self._lookup_variety(args["variety"])
            return X, line_bundle(X, self._poly(args["divisor"], X), label)
        if func == "trivial":
            X = self._lookup_variety(args["variety"])
            return X, trivial(X, num("rank"))
        if func == "tangent":
            X = self._lookup_variety(args["variety"])
            return X, tangent_bundle(X)
        if func == "spinor":
            X = self._lookup_variety(args["variety"])
            return X, spinor_bundle(X, num("index", 1))
        if func == "sum":
            parts = [self._bundle(item) for item in args["*"]]
            X = parts[0][0]
            for item, (Y, _) in zip(args["*"], parts):
                if Y is not X:
                    raise MalformedInputError(
                        POLYVARIETYERROR.format(format_node(item), Y.name, X.name)
                    )
            return X, direct_sum(*(e for _, e in parts))
        if func == "pullback":
            X = self._lookup_variety(args["variety"])
            index = num("index")
            base = X.projection(index).base
            Y, e = self._bundle(args["bundle"])
            if Y is not base:
                raise MalformedInputError(
                    POLYVARIETYERROR.format(format_node(args["bundle"]), Y.name, base.name)
                )
            return X, Pullback(index, e)
        X, e = self._bundle(args["bundle"])
        if func == "dual":
            return X, Dual(e)
        if func == "det":
            return X, Det(e)
        if func == "ext":
            return X, Ext(num("p"), e)
        return X, TwistByLine(e, self._poly(args["divisor"], X))

    def _poly(self, node, X):
        """
        Evaluate a polynomial expression to a class on X. Names are ring
        generators, with H and K standing for the polarization and the
        canonical class when the ring has no generator of that name.
        """

        ring = X.presentation
        if isinstance(node, Num):
            return ring.scalar(node.value)
        if isinstance(node, Name):
            if node.ident in ring.generator_names:
                return X.gen(node.ident)
            if node.ident == "H":
                return X.H
            if node.ident == "K":
                return X.K
            raise MalformedInputError(
                UNKNOWNGENERROR.format(node.ident, ", ".join(ring.generator_names))
            )
        if isinstance(node, Neg):
            return -self._poly(node.operand, X)
        if isinstance(node, Power):
            return self._poly(node.base, X) ** node.exponent
        if isinstance(node, BinOp):
            left, right = self._poly(node.left, X), self._poly(node.right, X)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            return left / right
        # c(E, i) or s(E, i)
        args = bind_arguments(node, POLY_FUNCTIONS[node.func])
        Y, e = self._bundle(args["bundle"])
        if Y is not X:
            raise MalformedInputError(
                POLYVARIETYERROR.format(format_node(args["bundle"]), Y.name, X.name)
            )
        i = int_value(args["i"], "i", node.func)
        if node.func == "c":
            return chern(e, X).c(i)
        return segre(e, X).part(i)

    # queries

    def _query(self, stmt: QueryStmt) -> dict:
        call = stmt.call
        args = bind_arguments(call, QUERY_SIGNATURES[call.func])
        payload, citations, notes = getattr(self, f"_q_{call.func}")(args, call.func)
        return {
            "line": stmt.line,
            "column": stmt.column,
            "query": format_node(stmt),
            "status": "ok",
            "result": payload,
            "citations": list(citations),
            "notes": list(notes),
        }

    def _q_chern(self, args, _):
        X, e = self._bundle(args["bundle"])
        cd = chern(e, X)
        n = X.n
        top = min(cd.rank, n)
        payload = {
            "rank": cd.rank,
            "total": cd.total.to_dict(),
            "c": {str(i): cd.c(i).to_dict() for i in range(1, top + 1)},
            "h_degrees": {
                str(i): _value(X.integrate(cd.c(i) * X.H ** (n - i))) for i in range(top + 1)
            },
        }
        notes = []
        if X.family == FAMILY_QUADRIC:
            payload["h_power_normalization"] = self._quadric_readings(X, cd, top)
            notes.append(H3NOTE)
        return payload, [], notes

    @staticmethod
    def _quadric_readings(X, cd, top: int) -> dict:
        """
        Above the middle degree each Chow group of a quadric is spanned by
        the class b_i of a linear space, with H^i = 2*b_i. Report c_i both
        as a multiple of H^i and as a multiple of b_i.
        """

        n = X.n
        readings = {}
        for i in range(n // 2 + 1, top + 1):
            linear = X.integrate(cd.c(i) * X.H ** (n - i))
            readings[str(i)] = {
                "h_power_multiple": _value(linear / 2),
                "linear_space_degree": _value(linear),
            }
        return readings

    def _q_segre(self, args, _):
        X, e = self._bundle(args["bundle"])
        s = segre(e, X)
        return {"segre": s.to_dict(), "top": _value(X.integrate(s.part(X.n)))}, [], []

    def _q_euler(self, args, _):
        X, e = self._bundle(args["bundle"])
        return {"chi": _value(euler_char(X, e))}, [], []

    def _q_degeneracy(self, args, func):
        X, e = self._bundle(args["bundle"])
        k = int_value(args["k"], "k", func)
        locus = degeneracy_class(X, e, k)
        payload = {
            "k": k,
            "class": locus.cls.to_dict(),
            "empty": locus.empty,
            "h_degree": _value(X.integrate(locus.cls * X.H ** (X.n - k))),
        }
        return payload, [RULE_EMPTY], list(locus.notes)

    def _q_porteous_sing(self, args, func):
        X, e = self._bundle(args["bundle"])
        k = int_value(args["k"], "k", func)
        cls = porteous_singular_class(X, e, k)
        integral = None
        if 2 * k + 2 <= X.n:
            integral = _value(X.integrate(cls * X.H ** (X.n - 2 * k - 2)))
        payload = {"k": k, "class": cls.to_dict(), "integral": integral}
        return payload, [], [GGNOTE] + porteous_notes(X, k)

    def _q_big(self, args, _):
        X, e = self._bundle(args["bundle"])
        big = bigness(X, e)
        payload = {
            "s_n": _value(big.s_n),
            "big": big.big,
            "closed_form": _value(big.closed_form),
        }
        return payload, [], []

    def _q_schur(self, args, func):
        n = int_value(args["n"], "n", func)
        poly = schur_P(n)
        payload = {
            "n": n,
            "polynomial": str(poly),
            "coefficients": poly.to_dict(),
            "reduced": str(poly.reduce_mod_x2_squared()),
            "determinant_agrees": determinant_P(n) == poly if n <= MAX_DET_ORACLE else None,
        }
        return payload, [], []

    def _q_en_hilbert(self, args, func):
        X, e = self._bundle(args["bundle"])
        k = int_value(args["k"], "k", func)
        m_values = [int_value(item, "m", func) for item in args["m"].items]
        values = en_hilbert_polynomial(X, e, k, m_values)
        payload = {
            "k": k,
            "m": m_values,
            "values": [_value(v) for v in values],
            "constant": len(set(values)) <= 1,
            "top_chern": _value(X.integrate(chern(e, X).c(k))) if X.n == k else None,
        }
        return payload, [], [GGNOTE]

    def _q_rr_c3(self, args, _):
        X, e = self._bundle(args["bundle"])
        chk = rr_c3_crosscheck(X, e)
        payload = {
            "lhs": _value(chk.lhs),
            "rhs": _value(chk.rhs),
            "chi_Y": _value(chk.chi_Y),
            "chi_Y_hrr": _value(chk.chi_Y_hrr),
            "passed": chk.passed,
        }
        return payload, [], []

    def _q_predict(self, args, func):
        X, e = self._bundle(args["bundle"])

        def num(name, default=None):
            return int_value(args[name], name, func) if name in args else default

        flags = args.get("flags")
        inp = PredictorInput(
            k=num("k"),
            s=num("s", 0),
            h=num("h", 0),
            flags=frozenset(item.ident for item in flags.items) if flags else frozenset(),
            r=num("r"),
        )
        verdict = predict_components(X, e, inp)
        payload = {
            "verdict": verdict.to_dict(),
            "conclusions": [c.to_dict() for c in verdict.conclusions],
            "inputs": verdict.inputs,
        }
        return payload, verdict.citations, verdict.notes

    def _q_ulrich_report(self, args, func):
        X, e = self._bundle(args["bundle"])
        r = int_value(args["r"], "r", func) if "r" in args else None
        d = int_value(args["d"], "d", func) if "d" in args else None
        report = ulrich_report(X, e, r, d)
        checks = []
        notes = []
        for chk in report.checks:
            checks.append(
                {
                    "name": chk.name,
                    "left": _value(chk.left),
                    "right": _value(chk.right),
                    "relation": chk.relation,
                    "passed": chk.passed,
                }
            )
            if chk.note and chk.note not in notes:
                notes.append(chk.note)
        payload = {"r": report.r, "d": report.d, "checks": checks, "all_passed": report.all_passed}
        return payload, [], notes

    def _q_describe(self, args, _):
        X = self._lookup_variety(args["variety"])
        chi_O = structure_chi(X)
        payload = {
            "name": X.name,
            "family": X.family,
            "n": X.n,
            "d": X.d,
            "generators": list(X.presentation.generator_names),
            "H": str(X.H),
            "K": str(X.K),
            "tangent_chern": X.tangent_chern.to_dict(),
            "euler_number": _value(X.euler_number()),
            "chi_O": _value(chi_O),
        }
        if X.n == 2:
            k2_e = X.integrate(X.K**2) + X.euler_number()
            payload["noether"] = {
                "twelve_chi": _value(12 * chi_O),
                "K2_plus_e": _value(k2_e),
                "holds": 12 * chi_O == k2_e,
            }
        return payload, [], list(X.notes)

    def _q_integrate(self, args, _):
        X = self._lookup_variety(args["variety"])
        cls = self._poly(args["expr"], X)
        return {"class": cls.to_dict(), "integral": _value(X.integrate(cls))}, [], []

    def _q_multiply(self, args, _):
        X = self._lookup_variety(args["variety"])
        cls = self._poly(args["left"], X) * self._poly(args["right"], X)
        return {"class": cls.to_dict(), "integral": _value(X.integrate(cls))}, [], []


def to_json(results: list) -> str:
    """
    Canonical JSON report: sorted keys, fixed indent, trailing newline.

    :param list results: result records
    :return: JSON text
    :rtype: str
    """

    return json.dumps({"results": results}, sort_keys=True, indent=JSON_INDENT) + "\n"


def _flatten(value, prefix: str = "") -> list:
    if isinstance(value, dict):
        if not value:
            return [f"{prefix}: {{}}"] if prefix else []
        lines = []
        for key in sorted(value):
            lines.extend(_flatten(value[key], f"{prefix}.{key}" if prefix else str(key)))
        return lines
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        lines = []
        for i, item in enumerate(value):
            lines.extend(_flatten(item, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix}: {json.dumps(value, sort_keys=True)}"]


def to_text(results: list) -> str:
    """
    Human readable report, one block per record.

    :param list results: result records
    :return: text
    :rtype: str
    """

    blocks = []
    for rec in results:
        lines = [f"[line {rec['line']}] {rec['query']}"]
        if rec["status"] == "error":
            lines.append(f"  error ({rec['error']['kind']}): {rec['error']['message']}")
        else:
            lines.extend(f"  {line}" for line in _flatten(rec["result"]))
            for rule in rec["citations"]:
                lines.append(f"  cites {rule}")
            for note in rec["notes"]:
                lines.append(f"  note: {note}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")
