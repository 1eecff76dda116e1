"""
Scenario parser

Tokenizer, recursive descent parser and pretty printer for scenario
scripts. A script is a sequence of line-oriented statements:

    variety NAME = CTOR(args)
    bundle NAME = EXPR
    query QNAME(args)

with '#' comments. Each statement sits on one line. Arguments may be
positional or keyword; each constructor and query has a fixed signature
which is checked at parse time together with name binding.

Created on 10 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name, too-few-public-methods

import logging
from collections import namedtuple
from dataclasses import dataclass, field

from pychowcalc.exceptions import ScenarioSyntaxError
from pychowcalc.globals import FLAGS
from pychowcalc.strings import (
    ARGKINDERROR,
    ARITYERROR,
    DUPARGERROR,
    FLAGERROR,
    KWERROR,
    LEXERROR,
    MISSINGARGERROR,
    REBINDERROR,
    SYNTAXERROR,
    UNBOUNDERROR,
    UNKNOWNCALLERROR,
)

LOGGER = logging.getLogger(__name__)

KEYWORDS = ("variety", "bundle", "query")
OPERATORS = "()[],=+-*/^"

# parameter kinds
VARIETY = "variety"
BUNDLE = "bundle"
POLY = "poly"
INT = "int"
INTS = "ints"
FLAGLIST = "flags"

Param = namedtuple("Param", ["name", "kind", "required"])
Signature = namedtuple("Signature", ["params", "variadic"])


def _sig(*params, variadic=None) -> Signature:
    return Signature(tuple(Param(n, k, r) for n, k, r in params), variadic)


VARIETY_SIGNATURES = {
    "projective_space": _sig(("n", INT, True)),
    "quadric": _sig(("n", INT, True)),
    "product": _sig(variadic=VARIETY),
    "projective_bundle_over_curve": _sig(
        ("rank", INT, True), ("degF", INT, True), ("genus", INT, True)
    ),
    "hirzebruch": _sig(("e", INT, True), ("alpha", INT, False), ("beta", INT, False)),
    "blown_up_plane": _sig(("k", INT, True)),
    "curve": _sig(("genus", INT, True)),
}

BUNDLE_SIGNATURES = {
    "atom": _sig(("variety", VARIETY, True), ("rank", INT, True), ("chern", POLY, True)),
    "line": _sig(("variety", VARIETY, True), ("divisor", POLY, True)),
    "trivial": _sig(("variety", VARIETY, True), ("rank", INT, True)),
    "tangent": _sig(("variety", VARIETY, True)),
    "spinor": _sig(("variety", VARIETY, True), ("index", INT, False)),
    "sum": _sig(variadic=BUNDLE),
    "dual": _sig(("bundle", BUNDLE, True)),
    "twist": _sig(("bundle", BUNDLE, True), ("divisor", POLY, True)),
    "det": _sig(("bundle", BUNDLE, True)),
    "ext": _sig(("p", INT, True), ("bundle", BUNDLE, True)),
    "pullback": _sig(("variety", VARIETY, True), ("index", INT, True), ("bundle", BUNDLE, True)),
}

QUERY_SIGNATURES = {
    "chern": _sig(("bundle", BUNDLE, True)),
    "segre": _sig(("bundle", BUNDLE, True)),
    "euler": _sig(("bundle", BUNDLE, True)),
    "degeneracy": _sig(("bundle", BUNDLE, True), ("k", INT, True)),
    "porteous_sing": _sig(("bundle", BUNDLE, True), ("k", INT, True)),
    "big": _sig(("bundle", BUNDLE, True)),
    "schur": _sig(("n", INT, True)),
    "en_hilbert": _sig(("bundle", BUNDLE, True), ("k", INT, True), ("m", INTS, True)),
    "rr_c3": _sig(("bundle", BUNDLE, True)),
    "predict": _sig(
        ("bundle", BUNDLE, True),
        ("k", INT, True),
        ("s", INT, False),
        ("h", INT, False),
        ("flags", FLAGLIST, False),
        ("r", INT, False),
    ),
    "ulrich_report": _sig(("bundle", BUNDLE, True), ("r", INT, False), ("d", INT, False)),
    "describe": _sig(("variety", VARIETY, True)),
    "integrate": _sig(("variety", VARIETY, True), ("expr", POLY, True)),
    "multiply": _sig(("variety", VARIETY, True), ("left", POLY, True), ("right", POLY, True)),
}

# class-valued functions allowed inside polynomial expressions
POLY_FUNCTIONS = {
    "c": _sig(("bundle", BUNDLE, True), ("i", INT, True)),
    "s": _sig(("bundle", BUNDLE, True), ("i", INT, True)),
}


def _pos():
    return field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    """
    Non-negative integer literal.
    """

    value: int
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class Name:
    """
    Identifier.
    """

    ident: str
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class Neg:
    """
    Unary minus.
    """

    operand: object
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class BinOp:
    """
    Binary operation + - * /.
    """

    op: str
    left: object
    right: object
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class Power:
    """
    Power with a literal integer exponent.
    """

    base: object
    exponent: int
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class ListExpr:
    """
    Bracketed list.
    """

    items: tuple
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class Arg:
    """
    Call argument, positional when keyword is None.
    """

    keyword: str
    value: object
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class Call:
    """
    Function call.
    """

    func: str
    args: tuple
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class VarietyDecl:
    """
    variety NAME = CTOR(args)
    """

    name: str
    call: Call
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class BundleDecl:
    """
    bundle NAME = EXPR
    """

    name: str
    expr: object
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class QueryStmt:
    """
    query QNAME(args)
    """

    call: Call
    line: int = _pos()
    column: int = _pos()


@dataclass(frozen=True)
class Scenario:
    """
    Parsed script.
    """

    statements: tuple = ()

    @property
    def declarations(self) -> list:
        """
        Variety and bundle bindings in order.
        """

        return [s for s in self.statements if not isinstance(s, QueryStmt)]

    @property
    def queries(self) -> list:
        """
        Queries in order.
        """

        return [s for s in self.statements if isinstance(s, QueryStmt)]


Token = namedtuple("Token", ["kind", "text", "line", "column"])


def tokenize(text: str) -> list:
    """
    Split source text into tokens.

    :param str text: scenario source
    :return: list of Token (kinds NAME, INT, OP, NEWLINE, EOF)
    :rtype: list
    :raises: ScenarioSyntaxError
    """

    tokens = []
    line, col, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            tokens.append(Token("NEWLINE", "\n", line, col))
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        start, scol = i, col
        if ch.isalpha() or ch == "_":
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("NAME", text[start:i], line, scol))
        elif ch.isdigit():
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("INT", text[start:i], line, scol))
        elif ch in OPERATORS:
            i += 1
            tokens.append(Token("OP", ch, line, scol))
        else:
            raise ScenarioSyntaxError(LEXERROR.format(ch), line, col)
        col += i - start
    tokens.append(Token("EOF", "", line, col))
    return tokens


def _describe(tok: Token) -> str:
    if tok.kind == "EOF":
        return "end of input"
    if tok.kind == "NEWLINE":
        return "end of line"
    return repr(tok.text)


class ScenarioParser:
    """
    ScenarioParser class.

    Recursive descent parser producing a Scenario AST, with binding and
    signature checks.
    """

    def __init__(self, text: str):
        """
        Constructor.

        :param str text: scenario source
        """

        self._tokens = tokenize(text)
        self._pos = 0
        self._varieties = set()
        self._bundles = set()

    def _peek(self, offset: int = 0) -> Token:
        return self._tokens[min(self._pos + offset, len(self._tokens) - 1)]

    def _next(self) -> Token:
        tok = self._peek()
        self._pos += 1
        return tok

    def _error(self, expected: str, tok: Token = None):
        tok = tok or self._peek()
        raise ScenarioSyntaxError(
            SYNTAXERROR.format(expected, _describe(tok)), tok.line, tok.column
        )

    def _expect(self, kind: str, text: str = None) -> Token:
        tok = self._peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            self._error(repr(text) if text else kind.lower())
        return self._next()

    def _at_op(self, text: str) -> bool:
        tok = self._peek()
        return tok.kind == "OP" and tok.text == text

    def parse(self) -> Scenario:
        """
        Parse the whole script.

        :return: scenario
        :rtype: Scenario
        :raises: ScenarioSyntaxError
        """

        statements = []
        while self._peek().kind != "EOF":
            if self._peek().kind == "NEWLINE":
                self._next()
                continue
            statements.append(self._statement())
            if self._peek().kind not in ("NEWLINE", "EOF"):
                self._error("end of line")
        LOGGER.debug("Parsed %d statements", len(statements))
        return Scenario(tuple(statements))

    def _statement(self):
        tok = self._expect("NAME")
        if tok.text not in KEYWORDS:
            self._error("variety, bundle or query", tok)
        if tok.text == "query":
            call = self._call_at(self._expect("NAME"))
            self._check_call(call, QUERY_SIGNATURES, "query")
            return QueryStmt(call, tok.line, tok.column)
        name_tok = self._expect("NAME")
        name = name_tok.text
        if name in KEYWORDS:
            self._error("a name", name_tok)
        if name in self._varieties or name in self._bundles:
            raise ScenarioSyntaxError(REBINDERROR.format(name), name_tok.line, name_tok.column)
        self._expect("OP", "=")
        if tok.text == "variety":
            call = self._call_at(self._expect("NAME"))
            self._check_call(call, VARIETY_SIGNATURES, "variety constructor")
            self._varieties.add(name)
            return VarietyDecl(name, call, tok.line, tok.column)
        expr = self._expr()
        self._check_bundle(expr)
        self._bundles.add(name)
        return BundleDecl(name, expr, tok.line, tok.column)

    def _call_at(self, name_tok: Token) -> Call:
        self._expect("OP", "(")
        args = []
        if not self._at_op(")"):
            while True:
                args.append(self._arg())
                if self._at_op(","):
                    self._next()
                    continue
                break
        self._expect("OP", ")")
        return Call(name_tok.text, tuple(args), name_tok.line, name_tok.column)

    def _arg(self) -> Arg:
        tok = self._peek()
        nxt = self._peek(1)
        if tok.kind == "NAME" and nxt.kind == "OP" and nxt.text == "=":
            self._next()
            self._next()
            return Arg(tok.text, self._expr(), tok.line, tok.column)
        return Arg(None, self._expr(), tok.line, tok.column)

    def _expr(self):
        left = self._term()
        while self._at_op("+") or self._at_op("-"):
            op = self._next()
            left = BinOp(op.text, left, self._term(), op.line, op.column)
        return left

    def _term(self):
        left = self._unary()
        while self._at_op("*") or self._at_op("/"):
            op = self._next()
            left = BinOp(op.text, left, self._unary(), op.line, op.column)
        return left

    def _unary(self):
        if self._at_op("-"):
            op = self._next()
            return Neg(self._unary(), op.line, op.column)
        return self._power()

    def _power(self):
        base = self._atom()
        if self._at_op("^"):
            op = self._next()
            exp = self._expect("INT")
            return Power(base, int(exp.text), op.line, op.column)
        return base

    def _atom(self):
        tok = self._peek()
        if tok.kind == "INT":
            self._next()
            return Num(int(tok.text), tok.line, tok.column)
        if tok.kind == "NAME":
            self._next()
            if self._at_op("("):
                return self._call_at(tok)
            return Name(tok.text, tok.line, tok.column)
        if self._at_op("("):
            self._next()
            inner = self._expr()
            self._expect("OP", ")")
            return inner
        if self._at_op("["):
            self._next()
            items = []
            if not self._at_op("]"):
                while True:
                    items.append(self._expr())
                    if self._at_op(","):
                        self._next()
                        continue
                    break
            self._expect("OP", "]")
            return ListExpr(tuple(items), tok.line, tok.column)
        self._error("an expression")
        return None

    def _check_call(self, call: Call, table: dict, what: str):
        if call.func not in table:
            raise ScenarioSyntaxError(
                UNKNOWNCALLERROR.format(what, call.func), call.line, call.column
            )
        bound = bind_arguments(call, table[call.func])
        for param in table[call.func].params:
            if param.name in bound:
                self._check_kind(bound[param.name], param.kind, param.name, call.func)
        for node in bound.get("*", ()):
            self._check_kind(node, table[call.func].variadic, "*", call.func)

    def _check_kind(self, node, kind: str, pname: str, func: str):
        if kind == VARIETY:
            if not isinstance(node, Name):
                self._kind_error(node, pname, func, "a variety name")
            if node.ident not in self._varieties:
                raise ScenarioSyntaxError(
                    UNBOUNDERROR.format("variety", node.ident), node.line, node.column
                )
        elif kind == BUNDLE:
            self._check_bundle(node)
        elif kind == INT:
            int_value(node, pname, func)
        elif kind == INTS:
            if not isinstance(node, ListExpr):
                self._kind_error(node, pname, func, "a list of integers")
            for item in node.items:
                int_value(item, pname, func)
        elif kind == FLAGLIST:
            if not isinstance(node, ListExpr):
                self._kind_error(node, pname, func, "a list of flags")
            for item in node.items:
                if not isinstance(item, Name) or item.ident not in FLAGS:
                    raise ScenarioSyntaxError(
                        FLAGERROR.format(format_node(item), ", ".join(FLAGS)),
                        item.line,
                        item.column,
                    )
        elif kind == POLY:
            self._check_poly(node)

    @staticmethod
    def _kind_error(node, pname: str, func: str, what: str):
        raise ScenarioSyntaxError(ARGKINDERROR.format(pname, func, what), node.line, node.column)

    def _check_bundle(self, node):
        if isinstance(node, Name):
            if node.ident not in self._bundles:
                raise ScenarioSyntaxError(
                    UNBOUNDERROR.format("bundle", node.ident), node.line, node.column
                )
            return
        if isinstance(node, Call):
            self._check_call(node, BUNDLE_SIGNATURES, "bundle constructor")
            return
        raise ScenarioSyntaxError(SYNTAXERROR.format("a bundle", format_node(node)), node.line, node.column)

    def _check_poly(self, node):
        if isinstance(node, (Num, Name)):
            return
        if isinstance(node, Neg):
            self._check_poly(node.operand)
        elif isinstance(node, BinOp):
            self._check_poly(node.left)
            self._check_poly(node.right)
        elif isinstance(node, Power):
            self._check_poly(node.base)
        elif isinstance(node, Call):
            self._check_call(node, POLY_FUNCTIONS, "class function")
        else:
            raise ScenarioSyntaxError(
                SYNTAXERROR.format("a polynomial", format_node(node)), node.line, node.column
            )


def int_value(node, pname: str = "", func: str = "") -> int:
    """
    Integer value of a literal or negated literal.

    :raises: ScenarioSyntaxError
    """

    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg) and isinstance(node.operand, Num):
        return -node.operand.value
    raise ScenarioSyntaxError(
        ARGKINDERROR.format(pname, func, "an integer"), node.line, node.column
    )


def bind_arguments(call: Call, sig: Signature) -> dict:
    """
    Match call arguments to a signature.

    :param Call call: call node
    :param Signature sig: signature
    :return: {parameter name: node}, variadic arguments under "*"
    :rtype: dict
    :raises: ScenarioSyntaxError
    """

    if sig.variadic:
        for arg in call.args:
            if arg.keyword is not None:
                raise ScenarioSyntaxError(KWERROR.format(call.func, arg.keyword), arg.line, arg.column)
        if len(call.args) < 2:
            raise ScenarioSyntaxError(
                ARITYERROR.format(call.func, "at least 2", len(call.args)), call.line, call.column
            )
        return {"*": tuple(arg.value for arg in call.args)}
    names = [p.name for p in sig.params]
    bound = {}
    positional = [a for a in call.args if a.keyword is None]
    if len(positional) > len(names):
        raise ScenarioSyntaxError(
            ARITYERROR.format(call.func, len(names), len(call.args)), call.line, call.column
        )
    seen_keyword = False
    for i, arg in enumerate(call.args):
        if arg.keyword is None:
            if seen_keyword:
                raise ScenarioSyntaxError(
                    SYNTAXERROR.format("keyword argument", "positional argument"),
                    arg.line,
                    arg.column,
                )
            bound[names[i]] = arg.value
            continue
        seen_keyword = True
        if arg.keyword not in names:
            raise ScenarioSyntaxError(KWERROR.format(call.func, arg.keyword), arg.line, arg.column)
        if arg.keyword in bound:
            raise ScenarioSyntaxError(DUPARGERROR.format(call.func, arg.keyword), arg.line, arg.column)
        bound[arg.keyword] = arg.value
    for param in sig.params:
        if param.required and param.name not in bound:
            raise ScenarioSyntaxError(
                MISSINGARGERROR.format(call.func, param.name), call.line, call.column
            )
    return bound


def parse(text: str) -> Scenario:
    """
    Parse scenario source text.

    :param str text: source
    :return: scenario
    :rtype: Scenario
    :raises: ScenarioSyntaxError
    """

    return ScenarioParser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Power):
        return 4
    return 5


def format_node(node) -> str:
    """
    Canonical source text of an expression node.

    :param node: AST node
    :return: text which parses back to an equal node
    :rtype: str
    """

    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Neg):
        inner = format_node(node.operand)
        return f"-({inner})" if _prec(node.operand) < 3 else f"-{inner}"
    if isinstance(node, Power):
        base = format_node(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        left, right = format_node(node.left), format_node(node.right)
        if _prec(node.left) < prec:
            left = f"({left})"
        if _prec(node.right) <= prec:
            right = f"({right})"
        if node.op in "+-":
            return f"{left} {node.op} {right}"
        return f"{left}{node.op}{right}"
    if isinstance(node, ListExpr):
        return "[" + ", ".join(format_node(i) for i in node.items) + "]"
    if isinstance(node, Call):
        args = []
        for arg in node.args:
            value = format_node(arg.value)
            args.append(value if arg.keyword is None else f"{arg.keyword}={value}")
        return f"{node.func}(" + ", ".join(args) + ")"
    if isinstance(node, VarietyDecl):
        return f"variety {node.name} = {format_node(node.call)}"
    if isinstance(node, BundleDecl):
        return f"bundle {node.name} = {format_node(node.expr)}"
    if isinstance(node, QueryStmt):
        return f"query {format_node(node.call)}"
    raise TypeError(f"Cannot format {node!r}")


def format_scenario(scenario: Scenario) -> str:
    """
    Pretty print a whole scenario, one statement per line.
    """

    return "".join(format_node(s) + "\n" for s in scenario.statements)
