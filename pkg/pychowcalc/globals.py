"""
PyChowCalc Globals

Collection of global constants and helper methods

Created on 2 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name

import os
from fractions import Fraction
from functools import lru_cache

from sympy import bernoulli

DIRNAME = os.path.dirname(__file__)
FIXTURE_DIR = os.path.join(DIRNAME, "fixtures")
FIXTURE_ENV = "PYCHOWCALC_FIXTURES"
SCENARIO_EXT = ".scn"
EXPECTED_EXT = ".json"

MAX_EXT_RANK = 6  # exterior powers via the lambda-ring recursion
MAX_ORACLE_RANK = 5  # Chern root oracle
MAX_DET_ORACLE = 8  # literal determinant expansion
MAX_SCHUR_CHECK = 12  # reduction of P_n modulo x2^2
MAX_EN_K = 3  # Eagon-Northcott terms
MAX_REWRITE_STEPS = 10000  # rewrite chain termination bound
MAX_BLOWUP_POINTS = 8
JSON_INDENT = 2

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2

OUTPUT_JSON = "json"
OUTPUT_TEXT = "text"

# predictor flags
FLAG_H1_ZERO = "h1_structure_zero"
FLAG_VBIG = "v_big"
FLAG_ULRICH = "ulrich"
FLAG_ACM = "acm_subcanonical_detH"
FLAG_NGE4 = "n_ge_4"
FLAGS = (FLAG_H1_ZERO, FLAG_VBIG, FLAG_ULRICH, FLAG_ACM, FLAG_NGE4)

# verdict kinds
EMPTY = "Empty"
CONNECTED = "Connected"
DISCONNECTED = "Disconnected"
ATLEAST = "AtLeast"
EXACTLY = "Exactly"
INCONCLUSIVE = "Inconclusive"

# rule identifiers cited by verdicts
RULE_EMPTY = "empty-iff-top-chern-vanishes"
RULE_CONNECTED = "connected-if-next-chern-nonzero"
RULE_LOWER_BOUND = "component-lower-bound"
RULE_DISCONNECTED = "disconnected-if-rank-exceeds-k-plus-s"
RULE_EXACT_H_ZERO = "exact-count-h-zero"
RULE_EXACT_H_POSITIVE = "exact-count-h-positive"
RULE_CODIM3_BOUND = "codim3-lower-bound"
RULE_CODIM3_EXACT = "codim3-exact-count-acm"
RULE_VBIG = "connected-if-v-big"
RULE_ULRICH_BOUND = "ulrich-subvariety-lower-bound"
RULE_ULRICH_CONNECTED = "ulrich-subvariety-connected"
RULE_PLANES_PATTERN = "plane-product-generic-count"

# ulrich report check names
CHECK_SLOPE = "slope"
CHECK_CHI = "chi_equals_rd"
CHECK_BOGOMOLOV = "bogomolov_margin"
CHECK_C2_RANK = "c2_one_rank"
CHECK_C2_C1SQ = "c2_one_c1_squared"
CHECK_C2_DEGREE = "c2_one_degree_range"

# variety families
FAMILY_PROJECTIVE = "projective_space"
FAMILY_QUADRIC = "quadric"
FAMILY_PRODUCT = "product"
FAMILY_BUNDLE = "projective_bundle_over_curve"
FAMILY_HIRZEBRUCH = "hirzebruch"
FAMILY_BLOWUP = "blown_up_plane"
FAMILY_CURVE = "curve"


def format_rational(value) -> str:
    """
    Render an exact rational as an "p/q" string (or "p" when integral).

    :param value: Fraction or int
    :return: canonical string
    :rtype: str
    """

    return str(Fraction(value))


def is_integral(value) -> bool:
    """
    Test whether a rational is an integer.

    :param value: Fraction or int
    :return: True if denominator is 1
    :rtype: bool
    """

    return Fraction(value).denominator == 1


@lru_cache(maxsize=None)
def todd_log_coefficients(n: int) -> tuple:
    """
    Coefficients a_k of log(x / (1 - exp(-x))) = sum a_k x^k for k = 0..n.

    a_1 = 1/2, a_k = -B_k / (k * k!) for even k, 0 otherwise.

    :param int n: highest power
    :return: tuple of Fractions indexed by k
    :rtype: tuple
    """

    coeffs = [Fraction(0)] * (n + 1)
    if n >= 1:
        coeffs[1] = Fraction(1, 2)
    factorial = 1
    for k in range(1, n + 1):
        factorial *= k
        if k >= 2 and k % 2 == 0:
            b = bernoulli(k)
            coeffs[k] = -Fraction(int(b.p), int(b.q)) / (k * factorial)
    return tuple(coeffs)


def json_subset_match(expected, actual, path: str = "$") -> list:
    """
    Structural comparison of an expected JSON document against an actual one.

    Every key of an expected object must be present and match; lists must
    have the same length and match element-wise; empty objects and lists
    must match exactly.

    :param expected: expected JSON value
    :param actual: actual JSON value
    :param str path: location prefix used in mismatch messages
    :return: list of mismatch descriptions (empty if matched)
    :rtype: list
    """

    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{path}: expected object, got {type(actual).__name__}"]
        if not expected and actual:
            return [f"{path}: expected empty object"]
        diffs = []
        for key in sorted(expected):
            if key not in actual:
                diffs.append(f"{path}.{key}: missing")
            else:
                diffs.extend(
                    json_subset_match(expected[key], actual[key], f"{path}.{key}")
                )
        return diffs
    if isinstance(expected, list):
        if not isinstance(actual, list) or len(actual) != len(expected):
            return [f"{path}: expected list of length {len(expected)}"]
        diffs = []
        for i, (exp, act) in enumerate(zip(expected, actual)):
            diffs.extend(json_subset_match(exp, act, f"{path}[{i}]"))
        return diffs
    if expected != actual or isinstance(expected, bool) != isinstance(actual, bool):
        return [f"{path}: expected {expected!r}, got {actual!r}"]
    return []
