"""
Truncated graded ring engine

Models a rational Chow ring as a finite presentation: weighted generators,
rewrite rules sending leading monomials to normal-form combinations, and an
integration table on the top degree. Monomials are exponent tuples aligned
with the generator order of their presentation.

Created on 2 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name

import logging
from fractions import Fraction
from numbers import Rational

from pychowcalc.exceptions import (
    ConsistencyError,
    MalformedInputError,
)
from pychowcalc.globals import MAX_REWRITE_STEPS, format_rational
from pychowcalc.strings import (
    DIVZEROERROR,
    INTTABLEERROR,
    INVERTERROR,
    NEGEXPERROR,
    REWRITEBOUNDERROR,
    RINGMISMATCHERROR,
    RULEHOMERROR,
    RULENFERROR,
    UNKNOWNGENERROR,
)

LOGGER = logging.getLogger(__name__)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _accumulate(target: dict, mono: tuple, coef: Fraction):
    value = target.get(mono, 0) + coef
    if value:
        target[mono] = value
    else:
        target.pop(mono, None)


class RingPresentation:
    """
    RingPresentation class.

    A truncated graded ring Q[generators] / (rules) with all classes of
    degree above the dimension identified with zero.
    """

    def __init__(
        self,
        name: str,
        generators: list,
        dimension: int,
        rules: list = None,
        integration: dict = None,
    ):
        """
        Constructor.

        :param str name: label of the ring (usually the variety name)
        :param list generators: list of (name, degree) tuples, degree >= 1
        :param int dimension: ring dimension n
        :param list rules: list of (lead, rhs) where lead is a monomial spec
            and rhs a list of (coefficient, monomial spec) tuples. Rules are
            tried in the given order
        :param dict integration: {top degree monomial spec: coefficient}
        :raises: MalformedInputError, ConsistencyError
        """

        self._name = name
        self._gens = tuple(str(g) for g, _ in generators)
        self._degrees = tuple(int(d) for _, d in generators)
        if len(set(self._gens)) != len(self._gens) or min(self._degrees, default=1) < 1:
            raise MalformedInputError(f"Invalid generators for {name}: {generators}")
        self._index = {g: i for i, g in enumerate(self._gens)}
        self._n = int(dimension)
        self._cache = {}

        self._rules = []
        for lead, rhs in rules or []:
            lmono = self.monomial(lead)
            rterms = {}
            for coef, mono in rhs:
                _accumulate(rterms, self.monomial(mono), Fraction(coef))
            self._rules.append((lmono, rterms))
        self._validate_rules()

        self._basis = {
            d: tuple(
                sorted(
                    (m for m in self.monomials_of_degree(d) if not self.is_reducible(m)),
                    reverse=True,
                )
            )
            for d in range(self._n + 1)
        }

        self._integration = {}
        for mono, coef in (integration or {}).items():
            self._integration[self.monomial(mono)] = Fraction(coef)
        if set(self._integration) != set(self._basis[self._n]):
            raise ConsistencyError(INTTABLEERROR.format(name))

        LOGGER.debug(
            "Ring %s: %d generators, %d rules, dimension %d",
            name,
            len(self._gens),
            len(self._rules),
            self._n,
        )

    def _validate_rules(self):
        """
        Each rule must be homogeneous with a standard right hand side.
        """

        for lead, rhs in self._rules:
            ldeg = self.degree_of(lead)
            for mono in rhs:
                if self.degree_of(mono) != ldeg:
                    raise MalformedInputError(
                        RULEHOMERROR.format(self.format_monomial(lead))
                    )
                if self.is_reducible(mono):
                    raise MalformedInputError(
                        RULENFERROR.format(
                            self.format_monomial(lead), self.format_monomial(mono)
                        )
                    )

    @property
    def name(self) -> str:
        """
        Getter for ring label.

        :return: name
        :rtype: str
        """

        return self._name

    @property
    def dimension(self) -> int:
        """
        Getter for ring dimension.

        :return: n
        :rtype: int
        """

        return self._n

    @property
    def generators(self) -> tuple:
        """
        Getter for generators.

        :return: tuple of (name, degree)
        :rtype: tuple
        """

        return tuple(zip(self._gens, self._degrees))

    @property
    def generator_names(self) -> tuple:
        """
        Getter for generator names in ring order.

        :return: names
        :rtype: tuple
        """

        return self._gens

    @property
    def rules(self) -> tuple:
        """
        Getter for rewrite rules.

        :return: tuple of (lead monomial, {monomial: coefficient})
        :rtype: tuple
        """

        return tuple((lead, dict(rhs)) for lead, rhs in self._rules)

    @property
    def integration(self) -> dict:
        """
        Getter for the integration table.

        :return: {top basis monomial: coefficient}
        :rtype: dict
        """

        return dict(self._integration)

    def basis(self, degree: int) -> tuple:
        """
        Standard basis monomials of the given degree, in fixed order.

        :param int degree: degree
        :return: tuple of monomials
        :rtype: tuple
        """

        return self._basis.get(degree, ())

    def monomial(self, spec) -> tuple:
        """
        Convert a monomial spec to an exponent tuple.

        :param spec: mapping {generator name: exponent} or exponent tuple
        :return: exponent tuple
        :rtype: tuple
        :raises: MalformedInputError
        """

        if isinstance(spec, tuple) and len(spec) == len(self._gens):
            exps = list(spec)
        else:
            exps = [0] * len(self._gens)
            for gen, exp in dict(spec).items():
                if gen not in self._index:
                    raise MalformedInputError(
                        UNKNOWNGENERROR.format(gen, ", ".join(self._gens))
                    )
                exps[self._index[gen]] += int(exp)
        for gen, exp in zip(self._gens, exps):
            if exp < 0:
                raise MalformedInputError(NEGEXPERROR.format(exp, gen))
        return tuple(int(e) for e in exps)

    def degree_of(self, mono: tuple) -> int:
        """
        Weighted degree of a monomial.

        :param tuple mono: exponents
        :return: degree
        :rtype: int
        """

        return sum(e * d for e, d in zip(mono, self._degrees))

    def is_reducible(self, mono: tuple) -> bool:
        """
        True if some rule's leading monomial divides mono.

        :param tuple mono: exponents
        :return: reducible flag
        :rtype: bool
        """

        return any(_divides(lead, mono) for lead, _ in self._rules)

    def monomials_of_degree(self, degree: int) -> list:
        """
        All monomials of the given weighted degree, standard or not.

        :param int degree: degree
        :return: list of exponent tuples
        :rtype: list
        """

        result = []
        exps = []

        def walk(i: int, remaining: int):
            if i == len(self._degrees):
                if remaining == 0:
                    result.append(tuple(exps))
                return
            for e in range(remaining // self._degrees[i], -1, -1):
                exps.append(e)
                walk(i + 1, remaining - e * self._degrees[i])
                exps.pop()

        walk(0, degree)
        return result

    def format_monomial(self, mono: tuple) -> str:
        """
        Render a monomial as e.g. "xi^2*f" ("1" for the unit).

        :param tuple mono: exponents
        :return: text
        :rtype: str
        """

        factors = []
        for gen, exp in zip(self._gens, mono):
            if exp == 1:
                factors.append(gen)
            elif exp > 1:
                factors.append(f"{gen}^{exp}")
        return "*".join(factors) if factors else "1"

    def _reduce(self, mono: tuple, chooser=None, steps: list = None) -> dict:
        """
        Rewrite a monomial to its normal form.

        :param tuple mono: exponents
        :param chooser: optional callable picking one of the applicable rules
        :param list steps: single element step counter shared by the chain
        :return: {basis monomial: coefficient}
        :rtype: dict
        """

        if self.degree_of(mono) > self._n:
            return {}
        if chooser is None and mono in self._cache:
            return self._cache[mono]
        if steps is None:
            steps = [0]
        applicable = [rule for rule in self._rules if _divides(rule[0], mono)]
        if not applicable:
            result = {mono: Fraction(1)}
        else:
            steps[0] += 1
            if steps[0] > MAX_REWRITE_STEPS:
                raise ConsistencyError(
                    REWRITEBOUNDERROR.format(self.format_monomial(mono), MAX_REWRITE_STEPS)
                )
            lead, rhs = applicable[0] if chooser is None else chooser(applicable)
            quotient = tuple(a - b for a, b in zip(mono, lead))
            result = {}
            for rmono, coef in rhs.items():
                for m, c in self._reduce(_mono_mul(rmono, quotient), chooser, steps).items():
                    _accumulate(result, m, coef * c)
        if chooser is None:
            self._cache[mono] = result
        return result

    def normal_form(self, spec, chooser=None) -> "GradedClass":
        """
        Normal form of a monomial.

        :param spec: monomial spec (mapping or exponent tuple)
        :param chooser: optional callable choosing among applicable rules
            (default: first rule in presentation order)
        :return: class in normal form
        :rtype: GradedClass
        :raises: MalformedInputError
        """

        return GradedClass(self, self._reduce(self.monomial(spec), chooser))

    def element(self, terms: dict) -> "GradedClass":
        """
        Build a class from arbitrary (not necessarily standard) monomials.

        :param dict terms: {monomial spec: coefficient}
        :return: class in normal form
        :rtype: GradedClass
        """

        result = {}
        for spec, coef in terms.items():
            for m, c in self._reduce(self.monomial(spec)).items():
                _accumulate(result, m, Fraction(coef) * c)
        return GradedClass(self, result)

    def gen(self, name: str) -> "GradedClass":
        """
        Class of a generator.

        :param str name: generator name
        :return: class
        :rtype: GradedClass
        """

        return self.normal_form({name: 1})

    def zero(self) -> "GradedClass":
        """
        Zero class.
        """

        return GradedClass(self, {})

    def one(self) -> "GradedClass":
        """
        Unit class.
        """

        return self.scalar(1)

    def scalar(self, value) -> "GradedClass":
        """
        Degree 0 class.

        :param value: int or Fraction
        :return: class
        :rtype: GradedClass
        """

        return GradedClass(self, {(0,) * len(self._gens): Fraction(value)})

    def multiply(self, a: "GradedClass", b: "GradedClass") -> "GradedClass":
        """
        Cup product of two normal-form classes.

        :param GradedClass a: left factor
        :param GradedClass b: right factor
        :return: product in normal form
        :rtype: GradedClass
        :raises: MalformedInputError if either class lives on another ring
        """

        self._check(a)
        self._check(b)
        result = {}
        for ma, ca in a.coefficients.items():
            for mb, cb in b.coefficients.items():
                mono = _mono_mul(ma, mb)
                if self.degree_of(mono) > self._n:
                    continue
                for m, c in self._reduce(mono).items():
                    _accumulate(result, m, ca * cb * c)
        return GradedClass(self, result)

    def integrate(self, a: "GradedClass") -> Fraction:
        """
        Degree map on the top-degree component.

        :param GradedClass a: class
        :return: integral
        :rtype: Fraction
        """

        self._check(a)
        total = Fraction(0)
        for mono, coef in a.coefficients.items():
            total += coef * self._integration.get(mono, 0)
        return total

    def _check(self, a: "GradedClass"):
        if a.ring is not self:
            raise MalformedInputError(RINGMISMATCHERROR.format(a.ring.name, self._name))

    def __repr__(self) -> str:
        return f"RingPresentation({self._name!r}, {self.generators}, {self._n})"


class GradedClass:
    """
    GradedClass class.

    Immutable element of a RingPresentation, stored as a flat map of
    standard monomials to exact rational coefficients.
    """

    __slots__ = ("_ring", "_coeffs")

    def __init__(self, ring: RingPresentation, coeffs: dict):
        """
        Constructor. Coefficients must already be in normal form; use
        RingPresentation.element for arbitrary monomials.

        :param RingPresentation ring: owning presentation
        :param dict coeffs: {standard monomial: coefficient}
        """

        self._ring = ring
        self._coeffs = {m: Fraction(c) for m, c in coeffs.items() if c}

    @property
    def ring(self) -> RingPresentation:
        """
        Getter for owning presentation.
        """

        return self._ring

    @property
    def coefficients(self) -> dict:
        """
        Getter for flat coefficient map.

        :return: {monomial: Fraction}
        :rtype: dict
        """

        return dict(self._coeffs)

    @property
    def terms(self) -> dict:
        """
        Coefficients grouped by degree, in basis order.

        :return: {degree: {monomial: Fraction}}
        :rtype: dict
        """

        result = {}
        for d in range(self._ring.dimension + 1):
            part = {m: self._coeffs[m] for m in self._ring.basis(d) if m in self._coeffs}
            if part:
                result[d] = part
        return result

    def part(self, degree: int) -> "GradedClass":
        """
        Homogeneous component of the given degree.
        """

        return GradedClass(
            self._ring,
            {m: c for m, c in self._coeffs.items() if self._ring.degree_of(m) == degree},
        )

    def truncate(self, degree: int) -> "GradedClass":
        """
        Sum of the components of degree <= degree.
        """

        return GradedClass(
            self._ring,
            {m: c for m, c in self._coeffs.items() if self._ring.degree_of(m) <= degree},
        )

    def scalar(self) -> Fraction:
        """
        Degree 0 coefficient.
        """

        return self._coeffs.get((0,) * len(self._ring.generator_names), Fraction(0))

    def is_zero(self) -> bool:
        """
        True for the zero class.
        """

        return not self._coeffs

    def is_homogeneous(self, degree: int) -> bool:
        """
        True if every term has the given degree (the zero class qualifies).
        """

        return all(self._ring.degree_of(m) == degree for m in self._coeffs)

    def integrate(self) -> Fraction:
        """
        Integral over the owning ring.
        """

        return self._ring.integrate(self)

    def _coerce(self, other):
        if isinstance(other, GradedClass):
            if other.ring is not self._ring:
                raise MalformedInputError(
                    RINGMISMATCHERROR.format(self._ring.name, other.ring.name)
                )
            return other
        if isinstance(other, (int, Rational)):
            return self._ring.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._coeffs)
        for m, c in other.coefficients.items():
            _accumulate(result, m, c)
        return GradedClass(self._ring, result)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self._ring, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return GradedClass(
                self._ring, {m: c * other for m, c in self._coeffs.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._ring.multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GradedClass):
            if other.ring is not self._ring or other != other.scalar():
                raise MalformedInputError(DIVZEROERROR)
            other = other.scalar()
        if not isinstance(other, (int, Rational)) or other == 0:
            raise MalformedInputError(DIVZEROERROR)
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self._ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            return other.ring is self._ring and other.coefficients == self._coeffs
        if isinstance(other, (int, Rational)):
            return self._coeffs == self._ring.scalar(other).coefficients
        return NotImplemented

    def __hash__(self):
        return hash((id(self._ring), frozenset(self._coeffs.items())))

    def inverse(self) -> "GradedClass":
        """
        Multiplicative inverse of a class with nonzero degree 0 part.

        :return: inverse
        :rtype: GradedClass
        :raises: MalformedInputError
        """

        a0 = self.scalar()
        if a0 == 0:
            raise MalformedInputError(INVERTERROR.format(a0))
        nilpotent = self * (1 / a0) - 1
        result = self._ring.one()
        term = self._ring.one()
        for _ in range(self._ring.dimension):
            term = term * (-nilpotent)
            result = result + term
        return result * (1 / a0)

    def exp(self) -> "GradedClass":
        """
        Exponential of a class with zero degree 0 part.

        :return: exp(self)
        :rtype: GradedClass
        """

        if self.scalar() != 0:
            raise MalformedInputError(INVERTERROR.format(self.scalar()))
        result = self._ring.one()
        term = self._ring.one()
        for k in range(1, self._ring.dimension + 1):
            term = term * self * Fraction(1, k)
            result = result + term
        return result

    def map_to(self, target: RingPresentation, images: dict) -> "GradedClass":
        """
        Ring homomorphism determined by generator images.

        :param RingPresentation target: target ring
        :param dict images: {generator name: GradedClass on target}
        :return: image class
        :rtype: GradedClass
        """

        result = target.zero()
        for mono, coef in self._coeffs.items():
            term = target.scalar(coef)
            for gen, exp in zip(self._ring.generator_names, mono):
                if exp:
                    term = term * images[gen] ** exp
            result = result + term
        return result

    def to_dict(self) -> dict:
        """
        Serializable form {degree: {monomial: "p/q"}}.

        :return: nested dict with string keys
        :rtype: dict
        """

        return {
            str(d): {
                self._ring.format_monomial(m): format_rational(c) for m, c in part.items()
            }
            for d, part in self.terms.items()
        }

    def __str__(self) -> str:
        pieces = []
        for part in self.terms.values():
            for mono, coef in part.items():
                text = self._ring.format_monomial(mono)
                sign = "-" if coef < 0 else "+"
                mag = abs(coef)
                if text == "1":
                    body = format_rational(mag)
                elif mag == 1:
                    body = text
                else:
                    body = f"{format_rational(mag)}*{text}"
                pieces.append((sign, body))
        if not pieces:
            return "0"
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"GradedClass({self._ring.name}: {self})"


def normal_form(m, p: RingPresentation) -> GradedClass:
    """
    Normal form of a monomial in a presentation.

    :param m: monomial spec
    :param RingPresentation p: presentation
    :return: normal form class
    :rtype: GradedClass
    """

    return p.normal_form(m)


def multiply(a: GradedClass, b: GradedClass, p: RingPresentation) -> GradedClass:
    """
    Product of two classes in p.
    """

    return p.multiply(a, b)


def integrate(a: GradedClass, p: RingPresentation) -> Fraction:
    """
    Integral of a class over p.
    """

    return p.integrate(a)


def tensor_presentation(name: str, factors: list, labels: list = None) -> tuple:
    """
    Kunneth tensor product of presentations.

    Generators are renamed "{generator}_{i}" (1-based factor index). Each
    factor contributes its own rules plus rules killing its standard
    monomials above the factor dimension.

    :param str name: label for the product ring
    :param list factors: list of RingPresentation
    :param list labels: optional suffixes per factor (default 1, 2, ...)
    :return: (product ring, list of {factor generator: product generator name})
    :rtype: tuple
    """

    labels = labels or [str(i + 1) for i in range(len(factors))]
    generators = []
    renames = []
    for factor, label in zip(factors, labels):
        rename = {g: f"{g}_{label}" for g in factor.generator_names}
        renames.append(rename)
        generators.extend((rename[g], d) for g, d in factor.generators)

    def lift(factor, rename, mono):
        return {rename[g]: e for g, e in zip(factor.generator_names, mono) if e}

    rules = []
    for factor, rename in zip(factors, renames):
        for lead, rhs in factor.rules:
            rules.append(
                (lift(factor, rename, lead), [(c, lift(factor, rename, m)) for m, c in rhs.items()])
            )
        maxdeg = max(d for _, d in factor.generators)
        for d in range(factor.dimension + 1, factor.dimension + maxdeg + 1):
            for mono in factor.monomials_of_degree(d):
                if not factor.is_reducible(mono):
                    rules.append((lift(factor, rename, mono), []))

    integration = {}

    def walk(i, acc_mono, acc_coef):
        if i == len(factors):
            integration[tuple(acc_mono)] = acc_coef
            return
        factor = factors[i]
        for mono, coef in factor.integration.items():
            walk(i + 1, acc_mono + list(mono), acc_coef * coef)

    walk(0, [], Fraction(1))
    ring = RingPresentation(
        name,
        generators,
        sum(f.dimension for f in factors),
        rules,
        integration,
    )
    return ring, renames
