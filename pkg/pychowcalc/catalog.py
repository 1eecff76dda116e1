"""
Variety catalog

Constructors producing VarietyModel values (Chow ring presentation,
polarization, canonical class and tangent Chern class) for the families
of projective varieties the engine knows about. Constructors with integer
parameters are memoized, so equal arguments return the same model and
the same ring presentation.

Created on 2 Sep 2026

@author: semuadmin
"""
# pylint: disable=invalid-name, too-many-arguments

import logging
from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from pychowcalc.exceptions import MalformedInputError, UnsupportedError
from pychowcalc.globals import (
    FAMILY_BLOWUP,
    FAMILY_BUNDLE,
    FAMILY_CURVE,
    FAMILY_HIRZEBRUCH,
    FAMILY_PRODUCT,
    FAMILY_PROJECTIVE,
    FAMILY_QUADRIC,
    MAX_BLOWUP_POINTS,
)
from pychowcalc.ring import GradedClass, RingPresentation, tensor_presentation
from pychowcalc.strings import (
    ANTICANONNOTE,
    DEGREEERROR,
    DIMERROR,
    NEFNOTE,
    PROJERROR,
    VERYAMPLENOTE,
)

LOGGER = logging.getLogger(__name__)

Projection = namedtuple("Projection", ["base", "images"])


@dataclass(frozen=True, eq=False)
class VarietyModel:
    """
    VarietyModel class.

    A catalog variety: ring presentation, dimension, hyperplane class H,
    canonical class K, total Chern class of the tangent bundle and
    degree d = integral of H^n.
    """

    name: str
    family: str
    presentation: RingPresentation
    H: GradedClass
    K: GradedClass
    tangent_chern: GradedClass
    params: tuple = ()
    projections: dict = field(default_factory=dict)
    factors: tuple = ()
    notes: tuple = ()

    @property
    def n(self) -> int:
        """
        Getter for dimension.
        """

        return self.presentation.dimension

    @property
    def d(self) -> int:
        """
        Getter for degree of the polarization.

        :return: integral of H^n
        :rtype: int
        """

        return int(self.presentation.integrate(self.H**self.n))

    def gen(self, name: str) -> GradedClass:
        """
        Class of a generator of the ring.
        """

        return self.presentation.gen(name)

    def integrate(self, cls: GradedClass) -> Fraction:
        """
        Integral over the variety.
        """

        return self.presentation.integrate(cls)

    def projection(self, index: int) -> Projection:
        """
        Registered projection to a factor or base.

        :param int index: 1-based projection id
        :return: Projection(base model, {base generator: class on self})
        :rtype: Projection
        :raises: MalformedInputError
        """

        if index not in self.projections:
            raise MalformedInputError(PROJERROR.format(index, self.name))
        return self.projections[index]

    def pullback(self, index: int, cls: GradedClass) -> GradedClass:
        """
        Pull a class back along a registered projection.

        :param int index: projection id
        :param GradedClass cls: class on the base
        :return: class on self
        :rtype: GradedClass
        """

        proj = self.projection(index)
        return cls.map_to(self.presentation, proj.images)

    def euler_number(self) -> Fraction:
        """
        Topological Euler number, the integral of the top tangent Chern class.
        """

        return self.integrate(self.tangent_chern.part(self.n))

    def __str__(self) -> str:
        return self.name


def _model(name, family, ring, H, K, tangent, params=(), **kwargs) -> VarietyModel:
    model = VarietyModel(
        name=name,
        family=family,
        presentation=ring,
        H=H,
        K=K,
        tangent_chern=tangent.truncate(ring.dimension),
        params=params,
        **kwargs,
    )
    if model.d < 1:
        raise UnsupportedError(DEGREEERROR.format(name, model.d))
    return model


@lru_cache(maxsize=None)
def projective_space(n: int) -> VarietyModel:
    """
    Projective space P^n with Chow ring Q[h]/(h^{n+1}).

    :param int n: dimension >= 1
    :return: model
    :rtype: VarietyModel
    :raises: UnsupportedError
    """

    if n < 1:
        raise UnsupportedError(DIMERROR.format("projective_space", "n >= 1", n))
    ring = RingPresentation(f"P{n}", [("h", 1)], n, [], {(n,): 1})
    h = ring.gen("h")
    return _model(
        f"P{n}", FAMILY_PROJECTIVE, ring, h, -(n + 1) * h, (1 + h) ** (n + 1), (n,)
    )


def _quadric_ring(n: int) -> RingPresentation:
    """
    Chow ring of a smooth quadric Q_n.

    Above the middle degree the classes b_j are linear spaces of
    codimension j, with H*b_j = b_{j+1} and b_n the point. For even
    n = 2m the middle degree has the two ruling classes e{m}, e{m}p with
    H^m = e + ep; same-family classes meet in a point when m is even and
    opposite families do when m is odd.
    """

    m, odd = divmod(n, 2)
    pt = {f"b{n}": 1}
    gens = [("H", 1)]
    rules = []
    if odd:
        gens += [(f"b{j}", j) for j in range(m + 1, n + 1)]
        rules.append(({"H": m + 1}, [(2, {f"b{m + 1}": 1})]))
    else:
        a, b = f"e{m}", f"e{m}p"
        gens += [(a, m), (b, m)] + [(f"b{j}", j) for j in range(m + 1, n + 1)]
        rules.append(({"H": m}, [(1, {a: 1}), (1, {b: 1})]))
        rules.append(({"H": 1, a: 1}, [(1, {f"b{m + 1}": 1})]))
        rules.append(({"H": 1, b: 1}, [(1, {f"b{m + 1}": 1})]))
        same = [(1, pt)] if m % 2 == 0 else []
        cross = [] if m % 2 == 0 else [(1, pt)]
        rules.append(({a: 2}, same))
        rules.append(({a: 1, b: 1}, cross))
        rules.append(({b: 2}, same))
    for j in range(m + 1, n):
        rules.append(({"H": 1, f"b{j}": 1}, [(1, {f"b{j + 1}": 1})]))
    point = tuple(1 if g == f"b{n}" else 0 for g, _ in gens)
    return RingPresentation(f"Q{n}", gens, n, rules, {point: 1})


@lru_cache(maxsize=None)
def quadric(n: int) -> VarietyModel:
    """
    Smooth quadric Q_n in P^{n+1}.

    :param int n: dimension >= 2
    :return: model
    :rtype: VarietyModel
    :raises: UnsupportedError
    """

    if n < 2:
        raise UnsupportedError(DIMERROR.format("quadric", "n >= 2", n))
    ring = _quadric_ring(n)
    H = ring.gen("H")
    tangent = (1 + H) ** (n + 2) * (1 + 2 * H).inverse()
    return _model(f"Q{n}", FAMILY_QUADRIC, ring, H, -n * H, tangent, (n,))


def product(factors: list) -> VarietyModel:
    """
    Product of catalog varieties with the Segre polarization.

    Projection i (1-based) pulls classes back from factor i.

    :param list factors: two or more VarietyModel
    :return: model
    :rtype: VarietyModel
    :raises: MalformedInputError
    """

    factors = list(factors)
    if len(factors) < 2:
        raise MalformedInputError(
            DIMERROR.format("product", "at least 2 factors", len(factors))
        )
    name = "x".join(f.name for f in factors)
    ring, renames = tensor_presentation(name, [f.presentation for f in factors])
    projections = {}
    H = ring.zero()
    K = ring.zero()
    tangent = ring.one()
    for i, (factor, rename) in enumerate(zip(factors, renames), start=1):
        images = {g: ring.gen(rename[g]) for g in factor.presentation.generator_names}
        projections[i] = Projection(factor, images)
        H = H + factor.H.map_to(ring, images)
        K = K + factor.K.map_to(ring, images)
        tangent = tangent * factor.tangent_chern.map_to(ring, images)
    return _model(
        name,
        FAMILY_PRODUCT,
        ring,
        H,
        K,
        tangent,
        tuple(f.name for f in factors),
        projections=projections,
        factors=tuple(factors),
    )


@lru_cache(maxsize=None)
def curve(genus: int) -> VarietyModel:
    """
    Smooth curve of the given genus, polarized by a point.

    :param int genus: g >= 0
    :return: model
    :rtype: VarietyModel
    """

    if genus < 0:
        raise UnsupportedError(DIMERROR.format("curve", "genus >= 0", genus))
    ring = RingPresentation(f"C{genus}", [("p", 1)], 1, [], {(1,): 1})
    p = ring.gen("p")
    return _model(
        f"C{genus}", FAMILY_CURVE, ring, p, (2 * genus - 2) * p, 1 + (2 - 2 * genus) * p, (genus,)
    )


@lru_cache(maxsize=None)
def projective_bundle_over_curve(rank: int, degF: int, genus: int) -> VarietyModel:
    """
    Projective bundle P(F) of a rank n bundle F of degree degF over a curve
    of genus g, polarized by the tautological class xi.

    The ring is Q[xi, f]/(f^2, xi^n - degF*xi^{n-1}*f) with the integral
    of xi^{n-1}*f equal to 1, so xi^n integrates to degF. Projection 1
    pulls the point class of the base back to the fibre class f.

    :param int rank: n >= 2
    :param int degF: degree of F
    :param int genus: genus of the base curve
    :return: model
    :rtype: VarietyModel
    :raises: UnsupportedError
    """

    n, g = rank, genus
    if n < 2:
        raise UnsupportedError(DIMERROR.format("projective_bundle_over_curve", "rank >= 2", n))
    if g < 0:
        raise UnsupportedError(DIMERROR.format("projective_bundle_over_curve", "genus >= 0", g))
    name = f"P(F{n},{degF},{g})"
    ring = RingPresentation(
        name,
        [("xi", 1), ("f", 1)],
        n,
        [({"f": 2}, []), ({"xi": n}, [(degF, {"xi": n - 1, "f": 1})])],
        {(n - 1, 1): 1},
    )
    xi, f = ring.gen("xi"), ring.gen("f")
    K = -n * xi + (degF + 2 * g - 2) * f
    tangent = (1 + (2 - 2 * g) * f) * ((1 + xi) ** n - degF * f * (1 + xi) ** (n - 1))
    base = curve(g)
    return _model(
        name,
        FAMILY_BUNDLE,
        ring,
        xi,
        K,
        tangent,
        (n, degF, g),
        projections={1: Projection(base, {"p": f})},
        notes=(VERYAMPLENOTE,),
    )


def hirzebruch(e: int, alpha: int = 1, beta: int = None) -> VarietyModel:
    """
    Hirzebruch surface X_e with section C0 (C0^2 = -e) and fibre f,
    polarized by H = alpha*C0 + beta*f (default beta = e + 1).

    Numeric nefness of H is checked and recorded as a note, not enforced.

    :param int e: e >= 0
    :param int alpha: coefficient of C0
    :param int beta: coefficient of f
    :return: model
    :rtype: VarietyModel
    :raises: UnsupportedError
    """

    if e < 0:
        raise UnsupportedError(DIMERROR.format("hirzebruch", "e >= 0", e))
    return _hirzebruch(e, alpha, e + 1 if beta is None else beta)


@lru_cache(maxsize=None)
def _hirzebruch(e: int, alpha: int, beta: int) -> VarietyModel:
    name = f"X{e}"
    ring = RingPresentation(
        name,
        [("C0", 1), ("f", 1)],
        2,
        [({"C0": 2}, [(-e, {"C0": 1, "f": 1})]), ({"f": 2}, [])],
        {(1, 1): 1},
    )
    C0, f = ring.gen("C0"), ring.gen("f")
    H = alpha * C0 + beta * f
    notes = [VERYAMPLENOTE]
    for label, curve_cls in (("H.C0", C0), ("H.f", f)):
        value = ring.integrate(H * curve_cls)
        if value < 0:
            note = NEFNOTE.format(H, label, value)
            LOGGER.warning(note)
            notes.append(note)
    tangent = 1 + 2 * C0 + (e + 2) * f + 4 * C0 * f
    return _model(
        name,
        FAMILY_HIRZEBRUCH,
        ring,
        H,
        -2 * C0 - (e + 2) * f,
        tangent,
        (e, alpha, beta),
        notes=tuple(notes),
    )


@lru_cache(maxsize=None)
def blown_up_plane(k: int) -> VarietyModel:
    """
    Blow up of P^2 at k general points, with line class l and exceptional
    classes e1..ek, polarized anticanonically (H = l when k = 0).

    :param int k: number of points, 0 <= k <= 8
    :return: model
    :rtype: VarietyModel
    :raises: UnsupportedError
    """

    if not 0 <= k <= MAX_BLOWUP_POINTS:
        raise UnsupportedError(
            DIMERROR.format("blown_up_plane", f"0 <= k <= {MAX_BLOWUP_POINTS}", k)
        )
    exc = [f"e{i}" for i in range(1, k + 1)]
    rules = []
    for i, ei in enumerate(exc):
        rules.append(({"l": 1, ei: 1}, []))
        rules.append(({ei: 2}, [(-1, {"l": 2})]))
        for ej in exc[i + 1 :]:
            rules.append(({ei: 1, ej: 1}, []))
    ring = RingPresentation(
        f"Bl{k}", [("l", 1)] + [(ei, 1) for ei in exc], 2, rules, {(2,) + (0,) * k: 1}
    )
    l = ring.gen("l")
    esum = ring.zero()
    for ei in exc:
        esum = esum + ring.gen(ei)
    K = -3 * l + esum
    H = -K if k else l
    tangent = 1 - K + (3 + k) * l**2
    notes = (ANTICANONNOTE.format(k),) if k >= 7 else ()
    return _model(f"Bl{k}", FAMILY_BLOWUP, ring, H, K, tangent, (k,), notes=notes)
