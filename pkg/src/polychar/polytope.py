"""Weight polytopes, their lattice points, and Brion vertex sums."""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import mpmath

from . import _linalg
from .charmult import (
    WORKING_DPS,
    NearPoleError,
    POLE_TOLERANCE,
    _require_dominant,
    chamber_sum,
    check_generic,
    pairing,
)
from .rootsys import dominant_weights_below, level
from .weyl import orbit


class UnsupportedAlgebra(ValueError):
    pass


class NotUnimodular(ValueError):
    pass


def points(cd, lam):
    """Lattice points of the weight polytope of ``lam`` in lam + Q.

    A weight belongs exactly when its dominant representative is <= lam, so
    the point set is the union of the orbits of the dominant weights below
    lam.  Sorted by level, then lexicographically.
    """
    lam = tuple(lam)
    _require_dominant(lam)
    out = set()
    for mu in dominant_weights_below(cd, lam):
        out.update(orbit(cd, mu))
    return sorted(out, key=lambda w: (level(cd, w), w))


def _count_a2(l1, l2):
    return Fraction(l1 * l1 + 4 * l1 * l2 + l2 * l2 + 3 * l1 + 3 * l2 + 2, 2)


def _count_c2(l1, l2):
    return l1 * l1 + 4 * l1 * l2 + 2 * l2 * l2 + 2 * l1 + 2 * l2 + 1


def _count_g2(l1, l2):
    return 9 * l1 * l1 + 12 * l1 * l2 + 3 * l2 * l2 + 3 * l1 + 3 * l2 + 1


def _count_a3(l1, l2, l3):
    # the cubic part must be symmetric under l1 <-> l3, hence l3**3
    return (
        1
        + Fraction(11 * l1 + 14 * l2 + 11 * l3, 6)
        + 4 * l1 * l2 + 3 * l1 * l3 + 4 * l2 * l3
        + l1**2 + 2 * l2**2 + l3**2
        + Fraction(
            36 * l1 * l2 * l3
            + 12 * l1 * l2**2 + 12 * l2**2 * l3
            + 6 * l1**2 * l2 + 6 * l2 * l3**2
            + 9 * l1**2 * l3 + 9 * l1 * l3**2
            + l1**3 + 4 * l2**3 + l3**3,
            6,
        )
    )


_CLOSED_FORMS = {"A2": _count_a2, "C2": _count_c2, "G2": _count_g2, "A3": _count_a3}


def has_closed_form(cd):
    return str(cd.id) in _CLOSED_FORMS


def count_closed_form(cd, lam):
    """Closed-form lattice-point count of the weight polytope (A2, C2, G2, A3 only)."""
    f = _CLOSED_FORMS.get(str(cd.id))
    if f is None:
        raise UnsupportedAlgebra(f"no closed-form point count for {cd.id}; available for A2, C2, G2, A3")
    lam = tuple(lam)
    _require_dominant(lam)
    v = Fraction(f(*lam))
    if v.denominator != 1:
        raise AssertionError(f"closed form gave non-integer {v} at {lam}")
    return int(v)


def brion_numeric(cd, lam, c):
    """Brion vertex sum B_lam at ``c``: the chamber sum over all of W with simple-root cones."""
    lam = tuple(lam)
    _require_dominant(lam)
    check_generic(cd, c, orbit(cd, lam))
    return chamber_sum(cd, lam, c, cd.simple_root_weights)


# ------------------------------------------------------ generic polytopes


@dataclass(frozen=True)
class VertexCone:
    apex: tuple
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "apex", tuple(self.apex))
        object.__setattr__(self, "generators", tuple(tuple(u) for u in self.generators))
        d = len(self.apex)
        if any(len(u) != d for u in self.generators):
            raise ValueError("cone generators must live in the ambient dimension of the apex")
        if len(self.generators) > d or _max_minor_gcd(self.generators) == 0:
            raise ValueError(f"cone generators at {self.apex} are not linearly independent")

    def is_unimodular(self):
        return _max_minor_gcd(self.generators) == 1


@dataclass(frozen=True)
class GenericPolytope:
    dimension: int
    vertices: tuple
    cones: tuple
    lattice_points: tuple = field(default=())

    def __post_init__(self):
        if len(self.vertices) != len(self.cones):
            raise ValueError("need exactly one cone per vertex")
        for v, k in zip(self.vertices, self.cones):
            if tuple(v) != k.apex:
                raise ValueError(f"cone apex {k.apex} does not match vertex {tuple(v)}")


def _max_minor_gcd(gens):
    """gcd of the maximal minors of the generator matrix (0 if rank-deficient)."""
    k = len(gens)
    if k == 0:
        return 1
    d = len(gens[0])
    g = 0
    for cols in combinations(range(d), k):
        m = [[u[j] for j in cols] for u in gens]
        g = math.gcd(g, abs(int(_linalg.det(m))))
    return g


def generic_brion_numeric(p, c):
    """sum_v e^{<c,v>} prod_i (1 - e^{<c,u_i>})^{-1} over unimodular vertex cones."""
    for k in p.cones:
        if not k.is_unimodular():
            raise NotUnimodular(f"vertex cone at {k.apex} is not unimodular; signed decompositions are not supported")
        for u in k.generators:
            if abs(pairing(c, u)) < POLE_TOLERANCE:
                raise NearPoleError(f"<c, {u}> is within {POLE_TOLERANCE} of a pole")
    with mpmath.workdps(WORKING_DPS):
        total = []
        for k in p.cones:
            t = mpmath.exp(mpmath.fsum(mpmath.mpf(ci) * x for ci, x in zip(c, k.apex)))
            for u in k.generators:
                t /= -mpmath.expm1(mpmath.fsum(mpmath.mpf(ci) * x for ci, x in zip(c, u)))
            total.append(t)
        return float(mpmath.fsum(total))


def direct_sum(p, c):
    """Exponential sum over the polytope's listed lattice points."""
    return math.fsum(math.exp(pairing(c, x)) for x in p.lattice_points)


def segment_example():
    """The segment [2, 7] in Z."""
    return GenericPolytope(
        dimension=1,
        vertices=((7,), (2,)),
        cones=(VertexCone((7,), ((-1,),)), VertexCone((2,), ((1,),))),
        lattice_points=tuple((x,) for x in range(7, 1, -1)),
    )


def triangle_example():
    """The lattice triangle with vertices (0,0), (1,0), (1,1)."""
    return GenericPolytope(
        dimension=2,
        vertices=((1, 1), (1, 0), (0, 0)),
        cones=(
            VertexCone((1, 1), ((-1, -1), (0, -1))),
            VertexCone((1, 0), ((-1, 0), (0, 1))),
            VertexCone((0, 0), ((1, 0), (1, 1))),
        ),
        lattice_points=((1, 1), (1, 0), (0, 0)),
    )


def point_example(v=(0, 0)):
    """A single point: one vertex with an empty cone."""
    v = tuple(v)
    return GenericPolytope(dimension=len(v), vertices=(v,), cones=(VertexCone(v, ()),), lattice_points=(v,))
