"""Characters as exact multiplicity maps, plus floating-point checks.

The exact route is Freudenthal's recursion.  The two closed forms of the
Weyl character formula (alternating quotient and the sum over chambers) are
only ever evaluated numerically at a point ``c``, where e^mu becomes
exp(sum_i c_i mu_i).
"""

import functools
import math
import random

import mpmath
from collections.abc import Mapping
from fractions import Fraction

from .rootsys import dominant_weights_below, inner, is_dominant, level
from .weyl import dominant_of, enumerate_group, orbit

POLE_TOLERANCE = 1e-3
EXPONENT_BOUND = 30.0
# Weyl-group sums cancel heavily near the pole tolerance; sum them at this precision.
WORKING_DPS = 50


class NotDominant(ValueError):
    pass


class NearPoleError(ArithmeticError):
    """The evaluation point is too close to a pole or would overflow."""


class MultMap(Mapping):
    """Finite formal sum  sum_mu m_mu e^mu  with non-zero integer coefficients."""

    __slots__ = ("_d",)

    def __init__(self, entries=()):
        d = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for mu, m in items:
            mu = tuple(mu)
            d[mu] = d.get(mu, 0) + m
        self._d = {mu: m for mu, m in d.items() if m != 0}

    def __getitem__(self, mu):
        return self._d[tuple(mu)]

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __repr__(self):
        return f"MultMap({self._d!r})"

    def __add__(self, other):
        out = dict(self._d)
        for mu, m in other.items():
            out[mu] = out.get(mu, 0) + m
        return MultMap(out)

    def __neg__(self):
        return MultMap({mu: -m for mu, m in self._d.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return MultMap({mu: k * m for mu, m in self._d.items()})

    def total(self):
        return sum(self._d.values())

    def sorted_items(self, cd):
        return sorted(self._d.items(), key=lambda kv: (level(cd, kv[0]), kv[0]))

    def exp_sum(self, c):
        return math.fsum(m * math.exp(pairing(c, mu)) for mu, m in sorted(self._d.items()))


def pairing(c, mu):
    return sum(ci * mi for ci, mi in zip(c, mu))


def _mp_pairing(c, mu):
    return mpmath.fsum(mpmath.mpf(ci) * mi for ci, mi in zip(c, mu))


def _require_dominant(lam):
    if not is_dominant(lam):
        raise NotDominant(f"weight {tuple(lam)} is not dominant (all labels must be >= 0)")


def weight_system(cd, lam):
    """The character ch_lam as a MultMap (Freudenthal recursion)."""
    lam = tuple(lam)
    _require_dominant(lam)
    return _weight_system(cd, lam)


@functools.lru_cache(maxsize=None)
def dominant_multiplicities(cd, lam):
    """Multiplicities of the dominant weights of L(lam), as a dict."""
    lam = tuple(lam)
    _require_dominant(lam)
    doms = dominant_weights_below(cd, lam)
    present = set(doms)
    rho = cd.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    norm_top = inner(cd, lr, lr)
    mult = {lam: 1}
    for mu in doms[1:]:
        acc = Fraction(0)
        for alpha in cd.positive_root_weights:
            nu = tuple(a + b for a, b in zip(mu, alpha))
            while True:
                d = dominant_of(cd, nu)
                if d not in present:
                    break
                acc += mult[d] * inner(cd, nu, alpha)
                nu = tuple(a + b for a, b in zip(nu, alpha))
        mr = tuple(a + b for a, b in zip(mu, rho))
        m = 2 * acc / (norm_top - inner(cd, mr, mr))
        if m.denominator != 1:
            raise AssertionError(f"non-integral multiplicity {m} at {mu} in L{lam} of {cd.id}")
        mult[mu] = int(m)
    return mult


@functools.lru_cache(maxsize=None)
def _weight_system(cd, lam):
    out = {}
    for mu, m in dominant_multiplicities(cd, lam).items():
        if m:
            for nu in orbit(cd, mu):
                out[nu] = m
    return MultMap(out)


def dim(cd, lam):
    """Weyl dimension formula, exact."""
    lam = tuple(lam)
    _require_dominant(lam)
    lr = tuple(a + 1 for a in lam)
    num = Fraction(1)
    for alpha in cd.positive_root_weights:
        num *= inner(cd, lr, alpha) / inner(cd, cd.rho, alpha)
    if num.denominator != 1:
        raise AssertionError(f"Weyl dimension formula gave non-integer {num} for {lam} in {cd.id}")
    return int(num)


def is_weyl_symmetric(cd, m):
    return all(m.get(nu, 0) == v for mu, v in m.items() for nu in orbit(cd, mu))


# ---------------------------------------------------------------- numerics


def check_generic(cd, c, weights=()):
    """Raise NearPoleError unless ``c`` is safely away from every root hyperplane.

    ``weights`` are the exponents about to be evaluated; each must pair to at
    most EXPONENT_BOUND in absolute value.
    """
    for alpha in cd.positive_root_weights:
        if abs(pairing(c, alpha)) < POLE_TOLERANCE:
            raise NearPoleError(f"<c, {alpha}> = {pairing(c, alpha):.3g} is within {POLE_TOLERANCE} of a pole")
    for mu in weights:
        if abs(pairing(c, mu)) > EXPONENT_BOUND:
            raise NearPoleError(f"<c, {mu}> = {pairing(c, mu):.3g} exceeds the exponent bound {EXPONENT_BOUND}")


def generic_point(cd, rng=None, weights=(), attempts=50):
    """Random c with |c_i| in [0.05, 2] and random signs that passes check_generic.

    ``weights`` are orbit-closed automatically before checking.
    """
    rng = rng if rng is not None else random.Random()
    guard = set()
    for mu in weights:
        guard.update(orbit(cd, mu))
    guard = sorted(guard)
    for _ in range(attempts):
        c = tuple(rng.uniform(0.05, 2.0) * rng.choice((-1, 1)) for _ in range(cd.rank))
        try:
            check_generic(cd, c, guard)
        except NearPoleError:
            continue
        return c
    raise NearPoleError(f"no generic point found for {cd.id} in {attempts} attempts")


def _alternating_sum(cd, v, c):
    return mpmath.fsum(w.det * mpmath.exp(_mp_pairing(c, w(v))) for w in enumerate_group(cd))


def char_eval_quotient(cd, lam, c):
    """ch_lam(c) as a ratio of alternating sums over W."""
    lam = tuple(lam)
    _require_dominant(lam)
    lr = tuple(a + 1 for a in lam)
    check_generic(cd, c, orbit(cd, lr))
    with mpmath.workdps(WORKING_DPS):
        return float(_alternating_sum(cd, lr, c) / _alternating_sum(cd, cd.rho, c))


def chamber_sum(cd, lam, c, roots):
    """sum_w e^{<c, w lam>} prod_{alpha in roots} (1 - e^{-<c, w alpha>})^{-1}.

    ``roots`` are weights; the positive roots give the character, the simple
    roots give the Brion vertex sum.
    """
    with mpmath.workdps(WORKING_DPS):
        terms = []
        for w in enumerate_group(cd):
            t = mpmath.exp(_mp_pairing(c, w(lam)))
            for alpha in roots:
                t /= -mpmath.expm1(-_mp_pairing(c, w(alpha)))
            terms.append(t)
        return float(mpmath.fsum(terms))


def char_eval_brionform(cd, lam, c):
    """ch_lam(c) as a sum over W of e^{w lam} / prod_{alpha > 0} (1 - e^{-w alpha})."""
    lam = tuple(lam)
    _require_dominant(lam)
    check_generic(cd, c, orbit(cd, lam))
    return chamber_sum(cd, lam, c, cd.positive_root_weights)


def denominator_sides(cd, c):
    """Both sides of the Weyl denominator identity at ``c``: (alternating sum, product)."""
    check_generic(cd, c, orbit(cd, cd.rho))
    prod = math.exp(pairing(c, cd.rho))
    for alpha in cd.positive_root_weights:
        prod *= -math.expm1(-pairing(c, alpha))
    with mpmath.workdps(WORKING_DPS):
        return float(_alternating_sum(cd, cd.rho, c)), prod


def rel_close(a, b, rel):
    """Relative comparison with floor 1e-12 * (1 + |value|)."""
    scale = max(abs(a), abs(b))
    return abs(a - b) <= max(rel * scale, 1e-12 * (1 + scale))
