"""Polytope expansion of characters: ch_lam = sum_mu A[lam, mu] B_mu.

The inverse coefficients come from the signed partition function F, the
expansion of prod (1 - e^{-gamma}) over the non-simple positive roots, via

    B_lam = sum_beta F(beta) ch_{lam - beta}
    A^{-1}[lam, mu] = sum_w det(w) F(lam - w.mu)

and A itself by inverting the (unit lower triangular) matrix A^{-1}.
Everything here is exact integer arithmetic.
"""

import functools
from dataclasses import dataclass, field
from itertools import combinations

from . import _linalg
from .charmult import MultMap, _require_dominant, dim, weight_system
from .polytope import count_closed_form, has_closed_form, points
from .rootsys import (
    congruence_class,
    dominant_weights_below,
    dominant_weights_up_to_level,
    dominates,
    format_weight,
    level,
    to_root_coords,
)
from .weyl import enumerate_group, shifted_reduce

MAX_NONSIMPLE_ROOTS = 24


class OrderError(ValueError):
    pass


class TooManyRoots(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def partition_f(cd):
    """F as a dict {simple-root coordinates: non-zero int}, keys sorted by height."""
    gammas = cd.nonsimple_positive_roots
    if len(gammas) > MAX_NONSIMPLE_ROOTS:
        raise TooManyRoots(
            f"{cd.id} has {len(gammas)} non-simple positive roots; subset enumeration is capped at {MAX_NONSIMPLE_ROOTS}"
        )
    r = cd.rank
    f = {}
    for k in range(len(gammas) + 1):
        for subset in combinations(gammas, k):
            beta = tuple(sum(g[i] for g in subset) for i in range(r))
            f[beta] = f.get(beta, 0) + (-1) ** k
    return {b: f[b] for b in sorted(f, key=lambda b: (sum(b), b)) if f[b]}


def b_expand(cd, lam):
    """The raw signed terms of B_lam = sum F(beta) ch_{lam - beta}.

    Returns ``[(F(beta), lam - beta), ...]`` with lam - beta in Dynkin labels;
    the weights need not be dominant.
    """
    lam = tuple(lam)
    _require_dominant(lam)
    return [(v, tuple(a - b for a, b in zip(lam, cd.root_weight(beta)))) for beta, v in partition_f(cd).items()]


def a_inverse_row(cd, lam):
    """Row lam of A^{-1}, by reducing each term of b_expand to a dominant character."""
    row = {}
    for coeff, mu in b_expand(cd, lam):
        red = shifted_reduce(cd, mu)
        if red is None:
            continue
        sign, nu = red
        row[nu] = row.get(nu, 0) + sign * coeff
    return {nu: v for nu, v in row.items() if v}


def a_inverse(cd, lam, mu):
    """A^{-1}[lam, mu] = sum_w det(w) F(lam - w.mu); 0 across congruence classes."""
    lam, mu = tuple(lam), tuple(mu)
    _require_dominant(lam)
    _require_dominant(mu)
    diff = tuple(a - b for a, b in zip(lam, mu))
    _, integral = to_root_coords(cd, diff)
    if not integral:
        return 0
    f = partition_f(cd)
    total = 0
    for w in enumerate_group(cd):
        d = tuple(a - b for a, b in zip(lam, w.dot(mu)))
        x, _ = to_root_coords(cd, d)
        total += w.det * f.get(tuple(int(v) for v in x), 0)
    return total


def brion_multiset(cd, lam):
    """B_lam as an exact element of the group algebra."""
    out = MultMap()
    for nu, coeff in sorted(a_inverse_row(cd, lam).items()):
        out = out + coeff * weight_system(cd, nu)
    return out


@dataclass
class ExpansionMatrix:
    algebra: str
    order: list
    rows: list
    kind: str
    class_index: object = None

    def row(self, lam):
        return self.rows[self.order.index(tuple(lam))]

    def entry(self, lam, mu):
        return self.rows[self.order.index(tuple(lam))][self.order.index(tuple(mu))]

    def to_dict(self):
        return {
            "algebra": self.algebra,
            "class": self.class_index,
            "order": [list(w) for w in self.order],
            "kind": self.kind,
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["algebra"], [tuple(w) for w in d["order"]], [list(r) for r in d["rows"]], d["kind"], d.get("class"))


def missing_below(cd, order):
    """Dominant weights below members of ``order`` that are absent from it."""
    have = set(order)
    missing = []
    for lam in order:
        for mu in dominant_weights_below(cd, lam):
            if mu not in have and mu not in missing:
                missing.append(mu)
    return missing


def _class_of(cd, order):
    classes = {congruence_class(cd, w) for w in order}
    return classes.pop() if len(classes) == 1 else None


def a_inverse_matrix(cd, order):
    order = [tuple(w) for w in order]
    rows = [[a_inverse(cd, lam, mu) if dominates(cd, lam, mu) else 0 for mu in order] for lam in order]
    return ExpansionMatrix(str(cd.id), order, rows, "A_inverse", _class_of(cd, order))


def a_matrix(cd, order, inverse=None):
    """A on an explicit weight order, as the inverse of A^{-1}.

    ``order`` must be closed downward under dominance (within each class).
    """
    order = [tuple(w) for w in order]
    missing = missing_below(cd, order)
    if missing:
        raise OrderError(
            "order is not closed downward under dominance; missing " + " ".join(format_weight(w) for w in missing)
        )
    inv = inverse if inverse is not None else a_inverse_matrix(cd, order)
    n = len(order)
    try:
        rows = _linalg.unit_lower_inverse(inv.rows)
    except ValueError:
        # order not sorted compatibly with dominance; fall back to general inversion
        frac = _linalg.inverse(inv.rows)
        if any(x.denominator != 1 for row in frac for x in row):
            raise AssertionError("A^{-1} has a non-integral inverse")
        rows = [[int(x) for x in row] for row in frac]
    assert all(rows[i][i] == 1 for i in range(n))
    return ExpansionMatrix(str(cd.id), order, rows, "A", inv.class_index)


def default_order(cd, max_level, class_index=None):
    return dominant_weights_up_to_level(cd, max_level, class_index)


def a_row(cd, lam):
    """Row lam of A as a dict {mu: A[lam, mu]} with non-zero entries only."""
    lam = tuple(lam)
    _require_dominant(lam)
    order = sorted(dominant_weights_below(cd, lam), key=lambda w: (level(cd, w), tuple(-x for x in w)))
    m = a_matrix(cd, order)
    row = m.row(lam)
    return {mu: v for mu, v in zip(order, row) if v}


# ----------------------------------------------------------------- C2 closed patterns


def c2_patterns(cd, lam):
    """Expected A-row for C2 from the closed stepping pattern.

    Blocks lam - 2k Lambda^1 stepped down by Lambda^2 to the Lambda^1 axis; for
    even lam_1 the last block is lam_2 Lambda^2, (lam_2 - 2) Lambda^2, ...
    """
    if str(cd.id) != "C2":
        raise ValueError(f"c2_patterns applies to C2 only, not {cd.id}")
    l1, l2 = tuple(lam)
    _require_dominant((l1, l2))
    row = {}
    a = l1
    while a >= 1:
        for b in range(l2, -1, -1):
            row[(a, b)] = 1
        a -= 2
    if l1 % 2 == 0:
        for b in range(l2, -1, -2):
            row[(0, b)] = 1
    return row


def a2_pattern(cd, lam):
    """Expected A-row for A2: 1 on lam - k theta for 0 <= k <= min(lam)."""
    if str(cd.id) != "A2":
        raise ValueError(f"a2_pattern applies to A2 only, not {cd.id}")
    l1, l2 = tuple(lam)
    return {(l1 - k, l2 - k): 1 for k in range(min(l1, l2) + 1)}


# ----------------------------------------------------------------- reports


@dataclass
class CountReport:
    algebra: str
    max_level: int
    rows: list = field(default_factory=list)
    identity_failures: list = field(default_factory=list)
    count_flags: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.identity_failures

    def to_dict(self):
        return {
            "algebra": self.algebra,
            "max_level": self.max_level,
            "rows": self.rows,
            "identity_failures": self.identity_failures,
            "count_flags": self.count_flags,
        }


def verify_counts(cd, max_level):
    """Check d = A b* and b* = A^{-1} d on every dominant weight up to ``max_level``.

    b*_lam is the total multiplicity of brion_multiset(lam).  Also compares b*
    with the polytope point count and (where available) the closed form.
    """
    order = default_order(cd, max_level)
    inv = a_inverse_matrix(cd, order)
    amat = a_matrix(cd, order, inverse=inv)
    dims = [dim(cd, w) for w in order]
    bstar = [brion_multiset(cd, w).total() for w in order]
    report = CountReport(str(cd.id), max_level)
    for i, lam in enumerate(order):
        d_from_a = sum(amat.rows[i][j] * bstar[j] for j in range(len(order)))
        b_from_inv = sum(inv.rows[i][j] * dims[j] for j in range(len(order)))
        npts = len(points(cd, lam))
        closed = count_closed_form(cd, lam) if has_closed_form(cd) else None
        row = {
            "lambda": list(lam),
            "level": level(cd, lam),
            "dim": dims[i],
            "b_star": bstar[i],
            "sum_A_b_star": d_from_a,
            "sum_Ainv_dim": b_from_inv,
            "points": npts,
            "closed_form": closed,
        }
        report.rows.append(row)
        if d_from_a != dims[i]:
            report.identity_failures.append({"lambda": list(lam), "identity": "d = A b*", "lhs": dims[i], "rhs": d_from_a})
        if b_from_inv != bstar[i]:
            report.identity_failures.append(
                {"lambda": list(lam), "identity": "b* = A^-1 d", "lhs": bstar[i], "rhs": b_from_inv}
            )
        if npts != bstar[i] or (closed is not None and closed != bstar[i]):
            report.count_flags.append({"lambda": list(lam), "b_star": bstar[i], "points": npts, "closed_form": closed})
    return report


@dataclass
class ConjectureReport:
    algebra: str
    max_level: int
    negative_entries: list = field(default_factory=list)
    polytope_mismatches: list = field(default_factory=list)
    checked: int = 0

    def to_dict(self):
        return {
            "algebra": self.algebra,
            "max_level": self.max_level,
            "weights_checked": self.checked,
            "negative_entries": self.negative_entries,
            "polytope_mismatches": self.polytope_mismatches,
        }


def polytope_difference(cd, lam):
    """Compare B_lam with the 0/1 indicator of the polytope points.

    Returns None on equality, otherwise a diagnostic dict.
    """
    b = brion_multiset(cd, lam)
    pts = points(cd, lam)
    indicator = MultMap({p: 1 for p in pts})
    if b == indicator:
        return None
    diff = b - indicator
    return {
        "lambda": list(lam),
        "b_star": b.total(),
        "points": len(pts),
        "differences": [{"mu": list(mu), "brion": b.get(mu, 0), "indicator": indicator.get(mu, 0)} for mu, _ in diff.sorted_items(cd)],
    }


def verify_conjectures(cd, max_level):
    """Scan for negative A entries and for B_lam differing from the polytope sum."""
    order = default_order(cd, max_level)
    amat = a_matrix(cd, order)
    report = ConjectureReport(str(cd.id), max_level, checked=len(order))
    for i, lam in enumerate(order):
        for j, mu in enumerate(order):
            v = amat.rows[i][j]
            if v < 0:
                report.negative_entries.append({"lambda": list(lam), "mu": list(mu), "value": v})
        d = polytope_difference(cd, lam)
        if d is not None:
            report.polytope_mismatches.append(d)
    return report
