"""Static data of finite simple root systems.

Weights are tuples of ints in the fundamental-weight (Dynkin label) basis.
Root-lattice elements are tuples of ints in the simple-root basis.  Simple
root ``i`` in weight form is row ``i`` of the Cartan matrix, so a root with
simple-root coefficients ``x`` has Dynkin labels ``sum_k x[k] * cartan[k]``.

Conventions (Bourbaki numbering throughout):

* ``B_r``: alpha_r is short.
* ``C_r``: alpha_1..alpha_{r-1} are short, alpha_r is long.  For C2 this
  makes alpha_1 short, so 2a1+a2 = (2,0) and a1+a2 = (0,1).
* ``F_4``: alpha_1, alpha_2 long; alpha_3, alpha_4 short.
* ``G_2``: alpha_1 long, alpha_2 short; cartan = [[2,-3],[-1,2]].
* ``E_r``: alpha_2 hangs off alpha_4.

Long roots have squared length 2.
"""

import functools
import re
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg

VALID_RANKS = {
    "A": "r >= 1",
    "B": "r >= 2",
    "C": "r >= 2",
    "D": "r >= 3",
    "E": "r in {6, 7, 8}",
    "F": "r = 4",
    "G": "r = 2",
}


class InvalidAlgebra(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if s not in VALID_RANKS:
            raise InvalidAlgebra(f"unknown series {s!r}; expected one of A,B,C,D,E,F,G")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[s]
        if not ok:
            raise InvalidAlgebra(f"{s}{r} is not a simple Lie algebra: series {s} needs {VALID_RANKS[s]}")

    def __str__(self):
        return f"{self.series}{self.rank}"


def parse_algebra(text):
    """Parse ``"A2"``, ``"g2"``, ``"B3"`` ... into an AlgebraId."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
    if not m:
        raise InvalidAlgebra(f"malformed algebra name {text!r}; expected a series letter and a rank, e.g. A2")
    return AlgebraId(m.group(1).upper(), int(m.group(2)))


def parse_weight(text, rank=None):
    """Parse ``"1,0,1"`` into ``(1, 0, 1)``."""
    try:
        w = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight {text!r}; expected comma-separated integers, e.g. 1,0,1") from None
    if rank is not None and len(w) != rank:
        raise ValueError(f"weight {text!r} has {len(w)} labels but the algebra has rank {rank}")
    return w


def format_weight(w):
    return ",".join(str(x) for x in w)


def _gram_of_simple_roots(series, r):
    """Symmetric matrix of inner products (alpha_i, alpha_j)."""
    half = Fraction(1, 2)
    norms = [Fraction(2)] * r
    edges = {}
    if series == "A":
        edges = {(i, i + 1): -1 for i in range(r - 1)}
    elif series == "B":
        norms[-1] = Fraction(1)
        edges = {(i, i + 1): -1 for i in range(r - 1)}
    elif series == "C":
        norms = [Fraction(1)] * (r - 1) + [Fraction(2)]
        edges = {(i, i + 1): -half for i in range(r - 2)}
        edges[(r - 2, r - 1)] = -1
    elif series == "D":
        edges = {(i, i + 1): -1 for i in range(r - 2)}
        edges[(r - 3, r - 1)] = -1
    elif series == "E":
        edges = {(0, 2): -1, (1, 3): -1}
        edges.update({(i, i + 1): -1 for i in range(2, r - 1)})
    elif series == "F":
        norms = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        edges = {(0, 1): -1, (1, 2): -1, (2, 3): -half}
    elif series == "G":
        norms = [Fraction(2), Fraction(2, 3)]
        edges = {(0, 1): -1}
    gram = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        gram[i][i] = norms[i]
    for (i, j), v in edges.items():
        gram[i][j] = gram[j][i] = Fraction(v)
    return gram


@dataclass(frozen=True, eq=False)
class CartanData:
    """Everything static about one simple Lie algebra.

    Instances are built once per algebra by :func:`build` and never mutated.
    """

    id: AlgebraId
    cartan: tuple
    symmetrizers: tuple
    root_norms: tuple
    qform: tuple
    positive_roots: tuple
    positive_root_weights: tuple
    simple_root_weights: tuple
    rho: tuple
    theta: tuple
    theta_weight: tuple
    comarks: tuple
    weyl_order: int
    center_order: int
    conjugation: tuple
    _cartan_t_inv: tuple
    _classes: tuple

    @property
    def rank(self):
        return self.id.rank

    def __repr__(self):
        return f"CartanData({self.id})"

    def root_weight(self, coeffs):
        """Dynkin labels of the root-lattice element with simple-root coefficients ``coeffs``."""
        r = self.rank
        return tuple(sum(coeffs[k] * self.cartan[k][j] for k in range(r)) for j in range(r))

    @property
    def nonsimple_positive_roots(self):
        return tuple(a for a in self.positive_roots if sum(a) > 1)


def _positive_roots(cartan):
    """Positive roots in simple-root coordinates, via alpha-strings.

    For a positive root b and simple root a_i, with b - p a_i the bottom of the
    a_i-string through b, b + a_i is a root iff p - <b, a_i^v> > 0.
    """
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            labels = [sum(b[k] * cartan[k][j] for k in range(r)) for j in range(r)]
            for i in range(r):
                if b == simple[i]:
                    continue
                p = 0
                down = list(b)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - labels[i] > 0:
                    up = list(b)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda a: (sum(a), a)))


def _weyl_order_from_heights(positive_roots):
    # Root heights form the partition dual to the exponents; |W| = prod(m_i + 1).
    counts = {}
    for a in positive_roots:
        h = sum(a)
        counts[h] = counts.get(h, 0) + 1
    order = 1
    for h in counts:
        n_here = counts[h]
        n_next = counts.get(h + 1, 0)
        order *= (h + 1) ** (n_here - n_next)
    return order


@functools.lru_cache(maxsize=None)
def build(algebra):
    """Construct the CartanData of ``algebra`` (an AlgebraId or a name like ``"G2"``)."""
    if isinstance(algebra, str):
        algebra = parse_algebra(algebra)
    s, r = algebra.series, algebra.rank
    gram = _gram_of_simple_roots(s, r)
    norms = [gram[i][i] for i in range(r)]
    cartan = [[int(2 * gram[i][j] / gram[j][j]) for j in range(r)] for i in range(r)]
    for i in range(r):
        for j in range(r):
            assert 2 * gram[i][j] / gram[j][j] == cartan[i][j]

    # D * cartan symmetric  <=>  d_i proportional to 1 / |alpha_i|^2
    longest = max(norms)
    symmetrizers = tuple(int(longest / n) for n in norms)

    cartan_inv = _linalg.inverse(cartan)
    # fundamental weights: Lambda = cartan^{-1} alpha, so their Gram matrix is C^-1 B C^-T
    qform = _linalg.matmul(_linalg.matmul(cartan_inv, gram), _linalg.transpose(cartan_inv))
    qform = tuple(tuple(Fraction(x) for x in row) for row in qform)

    pos = _positive_roots(cartan)
    pos_w = tuple(tuple(sum(a[k] * cartan[k][j] for k in range(r)) for j in range(r)) for a in pos)
    theta = pos[-1]
    theta_w = pos_w[-1]
    comarks = tuple(int(theta[i] * norms[i] / 2) for i in range(r))
    for i in range(r):
        assert theta[i] * norms[i] / 2 == comarks[i]

    center = abs(int(_linalg.det(cartan)))
    cartan_t_inv = tuple(tuple(x) for x in _linalg.inverse(_linalg.transpose(cartan)))

    def frac_part(w):
        x = _linalg.matvec(cartan_t_inv, w)
        return tuple(v - (v.numerator // v.denominator) for v in x)

    # enumerate P/Q by closure from 0 under adding fundamental weights
    zero = tuple(Fraction(0) for _ in range(r))
    classes = [zero]
    seen = {zero}
    i = 0
    while i < len(classes):
        c = classes[i]
        for k in range(r):
            fk = frac_part(tuple(int(j == k) for j in range(r)))
            n = tuple((a + b) % 1 for a, b in zip(c, fk))
            if n not in seen:
                seen.add(n)
                classes.append(n)
        i += 1
    assert len(classes) == center

    conj = tuple(_conjugate_index(cartan, k) for k in range(r))

    return CartanData(
        id=algebra,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizers=symmetrizers,
        root_norms=tuple(norms),
        qform=qform,
        positive_roots=pos,
        positive_root_weights=pos_w,
        simple_root_weights=tuple(tuple(row) for row in cartan),
        rho=tuple([1] * r),
        theta=theta,
        theta_weight=theta_w,
        comarks=comarks,
        weyl_order=_weyl_order_from_heights(pos),
        center_order=center,
        conjugation=conj,
        _cartan_t_inv=cartan_t_inv,
        _classes=tuple(classes),
    )


def _conjugate_index(cartan, k):
    # -w0 Lambda^k is the dominant representative of -Lambda^k, a fundamental weight
    r = len(cartan)
    w = [-int(j == k) for j in range(r)]
    while True:
        i = next((i for i in range(r) if w[i] < 0), None)
        if i is None:
            break
        c = w[i]
        w = [w[j] - c * cartan[i][j] for j in range(r)]
    assert sorted(w) == [0] * (r - 1) + [1]
    return w.index(1)


def _check_length(cd, w):
    if len(w) != cd.rank:
        raise ValueError(f"weight {tuple(w)} has {len(w)} labels but {cd.id} has rank {cd.rank}")


def to_root_coords(cd, w):
    """Simple-root coordinates of ``w``, with a flag telling whether ``w`` lies in Q.

    Returns ``(coords, integral)`` where ``coords`` is a tuple of Fractions.
    """
    _check_length(cd, w)
    x = tuple(_linalg.matvec(cd._cartan_t_inv, w))
    return x, all(v.denominator == 1 for v in x)


def root_coords_int(cd, w):
    """Integer simple-root coordinates of ``w``; ValueError if ``w`` is not in Q."""
    x, ok = to_root_coords(cd, w)
    if not ok:
        raise ValueError(f"{tuple(w)} is not in the root lattice of {cd.id}")
    return tuple(int(v) for v in x)


def congruence_class(cd, w):
    """Index of the class of ``w`` in P/Q.

    Index 0 is the root lattice; the remaining classes are numbered in the
    order they are first reached by adding fundamental weights, so for A_r
    the class of Lambda^k is k.
    """
    x, _ = to_root_coords(cd, w)
    f = tuple(v % 1 for v in x)
    return cd._classes.index(f)


def level(cd, w):
    return sum(a * x for a, x in zip(cd.comarks, w))


def height(cd, w):
    """Sum of simple-root coordinates (rational when ``w`` is outside Q)."""
    return sum(to_root_coords(cd, w)[0])


def inner(cd, u, v):
    q = cd.qform
    r = cd.rank
    return sum(u[i] * q[i][j] * v[j] for i in range(r) for j in range(r) if u[i] and v[j])


def charge_conjugate(cd, w):
    _check_length(cd, w)
    out = [0] * cd.rank
    for k, x in enumerate(w):
        out[cd.conjugation[k]] += x
    return tuple(out)


def is_dominant(w):
    return all(x >= 0 for x in w)


def dominates(cd, lam, mu):
    """True when mu <= lam, i.e. lam - mu is a non-negative integer root combination."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    x, ok = to_root_coords(cd, diff)
    return ok and all(v >= 0 for v in x)


def dominant_weights_below(cd, lam):
    """All dominant mu <= lam, sorted by descending height of lam - mu.

    Dominant weights have non-negative simple-root coordinates, so the
    subtracted root combination is bounded coordinatewise by lam itself.
    """
    lam = tuple(lam)
    x, _ = to_root_coords(cd, lam)
    bounds = [int(v) for v in x]  # floor; coords are >= 0 for dominant lam
    r = cd.rank
    out = []

    def rec(i, n):
        if i == r:
            mu = tuple(lam[j] - sum(n[k] * cd.cartan[k][j] for k in range(r)) for j in range(r))
            if is_dominant(mu):
                out.append((sum(n), mu))
            return
        for v in range(bounds[i] + 1):
            n.append(v)
            rec(i + 1, n)
            n.pop()

    rec(0, [])
    out.sort()
    return [mu for _, mu in out]


def dominant_weights_up_to_level(cd, max_level, class_index=None):
    """Dominant weights with level <= max_level in the default matrix order.

    Order: ascending level, then descending labels lexicographically, e.g.
    for G2 (0,0),(0,1),(1,0),(0,2),(1,1),(0,3),(2,0),...
    """
    r = cd.rank
    out = []

    def rec(i, w, lev):
        if i == r:
            out.append(tuple(w))
            return
        a = cd.comarks[i]
        for v in range((max_level - lev) // a + 1):
            w.append(v)
            rec(i + 1, w, lev + a * v)
            w.pop()

    rec(0, [], 0)
    if class_index is not None:
        out = [w for w in out if congruence_class(cd, w) == class_index]
    out.sort(key=lambda w: (level(cd, w), tuple(-x for x in w)))
    return out
