"""Weyl group of a root system, acting on Dynkin coordinates."""

import functools
from collections import deque
from dataclasses import dataclass

from .rootsys import level, root_coords_int

DEFAULT_BOUND = 10**6


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class WeylElement:
    """A group element as an integer matrix on Dynkin labels (row-major tuples)."""

    action: tuple
    det: int
    length: int

    def __call__(self, mu):
        return tuple(sum(a * x for a, x in zip(row, mu)) for row in self.action)

    def dot(self, mu):
        """Shifted action w.mu = w(mu + rho) - rho."""
        shifted = self(tuple(x + 1 for x in mu))
        return tuple(x - 1 for x in shifted)

    def compose(self, other):
        """``self * other`` (apply ``other`` first)."""
        cols = list(zip(*other.action))
        action = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.action)
        return WeylElement(action, self.det * other.det, _unknown_length)


# lengths of composed elements are not tracked; enumerate() fills them in
_unknown_length = -1


def identity(rank):
    return WeylElement(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)), 1, 0)


def _reflection_matrix(cd, i):
    r = cd.rank
    alpha = cd.simple_root_weights[i]
    # (r_i mu)_j = mu_j - mu_i * alpha_j
    return tuple(
        tuple(int(j == k) - (alpha[j] if k == i else 0) for k in range(r)) for j in range(r)
    )


def simple_reflection(cd, i):
    """The generator r_i, with ``i`` 1-based as in the usual numbering."""
    if not 1 <= i <= cd.rank:
        raise IndexError(f"simple-root index {i} out of range 1..{cd.rank} for {cd.id}")
    return WeylElement(_reflection_matrix(cd, i - 1), -1, 1)


def reflect(cd, i, mu):
    """r_i mu = mu - mu_i alpha_i, ``i`` 1-based."""
    if not 1 <= i <= cd.rank:
        raise IndexError(f"simple-root index {i} out of range 1..{cd.rank} for {cd.id}")
    return _reflect0(cd, i - 1, mu)


def _reflect0(cd, i, mu):
    c = mu[i]
    if c == 0:
        return tuple(mu)
    alpha = cd.simple_root_weights[i]
    return tuple(m - c * a for m, a in zip(mu, alpha))


def enumerate_group(cd, bound=DEFAULT_BOUND):
    """All elements of W, in breadth-first order from the identity.

    The BFS depth is the word length of each element.
    """
    if cd.weyl_order > bound:
        raise GroupTooLarge(f"Weyl group of {cd.id} has order {cd.weyl_order}, above the bound {bound}")
    return _enumerate(cd)


@functools.lru_cache(maxsize=None)
def _enumerate(cd):
    gens = [_reflection_matrix(cd, i) for i in range(cd.rank)]
    start = identity(cd.rank)
    seen = {start.action: start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            # left multiplication g * w
            cols = list(zip(*w.action))
            m = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in g)
            if m not in seen:
                e = WeylElement(m, -w.det, w.length + 1)
                seen[m] = e
                queue.append(e)
    out = tuple(seen.values())
    assert len(out) == cd.weyl_order
    return out


def orbit(cd, lam):
    """The Weyl orbit of ``lam``, sorted by level then lexicographically."""
    lam = tuple(lam)
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for i in range(cd.rank):
            if mu[i] != 0:
                nu = _reflect0(cd, i, mu)
                if nu not in seen:
                    seen.add(nu)
                    queue.append(nu)
    return sorted(seen, key=lambda w: (level(cd, w), w))


def dominant_representative(cd, mu):
    """Reflect ``mu`` into the dominant chamber.

    Returns ``(nu, w)`` with ``nu`` dominant and ``w(mu) == nu``.  Each step
    reflects in a wall with a negative label, which lengthens ``w`` by one.
    """
    mu = tuple(mu)
    w = identity(cd.rank)
    steps = 0
    while True:
        i = next((i for i, x in enumerate(mu) if x < 0), None)
        if i is None:
            break
        mu = _reflect0(cd, i, mu)
        w = WeylElement(_reflection_matrix(cd, i), -1, 1).compose(w)
        steps += 1
    return mu, WeylElement(w.action, w.det, steps)


def dominant_of(cd, mu):
    """Just the dominant weight in the orbit of ``mu``, without tracking the element."""
    mu = tuple(mu)
    while True:
        i = next((i for i, x in enumerate(mu) if x < 0), None)
        if i is None:
            return mu
        mu = _reflect0(cd, i, mu)


def shifted_reduce(cd, mu):
    """Reduce ch_mu for an arbitrary weight to a signed dominant character.

    Returns None when mu + rho lies on a wall (the character vanishes),
    otherwise ``(sign, nu)`` with nu dominant, nu = w.mu and
    ch_mu = sign * ch_nu where sign = det w.
    """
    v = tuple(x + 1 for x in mu)
    sign = 1
    while True:
        i = next((i for i, x in enumerate(v) if x <= 0), None)
        if i is None:
            break
        if v[i] == 0:
            return None
        v = _reflect0(cd, i, v)
        sign = -sign
    return sign, tuple(x - 1 for x in v)


def inversion_set(cd, w):
    """Positive roots sent to negative roots by ``w``, in simple-root coordinates."""
    out = []
    for a, aw in zip(cd.positive_roots, cd.positive_root_weights):
        image = root_coords_int(cd, w(aw))
        if all(x <= 0 for x in image):
            out.append(a)
    return out


def longest_element(cd):
    """The unique element sending rho to -rho."""
    rho = cd.rho
    neg = tuple(-x for x in rho)
    for w in enumerate_group(cd):
        if w(rho) == neg:
            return w
    raise AssertionError("no longest element found")
