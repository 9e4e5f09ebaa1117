import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polychar.rootsys import build, is_dominant
from polychar.weyl import (
    GroupTooLarge,
    dominant_representative,
    enumerate_group,
    identity,
    inversion_set,
    longest_element,
    orbit,
    reflect,
    shifted_reduce,
    simple_reflection,
)

GROUPS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "D4", "G2", "F4"]


def test_reflect_examples():
    a2 = build("A2")
    assert reflect(a2, 1, (1, 0)) == (-1, 1)
    for name in ["A3", "G2", "B3"]:
        cd = build(name)
        for i in range(1, cd.rank + 1):
            image = reflect(cd, i, cd.rho)
            assert image[i - 1] == -1
            assert image == tuple(1 - a for a in cd.simple_root_weights[i - 1])
            fixed = tuple(0 if j == i - 1 else 3 for j in range(cd.rank))
            assert reflect(cd, i, fixed) == fixed


def test_reflect_index_checked():
    with pytest.raises(IndexError):
        reflect(build("A2"), 3, (0, 0))
    with pytest.raises(IndexError):
        reflect(build("A2"), 0, (0, 0))


@pytest.mark.parametrize("name,order,even", [("A2", 6, 3), ("G2", 12, 6), ("A3", 24, 12)])
def test_enumerate_examples(name, order, even):
    g = enumerate_group(build(name))
    assert len(g) == order
    assert sum(w.det == 1 for w in g) == even
    assert g[0] == identity(build(name).rank)


def test_enumerate_bound():
    with pytest.raises(GroupTooLarge, match="2903040"):
        enumerate_group(build("E7"))
    with pytest.raises(GroupTooLarge):
        enumerate_group(build("A3"), bound=10)


@pytest.mark.parametrize("name", ["A2", "B3", "G2", "C3"])
def test_group_closed_under_generators(name):
    cd = build(name)
    g = enumerate_group(cd)
    actions = {w.action for w in g}
    for w in g:
        for i in range(1, cd.rank + 1):
            assert simple_reflection(cd, i).compose(w).action in actions


@pytest.mark.parametrize("name", GROUPS)
def test_inversion_identities(name):
    cd = build(name)
    rho = cd.rho
    for w in enumerate_group(cd):
        inv = inversion_set(cd, w)
        assert len(inv) == w.length
        assert w.det == (-1) ** len(inv)
        kept = [a for a in cd.positive_roots if a not in inv]
        assert len(kept) + len(inv) == len(cd.positive_roots)
        # rho - w rho = sum over the inversion set of -w(beta)
        total = [0] * cd.rank
        for beta in inv:
            image = w(cd.root_weight(beta))
            total = [t - x for t, x in zip(total, image)]
        assert tuple(total) == tuple(a - b for a, b in zip(rho, w(rho)))


def test_inversion_set_small_cases():
    cd = build("B3")
    assert inversion_set(cd, identity(3)) == []
    for i in range(1, 4):
        r = simple_reflection(cd, i)
        assert inversion_set(cd, r) == [tuple(int(j == i - 1) for j in range(3))]
    w0 = longest_element(cd)
    assert len(inversion_set(cd, w0)) == len(cd.positive_roots)


def test_orbit_examples():
    g2 = build("G2")
    o = orbit(g2, (1, 0))
    assert len(o) == 6
    long_roots = [(2, -3), (-1, 3), (1, 0)]
    assert set(o) == set(long_roots) | {(-a, -b) for a, b in long_roots}
    assert len(orbit(build("A2"), (1, 1))) == 6
    assert orbit(build("A3"), (0, 0, 0)) == [(0, 0, 0)]


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "C2", "G2"])
def test_orbit_sizes_divide_group_order(name):
    cd = build(name)
    for lam in [(0,) * cd.rank, cd.rho, (1,) + (0,) * (cd.rank - 1), (0,) * (cd.rank - 1) + (2,)]:
        o = orbit(cd, lam)
        assert cd.weyl_order % len(o) == 0
        assert (len(o) == cd.weyl_order) == all(x > 0 for x in lam)
        assert {dominant_representative(cd, mu)[0] for mu in o} == {lam}


def test_dominant_representative_examples():
    a2 = build("A2")
    nu, w = dominant_representative(a2, (-1, 1))
    assert nu == (1, 0) and w((-1, 1)) == (1, 0)
    nu, w = dominant_representative(a2, (2, 3))
    assert nu == (2, 3) and w == identity(2)
    g2 = build("G2")
    nu, w = dominant_representative(g2, (0, -1))
    assert is_dominant(nu) and nu in orbit(g2, (0, -1)) and w((0, -1)) == nu


def _brute_shifted(cd, mu):
    # mu + rho on a wall has no dominant shifted image; otherwise exactly one w works
    hits = [w for w in enumerate_group(cd) if is_dominant(w.dot(mu))]
    if not hits:
        return None
    assert len(hits) == 1
    return hits[0].det, hits[0].dot(mu)


def test_shifted_reduce_examples():
    a2 = build("A2")
    assert shifted_reduce(a2, (3, 1)) == (1, (3, 1))
    assert shifted_reduce(a2, (-1, 5)) is None
    assert shifted_reduce(a2, (4, -1)) is None
    assert shifted_reduce(a2, (-2, 1)) == _brute_shifted(a2, (-2, 1)) == (-1, (0, 0))


@pytest.mark.parametrize("name", ["A2", "C2", "G2", "A3"])
def test_shifted_reduce_matches_brute_force(name):
    cd = build(name)
    for mu in itertools.product(range(-5, 4), repeat=cd.rank):
        assert shifted_reduce(cd, mu) == _brute_shifted(cd, mu), mu


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_shifted_reduce_equivariant(name, data):
    cd = build(name)
    mu = tuple(data.draw(st.lists(st.integers(-8, 8), min_size=cd.rank, max_size=cd.rank)))
    w = data.draw(st.sampled_from(enumerate_group(cd)))
    base = shifted_reduce(cd, mu)
    moved = shifted_reduce(cd, w.dot(mu))
    if base is None:
        assert moved is None
    else:
        assert moved == (base[0] * w.det, base[1])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-10, 10), min_size=2, max_size=2))
def test_reflections_are_involutions(mu):
    cd = build("G2")
    for i in (1, 2):
        assert reflect(cd, i, reflect(cd, i, tuple(mu))) == tuple(mu)
