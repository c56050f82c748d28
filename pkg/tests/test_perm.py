import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as o
from ntcodes import Vertex
from ntcodes.errors import DimensionError, DomainError
from ntcodes.perm import (
    GroupGens,
    HammingAutomorphism,
    PermGens,
    binary_factor,
    compose,
    conjugate,
    contains,
    entry_action,
    entry_faithful,
    entry_point,
    from_binary_factor,
    group_order,
    inverse,
    is_code_group,
    is_k_homogeneous,
    is_k_transitive,
    orbit,
    perm_inv,
    perm_mul,
    perm_parity,
    same_group,
    stabilizer,
    stabilizer_chain,
    vertex_orbit_labels,
)


@st.composite
def automorphisms(draw, m=None, q=None):
    m = m or draw(st.integers(1, 4))
    q = q or draw(st.integers(2, 3))
    maps = tuple(tuple(draw(st.permutations(range(q)))) for _ in range(m))
    return HammingAutomorphism(maps, tuple(draw(st.permutations(range(m)))))


@st.composite
def aut_pairs(draw):
    m, q = draw(st.integers(1, 4)), draw(st.integers(2, 3))
    return draw(automorphisms(m, q)), draw(automorphisms(m, q)), draw(st.integers(0, q**m - 1))


def random_gens(rng, m, q, k):
    out = []
    for _ in range(k):
        maps = tuple(tuple(rng.sample(range(q), q)) for _ in range(m))
        out.append(HammingAutomorphism(maps, tuple(rng.sample(range(m), m))))
    return GroupGens(m, q, tuple(out))


def raw_vertex_perms(gens):
    return [o.vertex_perm(g.entry_maps, g.coord_perm, gens.m, gens.q) for g in gens]


@settings(max_examples=100, deadline=None)
@given(aut_pairs())
def test_action_compose_inverse(data):
    x, y, idx = data
    v = Vertex.from_index(idx, x.m, x.q)
    assert x.apply(v).symbols == o.apply_aut(x.entry_maps, x.coord_perm, v.symbols)
    assert compose(x, y).apply(v) == y.apply(x.apply(v))
    assert inverse(x).apply(x.apply(v)) == v
    assert compose(x, inverse(x)).is_identity()
    assert conjugate(x, y).apply(y.apply(v)) == y.apply(x.apply(v))


@settings(max_examples=60, deadline=None)
@given(automorphisms())
def test_literal_roundtrip_and_vertex_permutation(x):
    assert HammingAutomorphism.from_literal(x.literal, x.m, x.q) == x
    assert tuple(x.vertex_permutation()) == o.vertex_perm(x.entry_maps, x.coord_perm, x.m, x.q)


@settings(max_examples=60, deadline=None)
@given(aut_pairs())
def test_entry_projection_is_homomorphism(data):
    x, y, _ = data
    assert compose(x, y).coord_perm == perm_mul(x.coord_perm, y.coord_perm)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(lambda m: st.tuples(st.permutations(range(m)), st.permutations(range(m)))))
def test_perm_helpers(pair):
    p, r = map(tuple, pair)
    assert perm_mul(p, perm_inv(p)) == tuple(range(len(p)))
    assert perm_parity(perm_mul(p, r)) == (perm_parity(p) + perm_parity(r)) % 2


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda m: st.tuples(st.lists(st.integers(0, 1), min_size=m, max_size=m), st.permutations(range(m)))))
def test_binary_factor_roundtrip(data):
    t, sigma = data
    x = from_binary_factor(Vertex(tuple(t), 2), sigma)
    assert binary_factor(x) == (Vertex(tuple(t), 2), tuple(sigma))
    assert x.apply(Vertex.zero(len(t), 2)) == Vertex(tuple(t[sigma.index(j)] for j in range(len(t))), 2)


@pytest.mark.parametrize("seed,m,q,k", [(1, 3, 2, 2), (2, 3, 3, 2), (3, 2, 3, 3), (4, 4, 2, 2), (5, 2, 4, 2), (6, 3, 3, 1)])
def test_order_matches_closure(seed, m, q, k):
    gens = random_gens(random.Random(seed), m, q, k)
    raw = raw_vertex_perms(gens)
    elems = o.closure(raw)
    assert group_order(gens, "vertices") == len(elems)
    # raw vertex permutations through the same chain code, on a different domain
    assert group_order(PermGens(q**m, tuple(raw)), "points") == len(elems)
    assert group_order(gens, "entries") == len(o.closure([g.coord_perm for g in gens]))
    chain = stabilizer_chain(gens)
    assert np.prod(chain.transversal_sizes()) == len(elems)


def test_membership_and_same_group():
    gens = random_gens(random.Random(11), 3, 3, 2)
    a, b = gens.generators
    assert contains(gens, compose(a, inverse(b)))
    other = GroupGens(3, 3, (compose(a, b), a))
    assert same_group(gens, other)
    assert group_order(GroupGens(3, 3, (a,))) < group_order(gens)
    assert not same_group(gens, GroupGens(3, 3, (a,)))


def test_stabilizer_order_orbit_stabilizer():
    gens = random_gens(random.Random(7), 3, 3, 2)
    order = group_order(gens)
    for idx in (0, 5, 13):
        v = Vertex.from_index(idx, 3, 3)
        st_ = stabilizer(gens, v)
        assert all(g.apply(v) == v for g in st_)
        assert group_order(st_) * len(orbit(gens, v)) == order
    st0 = stabilizer(gens, entry_point(0))
    assert all(g.coord_perm[0] == 0 for g in st0)
    assert group_order(st0) * len(orbit(gens, 0, "entries")) == order


def test_orbit_actions():
    pg = PermGens(5, ((1, 2, 3, 4, 0),))
    assert orbit(pg, 0, "points") == (0, 1, 2, 3, 4)
    assert len(orbit(pg, (0, 1), "subsets")) == 5
    assert len(orbit(pg, (0, 1), "tuples")) == 5
    assert is_k_transitive(pg, "points", 1) and not is_k_transitive(pg, "points", 2)
    assert not is_k_homogeneous(pg, "points", 2)
    with pytest.raises(DomainError):
        orbit(pg, 0, "nonsense")


def test_k_transitivity_vs_oracle():
    s4 = PermGens(4, ((1, 0, 2, 3), (1, 2, 3, 0)))
    assert is_k_transitive(s4, "points", 4)
    a4 = PermGens(4, ((1, 2, 0, 3), (0, 2, 3, 1)))
    assert len(o.closure(list(a4))) == 12
    assert is_k_transitive(a4, "points", 2) and not is_k_transitive(a4, "points", 3)
    assert is_k_homogeneous(a4, "points", 3)


def test_entry_faithful_and_kernel():
    flip = HammingAutomorphism.flip_all(3)
    cyc = HammingAutomorphism.from_coord_perm((1, 2, 0), 2)
    assert not entry_faithful(GroupGens(3, 2, (flip, cyc)))
    assert entry_faithful(GroupGens(3, 2, (cyc,)))
    act = entry_action(GroupGens(3, 2, (flip, cyc)), 0)
    assert act.degree == 2 and act.generators == ((1, 0),)


def test_vertex_orbit_labels_match_oracle():
    gens = random_gens(random.Random(5), 3, 3, 2)
    labels = vertex_orbit_labels(gens)
    for orb in o.orbits(raw_vertex_perms(gens), 27):
        assert {int(labels[i]) for i in orb} == {min(orb)}


def test_group_gens_canonical():
    x = HammingAutomorphism.from_coord_perm((1, 0), 2)
    g = GroupGens(2, 2, (x, HammingAutomorphism.identity(2, 2), x))
    assert g.generators == (x,)
    with pytest.raises(DimensionError):
        GroupGens(3, 2, (x,))


def test_aut_e_closure_preserves_code(code_e, aut_e):
    lits = [g.literal for g in aut_e]
    elems = o.closure(lits)
    assert len(elems) == 7920
    words = {w.symbols for w in code_e}
    for lit in elems:
        g = HammingAutomorphism.from_literal(lit, 11, 2)
        assert {o.apply_aut(g.entry_maps, g.coord_perm, w) for w in words} == words
    assert is_code_group(aut_e, code_e)
