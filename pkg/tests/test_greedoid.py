"""Greedoid axiom checks, witnesses, and accessibility chains."""

import pytest
from hypothesis import given, settings

from _strategies import graphs
from lmss.graph import named_fixture, parse_vertex_set, path, random_tree
from lmss.greedoid import (
    ACCESSIBILITY_FAIL,
    EXCHANGE_FAIL,
    GREEDOID,
    accessibility_chain,
    check_accessibility,
    check_exchange,
    is_greedoid,
)
from lmss.stable import SetFamily, psi
from oracles import brute_is_greedoid


def fam(universe, members):
    return SetFamily(universe, members)


def test_boolean_fragment_is_greedoid():
    f = fam(2, [0, 1, 2, 3])
    assert check_accessibility(f) is None
    assert check_exchange(f) is None
    assert is_greedoid(f).status == GREEDOID


def test_constructed_exchange_failure():
    f = fam(3, [0, 0b001, 0b110])
    assert check_exchange(f) == (0b110, 0b001)
    # accessibility is checked first, and {1,2} cannot shrink either
    verdict = is_greedoid(f)
    assert verdict.status == ACCESSIBILITY_FAIL
    assert verdict.witness_x == 0b110


def test_pure_exchange_failure_verdict():
    # accessible, but {0,1} cannot absorb an element into {2}
    f = fam(3, [0, 0b001, 0b010, 0b100, 0b011])
    assert check_accessibility(f) is None
    verdict = is_greedoid(f)
    assert verdict.status == EXCHANGE_FAIL
    assert (verdict.witness_x, verdict.witness_y) == (0b011, 0b100)
    assert verdict.witness_x.bit_count() == verdict.witness_y.bit_count() + 1


def test_missing_empty_set_is_contract_violation():
    with pytest.raises(ValueError, match="empty set"):
        check_accessibility(fam(2, [1]))
    with pytest.raises(ValueError, match="empty set"):
        check_exchange(fam(2, [1]))


def test_psi_w_fails_accessibility_with_small_witness():
    w = named_fixture("W_FIG1")
    verdict = is_greedoid(psi(w))
    assert verdict.status == ACCESSIBILITY_FAIL
    assert verdict.witness_x == parse_vertex_set("{d,f}", w)
    assert verdict.witness_y is None
    assert verdict.family_size == 13 and verdict.universe == 7


def test_psi_p2_is_greedoid():
    assert is_greedoid(psi(path(2))).status == GREEDOID
    assert psi(path(2)).members == (0, 1, 2)


def test_zykov_fixture_verdicts():
    assert is_greedoid(psi(named_fixture("Z_K2_P3_FIG4"))).status == GREEDOID
    verdict = is_greedoid(psi(named_fixture("Z_P3_P3_FIG4")))
    assert verdict.status == ACCESSIBILITY_FAIL
    assert verdict.witness_x.bit_count() == 2


@pytest.mark.parametrize("name", ["G1_FIG3", "G2_FIG3", "G3_FIG3", "G4_FIG3"])
def test_figure3_families_are_greedoids(name):
    assert is_greedoid(psi(named_fixture(name))).status == GREEDOID


@pytest.mark.parametrize("n,seed", [(6, 1), (9, 2), (12, 3), (14, 4)])
def test_random_tree_families_pass_exchange(n, seed):
    f = psi(random_tree(n, seed))
    assert check_accessibility(f) is None
    assert check_exchange(f) is None


def test_chain_g2():
    g2 = named_fixture("G2_FIG3")
    f = psi(g2)
    s = parse_vertex_set("{a,b,c}", g2)
    chain = accessibility_chain(f, s)
    assert chain == [0, parse_vertex_set("{a}", g2), parse_vertex_set("{a,b}", g2), s]
    assert [c.bit_count() for c in chain] == [0, 1, 2, 3]


def test_chain_empty_set():
    f = psi(path(2))
    assert accessibility_chain(f, 0) == [0]


def test_chain_p4():
    f = psi(path(4))
    assert accessibility_chain(f, 0b101) == [0, 0b001, 0b101]


def test_chain_rejects_non_member():
    f = psi(path(4))
    with pytest.raises(ValueError, match="not a member"):
        accessibility_chain(f, 0b010)


def test_chain_names_stuck_set():
    f = fam(2, [0, 0b11])
    with pytest.raises(ValueError, match=r"stuck at member with vertices \[0, 1\]"):
        accessibility_chain(f, 0b11)


def test_verdict_deterministic():
    w = named_fixture("W_FIG1")
    a = is_greedoid(psi(w))
    b = is_greedoid(SetFamily(w.n, reversed(psi(w).members)))
    assert a == b


@given(graphs(max_n=7))
@settings(max_examples=80)
def test_verdict_matches_definitional_oracle(g):
    f = psi(g)
    assert (is_greedoid(f).status == GREEDOID) == brute_is_greedoid(set(f.members))


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_greedoid_families_have_chains_for_every_member(g):
    f = psi(g)
    if is_greedoid(f).status != GREEDOID:
        return
    for m in f:
        chain = accessibility_chain(f, m)
        assert chain[0] == 0 and chain[-1] == m
        for small, big in zip(chain, chain[1:]):
            assert small & ~big == 0
            assert big.bit_count() == small.bit_count() + 1
            assert big in f


def test_accessibility_witness_invariant():
    # a failing witness has no single-element removal inside the family
    z = named_fixture("Z_P3_P3_FIG4")
    f = psi(z)
    x = check_accessibility(f)
    assert x is not None and x in f
    for v in range(z.n):
        if x >> v & 1:
            assert (x ^ (1 << v)) not in f
