from itertools import product

import pytest

from app.core.cartan import dominant_weights_up_to, weight_from_dimvec, weyl_dim
from app.crystals import binf, blambda, tableau
from app.crystals.graph import axiom_violations
from app.types.crystal import CrystalEngine
from app.types.errors import BudgetExceededError, DomainError
from app.types.segments import Multisegment
from app.types.weights import RootDatum


def ms(n, *pairs):
    return Multisegment.of(n, pairs)


def test_empty_component_is_stable(sampler):
    assert blambda.is_stable_component(ms(3), (0, 1, 0), sampler)
    assert blambda.is_stable_component(ms(2), (0, 0), sampler)


def test_sl2_stable_iff_v_at_most_w(sampler):
    for w in range(4):
        for v in range(w + 3):
            m = Multisegment.of(1, [(1, 1)] * v)
            assert blambda.is_stable_component(m, (w,), sampler) == (v <= w)


def test_two_projective_lines_meeting_at_a_point(sampler):
    assert blambda.is_stable_component(ms(2, (1, 1), (2, 2)), (1, 1), sampler)
    assert blambda.is_stable_component(ms(2, (1, 2)), (1, 1), sampler)
    assert blambda.count_stable_components(2, (1, 1), (1, 1), sampler) == 2


def test_is_stable_component_checks_wdims(sampler):
    with pytest.raises(DomainError):
        blambda.is_stable_component(ms(2, (1, 2)), (1,), sampler)
    with pytest.raises(DomainError):
        blambda.is_stable_component(ms(2, (1, 2)), (1, -1), sampler)


def test_staircase_examples():
    passing = [m for m in binf.multisegments_up_to(2, 3) if blambda.staircase_check(m, 2)]
    assert passing == [ms(2), ms(2, (2, 2)), ms(2, (2, 2), (1, 1))]
    assert blambda.staircase_check(ms(3, (1, 3)), 1)
    assert not blambda.staircase_check(ms(3, (2, 2)), 1)
    assert not blambda.staircase_check(ms(3, (2, 3), (2, 2)), 2)
    with pytest.raises(DomainError):
        blambda.staircase_check(ms(2), 3)


def test_staircase_matches_stability(sampler):
    for n in (1, 2, 3):
        for m in binf.multisegments_up_to(n, 4):
            for r in range(1, n + 1):
                wdims = tuple(int(k == r) for k in range(1, n + 1))
                assert blambda.staircase_check(m, r) == blambda.is_stable_component(m, wdims, sampler), (m, r)


@pytest.mark.slow
def test_staircase_matches_stability_up_to_six_boxes(sampler):
    for n in (1, 2, 3):
        for m in binf.multisegments_up_to(n, 6):
            for r in range(1, n + 1):
                wdims = tuple(int(k == r) for k in range(1, n + 1))
                assert blambda.staircase_check(m, r) == blambda.is_stable_component(m, wdims, sampler), (m, r)


def test_sl2_string(sampler):
    g = blambda.generate_blambda(RootDatum.type_a(1), (2,), sampler)
    assert g.keys() == ["-", "1,1", "1,1;1,1"]
    assert [n.wt.coords for n in g.nodes()] == [(2,), (0,), (-2,)]


def test_sl3_adjoint(sampler, a2):
    g = blambda.generate_blambda(a2, (1, 1), sampler)
    assert len(g) == 8
    assert g.edge_count() == 8
    assert g.highest_weight_keys() == ["-"]
    assert axiom_violations(g, normal=True) == []
    assert all(min(n.phi) >= 0 for n in g.nodes())


def test_projective_lines(sampler):
    for n in (2, 3):
        wdims = tuple(int(k in (1, n)) for k in range(1, n + 1))
        assert blambda.count_stable_components(n, (1,) * n, wdims, sampler) == n


@pytest.mark.slow
def test_projective_lines_a4(sampler):
    assert blambda.count_stable_components(4, (1, 1, 1, 1), (1, 0, 0, 1), sampler) == 4


def test_a3_projective_lines_in_the_graph(sampler, a3):
    g = blambda.generate_blambda(a3, (1, 0, 1), sampler)
    at_weight = [node for node in g.nodes() if node.payload.dimvec == (1, 1, 1)]
    assert len(at_weight) == 3
    assert len(g) == 15


@pytest.mark.parametrize("n, wdims", [(2, (2, 0)), (2, (0, 2)), (2, (2, 1)), (3, (0, 1, 0)), (3, (1, 1, 0))])
def test_blambda_size_and_weights_match_tableaux(sampler, n, wdims):
    d = RootDatum.type_a(n)
    g = blambda.generate_blambda(d, wdims, sampler)
    w = weight_from_dimvec(d, wdims)
    assert len(g) == weyl_dim(d, w)
    assert g.weight_multiplicities() == tableau.tableau_graph_for_weight(d, w).weight_multiplicities()


def test_blambda_agrees_with_binf(sampler, a2):
    """epsilon and e_i inside B(lambda) are their B(infinity) values."""
    g = blambda.generate_blambda(a2, (2, 1), sampler)
    for node in g.nodes():
        assert node.eps == binf.epsilon_vector(node.payload, sampler)
        for i in (1, 2):
            below = binf.e_geometric(node.payload, i, sampler)
            if below is None:
                assert g.e(node.key, i) is None
            else:
                assert g.e(node.key, i) == below.key()
            above = g.f(node.key, i)
            if above is not None:
                assert above == binf.f_geometric(node.payload, i, sampler).key()


def test_generate_blambda_rejects_bad_framing(sampler, a2):
    with pytest.raises(DomainError):
        blambda.generate_blambda(a2, (0, 0), sampler)
    with pytest.raises(DomainError):
        blambda.generate_blambda(a2, (1,), sampler)


def test_node_budget(sampler):
    with pytest.raises(BudgetExceededError):
        blambda.generate_blambda(RootDatum.type_a(1), (2,), sampler, node_budget=2)


def test_flag_examples(sampler, a2):
    assert blambda.flag_nonempty_check(a2, (0, 3), (1, 2), sampler)
    assert not blambda.flag_nonempty_check(a2, (0, 3), (2, 1), sampler)
    assert blambda.flag_nonempty_check(a2, (0, 3), (0, 0), sampler)
    with pytest.raises(DomainError):
        blambda.flag_nonempty_check(a2, (1, 3), (0, 0), sampler)


def test_flag_chain_condition_a2(sampler, a2):
    for big_n in (1, 2):
        for v in product(range(big_n + 2), repeat=2):
            got = blambda.flag_nonempty_check(a2, (0, big_n), v, sampler)
            assert got == blambda.flag_chain_condition(v, big_n), v


def test_grassmannian(sampler):
    assert all(blambda.grassmannian_check(w, sampler) for w in range(4))
    with pytest.raises(DomainError):
        blambda.grassmannian_check(-1, sampler)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_blambda_size_is_weyl_dim_for_small_weights(sampler, n):
    d = RootDatum.type_a(n)
    for wdims in dominant_weights_up_to(d, 10):
        assert len(blambda.generate_blambda(d, wdims, sampler)) == weyl_dim(d, weight_from_dimvec(d, wdims)), wdims


@pytest.mark.slow
def test_fast_engine_gives_the_same_graph(sampler, a2, uncalibrated):
    geo = blambda.generate_blambda(a2, (2, 1), sampler)
    fast = blambda.generate_blambda(a2, (2, 1), sampler, engine=CrystalEngine.FAST)
    assert geo.edges() == fast.edges()
    assert [n.eps for n in geo.nodes()] == [n.eps for n in fast.nodes()]


@pytest.mark.slow
def test_flag_chain_condition_up_to_a3(sampler):
    for n in (2, 3):
        d = RootDatum.type_a(n)
        for big_n in (1, 2, 3):
            wdims = (0,) * (n - 1) + (big_n,)
            for v in product(range(big_n + 1), repeat=n):
                assert blambda.flag_nonempty_check(d, wdims, v, sampler) == \
                    blambda.flag_chain_condition(v, big_n), (n, big_n, v)


@pytest.mark.slow
def test_grassmannian_up_to_five(sampler):
    assert all(blambda.grassmannian_check(w, sampler) for w in range(6))
