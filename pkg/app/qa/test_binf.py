import pytest

from app.core import rep
from app.crystals import binf, fast_rule
from app.crystals.graph import axiom_violations
from app.types.errors import DomainError
from app.types.metrics import METRICS
from app.types.segments import Multisegment
from app.types.weights import RootDatum, Weight


def ms(n, *pairs):
    return Multisegment.of(n, pairs)


def test_conormal_fiber_dimensions():
    assert binf.conormal_fiber(ms(2)).dimension == 0
    assert binf.conormal_fiber(ms(2, (1, 1), (2, 2))).dimension == 1
    assert binf.conormal_fiber(ms(2, (1, 2))).dimension == 0


def test_fiber_points_lie_in_the_zero_set(sampler):
    for m in (ms(3, (1, 3), (2, 2)), ms(3, (1, 1), (2, 3), (2, 2)), ms(3, (1, 2), (2, 3))):
        fiber = binf.conormal_fiber(m)
        for attempt in range(3):
            x = binf.generic_point(m, sampler, "epsilon", attempt)
            assert rep.in_zero_set(x)
            assert rep.decompose_segments(rep.restrict_omega(x)) == m
        with pytest.raises(DomainError):
            fiber.point([1] * (fiber.dimension + 1))


def test_epsilon_on_a2(sampler):
    assert binf.epsilon_vector(ms(2, (1, 1), (2, 2)), sampler) == (1, 0)
    assert binf.epsilon_vector(ms(2, (1, 2)), sampler) == (0, 1)
    assert binf.epsilon_vector(ms(2), sampler) == (0, 0)
    assert binf.epsilon_component(ms(1, (1, 1), (1, 1)), 1, sampler) == 2
    with pytest.raises(DomainError):
        binf.epsilon_component(ms(2, (1, 2)), 3, sampler)


def test_e_max(sampler):
    assert binf.e_max_geometric(ms(2, (1, 1), (2, 2)), 1, sampler) == (ms(2, (2, 2)), 1)
    assert binf.e_max_geometric(ms(2, (1, 2)), 1, sampler) == (ms(2, (1, 2)), 0)
    assert binf.e_max_geometric(ms(1, (1, 1), (1, 1), (1, 1)), 1, sampler) == (ms(1), 3)


def test_f_and_e_on_a2(sampler):
    assert binf.f_geometric(ms(2, (1, 1)), 2, sampler) == ms(2, (1, 2))
    assert binf.e_geometric(ms(2, (1, 2)), 2, sampler) == ms(2, (1, 1))
    assert binf.f_geometric(ms(2, (2, 2)), 1, sampler) == ms(2, (1, 1), (2, 2))
    assert binf.e_geometric(ms(2, (1, 2)), 1, sampler) is None
    assert binf.e_geometric(ms(2), 1, sampler) is None


def test_a1_string(sampler):
    m = binf.f_power_geometric(ms(1), 1, 3, sampler)
    assert m == ms(1, (1, 1), (1, 1), (1, 1))
    assert binf.epsilon_component(m, 1, sampler) == 3


def test_f_then_e_is_identity(sampler):
    for m in binf.multisegments_up_to(2, 3):
        for i in (1, 2):
            assert binf.e_geometric(binf.f_geometric(m, i, sampler), i, sampler) == m


@pytest.mark.slow
def test_f_then_e_is_identity_on_a3(sampler):
    for m in binf.multisegments_up_to(3, 3):
        for i in (1, 2, 3):
            assert binf.e_geometric(binf.f_geometric(m, i, sampler), i, sampler) == m


def test_enumeration_matches_kostant_partition_function():
    assert binf.kostant_count(3, (1, 1, 1)) == 4
    assert binf.kostant_count(2, (2, 2)) == 3
    for n in (1, 2, 3, 4):
        for m_total in range(4):
            for m in binf.multisegments_up_to(n, m_total):
                assert len(binf.enumerate_multisegments(n, m.dimvec)) == binf.kostant_count(n, m.dimvec)


def test_enumerate_multisegments_edge_cases():
    assert binf.enumerate_multisegments(2, (0, 0)) == [ms(2)]
    assert binf.enumerate_multisegments(2, (1, -1)) == []
    with pytest.raises(DomainError):
        binf.enumerate_multisegments(2, (1,))
    found = binf.enumerate_multisegments(3, (1, 1, 1))
    assert len(found) == len(set(found)) == 4
    assert ms(3, (1, 3)) in found


@pytest.mark.parametrize("depth, nodes, edges", [(0, 1, 0), (1, 3, 2), (2, 7, 6)])
def test_generate_binf_a2(sampler, depth, nodes, edges):
    g = binf.generate_binf(RootDatum.type_a(2), depth, sampler)
    assert len(g) == nodes
    assert g.edge_count() == edges
    assert g.root == "-"


def test_generate_binf_a1(sampler):
    g = binf.generate_binf(RootDatum.type_a(1), 3, sampler)
    assert len(g) == 4
    assert [c for _, c, _ in g.edges()] == [1, 1, 1]
    assert g.node("1,1;1,1").wt == Weight((-4,))


def test_binf_graph_is_a_crystal(sampler):
    d = RootDatum.type_a(2)
    g = binf.generate_binf(d, 3, sampler)
    assert len(g) == len(binf.multisegments_up_to(2, 3)) == 13
    assert axiom_violations(g) == []
    assert g.highest_weight_keys() == ["-"]


def test_generate_binf_rejects_negative_depth(sampler):
    with pytest.raises(DomainError):
        binf.generate_binf(RootDatum.type_a(2), -1, sampler)


def test_binf_element_decoration(sampler, a2):
    node = binf.binf_element(a2, ms(2, (1, 2)), sampler)
    assert node.wt == Weight((-1, -1))
    assert node.eps == (0, 1)
    assert node.phi == (-1, 0)
    with pytest.raises(DomainError):
        binf.binf_element(a2, ms(3, (1, 2)), sampler)


def check_epsilon_under_more_samples(sampler, total):
    more = sampler.with_samples(20)
    for n in (1, 2, 3):
        for m in binf.multisegments_up_to(n, total):
            assert binf.epsilon_vector(m, sampler) == binf.epsilon_vector(m, more), m


def test_epsilon_is_stable_under_more_samples(sampler):
    check_epsilon_under_more_samples(sampler, 4)


@pytest.mark.slow
def test_epsilon_is_stable_on_calibration_multisegments(sampler):
    check_epsilon_under_more_samples(sampler, fast_rule.FULL_CALIBRATION[1])


def test_component_data_is_memoized(sampler, fresh_cache):
    m = ms(3, (1, 3), (2, 2))
    binf.epsilon_vector(m, sampler)
    drawn = METRICS.samples_drawn
    hits = METRICS.cache_hits
    binf.epsilon_vector(m, sampler)
    assert METRICS.samples_drawn == drawn
    assert METRICS.cache_hits == hits + 1
