from itertools import product

import pytest

from app.core.cartan import dominant_weights_up_to, partition_of_weight, weight_from_dimvec, weyl_dim
from app.crystals import blambda, bridge, tableau
from app.types.errors import ConventionError, DomainError
from app.types.segments import Multisegment
from app.types.tableaux import Tableau
from app.types.weights import RootDatum


def ms(n, *pairs):
    return Multisegment.of(n, pairs)


def test_column_of_sl10():
    d = RootDatum.type_a(9)
    column = Tableau(9, ((1,), (5,), (8,), (10,)))
    m = bridge.tableau_to_multisegment(column)
    assert m == ms(9, (4, 9), (3, 7), (2, 4))
    assert bridge.multisegment_to_tableau(d, m, (0, 0, 0, 1, 0, 0, 0, 0, 0)) == column


def test_sl3_projective_lines(a2):
    assert bridge.tableau_to_multisegment(tableau.parse_rows("(12/3)", 2)) == ms(2, (1, 1), (2, 2))
    assert bridge.tableau_to_multisegment(tableau.parse_rows("(13/2)", 2)) == ms(2, (1, 2))
    assert bridge.tableau_to_multisegment(tableau.parse_rows("(11/2)", 2)) == ms(2)
    assert bridge.multisegment_to_tableau(a2, ms(2, (1, 2)), (1, 1)) == tableau.parse_rows("(13/2)", 2)


def test_round_trips():
    for n in (1, 2, 3):
        d = RootDatum.type_a(n)
        for wdims in product(range(3), repeat=n):
            if not any(wdims):
                continue
            shape = partition_of_weight(d, weight_from_dimvec(d, wdims))
            for t in tableau.enumerate_ssyt(shape, n):
                m = bridge.tableau_to_multisegment(t)
                assert bridge.multisegment_to_tableau(d, m, wdims) == t
                assert bridge.weight_compatible(d, t, m, wdims)


def test_unstable_components_do_not_fit(a2):
    with pytest.raises(ConventionError):
        bridge.multisegment_to_tableau(a2, ms(2, (2, 2)), (1, 0))
    with pytest.raises(ConventionError):
        bridge.multisegment_to_tableau(a2, ms(2, (1, 1), (1, 1)), (1, 0))
    with pytest.raises(ConventionError):
        bridge.multisegment_to_tableau(a2, ms(2, (1, 2)), (0, 1))
    with pytest.raises(DomainError):
        bridge.multisegment_to_tableau(a2, ms(3, (1, 2)), (0, 1, 0))


def test_tableau_to_multisegment_needs_semistandard():
    with pytest.raises(DomainError):
        bridge.tableau_to_multisegment(Tableau(2, ((2, 1),)))


def test_stable_components_are_exactly_the_tableaux(sampler):
    d = RootDatum.type_a(2)
    wdims = (1, 1)
    shape = partition_of_weight(d, weight_from_dimvec(d, wdims))
    from_tableaux = {bridge.tableau_to_multisegment(t) for t in tableau.enumerate_ssyt(shape, 2)}
    stable = {m for v in product(range(3), repeat=2) for m in blambda.stable_components(2, v, wdims, sampler)}
    assert stable == from_tableaux


def test_non_isomorphic_crystals(a2):
    g1 = tableau.generate_tableau_graph(a2, (1,))
    g2 = tableau.generate_tableau_graph(a2, (1, 1))
    iso = bridge.crystal_isomorphic(g1, g2)
    assert not iso.isomorphic
    assert iso.reason
    g3 = tableau.generate_tableau_graph(RootDatum.type_a(3), (1,))
    assert not bridge.crystal_isomorphic(g1, g3).isomorphic


def test_graph_is_isomorphic_to_itself(a2):
    g = tableau.generate_tableau_graph(a2, (2, 1))
    iso = bridge.crystal_isomorphic(g, g)
    assert iso.isomorphic
    assert all(k == v for k, v in iso.matching.items())


def test_sl3_adjoint_matching(sampler, a2):
    geo = blambda.generate_blambda(a2, (1, 1), sampler)
    tab = tableau.generate_tableau_graph(a2, (2, 1))
    iso, pairs = bridge.matching_report(geo, tab)
    assert iso.isomorphic
    assert iso.matching[ms(2, (1, 1), (2, 2)).key()] == "(12/3)"
    assert iso.matching[ms(2, (1, 2)).key()] == "(13/2)"
    assert len(pairs) == 8
    assert all(p["agrees"] for p in pairs)


@pytest.mark.parametrize("n, wdims", [(1, (3,)), (2, (2, 1)), (3, (1, 0, 1))])
def test_geometric_and_tableau_crystals_agree(sampler, n, wdims):
    d = RootDatum.type_a(n)
    geo = blambda.generate_blambda(d, wdims, sampler)
    tab = tableau.tableau_graph_for_weight(d, weight_from_dimvec(d, wdims))
    iso, pairs = bridge.matching_report(geo, tab)
    assert iso.isomorphic, iso.reason
    assert all(p["agrees"] for p in pairs)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3])
def test_isomorphism_sweep(sampler, n):
    """Every dominant weight of dimension <= 200: same size, same crystal."""
    d = RootDatum.type_a(n)
    for wdims in dominant_weights_up_to(d, 200):
        w = weight_from_dimvec(d, wdims)
        geo = blambda.generate_blambda(d, wdims, sampler)
        assert len(geo) == weyl_dim(d, w), wdims
        iso, pairs = bridge.matching_report(geo, tableau.tableau_graph_for_weight(d, w))
        assert iso.isomorphic, (wdims, iso.reason)
        assert all(p["agrees"] for p in pairs), wdims
