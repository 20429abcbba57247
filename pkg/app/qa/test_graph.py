import json
import threading

import pytest

from app.crystals import blambda, tableau
from app.crystals.graph import CrystalGraph, FrontierRegistry, build_graph
from app.types.crystal import CrystalNode
from app.types.errors import DomainError
from app.types.metrics import METRICS
from app.types.weights import RootDatum, Weight


def test_registry_registers_once():
    reg = FrontierRegistry()
    assert reg.register("a", 1)
    assert not reg.register("a", 2)
    assert "a" in reg and "b" not in reg
    assert len(reg) == 1


def test_registry_under_contention():
    reg = FrontierRegistry()
    wins = []

    def worker():
        wins.extend(k for k in range(200) if reg.register(k, k))

    threads = [threading.Thread(target=worker) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert sorted(wins) == list(range(200))
    assert len(reg) == 200


def _node(key, wt):
    return CrystalNode(key=key, payload=key, wt=Weight(wt), eps=(0,), phi=(0,))


def test_one_edge_per_color():
    g = CrystalGraph(RootDatum.type_a(1), root="x")
    g.add_node(_node("x", (1,)))
    g.add_node(_node("y", (-1,)))
    g.add_edge("x", 1, "y")
    assert g.f("x", 1) == "y" and g.e("y", 1) == "x"
    assert g.f("y", 1) is None
    with pytest.raises(DomainError):
        g.add_edge("x", 1, "x")
    with pytest.raises(DomainError):
        g.add_edge("x", 1, "z")


def test_build_graph_rejects_bad_jobs(a2):
    root = tableau.highest_weight_tableau((1,), 2)
    with pytest.raises(DomainError):
        build_graph(a2, root, lambda t: [], lambda t: tableau.tableau_element(a2, t), jobs=0)


def test_json_export(sampler, a2):
    g = blambda.generate_blambda(a2, (1, 1), sampler)
    doc = json.loads(g.to_json())
    assert doc["type"] == "A2"
    assert doc["model"] == "blambda"
    assert doc["wdims"] == [1, 1]
    assert doc["root"] == "-"
    assert len(doc["nodes"]) == 8 and len(doc["edges"]) == 8
    assert doc["nodes"][0] == {"id": "-", "label": "{}", "wt": [1, 1], "eps": [0, 0], "phi": [1, 1], "segments": []}
    assert "rows" not in doc["nodes"][0]


def test_dot_export(a2):
    dot = tableau.generate_tableau_graph(a2, (2, 1)).to_dot()
    lines = dot.splitlines()
    assert lines[0] == 'digraph "tableau" {'
    assert "  // shape=2,1" in lines
    assert '  "(11/2)" [label="(11/2)", wt="1,1"];' in lines
    assert '  "(11/2)" -> "(12/2)" [label="1", color="red"];' in lines
    assert sum(" -> " in line for line in lines) == 8
    assert lines[-1] == "}"


def test_parallel_generation_is_byte_identical(sampler):
    d = RootDatum.type_a(2)
    serial = blambda.generate_blambda(d, (2, 1), sampler, jobs=1)
    parallel = blambda.generate_blambda(d, (2, 1), sampler, jobs=4)
    assert serial.to_json() == parallel.to_json()
    assert serial.to_dot() == parallel.to_dot()


def test_generation_is_counted(fresh_cache, a2):
    tableau.generate_tableau_graph(a2, (1,))
    assert METRICS.graphs_generated == 1
