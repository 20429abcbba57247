"""
Crystal graphs and their generation.

A CrystalGraph wraps a networkx.MultiDiGraph whose nodes are canonical
payload keys (multisegment or tableau encodings) and whose edges are f_i
arrows keyed by the color i. Nodes keep BFS discovery order from the root
and edges are emitted source-major with colors ascending, so exports are
byte-identical however the frontier was expanded.

build_graph expands layer by layer. With jobs > 1 the successor and
decoration calls fan out to a thread pool; the FrontierRegistry decides
membership atomically and everything is merged back in frontier order.
"""

import threading
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Hashable, Iterable

import networkx as nx

from app.core.cartan import pairing, simple_root
from app.observability.events import emit
from app.types.crystal import CrystalNode
from app.types.errors import BudgetExceededError, DomainError
from app.types.metrics import METRICS
from app.types.weights import RootDatum

EDGE_COLORS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


class FrontierRegistry:
    """Atomic membership registry keyed by canonical encoding."""

    def __init__(self):
        self._entries: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def register(self, key: Hashable, payload: Any) -> bool:
        """Insert key; False when it was already present."""
        with self._lock:
            if key in self._entries:
                return False
            self._entries[key] = payload
            return True

    def __contains__(self, key: Hashable) -> bool:
        with self._lock:
            return key in self._entries

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def keys(self) -> list:
        with self._lock:
            return list(self._entries)


class CrystalGraph:
    """
    Decorated, edge-colored crystal graph rooted at its generating element.

    Attributes:
        d: Root datum; colors run over 1..d.n.
        root: Key of the root node.
        header: Extra export fields (model, engine, wdims, ...).
    """

    def __init__(self, d: RootDatum, root: str, header: dict | None = None):
        self.d = d
        self.root = root
        self.header = dict(header or {})
        self.graph = nx.MultiDiGraph()

    def add_node(self, node: CrystalNode) -> None:
        self.graph.add_node(node.key, node=node)

    def add_edge(self, src: str, color: int, dst: str) -> None:
        if src not in self.graph or dst not in self.graph:
            raise DomainError(f"edge {src} -{color}-> {dst} between unknown nodes")
        if self.f(src, color) is not None:
            raise DomainError(f"node {src} already has an outgoing {color}-edge")
        self.graph.add_edge(src, dst, key=color)

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __contains__(self, key: str) -> bool:
        return key in self.graph

    def keys(self) -> list[str]:
        return list(self.graph.nodes)

    def node(self, key: str) -> CrystalNode:
        return self.graph.nodes[key]["node"]

    def nodes(self) -> list[CrystalNode]:
        return [data["node"] for _, data in self.graph.nodes(data=True)]

    def f(self, key: str, color: int) -> str | None:
        for _, dst, c in self.graph.out_edges(key, keys=True):
            if c == color:
                return dst
        return None

    def e(self, key: str, color: int) -> str | None:
        for src, _, c in self.graph.in_edges(key, keys=True):
            if c == color:
                return src
        return None

    def edges(self) -> list[tuple[str, int, str]]:
        """(src, color, dst) in canonical order."""
        order = {k: pos for pos, k in enumerate(self.graph.nodes)}
        out = [(s, c, t) for s, t, c in self.graph.edges(keys=True)]
        return sorted(out, key=lambda edge: (order[edge[0]], edge[1]))

    def edge_count(self, color: int | None = None) -> int:
        return sum(1 for _, c, _ in self.edges() if color is None or c == color)

    def is_connected(self) -> bool:
        return len(self) > 0 and nx.is_weakly_connected(self.graph)

    def highest_weight_keys(self) -> list[str]:
        return [n.key for n in self.nodes() if not any(n.eps)]

    def weight_multiplicities(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for n in self.nodes():
            out[n.wt.coords] = out.get(n.wt.coords, 0) + 1
        return out

    def to_model(self):
        from app.types.schemas import graph_model

        return graph_model(self)

    def to_json(self) -> str:
        return self.to_model().model_dump_json(exclude_none=True)

    def to_dot(self) -> str:
        """
        DOT export; edges carry label="i" and nodes a wt attribute.
        """
        name = self.header.get("model", "crystal")
        lines = [f'digraph "{name}" {{']
        for key, value in self.header.items():
            if isinstance(value, (list, tuple)):
                value = ",".join(str(x) for x in value)
            lines.append(f"  // {key}={value}")
        for n in self.nodes():
            wt = ",".join(str(x) for x in n.wt.coords)
            lines.append(f'  "{n.key}" [label="{n.payload}", wt="{wt}"];')
        for src, color, dst in self.edges():
            shade = EDGE_COLORS[(color - 1) % len(EDGE_COLORS)]
            lines.append(f'  "{src}" -> "{dst}" [label="{color}", color="{shade}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def axiom_violations(g: CrystalGraph, normal: bool = False) -> list[str]:
    """
    Check the crystal axioms on every node and edge.

    For f_i(x) = y: e_i(y) = x, wt(y) = wt(x) - alpha_i, eps_i(y) = eps_i(x) + 1
    and phi_i(y) = phi_i(x) - 1. At every node phi_i - eps_i = <h_i, wt> and
    a node has an incoming i-edge exactly when eps_i > 0. With normal=True
    the i-string through each node must also have eps_i steps above it and
    phi_i below.

    Returns:
        Human-readable descriptions of the violations; empty when none.
    """
    d = g.d
    problems = []
    for node in g.nodes():
        for i in range(1, d.n + 1):
            if node.phi[i - 1] - node.eps[i - 1] != pairing(d, i, node.wt):
                problems.append(f"{node.key}: phi_{i} - eps_{i} != <h_{i}, wt>")
            if (g.e(node.key, i) is not None) != (node.eps[i - 1] > 0):
                problems.append(f"{node.key}: has i-predecessor inconsistent with eps_{i}")
            if normal:
                up, down = _string_length(g, node.key, i, g.e), _string_length(g, node.key, i, g.f)
                if (up, down) != (node.eps[i - 1], node.phi[i - 1]):
                    problems.append(f"{node.key}: {i}-string ({up},{down}) != (eps, phi)")
    for src, i, dst in g.edges():
        x, y = g.node(src), g.node(dst)
        if g.e(dst, i) != src:
            problems.append(f"e_{i}({dst}) != {src}")
        if y.wt != x.wt - simple_root(d, i):
            problems.append(f"wt({dst}) != wt({src}) - alpha_{i}")
        if y.eps[i - 1] != x.eps[i - 1] + 1:
            problems.append(f"eps_{i}({dst}) != eps_{i}({src}) + 1")
        if y.phi[i - 1] != x.phi[i - 1] - 1:
            problems.append(f"phi_{i}({dst}) != phi_{i}({src}) - 1")
    return problems


def _string_length(g: CrystalGraph, key: str, i: int, step) -> int:
    count = 0
    key = step(key, i)
    while key is not None:
        count += 1
        key = step(key, i)
    return count


def _map(pool: ThreadPoolExecutor | None, fn: Callable, items: Iterable) -> list:
    if pool is None:
        return [fn(x) for x in items]
    return list(pool.map(fn, items))


def build_graph(d: RootDatum, root: Any, successors: Callable[[Any], list[tuple[int, Any]]],
                decorate: Callable[[Any], CrystalNode], jobs: int = 1,
                budget: int | None = None, header: dict | None = None) -> CrystalGraph:
    """
    Breadth-first generation from root.

    Args:
        d: Root datum.
        root: Root payload; payloads expose key().
        successors: payload -> [(color, payload)], the f-edges out of it.
        decorate: payload -> CrystalNode.
        jobs: Worker threads for expansion; 1 runs inline.
        budget: Maximum node count.
        header: Export header fields.

    Raises:
        BudgetExceededError: If more than budget nodes are discovered.
    """
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    registry = FrontierRegistry()
    g = CrystalGraph(d, root=root.key(), header=header)
    registry.register(root.key(), root)
    g.add_node(decorate(root))
    frontier = [root]
    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while frontier:
            expanded = _map(pool, successors, frontier)
            fresh = []
            edges = []
            for src, succ in zip(frontier, expanded):
                for color, dst in sorted(succ, key=lambda pair: pair[0]):
                    if registry.register(dst.key(), dst):
                        fresh.append(dst)
                        if budget is not None and len(registry) > budget:
                            raise BudgetExceededError(
                                f"generation passed the node budget of {budget}"
                            )
                    edges.append((src.key(), color, dst.key()))
            for node in _map(pool, decorate, fresh):
                g.add_node(node)
            for src, color, dst in edges:
                g.add_edge(src, color, dst)
            frontier = fresh
    finally:
        if pool is not None:
            pool.shutdown()
    METRICS.bump("graphs_generated")
    emit("GRAPH_GENERATED", {**g.header, "nodes": len(g), "edges": g.edge_count()})
    return g
