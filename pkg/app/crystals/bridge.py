"""
Tableaux <-> stable components, and crystal isomorphism checking.

A box with entry j in row i stands for the segment [i, j-1] when j > i;
boxes holding their own row index stand for nothing. Conversely the
segments starting at i fix the multiset of entries of row i, and a
semistandard row is determined by its multiset.
"""

from collections import deque

from app.core.cartan import partition_of_weight, root_lattice_element, weight_from_dimvec
from app.crystals.graph import CrystalGraph
from app.crystals.tableau import is_semistandard, weight_tab
from app.types.crystal import IsoResult
from app.types.errors import ConventionError, DomainError
from app.types.points import DimVector
from app.types.segments import Multisegment, Segment
from app.types.tableaux import Tableau
from app.types.weights import RootDatum


def tableau_to_multisegment(t: Tableau) -> Multisegment:
    if not is_semistandard(t):
        raise DomainError(f"{t} is not semistandard")
    segments = [
        Segment(i, j - 1)
        for i, row in enumerate(t.rows, start=1)
        for j in row
        if j - 1 >= i
    ]
    return Multisegment(t.n, tuple(segments))


def multisegment_to_tableau(d: RootDatum, m: Multisegment, wdims: DimVector) -> Tableau:
    """
    The tableau of shape lambda(omega_w) whose row r holds r on its first
    lambda_r - k_r boxes and j+1 for each segment [r, j] after them.

    Raises:
        DomainError: If m and wdims do not match d.
        ConventionError: If the rows do not fit the shape or the filling is
            not semistandard (m was not a stable component).
    """
    if m.n != d.n:
        raise DomainError(f"multisegment rank {m.n} does not match {d.label}")
    shape = partition_of_weight(d, weight_from_dimvec(d, wdims))
    shape = tuple(x for x in shape if x)
    by_row: dict[int, list[int]] = {}
    for seg in m.segments:
        by_row.setdefault(seg.i, []).append(seg.j + 1)
    if by_row and max(by_row) > len(shape):
        raise ConventionError(f"{m} has segments starting below the last row of {shape}")
    rows = []
    for r, length in enumerate(shape, start=1):
        ends = sorted(by_row.get(r, []))
        if len(ends) > length:
            raise ConventionError(f"row {r} of {shape} cannot hold {len(ends)} segments of {m}")
        rows.append(tuple([r] * (length - len(ends)) + ends))
    t = Tableau(d.n, tuple(rows))
    if not is_semistandard(t):
        raise ConventionError(f"{m} distributes to the non-semistandard filling {t}")
    return t


def weight_compatible(d: RootDatum, t: Tableau, m: Multisegment, wdims: DimVector) -> bool:
    """weight_tab(t) == omega_w - alpha_v(m)."""
    return weight_tab(d, t) == weight_from_dimvec(d, wdims) - root_lattice_element(d, m.dimvec)


def crystal_isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> IsoResult:
    """
    Match two rooted crystal graphs by a simultaneous BFS from the roots.

    Nodes are paired along equally colored edges and must carry the same
    wt, eps and phi. The pairing is forced, so it is the only candidate
    isomorphism.
    """
    if g1.d != g2.d:
        return IsoResult(False, {}, f"root data differ: {g1.d.label} vs {g2.d.label}")
    matching = {g1.root: g2.root}
    used = {g2.root}
    queue = deque([(g1.root, g2.root)])
    while queue:
        a, b = queue.popleft()
        x, y = g1.node(a), g2.node(b)
        if (x.wt, x.eps, x.phi) != (y.wt, y.eps, y.phi):
            return IsoResult(False, matching, f"decorations differ at {a} / {b}")
        for i in range(1, g1.d.n + 1):
            fa, fb = g1.f(a, i), g2.f(b, i)
            if (fa is None) != (fb is None):
                return IsoResult(False, matching, f"{i}-edge out of {a} / {b} exists on one side only")
            if fa is None:
                continue
            if fa in matching:
                if matching[fa] != fb:
                    return IsoResult(False, matching, f"{i}-edge out of {a} lands on {matching[fa]}, not {fb}")
                continue
            if fb in used:
                return IsoResult(False, matching, f"{fb} matched twice")
            matching[fa] = fb
            used.add(fb)
            queue.append((fa, fb))
    if len(matching) != len(g1) or len(used) != len(g2):
        return IsoResult(False, matching, f"matched {len(matching)} of {len(g1)} / {len(g2)} nodes")
    if g1.edge_count() != g2.edge_count():
        return IsoResult(False, matching, "edge counts differ")
    return IsoResult(True, matching)


def matching_report(g_geometric: CrystalGraph, g_tableau: CrystalGraph) -> tuple[IsoResult, list[dict]]:
    """
    Pair every geometric node with its tableau, in canonical node order.

    Each entry also says whether the pairing agrees with
    tableau_to_multisegment.
    """
    iso = crystal_isomorphic(g_geometric, g_tableau)
    pairs = []
    for key in g_geometric.keys():
        if key not in iso.matching:
            continue
        m = g_geometric.node(key).payload
        t = g_tableau.node(iso.matching[key]).payload
        pairs.append({
            "segments": m.to_pairs(),
            "tableau": t.key(),
            "rows": t.to_rows(),
            "agrees": tableau_to_multisegment(t) == m,
        })
    return iso, pairs
