"""
Exact linear algebra on quiver representation points.

Covers direct sums, the G_V action, the moment map, epsilon_i, the
segment decomposition of left-oriented type A representations,
nilpotency, invariant subspaces and stability of framed points.

Key conventions:
    - x_a has shape dims[t(a)] x dims[s(a)].
    - psi_i(x) = sum_{t(a)=i} sign(a) x_a x_abar.
    - Subspaces are passed around either as column bases or, for the
      stability fixpoint, as kernels of constraint matrices.
"""

from typing import Mapping

import numpy as np

from app.core import linalg
from app.core.quiver import double_quiver
from app.types.errors import DomainError, InternalError, StabilityMismatchError
from app.types.points import DimVector, FramedPoint, RepPoint
from app.types.quivers import DoubleQuiver
from app.types.segments import Multisegment, Segment


def zero_point(double: DoubleQuiver, dims: DimVector, omega_only: bool = False) -> RepPoint:
    dims = tuple(dims)
    maps = {}
    for a in double.quiver.arrows:
        if omega_only and a.id not in double.omega:
            continue
        maps[a.id] = linalg.zeros(dims[a.dst - 1], dims[a.src - 1])
    return RepPoint(double=double, dims=dims, maps=maps)


def segment_rep(double: DoubleQuiver, seg: Segment) -> RepPoint:
    """The indecomposable V^{i,j}: C at vertices i..j, omega arrows the identity."""
    return multisegment_rep(double, Multisegment(double.n, (seg,)))


def simple_rep(double: DoubleQuiver, i: int) -> RepPoint:
    """The simple representation S^i."""
    return segment_rep(double, Segment(i, i))


def multisegment_rep(double: DoubleQuiver, m: Multisegment) -> RepPoint:
    """
    The canonical point sum of x^{i,j} over the segments of m.

    The basis of V_k lists, in the canonical segment order, one vector for
    each segment containing k. The omega arrow a_k sends the vector of a
    segment at k+1 to its vector at k; abar maps are zero.

    Raises:
        DomainError: Unless the double quiver is left-oriented of rank m.n.
    """
    _require_left(double)
    if m.n != double.n:
        raise DomainError(f"multisegment rank {m.n} does not match quiver on {double.n} vertices")
    dims = m.dimvec
    index: dict[tuple[int, int], int] = {}
    fill = [0] * double.n
    for l, seg in enumerate(m.segments):
        for k in range(seg.i, seg.j + 1):
            index[(l, k)] = fill[k - 1]
            fill[k - 1] += 1
    point = zero_point(double, dims)
    for k in range(1, double.n):
        xa = point.maps[f"a{k}"]
        for l, seg in enumerate(m.segments):
            if seg.i <= k and k + 1 <= seg.j:
                xa[index[(l, k)], index[(l, k + 1)]] = 1
    return point


def direct_sum(p: RepPoint, q: RepPoint) -> RepPoint:
    """
    Block-diagonal direct sum.

    Raises:
        DomainError: If the points live on different quivers or carry
            different arrow sets.
    """
    if p.double != q.double or set(p.maps) != set(q.maps):
        raise DomainError("direct sum needs points over the same quiver")
    dims = tuple(a + b for a, b in zip(p.dims, q.dims))
    maps = {k: linalg.block_diag(p.maps[k], q.maps[k]) for k in p.maps}
    return RepPoint(double=p.double, dims=dims, maps=maps)


def act(g: Mapping[int, linalg.Matrix], p: RepPoint) -> RepPoint:
    """The G_V action: x_a -> g_{t(a)} x_a g_{s(a)}^{-1}."""
    inv = {i: linalg.inverse(g[i]) for i in g}
    maps = {}
    for arrow_id, m in p.maps.items():
        a = p.double.quiver.arrow(arrow_id)
        maps[arrow_id] = linalg.matmul(linalg.matmul(g[a.dst], m), inv[a.src])
    return RepPoint(double=p.double, dims=p.dims, maps=maps)


def restrict_omega(p: RepPoint) -> RepPoint:
    maps = {k: m for k, m in p.maps.items() if k in p.double.omega}
    return RepPoint(double=p.double, dims=p.dims, maps=maps)


def moment_map(p: RepPoint) -> dict[int, linalg.Matrix]:
    """
    psi_i(x) for every vertex i.

    Raises:
        DomainError: If p carries only the omega maps.
    """
    if not p.is_double:
        raise DomainError("moment map needs both omega and omega-bar maps")
    psi = {}
    for i in p.double.quiver.vertices:
        total = linalg.zeros(p.dim(i), p.dim(i))
        for a in p.double.quiver.arrows_into(i):
            term = linalg.matmul(p.maps[a.id], p.maps[p.double.bar(a.id)])
            total = total + p.double.sign(a.id) * term
        psi[i] = total
    return psi


def in_zero_set(p: RepPoint) -> bool:
    return all(linalg.is_zero(m) for m in moment_map(p).values())


def incoming_matrix(p: RepPoint, i: int) -> linalg.Matrix:
    """The map (x_a) from the direct sum of V_{s(a)}, t(a) = i, to V_i."""
    blocks = [p.maps[a.id] for a in p.double.quiver.arrows_into(i) if a.id in p.maps]
    return linalg.hstack(blocks, p.dim(i))


def epsilon_point(p: RepPoint, i: int) -> int:
    """dim Coker of every arrow into i, both orientations."""
    if i not in p.double.quiver.vertices:
        raise DomainError(f"vertex {i} not in the quiver")
    return p.dim(i) - linalg.rank(incoming_matrix(p, i))


def _require_left(double: DoubleQuiver) -> None:
    if double.orientation != "left" or double != double_quiver(double.n, "left"):
        raise DomainError("operation needs the left-oriented type A double quiver")


def composite_rank(p: RepPoint, i: int, j: int) -> int:
    """
    r_{i,j}: rank of V_j -> V_i along the omega arrows (i <= j).

    Out-of-range indices give 0; r_{j,j} = dims[j].
    """
    n = p.double.n
    if i < 1 or j > n:
        return 0
    comp = linalg.identity(p.dim(j))
    for k in range(j - 1, i - 1, -1):
        comp = linalg.matmul(p.maps[f"a{k}"], comp)
    return linalg.rank(comp)


def decompose_segments(p: RepPoint) -> Multisegment:
    """
    Recover the multisegment of the omega part of p.

    m_[i,j] = r_{i,j} - r_{i-1,j} - r_{i,j+1} + r_{i-1,j+1}.

    Raises:
        DomainError: If the quiver is not left-oriented type A.
        InternalError: If a multiplicity is negative or the dimensions do
            not add up.
    """
    _require_left(p.double)
    n = p.double.n
    ranks: dict[tuple[int, int], int] = {}

    def r(i: int, j: int) -> int:
        if i < 1 or j > n:
            return 0
        if (i, j) not in ranks:
            ranks[(i, j)] = composite_rank(p, i, j)
        return ranks[(i, j)]

    segments = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1)
            if mult < 0:
                raise InternalError(f"negative multiplicity {mult} for [{i},{j}]")
            segments.extend([Segment(i, j)] * mult)
    m = Multisegment(n, tuple(segments))
    if m.dimvec != p.dims:
        raise InternalError(f"decomposition {m} does not add up to {p.dims}")
    return m


def rank_profile(p: RepPoint) -> tuple[int, ...]:
    """All r_{i,j}; larger profiles mean larger orbits."""
    n = p.double.n
    return tuple(composite_rank(p, i, j) for i in range(1, n + 1) for j in range(i, n + 1))


def is_nilpotent_point(p: RepPoint) -> bool:
    """
    True iff every path composite of length N = 1 + sum(dims) vanishes.

    W^0 = V and W^{k+1}_i = sum_{t(a)=i} x_a(W^k_{s(a)}) is spanned by the
    composites of length k+1; the chain is decreasing, so it either reaches
    0 or stalls at a nonzero subspace.
    """
    spans = {i: linalg.identity(p.dim(i)) for i in p.double.quiver.vertices}
    total = sum(p.dims)
    for _ in range(1 + total):
        if total == 0:
            return True
        nxt = {}
        for i in p.double.quiver.vertices:
            images = [
                linalg.matmul(p.maps[a.id], spans[a.src])
                for a in p.double.quiver.arrows_into(i)
                if a.id in p.maps
            ]
            nxt[i] = linalg.column_basis(linalg.hstack(images, p.dim(i)))
        new_total = sum(m.shape[1] for m in nxt.values())
        if new_total == total:
            return False
        spans, total = nxt, new_total
    return total == 0


def restrict_to_subspace(p: RepPoint, bases: Mapping[int, linalg.Matrix]) -> RepPoint:
    """
    Restrict p to the x-invariant graded subspace spanned by bases.

    Args:
        p: The point.
        bases: vertex -> matrix with independent columns spanning S_i.

    Raises:
        InternalError: If S is not x-invariant.
    """
    dims = tuple(bases[i].shape[1] for i in p.double.quiver.vertices)
    maps = {}
    for arrow_id, m in p.maps.items():
        a = p.double.quiver.arrow(arrow_id)
        image = linalg.matmul(m, bases[a.src])
        maps[arrow_id] = linalg.solve_in_basis(bases[a.dst], image)
    return RepPoint(double=p.double, dims=dims, maps=maps)


def max_invariant_in_kernel(fp: FramedPoint) -> DimVector:
    """
    Graded dimension of the largest x-invariant S with S_i in ker t_i.

    S_i is kept as the kernel of a constraint matrix C_i: start from
    C_i = t_i, then append C_{t(a)} x_a for every arrow out of i until the
    dimensions stop dropping.
    """
    p = fp.rep
    vertices = p.double.quiver.vertices
    constraints = {i: linalg.row_basis(fp.framing[i]) for i in vertices}

    def dims_of(cons):
        return tuple(p.dim(i) - cons[i].shape[0] for i in vertices)

    current = dims_of(constraints)
    for _ in range(sum(p.dims) + 1):
        nxt = {}
        for i in vertices:
            rows = [constraints[i]]
            for a in p.double.quiver.arrows_out_of(i):
                if a.id in p.maps:
                    rows.append(linalg.matmul(constraints[a.dst], p.maps[a.id]))
            nxt[i] = linalg.row_basis(linalg.vstack(rows, p.dim(i)))
        new = dims_of(nxt)
        constraints = nxt
        if new == current:
            break
        current = new
    return current


def kernel_stability_criterion(fp: FramedPoint) -> bool:
    """
    Vertex-wise criterion: the kernels of every arrow out of k and of t_k
    meet in 0, for every k.
    """
    p = fp.rep
    for k in p.double.quiver.vertices:
        rows = [p.maps[a.id] for a in p.double.quiver.arrows_out_of(k) if a.id in p.maps]
        rows.append(fp.framing[k])
        if linalg.rank(linalg.vstack(rows, p.dim(k))) != p.dim(k):
            return False
    return True


def is_stable(fp: FramedPoint) -> bool:
    """
    No nonzero x-invariant graded subspace lies in ker t.

    For nilpotent points of the left-oriented type A double quiver the
    vertex-wise kernel criterion is evaluated too; the two must agree.

    Raises:
        StabilityMismatchError: If the criteria disagree.
    """
    stable = not any(max_invariant_in_kernel(fp))
    p = fp.rep
    if p.is_double and p.double.orientation == "left" and is_nilpotent_point(p):
        if kernel_stability_criterion(fp) != stable:
            raise StabilityMismatchError(
                f"fixpoint says stable={stable} but the kernel criterion disagrees"
            )
    return stable


def framed(p: RepPoint, wdims: DimVector, framing: Mapping[int, linalg.Matrix]) -> FramedPoint:
    return FramedPoint(rep=p, wdims=tuple(wdims), framing=dict(framing))


def random_framing(p: RepPoint, wdims: DimVector, rng: np.random.Generator, bound: int) -> dict[int, linalg.Matrix]:
    return {
        i: linalg.random_integer_matrix(wdims[i - 1], p.dim(i), rng, bound)
        for i in p.double.quiver.vertices
    }
