"""
Quivers, double quivers and the path algebra.

Vertices are 1-based Dynkin labels. In the type A double quiver the arrow
"a{k}" points k+1 -> k and "a{k}bar" points k -> k+1; the default
orientation takes the left-pointing arrows a_k.

Example:
    >>> q = linear_quiver(3)
    >>> len(enumerate_paths(q, 3))
    6
"""

from app.core import linalg
from app.types.errors import DomainError
from app.types.quivers import Arrow, DoubleQuiver, Path, Quiver


def linear_quiver(n: int) -> Quiver:
    """The type A_n quiver 1 <- 2 <- ... <- n."""
    if n < 1:
        raise DomainError(f"need at least one vertex, got {n}")
    arrows = tuple(Arrow(f"a{k}", k + 1, k) for k in range(1, n))
    return Quiver(vertices=tuple(range(1, n + 1)), arrows=arrows)


def jordan_quiver() -> Quiver:
    return Quiver(vertices=(1,), arrows=(Arrow("t", 1, 1),), allow_loops=True)


def double_quiver(n: int, orientation: str = "left") -> DoubleQuiver:
    """
    The double quiver of the A_n Dynkin graph.

    Args:
        n: Number of vertices.
        orientation: "left" puts a_k (k+1 -> k) in omega, "right" puts abar_k.

    Returns:
        A DoubleQuiver whose arrows are a_k and a_kbar for 1 <= k < n.
    """
    if orientation not in ("left", "right"):
        raise DomainError(f"orientation must be 'left' or 'right', got {orientation!r}")
    arrows = []
    pairs = []
    for k in range(1, n):
        arrows.append(Arrow(f"a{k}", k + 1, k))
        arrows.append(Arrow(f"a{k}bar", k, k + 1))
        pairs.append((f"a{k}", f"a{k}bar"))
    quiver = Quiver(vertices=tuple(range(1, n + 1)), arrows=tuple(arrows))
    pick = 0 if orientation == "left" else 1
    omega = frozenset(p[pick] for p in pairs)
    return DoubleQuiver(quiver=quiver, pairs=tuple(pairs), omega=omega, orientation=orientation)


def path_product(p: Path, q: Path, quiver: Quiver | None = None) -> Path | None:
    """
    Concatenate p after q; None is the formal zero.

    Trivial paths act as local identities: e_i . q = q when t(q) = i.

    Raises:
        DomainError: If p and q use one arrow id for different arrows, or
            quiver is given and either path is not a path of it.
    """
    if quiver is not None:
        for path in (p, q):
            if not quiver.has_path(path):
                raise DomainError(f"path {path} is not a path of the quiver")
    else:
        ids = {a.id: a for a in q.arrows}
        for a in p.arrows:
            if ids.get(a.id, a) != a:
                raise DomainError(f"arrow {a.id} means different arrows in {p} and {q}")
    if q.target != p.source:
        return None
    return Path(start=q.start, arrows=q.arrows + p.arrows)


def enumerate_paths(q: Quiver, max_len: int) -> list[Path]:
    """
    All paths of length <= max_len, trivial paths included.

    Ordered by length, then lexicographically on the arrow ids in
    application order (trivial paths by vertex).
    """
    if max_len < 0:
        raise DomainError(f"max_len must be >= 0, got {max_len}")
    layer = [Path(start=v) for v in sorted(q.vertices)]
    paths = list(layer)
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for a in q.arrows_out_of(p.target):
                nxt.append(Path(start=p.start, arrows=p.arrows + (a,)))
        nxt.sort(key=lambda p: tuple(a.id for a in p.arrows))
        paths.extend(nxt)
        layer = nxt
        if not layer:
            break
    return paths


def path_to_elementary(path: Path, n: int) -> linalg.Matrix:
    """
    The algebra map p_{ij} -> E_{ij} for the linear A_n quiver.

    p_{ij} is the unique path from j to i, so the matrix has a single 1 in
    row i, column j.
    """
    m = linalg.zeros(n, n)
    m[path.target - 1, path.source - 1] = 1
    return m
