"""
Root and weight arithmetic for sl_{n+1}.

Weights live in the fundamental-weight basis, so <h_i, w> is a coordinate
read. The epsilon basis is a view: a weight maps to the partition-like
representative whose last coordinate is 0, and any content vector maps
back (modulo eps_1 + ... + eps_{n+1} = 0).

Example:
    >>> d = RootDatum.type_a(2)
    >>> partition_of_weight(d, Weight((1, 1)))
    (2, 1)
"""

import re
from fractions import Fraction
from typing import Sequence

from app.types.errors import DomainError
from app.types.weights import RootDatum, Weight

Partition = tuple[int, ...]


def root_datum_from_label(label: str) -> RootDatum:
    match = re.fullmatch(r"\s*A(?P<n>\d+)\s*", label)
    if not match:
        raise DomainError(f"unsupported type label {label!r}; expected A<n>")
    return RootDatum.type_a(int(match.group("n")))


def _check_weight(d: RootDatum, w: Weight) -> None:
    if len(w.coords) != d.n:
        raise DomainError(f"weight {w.coords} has rank {len(w.coords)}, expected {d.n}")


def pairing(d: RootDatum, i: int, w: Weight) -> int:
    """
    Return <h_i, w>.

    Args:
        d: Root datum.
        i: Vertex, 1 <= i <= n.
        w: Weight in the fundamental-weight basis.

    Returns:
        The i-th fundamental coordinate of w.

    Raises:
        DomainError: If i is out of range or w has the wrong rank.
    """
    d.check_vertex(i)
    _check_weight(d, w)
    return w.coords[i - 1]


def simple_root(d: RootDatum, i: int) -> Weight:
    d.check_vertex(i)
    return Weight(tuple(d.cartan[k][i - 1] for k in range(d.n)))


def fundamental_weight(d: RootDatum, i: int) -> Weight:
    d.check_vertex(i)
    return Weight(tuple(int(k == i - 1) for k in range(d.n)))


def weight_from_dimvec(d: RootDatum, wdims: Sequence[int]) -> Weight:
    """omega_w = sum_i w_i omega_i."""
    if len(wdims) != d.n:
        raise DomainError(f"framing vector {tuple(wdims)} has wrong length for {d.label}")
    return Weight(tuple(int(x) for x in wdims))


def root_lattice_element(d: RootDatum, v: Sequence[int]) -> Weight:
    """alpha_v = sum_i v_i alpha_i."""
    if len(v) != d.n:
        raise DomainError(f"dimension vector {tuple(v)} has wrong length for {d.label}")
    total = Weight.zero(d.n)
    for i, vi in enumerate(v, start=1):
        if vi:
            total = total + vi * simple_root(d, i)
    return total


def partition_of_weight(d: RootDatum, w: Weight) -> Partition:
    """
    The partition lambda(w) with lambda_k = w_k + ... + w_n.

    Raises:
        DomainError: If w is not dominant.
    """
    _check_weight(d, w)
    if not w.is_dominant:
        raise DomainError(f"weight {w.coords} is not dominant")
    return tuple(sum(w.coords[k:]) for k in range(d.n))


def weight_to_epsilon(d: RootDatum, w: Weight) -> tuple[int, ...]:
    _check_weight(d, w)
    return tuple(sum(w.coords[k:]) for k in range(d.n)) + (0,)


def weight_from_epsilon(d: RootDatum, eps: Sequence[int]) -> Weight:
    if len(eps) != d.n + 1:
        raise DomainError(f"epsilon vector needs {d.n + 1} entries, got {len(eps)}")
    return Weight(tuple(int(eps[k]) - int(eps[k + 1]) for k in range(d.n)))


def positive_roots(d: RootDatum) -> list[tuple[int, int]]:
    """(i, j) for each positive root alpha_i + ... + alpha_j of type A_n."""
    return [(i, j) for i in range(1, d.n + 1) for j in range(i, d.n + 1)]


def weyl_dim(d: RootDatum, w: Weight) -> int:
    """
    Dimension of the irreducible representation of highest weight w.

    Uses prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i) over the
    partition lambda(w) padded with lambda_{n+1} = 0.

    Raises:
        DomainError: If w is not dominant or d is not of type A.
    """
    if not d.is_type_a:
        raise DomainError("the dimension formula is implemented for type A only")
    lam = partition_of_weight(d, w) + (0,)
    size = len(lam)
    dim = Fraction(1)
    for i in range(size):
        for j in range(i + 1, size):
            dim *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(dim)


def dominant_weights_up_to(d: RootDatum, max_dim: int) -> list[tuple[int, ...]]:
    """
    Fundamental coordinates of every nonzero dominant weight w with
    weyl_dim(w) <= max_dim, in lexicographic order.

    weyl_dim grows strictly in each coordinate, so each coordinate is
    raised until the bound fails with the later ones at 0.
    """
    if max_dim < 1:
        raise DomainError(f"max_dim must be >= 1, got {max_dim}")
    found = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == d.n:
            if any(prefix):
                found.append(tuple(prefix))
            return
        k = 0
        while weyl_dim(d, weight_from_dimvec(d, prefix + [k] + [0] * (d.n - len(prefix) - 1))) <= max_dim:
            extend(prefix + [k])
            k += 1

    extend([])
    return found
