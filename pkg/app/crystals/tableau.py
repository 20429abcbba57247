"""
The tableau crystal of sl_{n+1}.

B(lambda) is the set of semistandard tableaux of shape lambda with entries
in 1..n+1. The operators use the signature rule on the reading word (rows
top to bottom, each row right to left): an entry i is an opening symbol,
an entry i+1 a closing one, and adjacent "()" pairs cancel. f_i turns the
leftmost surviving i into i+1; e_i turns the rightmost surviving i+1 into i.

Example:
    >>> t = parse_rows("(11/2)", 2)
    >>> str(f_tab(t, 1))
    '(12/2)'
"""

import re

from app.core.cartan import partition_of_weight, pairing, weight_from_epsilon
from app.crystals.graph import CrystalGraph, build_graph
from app.types.crystal import CrystalNode
from app.types.errors import DomainError
from app.types.tableaux import Partition, Tableau, check_partition
from app.types.weights import RootDatum, Weight


def _check_shape(shape, n: int) -> Partition:
    shape = check_partition(shape)
    if len(shape) > n + 1:
        raise DomainError(f"shape {shape} has more than {n + 1} rows")
    return shape


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase."""
    for row in t.rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t.rows, t.rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def highest_weight_tableau(shape: Partition, n: int) -> Tableau:
    shape = _check_shape(shape, n)
    return Tableau(n, tuple((r,) * length for r, length in enumerate(shape, start=1)))


def lowest_weight_tableau(shape: Partition, n: int) -> Tableau:
    """Each column of height h holds n+2-h, ..., n+1."""
    shape = _check_shape(shape, n)
    rows = []
    for r, length in enumerate(shape, start=1):
        row = []
        for c in range(length):
            height = sum(1 for x in shape if x > c)
            row.append(n + 1 - height + r)
        rows.append(tuple(row))
    return Tableau(n, tuple(rows))


def parse_rows(text: str, n: int) -> Tableau:
    """
    Parse the row notation "(11/2)"; from sl_10 on entries are comma
    separated, as in "(1,5/8,10)".
    """
    match = re.fullmatch(r"\s*\(([0-9,/]*)\)\s*", text)
    if not match:
        raise DomainError(f"malformed tableau {text!r}; expected e.g. (11/2)")
    body = match.group(1)
    rows = []
    for part in body.split("/") if body else []:
        if "," in part or n + 1 >= 10:
            row = [int(x) for x in part.split(",") if x]
        else:
            row = [int(ch) for ch in part]
        rows.append(tuple(row))
    t = Tableau(n, tuple(rows))
    if not is_semistandard(t):
        raise DomainError(f"{text} is not semistandard")
    return t


def render(t: Tableau) -> str:
    return t.key()


def weight_tab(d: RootDatum, t: Tableau) -> Weight:
    """Content sum_k (#k's) eps_k, in the fundamental-weight basis."""
    if t.n != d.n:
        raise DomainError(f"tableau for A{t.n} used with {d.label}")
    return weight_from_epsilon(d, t.content())


def _reading_positions(t: Tableau) -> list[tuple[int, int]]:
    return [(r, c) for r, row in enumerate(t.rows) for c in range(len(row) - 1, -1, -1)]


def _signature(t: Tableau, i: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Surviving (closing, opening) positions in reading order."""
    if not 1 <= i <= t.n:
        raise DomainError(f"vertex {i} out of range 1..{t.n}")
    closing: list[tuple[int, int]] = []
    opening: list[tuple[int, int]] = []
    for r, c in _reading_positions(t):
        x = t.rows[r][c]
        if x == i:
            opening.append((r, c))
        elif x == i + 1:
            if opening:
                opening.pop()
            else:
                closing.append((r, c))
    return closing, opening


def epsilon_tab(t: Tableau, i: int) -> int:
    return len(_signature(t, i)[0])


def phi_tab(t: Tableau, i: int) -> int:
    return len(_signature(t, i)[1])


def f_tab(t: Tableau, i: int) -> Tableau | None:
    _, opening = _signature(t, i)
    if not opening:
        return None
    r, c = opening[0]
    return t.replace(r, c, i + 1)


def e_tab(t: Tableau, i: int) -> Tableau | None:
    closing, _ = _signature(t, i)
    if not closing:
        return None
    r, c = closing[-1]
    return t.replace(r, c, i)


def enumerate_ssyt(shape: Partition, n: int) -> list[Tableau]:
    """
    All semistandard tableaux of the shape with entries <= n+1, in
    lexicographic order of their rows.
    """
    shape = _check_shape(shape, n)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(Tableau(n, tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        # the rest of the column below needs room too
        high = n + 1 - (sum(1 for x in shape if x > c) - 1 - r)
        for x in range(low, high + 1):
            grid[r][c] = x
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return out


def kostka(shape: Partition, mu) -> int:
    """
    Number of semistandard tableaux of the shape with content mu.

    Peels off the largest entry as a horizontal strip of size mu[-1].

    Raises:
        DomainError: If |mu| != |shape| or mu has a negative part.
    """
    shape = check_partition(shape)
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise DomainError(f"content {mu} has a negative part")
    if sum(mu) != sum(shape):
        raise DomainError(f"|mu| = {sum(mu)} differs from |shape| = {sum(shape)}")
    return _kostka(shape, mu)


def _kostka(shape: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not shape else 0
    if len(shape) > len(mu):
        return 0
    last = mu[-1]
    total = 0
    for inner in _strip_removals(shape, last):
        total += _kostka(inner, mu[:-1])
    return total


def _strip_removals(shape: Partition, size: int) -> list[Partition]:
    """Partitions inner with shape/inner a horizontal strip of the given size."""
    out = []
    rows = list(shape)

    def walk(r: int, left: int, acc: list[int]) -> None:
        if r == len(rows):
            if left == 0:
                out.append(check_partition(acc))
            return
        floor = rows[r + 1] if r + 1 < len(rows) else 0
        for take in range(0, min(left, rows[r] - floor) + 1):
            walk(r + 1, left - take, acc + [rows[r] - take])

    walk(0, size, [])
    return out


def tableau_element(d: RootDatum, t: Tableau) -> CrystalNode:
    wt = weight_tab(d, t)
    eps = tuple(epsilon_tab(t, i) for i in range(1, d.n + 1))
    phi = tuple(phi_tab(t, i) for i in range(1, d.n + 1))
    for i in range(1, d.n + 1):
        if phi[i - 1] - eps[i - 1] != pairing(d, i, wt):
            raise DomainError(f"{t} is not semistandard; its signature disagrees with its weight")
    return CrystalNode(key=t.key(), payload=t, wt=wt, eps=eps, phi=phi)


def generate_tableau_graph(d: RootDatum, shape: Partition, jobs: int = 1) -> CrystalGraph:
    """The crystal graph of B(lambda) on tableaux, rooted at the highest weight tableau."""
    root = highest_weight_tableau(shape, d.n)

    def successors(t: Tableau) -> list[tuple[int, Tableau]]:
        out = []
        for i in range(1, d.n + 1):
            nxt = f_tab(t, i)
            if nxt is not None:
                out.append((i, nxt))
        return out

    return build_graph(
        d=d,
        root=root,
        successors=successors,
        decorate=lambda t: tableau_element(d, t),
        jobs=jobs,
        header={"model": "tableau", "shape": list(root.shape)},
    )


def tableau_graph_for_weight(d: RootDatum, w: Weight, jobs: int = 1) -> CrystalGraph:
    return generate_tableau_graph(d, partition_of_weight(d, w), jobs=jobs)
