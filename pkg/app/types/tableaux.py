from dataclasses import dataclass

from app.types.errors import DomainError

Partition = tuple[int, ...]


def check_partition(shape) -> Partition:
    shape = tuple(int(x) for x in shape)
    if any(x < 0 for x in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise DomainError(f"{shape} is not a partition")
    while shape and shape[-1] == 0:
        shape = shape[:-1]
    return shape


@dataclass(frozen=True)
class Tableau:
    """
    A filling of a Young diagram with entries in 1..n+1.

    Semistandardness is not enforced here; see tableau.is_semistandard.
    """
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        check_partition(len(r) for r in rows)
        if any(not r for r in rows):
            raise DomainError("tableau rows must be non-empty")
        for row in rows:
            for x in row:
                if not 1 <= x <= self.n + 1:
                    raise DomainError(f"entry {x} outside 1..{self.n + 1}")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(row[c] for row in self.rows if c < len(row))

    def content(self) -> tuple[int, ...]:
        counts = [0] * (self.n + 1)
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def replace(self, r: int, c: int, value: int) -> "Tableau":
        rows = [list(row) for row in self.rows]
        rows[r][c] = value
        return Tableau(self.n, tuple(tuple(row) for row in rows))

    def key(self) -> str:
        sep = "," if self.n + 1 >= 10 else ""
        return "(" + "/".join(sep.join(str(x) for x in row) for row in self.rows) + ")"

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return self.key()
