from dataclasses import dataclass

from app.types.errors import DomainError


@dataclass(frozen=True)
class RootDatum:
    """
    Rank and symmetric Cartan matrix; only type A_n is instantiated.

    Attributes:
        n: Rank; the algebra is sl_{n+1}.
        cartan: n x n symmetric integer matrix with 2 on the diagonal.
    """
    n: int
    cartan: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"rank must be positive, got {self.n}")
        if len(self.cartan) != self.n or any(len(row) != self.n for row in self.cartan):
            raise DomainError("Cartan matrix must be n x n")
        for i in range(self.n):
            if self.cartan[i][i] != 2:
                raise DomainError("Cartan matrix needs 2 on the diagonal")
            for j in range(self.n):
                if self.cartan[i][j] != self.cartan[j][i]:
                    raise DomainError("Cartan matrix must be symmetric")

    @classmethod
    def type_a(cls, n: int) -> "RootDatum":
        if n < 1:
            raise DomainError(f"rank must be positive, got {n}")
        cartan = tuple(
            tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
            for i in range(n)
        )
        return cls(n=n, cartan=cartan)

    @property
    def is_type_a(self) -> bool:
        return self == RootDatum.type_a(self.n)

    @property
    def label(self) -> str:
        return f"A{self.n}"

    def check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise DomainError(f"vertex {i} out of range 1..{self.n}")


@dataclass(frozen=True)
class Weight:
    """Integer vector in the fundamental-weight basis."""
    coords: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def _check_same(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise DomainError("weights of different rank")

    @property
    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coords)

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n)

    def to_json(self) -> list[int]:
        return list(self.coords)
