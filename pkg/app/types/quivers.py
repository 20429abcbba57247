from dataclasses import dataclass, field

from app.types.errors import DomainError


@dataclass(frozen=True)
class Arrow:
    id: str
    src: int
    dst: int


@dataclass(frozen=True)
class Quiver:
    """
    A finite quiver (Q_0, Q_1, s, t).

    Loops are rejected unless allow_loops is set; the only looped quiver
    used here is the Jordan quiver, and only for path-algebra products.
    """
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    allow_loops: bool = field(default=False, compare=False)

    def __post_init__(self):
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise DomainError("arrow ids must be unique")
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("vertex ids must be unique")
        for a in self.arrows:
            if a.src not in self.vertices or a.dst not in self.vertices:
                raise DomainError(f"arrow {a.id} has an endpoint outside the vertex set")
            if a.src == a.dst and not self.allow_loops:
                raise DomainError(f"arrow {a.id} is a loop; quivers here are loop-free")

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise DomainError(f"unknown arrow {arrow_id!r}")

    def arrows_into(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.dst == i]

    def arrows_out_of(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == i]

    def has_path(self, path: "Path") -> bool:
        return path.start in self.vertices and all(a in self.arrows for a in path.arrows)

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.id, "src": a.src, "dst": a.dst} for a in self.arrows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Quiver":
        try:
            arrows = tuple(Arrow(str(a["id"]), int(a["src"]), int(a["dst"])) for a in data["arrows"])
            return cls(vertices=tuple(int(v) for v in data["vertices"]), arrows=arrows)
        except (KeyError, TypeError) as err:
            raise DomainError(f"malformed quiver JSON: {err}") from err


@dataclass(frozen=True)
class Path:
    """
    A path beta = a_l ... a_1, stored in application order (a_1 first).

    A path with no arrows is the trivial path e_start.
    """
    start: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        at = self.start
        for a in self.arrows:
            if a.src != at:
                raise DomainError(f"arrow {a.id} does not compose at vertex {at}")
            at = a.dst

    @property
    def source(self) -> int:
        return self.start

    @property
    def target(self) -> int:
        return self.arrows[-1].dst if self.arrows else self.start

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.start}"
        # written right to left, like a_l ... a_1
        return " ".join(a.id for a in reversed(self.arrows))


@dataclass(frozen=True)
class DoubleQuiver:
    """
    A double quiver with a chosen orientation.

    Attributes:
        quiver: All arrows a and abar.
        pairs: (a, abar) id pairs, one per Dynkin edge.
        omega: Ids of the orientation, exactly one arrow from each pair.
        orientation: "left" (a_k : k+1 -> k in omega) or "right".
    """
    quiver: Quiver
    pairs: tuple[tuple[str, str], ...]
    omega: frozenset[str]
    orientation: str = "left"

    def __post_init__(self):
        for a, b in self.pairs:
            x, y = self.quiver.arrow(a), self.quiver.arrow(b)
            if (x.src, x.dst) != (y.dst, y.src):
                raise DomainError(f"{a} and {b} are not opposite arrows")
            if (a in self.omega) == (b in self.omega):
                raise DomainError(f"omega must contain exactly one of {a}, {b}")

    @property
    def n(self) -> int:
        return len(self.quiver.vertices)

    def bar(self, arrow_id: str) -> str:
        for a, b in self.pairs:
            if arrow_id == a:
                return b
            if arrow_id == b:
                return a
        raise DomainError(f"unknown arrow {arrow_id!r}")

    def sign(self, arrow_id: str) -> int:
        self.bar(arrow_id)
        return 1 if arrow_id in self.omega else -1

    def omega_quiver(self) -> Quiver:
        return Quiver(
            vertices=self.quiver.vertices,
            arrows=tuple(a for a in self.quiver.arrows if a.id in self.omega),
        )
