from dataclasses import dataclass, field

import numpy as np

from app.types.errors import DomainError
from app.types.quivers import DoubleQuiver

DimVector = tuple[int, ...]


def check_dims(dims) -> DimVector:
    dims = tuple(int(x) for x in dims)
    if any(x < 0 for x in dims):
        raise DomainError(f"graded dimension {dims} has a negative entry")
    return dims


@dataclass(frozen=True, eq=False)
class RepPoint:
    """
    A point x of E_V: one exact matrix per arrow.

    maps may hold every arrow of the double quiver, or only the omega arrows
    (a point of E_{V,Omega}). Each matrix has shape dims[dst] x dims[src].
    """
    double: DoubleQuiver
    dims: DimVector
    maps: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "dims", check_dims(self.dims))
        if len(self.dims) != self.double.n:
            raise DomainError(f"dims {self.dims} do not match a quiver on {self.double.n} vertices")
        known = {a.id for a in self.double.quiver.arrows}
        for arrow_id, m in self.maps.items():
            if arrow_id not in known:
                raise DomainError(f"unknown arrow {arrow_id!r}")
            a = self.double.quiver.arrow(arrow_id)
            want = (self.dims[a.dst - 1], self.dims[a.src - 1])
            if m.shape != want:
                raise DomainError(f"map {arrow_id} has shape {m.shape}, expected {want}")
        if not self.double.omega <= set(self.maps):
            raise DomainError("a point needs at least the omega maps")

    @property
    def is_double(self) -> bool:
        return len(self.maps) == len(self.double.quiver.arrows)

    def dim(self, i: int) -> int:
        return self.dims[i - 1]

    def arrow_ids(self) -> list[str]:
        return [a.id for a in self.double.quiver.arrows if a.id in self.maps]


@dataclass(frozen=True, eq=False)
class FramedPoint:
    """A point (x, t) of Lambda(v) x sum_i Hom(V_i, W_i)."""
    rep: RepPoint
    wdims: DimVector
    framing: dict[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "wdims", check_dims(self.wdims))
        if len(self.wdims) != len(self.rep.dims):
            raise DomainError("wdims and dims have different lengths")
        for i in range(1, len(self.wdims) + 1):
            t = self.framing.get(i)
            want = (self.wdims[i - 1], self.rep.dims[i - 1])
            if t is None:
                raise DomainError(f"missing framing map t_{i}")
            if t.shape != want:
                raise DomainError(f"framing t_{i} has shape {t.shape}, expected {want}")
