from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from app.types.weights import Weight


class CrystalEngine(str, Enum):
    GEOMETRIC = "geometric"
    FAST = "fast"


class OutputFormat(str, Enum):
    JSON = "json"
    DOT = "dot"


@dataclass(frozen=True)
class CrystalNode:
    """
    One vertex of a crystal graph.

    Attributes:
        key: Canonical string id (multisegment key or tableau rows).
        payload: The model element (Multisegment or Tableau).
        wt: Weight in the fundamental-weight basis.
        eps: epsilon_i for i = 1..n.
        phi: phi_i for i = 1..n.
    """
    key: str
    payload: Any = field(compare=False)
    wt: Weight
    eps: tuple[int, ...]
    phi: tuple[int, ...]


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    matching: dict[str, str]
    reason: str = ""
