"""
Bracket-cancellation rule for the multisegment crystal.

At vertex i every segment that f_i could extend writes an opening symbol
and every segment that e_i could shrink writes a closing one. After "()"
pairs cancel, epsilon_i counts the closing symbols left; f_i extends the
leftmost surviving opener (or adds [i,i]) and e_i shrinks the rightmost
surviving closer.

Which end of a segment moves, and how symbols are ordered, is a convention.
calibrate_fast_rule tries every convention in CONVENTIONS against the
geometric engine and keeps the first that agrees everywhere on the
exhaustive calibration set (n <= 3, sum(v) <= 6); the winner must then
pass SPOT_CHECKS random comparisons at sum(v) <= SPOT_TOTAL. The fast
engine refuses to run until this has passed.
"""

import threading
from dataclasses import dataclass
from enum import Enum

from app.observability.events import emit
from app.policies.genericity import GenericitySampler
from app.types.errors import CalibrationError, DomainError
from app.types.segments import Multisegment, Segment

QUICK_CALIBRATION = (3, 4)
FULL_CALIBRATION = (3, 6)
SPOT_CHECKS = 500
SPOT_TOTAL = 8


class Anchor(str, Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class SignatureConvention:
    """
    Attributes:
        anchor: RIGHT moves right endpoints ([k,i-1] <-> [k,i]); LEFT moves
            left endpoints ([i+1,j] <-> [i,j]).
        ascending: Order symbols by their fixed endpoint ascending.
        closing_first: At equal fixed endpoint, write ")" before "(".
    """
    anchor: Anchor
    ascending: bool
    closing_first: bool

    def __str__(self) -> str:
        order = "asc" if self.ascending else "desc"
        tie = "close-first" if self.closing_first else "open-first"
        return f"{self.anchor.value}/{order}/{tie}"


CONVENTIONS = tuple(
    SignatureConvention(anchor, ascending, closing_first)
    for anchor in (Anchor.RIGHT, Anchor.LEFT)
    for ascending in (True, False)
    for closing_first in (True, False)
)
DEFAULT_CONVENTION = CONVENTIONS[0]

_active = DEFAULT_CONVENTION
_calibrated: tuple[int, int] = (0, 0)
_lock = threading.Lock()


def active_convention() -> SignatureConvention:
    return _active


def signature(m: Multisegment, i: int, conv: SignatureConvention | None = None
              ) -> tuple[list[Segment], list[Segment]]:
    """
    Reduced signature at vertex i.

    Returns:
        (closers, openers): the uncanceled ")" and "(" segments, each in
        word order. The reduced word is closers followed by openers.
    """
    conv = conv or _active
    if not 1 <= i <= m.n:
        raise DomainError(f"vertex {i} out of range 1..{m.n}")
    symbols = []
    for seg in m.segments:
        if conv.anchor is Anchor.RIGHT:
            fixed, closing, opening = seg.i, seg.j == i, seg.j == i - 1
        else:
            fixed, closing, opening = seg.j, seg.i == i, seg.i == i + 1
        if closing or opening:
            tie = 0 if closing == conv.closing_first else 1
            symbols.append(((fixed if conv.ascending else -fixed, tie), closing, seg))
    symbols.sort(key=lambda s: s[0])
    closers: list[Segment] = []
    openers: list[Segment] = []
    for _, closing, seg in symbols:
        if not closing:
            openers.append(seg)
        elif openers:
            openers.pop()
        else:
            closers.append(seg)
    return closers, openers


def epsilon_fast(m: Multisegment, i: int, conv: SignatureConvention | None = None) -> int:
    return len(signature(m, i, conv)[0])


def f_fast(m: Multisegment, i: int, conv: SignatureConvention | None = None) -> Multisegment:
    conv = conv or _active
    _, openers = signature(m, i, conv)
    if not openers:
        return m.add(Segment(i, i))
    seg = openers[0]
    if conv.anchor is Anchor.RIGHT:
        return m.replace(seg, Segment(seg.i, i))
    return m.replace(seg, Segment(i, seg.j))


def e_fast(m: Multisegment, i: int, conv: SignatureConvention | None = None) -> Multisegment | None:
    conv = conv or _active
    closers, _ = signature(m, i, conv)
    if not closers:
        return None
    seg = closers[-1]
    if seg.length == 1:
        return m.remove(seg)
    if conv.anchor is Anchor.RIGHT:
        return m.replace(seg, Segment(seg.i, i - 1))
    return m.replace(seg, Segment(i + 1, seg.j))


def _geometric_table(max_rank: int, total: int, sampler: GenericitySampler) -> list[tuple]:
    from app.crystals import binf

    table = []
    for n in range(1, max_rank + 1):
        for m in binf.multisegments_up_to(n, total):
            for i in range(1, n + 1):
                f = binf.f_geometric(m, i, sampler) if m.size < total else None
                table.append((m, i, binf.epsilon_component(m, i, sampler), f, binf.e_geometric(m, i, sampler)))
    return table


def _agrees(conv: SignatureConvention, table: list[tuple]) -> tuple | None:
    """First row of the table where conv disagrees, or None."""
    for m, i, eps, f, e in table:
        if epsilon_fast(m, i, conv) != eps or e_fast(m, i, conv) != e:
            return (m, i)
        if f is not None and f_fast(m, i, conv) != f:
            return (m, i)
    return None


def _spot_check(conv: SignatureConvention, sampler: GenericitySampler, max_rank: int,
                count: int, total: int) -> tuple | None:
    """
    f_fast against f_geometric on count random multisegments with
    sum(v) < total, and e_fast undoing f_fast on each. First miss or None.
    """
    from app.crystals import binf

    if count <= 0:
        return None
    rng = sampler.rng_for("spot-check", [max_rank, total, count])
    pools = {n: binf.multisegments_up_to(n, total - 1) for n in range(1, max_rank + 1)}
    for _ in range(count):
        n = int(rng.integers(1, max_rank + 1))
        m = pools[n][int(rng.integers(len(pools[n])))]
        i = int(rng.integers(1, n + 1))
        up = f_fast(m, i, conv)
        if up != binf.f_geometric(m, i, sampler) or e_fast(up, i, conv) != m:
            return (m, i)
    return None


def calibrate_fast_rule(sampler: GenericitySampler, max_rank: int = FULL_CALIBRATION[0],
                        total: int = FULL_CALIBRATION[1], spot_checks: int = SPOT_CHECKS,
                        spot_total: int = SPOT_TOTAL,
                        conventions: tuple[SignatureConvention, ...] = CONVENTIONS) -> SignatureConvention:
    """
    Pick the convention that reproduces the geometric engine on every
    multisegment with n <= max_rank and sum(v) <= total, then confirm it on
    spot_checks random multisegments with sum(v) <= spot_total.

    Raises:
        CalibrationError: If no convention agrees on the exhaustive table,
            or the chosen one misses a spot check.
    """
    global _active, _calibrated
    table = _geometric_table(max_rank, total, sampler)
    mismatches = {}
    for conv in conventions:
        miss = _agrees(conv, table)
        if miss is None:
            break
        mismatches[str(conv)] = f"{miss[0]} at vertex {miss[1]}"
    else:
        emit("CALIBRATION_RESULT", {"convention": None, "checked": len(table)})
        raise CalibrationError(f"no bracket convention matches the geometric crystal: {mismatches}")

    miss = _spot_check(conv, sampler, max_rank, spot_checks, spot_total)
    emit("CALIBRATION_RESULT", {
        "convention": str(conv),
        "checked": len(table),
        "spot_checks": spot_checks,
        "spot_miss": None if miss is None else f"{miss[0]} at vertex {miss[1]}",
    })
    if miss is not None:
        raise CalibrationError(f"{conv} disagrees with f_geometric on {miss[0]} at vertex {miss[1]}")
    with _lock:
        _active = conv
        _calibrated = (max(_calibrated[0], total), max(_calibrated[1], spot_checks))
    return conv


def ensure_calibrated(sampler: GenericitySampler, level: tuple[int, int] = FULL_CALIBRATION,
                      spot_checks: int = SPOT_CHECKS) -> SignatureConvention:
    """
    The active convention, calibrating first unless a calibration at this
    level with at least this many spot checks already passed. The fast
    engine goes through here before its first step.
    """
    if _calibrated[0] >= level[1] and _calibrated[1] >= spot_checks:
        return _active
    return calibrate_fast_rule(sampler, max_rank=level[0], total=level[1], spot_checks=spot_checks)


def calibrated_level() -> tuple[int, int]:
    """(sum(v) bound of the exhaustive table, spot checks) of the best passed calibration."""
    return _calibrated


def reset_calibration() -> None:
    global _active, _calibrated
    with _lock:
        _active = DEFAULT_CONVENTION
        _calibrated = (0, 0)
