"""Window-scale stand-ins for ultrafilters on N.

Filters on N cannot be stored, so an oracle answers membership queries for
WindowSets with a tri-state Verdict and never turns "undecided at this
horizon" into a boolean.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Protocol, runtime_checkable

from .errors import InputFormatError
from .windows import FSGenerator, WindowSet, fs_set, shift_set

CACHE_SIZE = 1 << 16


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@runtime_checkable
class UltrafilterOracle(Protocol):
    def membership(self, A: WindowSet) -> Verdict: ...

    def pick(self, A: WindowSet) -> int | None: ...

    @property
    def principal_point(self) -> int | None: ...

    def window_gaps(self, A: WindowSet) -> frozenset[int]: ...


@lru_cache(maxsize=CACHE_SIZE)
def fsx_member(X: FSGenerator, A: WindowSet) -> Verdict:
    """Membership of A in the filter generated by the tails FS(X minus a prefix).

    Yes when some visible tail has all its windowed sums in A, No when every
    visible tail is refuted inside the window, Unknown when no generator fits
    in the window.
    """
    visible = [j for j, x in enumerate(X.elements) if x <= A.horizon]
    if not visible:
        return Verdict.UNKNOWN
    for j in visible:
        if fs_set(X.tail(j), A.horizon).members <= A.members:
            return Verdict.YES
    return Verdict.NO


@dataclass(frozen=True)
class ShiftPreimage:
    """A_V = {n : A - n in V} on a window; n is in `unknown` when V could not decide."""

    yes: WindowSet
    unknown: WindowSet

    @property
    def horizon(self) -> int:
        return self.yes.horizon

    @property
    def no(self) -> WindowSet:
        return WindowSet(self.horizon, frozenset(range(1, self.horizon + 1)) - self.yes.members - self.unknown.members)

    def verdict(self, n: int) -> Verdict:
        if n in self.yes:
            return Verdict.YES
        if n in self.unknown:
            return Verdict.UNKNOWN
        return Verdict.NO

    def lift(self, V: UltrafilterOracle) -> Verdict:
        """Whether A_V itself belongs to V, answered monotonically in the unknowns."""
        if V.membership(self.yes) is Verdict.YES:
            return Verdict.YES
        if V.membership(self.yes | self.unknown) is Verdict.NO:
            return Verdict.NO
        return Verdict.UNKNOWN

    def to_dict(self) -> dict:
        return {"horizon": self.horizon, "yes": self.yes.sorted(), "unknown": self.unknown.sorted()}


def shift_preimage_window(A: WindowSet, V: UltrafilterOracle) -> ShiftPreimage:
    """A_V on the window of A.

    A - n only has horizon - n to show itself in, so a No at a position from
    V.window_gaps(A) is reported as Unknown.  At window scale this keeps
    membership(A) = Yes  =>  lift(V) != No.
    """
    gaps = V.window_gaps(A)
    yes: set[int] = set()
    unknown: set[int] = {A.horizon}
    for n in range(1, A.horizon):
        verdict = V.membership(shift_set(A, n))
        if verdict is Verdict.YES:
            yes.add(n)
        elif verdict is Verdict.UNKNOWN or n in gaps:
            unknown.add(n)
    return ShiftPreimage(WindowSet(A.horizon, frozenset(yes)), WindowSet(A.horizon, frozenset(unknown)))


@dataclass(frozen=True)
class FSOracle:
    """The additive filter FS_X; picks the least finite sum of X in the argument."""

    X: FSGenerator

    def membership(self, A: WindowSet) -> Verdict:
        return fsx_member(self.X, A)

    def pick(self, A: WindowSet) -> int | None:
        hits = A.members & fs_set(self.X, A.horizon).members
        return min(hits) if hits else None

    @property
    def principal_point(self) -> int | None:
        return None

    def window_gaps(self, A: WindowSet) -> frozenset[int]:
        """Windowed sums of the first tail of X inside A.

        For such n, A - n holds every windowed sum of the generators after n,
        so a No on A - n only means those generators no longer fit.
        """
        for j, x in enumerate(self.X.elements):
            if x > A.horizon:
                break
            tail = fs_set(self.X.tail(j), A.horizon).members
            if tail <= A.members:
                return frozenset(n for n in tail if n < A.horizon)
        return frozenset()


@dataclass(frozen=True)
class PrincipalOracle:
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InputFormatError(f"principal generator must be >= 1, got {self.m}")

    def membership(self, A: WindowSet) -> Verdict:
        if self.m > A.horizon:
            return Verdict.UNKNOWN
        return Verdict.YES if self.m in A else Verdict.NO

    def pick(self, A: WindowSet) -> int | None:
        return self.m if self.m in A else None

    @property
    def principal_point(self) -> int | None:
        return self.m

    def window_gaps(self, A: WindowSet) -> frozenset[int]:
        return frozenset()


@lru_cache(maxsize=CACHE_SIZE)
def _sum_membership(V: UltrafilterOracle, W: UltrafilterOracle, A: WindowSet) -> Verdict:
    return shift_preimage_window(A, W).lift(V)


@dataclass(frozen=True)
class SumOracle:
    """V + W: A belongs iff A_W belongs to V."""

    V: UltrafilterOracle
    W: UltrafilterOracle

    def membership(self, A: WindowSet) -> Verdict:
        return _sum_membership(self.V, self.W, A)

    def pick(self, A: WindowSet) -> int | None:
        x = self.V.pick(shift_preimage_window(A, self.W).yes)
        if x is None or x >= A.horizon:
            return None
        y = self.W.pick(shift_set(A, x))
        return None if y is None else x + y

    @property
    def principal_point(self) -> int | None:
        a, b = self.V.principal_point, self.W.principal_point
        return None if a is None or b is None else a + b

    def window_gaps(self, A: WindowSet) -> frozenset[int]:
        return frozenset()


def oracle_powers(V: UltrafilterOracle, k: int) -> list[UltrafilterOracle]:
    """[V, V+V, ..., V^(k-1)]."""
    if k < 1:
        raise InputFormatError(f"k must be >= 1, got {k}")
    powers: list[UltrafilterOracle] = []
    for _ in range(k - 1):
        powers.append(V if not powers else SumOracle(powers[-1], V))
    return powers


def fsx_shift_preimage(A: WindowSet, X: FSGenerator, horizon: int | None = None) -> ShiftPreimage:
    window = A if horizon is None else A.restrict(horizon)
    return shift_preimage_window(window, FSOracle(X))
