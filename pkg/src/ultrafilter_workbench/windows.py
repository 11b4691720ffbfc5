"""Finite windows [1, horizon] of N standing in for infinite sets, and FS/FU sets on them."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InputFormatError, MathPreconditionError, NonDisjointBlocksError, ShiftOutOfWindowError


@dataclass(frozen=True)
class WindowSet:
    horizon: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise InputFormatError(f"horizon must be >= 1, got {self.horizon}")
        bad = sorted(m for m in self.members if not 1 <= m <= self.horizon)
        if bad:
            raise InputFormatError(f"members {bad[:5]} outside [1, {self.horizon}]")

    @classmethod
    def of(cls, horizon: int, members: Iterable[int]) -> "WindowSet":
        return cls(horizon, frozenset(int(m) for m in members))

    @classmethod
    def clipped(cls, horizon: int, members: Iterable[int]) -> "WindowSet":
        """Drop members beyond the horizon instead of rejecting them."""
        return cls(horizon, frozenset(int(m) for m in members if 1 <= m <= horizon))

    @classmethod
    def interval(cls, horizon: int) -> "WindowSet":
        return cls(horizon, frozenset(range(1, horizon + 1)))

    @classmethod
    def empty(cls, horizon: int) -> "WindowSet":
        return cls(horizon, frozenset())

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, m: object) -> bool:
        return m in self.members

    def __and__(self, other: "WindowSet") -> "WindowSet":
        h = min(self.horizon, other.horizon)
        return WindowSet(h, frozenset(m for m in self.members & other.members if m <= h))

    def __or__(self, other: "WindowSet") -> "WindowSet":
        h = min(self.horizon, other.horizon)
        return WindowSet(h, frozenset(m for m in self.members | other.members if m <= h))

    def restrict(self, horizon: int) -> "WindowSet":
        h = min(horizon, self.horizon)
        return WindowSet(h, frozenset(m for m in self.members if m <= h))

    def complement(self) -> "WindowSet":
        return WindowSet(self.horizon, frozenset(range(1, self.horizon + 1)) - self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def to_dict(self) -> dict:
        return {"horizon": self.horizon, "members": self.sorted()}


@dataclass(frozen=True)
class FSGenerator:
    """Initial segment x_1 < ... < x_m of an infinite X.

    Unlisted elements of X are taken to exceed every horizon the generator is
    queried against.
    """

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 1 for x in self.elements):
            raise InputFormatError(f"generators must be positive: {list(self.elements)}")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise InputFormatError(f"generators must be strictly increasing: {list(self.elements)}")

    @classmethod
    def of(cls, elements: Iterable[int]) -> "FSGenerator":
        return cls(tuple(int(x) for x in elements))

    def tail(self, j: int) -> "FSGenerator":
        return FSGenerator(self.elements[j:])

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FSWitness:
    elements: tuple[int, ...]
    target: WindowSet

    def __post_init__(self) -> None:
        if not self.elements or any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise MathPreconditionError(f"witness elements must be strictly increasing: {list(self.elements)}")
        missing = sorted({s for s in subset_sums(self.elements) if s not in self.target.members})
        if missing:
            raise MathPreconditionError(f"FS({list(self.elements)}) escapes the target at {missing[:5]}")

    @property
    def sums_checked(self) -> int:
        return (1 << len(self.elements)) - 1

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "sums_checked": self.sums_checked}


def subset_sums(elements: Sequence[int]) -> list[int]:
    """All 2^k - 1 nonempty-subset sums, with repetitions."""
    sums: list[int] = []
    for x in elements:
        sums += [s + x for s in sums] + [x]
    return sums


def fs_set(X: FSGenerator | Sequence[int], horizon: int) -> WindowSet:
    elements = X.elements if isinstance(X, FSGenerator) else tuple(X)
    sums: set[int] = set()
    for x in elements:
        if x > horizon:
            continue
        sums |= {s + x for s in sums if s + x <= horizon}
        sums.add(x)
    return WindowSet(horizon, frozenset(sums))


def fu_set(blocks: Sequence[Iterable[int]], index_horizon: int | None = None) -> list[frozenset[int]]:
    """Unions of nonempty subfamilies of pairwise disjoint blocks, within [0, index_horizon]."""
    family = [frozenset(b) for b in blocks]
    for (i, a), (j, b) in combinations(enumerate(family), 2):
        if a & b:
            raise NonDisjointBlocksError(f"blocks {i} and {j} share {sorted(a & b)}")
    if index_horizon is not None:
        family = [b for b in family if not b or max(b) <= index_horizon]
    unions: set[frozenset[int]] = set()
    for b in family:
        unions |= {u | b for u in unions}
        unions.add(b)
    return sorted(unions, key=lambda u: (len(u), sorted(u)))


def psi_encode(exponents: Iterable[int]) -> int:
    return sum(1 << i for i in set(exponents))


def psi_decode(n: int) -> frozenset[int]:
    if n < 0:
        raise InputFormatError(f"psi codes are nonnegative, got {n}")
    return frozenset(i for i in range(n.bit_length()) if (n >> i) & 1)


def fu_to_fs(blocks: Sequence[Iterable[int]], horizon: int) -> WindowSet:
    """Image of FU(blocks) under psi, clipped to the window."""
    return WindowSet.clipped(horizon, (psi_encode(u) for u in fu_set(blocks)))


def fs_to_fu(A: WindowSet) -> list[frozenset[int]]:
    """Exponent sets of the members of A."""
    return [psi_decode(m) for m in A]


def shift_set(A: WindowSet, n: int) -> WindowSet:
    """A - n = {m : m + n in A}, on the window [1, horizon - n]."""
    if n < 0:
        raise InputFormatError(f"shift must be >= 0, got {n}")
    if n == 0:
        return A
    if n >= A.horizon:
        raise ShiftOutOfWindowError(f"shift {n} leaves nothing of the window [1, {A.horizon}]")
    return WindowSet(A.horizon - n, frozenset(m - n for m in A.members if m > n))


def _extend(candidates: frozenset[int], chosen: tuple[int, ...], k: int, horizon: int) -> tuple[int, ...] | None:
    # every y in candidates satisfies y + s in A for s in FS(chosen) and s = 0
    if len(chosen) == k:
        return chosen
    need = k - len(chosen)
    total = sum(chosen)
    for x in sorted(candidates):
        if total + need * x + need * (need - 1) // 2 > horizon:
            break
        found = _branch(candidates, chosen, x, k, horizon)
        if found is not None:
            return found
    return None


def _branch(candidates: frozenset[int], chosen: tuple[int, ...], x: int, k: int, horizon: int) -> tuple[int, ...] | None:
    need = k - len(chosen) - 1
    nxt = frozenset(y for y in candidates if y > x and y + x in candidates)
    if len(nxt) < need:
        return None
    return _extend(nxt, chosen + (x,), k, horizon)


def _branch_task(args: tuple[frozenset[int], int, int, int]) -> tuple[int, ...] | None:
    candidates, x, k, horizon = args
    return _branch(candidates, (), x, k, horizon)


def fal_level(A: WindowSet, k: int, workers: int = 1) -> FSWitness | None:
    """Lexicographically least x_1 < ... < x_k with FS({x_i}) inside A, or None."""
    if k < 1:
        raise InputFormatError(f"k must be >= 1, got {k}")
    if workers <= 1:
        found = _extend(A.members, (), k, A.horizon)
    else:
        bound = A.horizon - k * (k - 1) // 2
        roots = [x for x in sorted(A.members) if k * x <= bound]
        found = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_branch_task, [(A.members, x, k, A.horizon) for x in roots]):
                if result is not None:
                    found = result
                    break
    return FSWitness(found, A) if found is not None else None
