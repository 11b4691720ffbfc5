from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .config import EXHAUSTIVE_SUBSET_LIMIT
from .errors import GroundMismatchError, InputFormatError, NonAssociativeError, OutOfRangeError


@dataclass(frozen=True)
class FiniteSemigroup:
    """Elements are dense indices 0..order-1; table[a][b] is a*b."""

    order: int
    table: tuple[tuple[int, ...], ...]
    label: str | None = None

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)

    def subset(self, members: Iterable[int]) -> "ElementSet":
        return ElementSet.of(self, members)

    def full(self) -> "ElementSet":
        return ElementSet(self, frozenset(range(self.order)))

    def to_dict(self) -> dict:
        data: dict[str, object] = {"n": self.order, "table": [list(row) for row in self.table]}
        if self.label is not None:
            data["label"] = self.label
        return data


@dataclass(frozen=True)
class ElementSet:
    ground: FiniteSemigroup
    members: frozenset[int]

    @classmethod
    def of(cls, ground: FiniteSemigroup, members: Iterable[int]) -> "ElementSet":
        frozen = frozenset(int(m) for m in members)
        bad = sorted(m for m in frozen if not 0 <= m < ground.order)
        if bad:
            raise OutOfRangeError(f"elements {bad} outside [0, {ground.order})")
        return cls(ground, frozen)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __le__(self, other: "ElementSet") -> bool:
        check_same_ground(self.ground, other.ground)
        return self.members <= other.members

    def __and__(self, other: "ElementSet") -> "ElementSet":
        check_same_ground(self.ground, other.ground)
        return ElementSet(self.ground, self.members & other.members)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        check_same_ground(self.ground, other.ground)
        return ElementSet(self.ground, self.members | other.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def to_mask(self) -> int:
        mask = 0
        for m in self.members:
            mask |= 1 << m
        return mask


def check_same_ground(a: FiniteSemigroup, b: FiniteSemigroup) -> None:
    if a is not b and a != b:
        raise GroundMismatchError(f"sets live on different semigroups ({a.label or a.order} vs {b.label or b.order})")


def validate(table: Sequence[Sequence[int]], label: str | None = None) -> FiniteSemigroup:
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise InputFormatError("table must have at least one row")
    if any(len(r) != n for r in rows):
        raise InputFormatError(f"table must be square; got {n} rows of lengths {[len(r) for r in rows]}")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise InputFormatError(f"table entries must be integers; table[{i}][{j}] = {v!r}")
    arr = np.asarray(rows, dtype=np.int64)
    out = np.argwhere((arr < 0) | (arr >= n))
    if len(out):
        i, j = (int(v) for v in out[0])
        raise OutOfRangeError(f"entry table[{i}][{j}] = {rows[i][j]} outside [0, {n})")
    # left[a, b, c] = (a*b)*c, right[a, b, c] = a*(b*c)
    left = arr[arr]
    right = arr[:, arr]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise NonAssociativeError(a, b, c)
    return FiniteSemigroup(order=n, table=tuple(tuple(int(v) for v in r) for r in rows), label=label)


def from_table(table: Sequence[Sequence[int]], label: str | None = None) -> FiniteSemigroup:
    return validate(table, label=label)


def product_set(S: FiniteSemigroup, A: ElementSet, B: ElementSet) -> ElementSet:
    check_same_ground(S, A.ground)
    check_same_ground(S, B.ground)
    if not A.members or not B.members:
        return ElementSet(S, frozenset())
    rows = np.fromiter(A.members, dtype=np.int64)
    cols = np.fromiter(B.members, dtype=np.int64)
    values = S.array[np.ix_(rows, cols)]
    return ElementSet(S, frozenset(int(v) for v in np.unique(values)))


def idempotents(S: FiniteSemigroup) -> ElementSet:
    diag = S.array[np.arange(S.order), np.arange(S.order)]
    return ElementSet(S, frozenset(int(e) for e in np.flatnonzero(diag == np.arange(S.order))))


def power_idempotent(S: FiniteSemigroup, x: int) -> int:
    if not 0 <= x < S.order:
        raise OutOfRangeError(f"element {x} outside [0, {S.order})")
    seen: dict[int, int] = {}
    powers: list[int] = []
    p = x
    while p not in seen:
        seen[p] = len(powers)
        powers.append(p)
        p = S.mul(p, x)
    for e in powers[seen[p]:]:
        if S.mul(e, e) == e:
            return e
    raise AssertionError(f"cyclic subsemigroup of {x} has no idempotent; table is not associative")


def is_subsemigroup(S: FiniteSemigroup, B: ElementSet) -> bool:
    if not B.members:
        return False
    return product_set(S, B, B) <= B


def _closed_mask(table: tuple[tuple[int, ...], ...], mask: int, bits: list[int]) -> bool:
    for a in bits:
        row = table[a]
        for b in bits:
            if not (mask >> row[b]) & 1:
                return False
    return True


def minimal_subsemigroups(S: FiniteSemigroup) -> list[ElementSet]:
    if S.order > EXHAUSTIVE_SUBSET_LIMIT:
        return [ElementSet(S, frozenset({e})) for e in idempotents(S)]
    n = S.order
    closed: list[int] = []
    for mask in range(1, 1 << n):
        bits = [i for i in range(n) if (mask >> i) & 1]
        if _closed_mask(S.table, mask, bits):
            closed.append(mask)
    closed.sort(key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for mask in closed:
        if not any(m & mask == m for m in minimal):
            minimal.append(mask)
    return [ElementSet(S, frozenset(i for i in range(n) if (m >> i) & 1)) for m in sorted(minimal)]


def all_subsets(S: FiniteSemigroup, nonempty: bool = True) -> Iterator[ElementSet]:
    start = 1 if nonempty else 0
    for mask in range(start, 1 << S.order):
        yield ElementSet(S, frozenset(i for i in range(S.order) if (mask >> i) & 1))


def _build(n: int, op: Callable[[int, int], int], label: str) -> FiniteSemigroup:
    return validate([[op(a, b) for b in range(n)] for a in range(n)], label=label)


def cyclic_mod(n: int) -> FiniteSemigroup:
    return _build(n, lambda a, b: (a + b) % n, f"Z{n}")


def left_zero(n: int) -> FiniteSemigroup:
    return _build(n, lambda a, b: a, f"LZ{n}")


def right_zero(n: int) -> FiniteSemigroup:
    return _build(n, lambda a, b: b, f"RZ{n}")


def meet_semilattice() -> FiniteSemigroup:
    return validate([[0, 0], [0, 1]], label="meet2")


def transformation_monoid(k: int) -> FiniteSemigroup:
    """Full transformation monoid on k points; f*g applies f first, then g."""
    if not 1 <= k <= 3:
        raise InputFormatError(f"transformation_monoid supports 1 <= k <= 3, got {k}")
    maps = list(product(range(k), repeat=k))
    index = {m: i for i, m in enumerate(maps)}

    def compose(a: int, b: int) -> int:
        f, g = maps[a], maps[b]
        return index[tuple(g[f[x]] for x in range(k))]

    return _build(len(maps), compose, f"T{k}")


CURATED: dict[str, Callable[[], FiniteSemigroup]] = {
    "Z4": lambda: cyclic_mod(4),
    "Z5": lambda: cyclic_mod(5),
    "Z6": lambda: cyclic_mod(6),
    "LZ4": lambda: left_zero(4),
    "RZ4": lambda: right_zero(4),
    "T2": lambda: transformation_monoid(2),
    "meet2": meet_semilattice,
}


def curated(names: Sequence[str] | None = None) -> list[FiniteSemigroup]:
    keys = list(names) if names else list(CURATED)
    unknown = [k for k in keys if k not in CURATED]
    if unknown:
        raise InputFormatError(f"unknown curated semigroups {unknown}; choose from {sorted(CURATED)}")
    return [CURATED[k]() for k in keys]
