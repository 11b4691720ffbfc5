"""Explicit constructions on N: an additive filter that is not idempotent, and a FAL set
that is not additively large.

Finite sets of exponents are coded by psi(F) = sum of 2^i over i in F.  For sets
of even exponents, psi(F) + psi(G) is again the code of an even set exactly
when F and G are disjoint, and then it codes F u G.  X collects the codes
psi(F u G) with F a nonempty finite subset of class 0 and G a nonempty finite
subset of class psi(F).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple

from .config import get_logger
from .errors import InputFormatError, NotClassZeroError, NotEvenExponentsError, OddInputError, VacuousWindowError
from .windows import WindowSet, fs_set, psi_decode, psi_encode, shift_set

logger = get_logger("gallery")

__all__ = [
    "EvenPartition",
    "GALLERY_PARTITION",
    "StarCheck",
    "XCode",
    "NoTripleReport",
    "ShiftWitnessReport",
    "psi_encode",
    "psi_decode",
    "star_check",
    "even_class",
    "x_codes",
    "build_X",
    "verify_no_sum_triple",
    "verify_shift_witness",
    "smallest_class_zero_sets",
    "fal_not_al_example",
    "dyadic_blocks",
    "block_of",
]


class StarCheck(NamedTuple):
    sum_is_code: bool
    disjoint: bool
    union_matches: bool

    @property
    def holds(self) -> bool:
        """The sum codes an even set exactly when F, G are disjoint, and then it codes F u G."""
        return self.sum_is_code == self.disjoint and (not self.disjoint or self.union_matches)


def _require_even(name: str, exponents: Iterable[int]) -> frozenset[int]:
    values = frozenset(exponents)
    bad = sorted(e for e in values if e < 2 or e % 2)
    if bad:
        raise NotEvenExponentsError(f"{name} has non-even exponents {bad}")
    return values


def star_check(F: Iterable[int], G: Iterable[int]) -> StarCheck:
    Fs, Gs = _require_even("F", F), _require_even("G", G)
    H = psi_decode(psi_encode(Fs) + psi_encode(Gs))
    sum_is_code = all(e >= 2 and e % 2 == 0 for e in H)
    return StarCheck(sum_is_code, not (Fs & Gs), H == Fs | Gs)


def even_class(e: int) -> int:
    """Class of e = 2t is the 2-adic valuation of t."""
    if e < 2 or e % 2:
        raise OddInputError(f"even_class needs an even number >= 2, got {e}")
    t = e // 2
    return (t & -t).bit_length() - 1


@dataclass(frozen=True)
class EvenPartition:
    """Partition of {2, 4, 6, ...} into infinitely many infinite classes.

    The valuation rule decides every even not listed in `overrides`; finitely
    many overrides keep every class infinite.
    """

    overrides: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for e, n in self.overrides:
            if e < 2 or e % 2:
                raise OddInputError(f"override {e} is not an even number >= 2")
            if n < 0:
                raise InputFormatError(f"class index must be >= 0, got {n}")
            if e in seen:
                raise InputFormatError(f"even {e} assigned twice")
            seen.add(e)

    @classmethod
    def seeded(cls, classes: Mapping[int, Iterable[int]]) -> "EvenPartition":
        pairs = [(e, n) for n, evens in classes.items() for e in evens]
        return cls(tuple(sorted(pairs)))

    def class_of(self, e: int) -> int:
        for even, n in self.overrides:
            if even == e:
                return n
        return even_class(e)

    def members(self, n: int, bound: int) -> list[int]:
        """Evens <= bound in class n."""
        return [e for e in range(2, bound + 1, 2) if self.class_of(e) == n]

    def to_dict(self) -> dict:
        return {"rule": "2-adic valuation of e/2", "overrides": {str(e): n for e, n in self.overrides}}


# the valuation classes start at 2^(n+1), beyond any useful window once n >= 4
GALLERY_PARTITION = EvenPartition.seeded({4: (4, 8), 64: (12, 16), 68: (14,)})


def _nonempty_subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    for size in range(1, len(items) + 1):
        yield from combinations(items, size)


class XCode(NamedTuple):
    F: tuple[int, ...]
    G: tuple[int, ...]
    value: int


def x_codes(horizon: int, partition: EvenPartition = GALLERY_PARTITION) -> list[XCode]:
    """Members of X up to the horizon, ordered by (largest exponent, psi(F))."""
    if horizon < 4:
        raise InputFormatError(f"horizon must be >= 4, got {horizon}")
    max_exp = horizon.bit_length() - 1
    zero = partition.members(0, max_exp)
    found: list[XCode] = []
    for F in _nonempty_subsets(zero):
        code_F = psi_encode(F)
        if code_F >= horizon:
            continue
        for G in _nonempty_subsets(partition.members(code_F, max_exp)):
            value = code_F + psi_encode(G)
            if value <= horizon:
                found.append(XCode(F, G, value))
    found.sort(key=lambda c: (max(c.F + c.G), psi_encode(c.F), c.value))
    logger.debug(f"[build-x] horizon={horizon} class0={zero} codes={len(found)}")
    return found


def build_X(horizon: int, partition: EvenPartition = GALLERY_PARTITION) -> WindowSet:
    return WindowSet.of(horizon, (c.value for c in x_codes(horizon, partition)))


@dataclass
class NoTripleReport:
    no_triple: bool
    pairs_checked: int
    pairs_beyond_horizon: int
    counterexample: tuple[int, int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "no_triple": self.no_triple,
            "pairs_checked": self.pairs_checked,
            "pairs_beyond_horizon": self.pairs_beyond_horizon,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def verify_no_sum_triple(X: WindowSet) -> NoTripleReport:
    """Scan a < b in X for a + b in X; pairs with a + b past the horizon are only counted."""
    members = X.sorted()
    checked = beyond = 0
    counterexample: tuple[int, int, int] | None = None
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a + b > X.horizon:
                beyond += 1
                continue
            checked += 1
            if counterexample is None and a + b in X.members:
                counterexample = (a, b, a + b)
    return NoTripleReport(counterexample is None, checked, beyond, counterexample)


@dataclass
class ShiftWitnessReport:
    F0: list[int]
    shift: int
    witness_class: int
    holds: bool
    codes_checked: int
    vacuous: bool
    missing: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "F0": self.F0,
            "shift": self.shift,
            "witness_class": self.witness_class,
            "holds": self.holds,
            "codes_checked": self.codes_checked,
            "vacuous": self.vacuous,
            "missing": self.missing,
        }


def verify_shift_witness(
    F0: Iterable[int],
    horizon: int,
    partition: EvenPartition = GALLERY_PARTITION,
    X: WindowSet | None = None,
) -> ShiftWitnessReport:
    """X - psi(F0) contains the windowed FS of the codes 2^b, b in class psi(F0)."""
    base = sorted(set(F0))
    if not base:
        raise NotClassZeroError("F0 must be nonempty")
    for e in base:
        if e < 2 or e % 2 or partition.class_of(e) != 0:
            raise NotClassZeroError(f"{e} is not in class 0")
    shift = psi_encode(base)
    if shift >= horizon:
        raise VacuousWindowError(f"psi(F0) = {shift} leaves no window below {horizon}")
    X = build_X(horizon, partition) if X is None else X
    shifted = shift_set(X, shift)
    exponents = partition.members(shift, (horizon - shift).bit_length() - 1)
    codes = fs_set([1 << b for b in exponents], shifted.horizon)
    missing = sorted(codes.members - shifted.members)
    return ShiftWitnessReport(
        F0=base,
        shift=shift,
        witness_class=shift,
        holds=not missing,
        codes_checked=len(codes),
        vacuous=not codes.members,
        missing=missing,
    )


def smallest_class_zero_sets(count: int, partition: EvenPartition = GALLERY_PARTITION) -> list[list[int]]:
    """The `count` nonempty finite subsets of class 0 with the smallest codes."""
    pool: list[int] = []
    e = 2
    while len(pool) < count:
        if partition.class_of(e) == 0:
            pool.append(e)
        e += 2
    ranked = sorted(_nonempty_subsets(pool), key=psi_encode)
    return [list(F) for F in ranked[:count]]


def dyadic_blocks(horizon: int) -> list[list[int]]:
    """Generators 2^i of block k, 2^(k-1) <= i < 2^k, for every block meeting the window."""
    blocks: list[list[int]] = []
    k = 1
    while 1 << (1 << (k - 1)) <= horizon:
        blocks.append([1 << i for i in range(1 << (k - 1), 1 << k) if 1 << i <= horizon])
        k += 1
    return blocks


def fal_not_al_example(horizon: int) -> WindowSet:
    members: set[int] = set()
    for gens in dyadic_blocks(horizon):
        members |= fs_set(gens, horizon).members
    return WindowSet(horizon, frozenset(members))


def block_of(m: int) -> int | None:
    """Block index of a member of the block set, None when m is not a single-block sum."""
    exponents = psi_decode(m)
    blocks = {i.bit_length() for i in exponents}
    if not exponents or 0 in exponents or len(blocks) != 1:
        return None
    return blocks.pop()
