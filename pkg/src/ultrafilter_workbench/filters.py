"""Filters on a finite semigroup.

Every filter on a finite set is principal, so a filter is stored as its
support (the intersection of all its members): A belongs to the filter iff
A contains the support.  Inclusion of filters reverses inclusion of supports.

Shift convention: A - n = {m : m*n in A}, so for principal filters
U_a + U_b = U_{b*a}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .config import EXHAUSTIVE_SUBSET_LIMIT
from .errors import EmptySetError, EmptySupportError, PreconditionViolatedError
from .semigroup import (
    ElementSet,
    FiniteSemigroup,
    all_subsets,
    check_same_ground,
    idempotents,
    is_subsemigroup,
    product_set,
)


@dataclass(frozen=True)
class PFilter:
    ground: FiniteSemigroup
    support: ElementSet

    def __post_init__(self) -> None:
        if not self.support.members:
            raise EmptySupportError("a filter support must be nonempty")
        check_same_ground(self.ground, self.support.ground)

    @classmethod
    def of(cls, ground: FiniteSemigroup, support: Iterable[int]) -> "PFilter":
        return cls(ground, ground.subset(support))

    def is_ultrafilter(self) -> bool:
        return len(self.support) == 1


def principal(S: FiniteSemigroup, x: int) -> PFilter:
    return PFilter.of(S, [x])


def member(F: PFilter, A: ElementSet) -> bool:
    return F.support <= A


def includes(F: PFilter, G: PFilter) -> bool:
    """F contains G as a family of sets."""
    return F.support <= G.support


def shift_set(S: FiniteSemigroup, A: ElementSet, n: int) -> ElementSet:
    """A - n = {m : m*n in A}."""
    return ElementSet(S, frozenset(m for m in range(S.order) if S.mul(m, n) in A.members))


def shift_preimage(S: FiniteSemigroup, A: ElementSet, v: int) -> ElementSet:
    """A_V for V = U_v: {n : A - n in U_v} = {n : v*n in A}."""
    check_same_ground(S, A.ground)
    row = S.table[v]
    return ElementSet(S, frozenset(n for n in range(S.order) if row[n] in A.members))


def pseudo_sum(F: PFilter, G: PFilter) -> PFilter:
    check_same_ground(F.ground, G.ground)
    return PFilter(F.ground, product_set(F.ground, G.support, F.support))


def pseudo_sum_by_definition(F: PFilter, G: PFilter) -> PFilter:
    """A in F+G iff {n : A - n in G} in F, evaluated over all 2^n subsets A."""
    check_same_ground(F.ground, G.ground)
    S = F.ground
    full = frozenset(range(S.order))
    support = full
    for mask in range(1 << S.order):
        A = ElementSet(S, frozenset(i for i in range(S.order) if (mask >> i) & 1))
        shifted = ElementSet(S, frozenset(n for n in range(S.order) if member(G, shift_set(S, A, n))))
        if member(F, shifted):
            support = support & A.members
    return PFilter(S, ElementSet(S, support))


def is_additive(F: PFilter) -> bool:
    S = F.ground
    return all(includes(pseudo_sum(F, principal(S, v)), F) for v in F.support)


def is_additive_char(F: PFilter) -> bool:
    """F is contained in U + V for every pair of ultrafilters U, V containing F."""
    S = F.ground
    return all(
        includes(pseudo_sum(principal(S, u), principal(S, v)), F)
        for u in F.support
        for v in F.support
    )


def is_idempotent_filter(F: PFilter) -> bool:
    return includes(pseudo_sum(F, F), F)


def is_idempotent_ultrafilter(F: PFilter) -> bool:
    return F.is_ultrafilter() and pseudo_sum(F, F) == F


def fvg_extend(F: PFilter, v: int, G: PFilter) -> PFilter:
    """F(V, G) for V = U_v: the smallest filter containing F and every A_V with A in G."""
    S = F.ground
    check_same_ground(S, G.ground)
    support = F.support & shift_preimage(S, G.support, v)
    if not includes(G, pseudo_sum(F, principal(S, v))):
        if not support.members:
            raise EmptySupportError(
                f"F(U_{v}, G) is empty: G (support {G.support.sorted()}) does not contain F + U_{v}"
            )
        raise PreconditionViolatedError(
            f"G (support {G.support.sorted()}) does not contain F + U_{v} "
            f"(support {pseudo_sum(F, principal(S, v)).support.sorted()})"
        )
    return PFilter(S, support)


def fil_of(S: FiniteSemigroup, C: ElementSet) -> PFilter:
    if not C.members:
        raise EmptySetError("Fil(C) needs a nonempty set of ultrafilters")
    return PFilter(S, C)


def cl_of(F: PFilter) -> ElementSet:
    """Generators of the principal ultrafilters extending F."""
    return F.support


def additive_filters(S: FiniteSemigroup) -> list[PFilter]:
    return [PFilter(S, B) for B in all_subsets(S) if is_subsemigroup(S, B)]


def maximal_additive_filters(S: FiniteSemigroup) -> list[PFilter]:
    if S.order > EXHAUSTIVE_SUBSET_LIMIT:
        return [principal(S, e) for e in idempotents(S)]
    additive = additive_filters(S)
    return [
        F
        for F in additive
        if not any(includes(G, F) and G != F for G in additive)
    ]
