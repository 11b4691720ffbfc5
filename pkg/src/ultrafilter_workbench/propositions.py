"""Exhaustive property sweeps for the filter algebra on a finite semigroup.

Each check enumerates every admissible case and returns the number of cases
seen together with human-readable violations (empty when the property holds).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence

from .extension import Chooser, choose_max, choose_min, idempotent_in_closure, run_theta
from .filters import (
    PFilter,
    additive_filters,
    cl_of,
    fil_of,
    fvg_extend,
    includes,
    is_additive,
    is_additive_char,
    is_idempotent_filter,
    maximal_additive_filters,
    principal,
    pseudo_sum,
    pseudo_sum_by_definition,
)
from .semigroup import FiniteSemigroup, all_subsets, idempotents, is_subsemigroup, minimal_subsemigroups


@dataclass
class CheckOutcome:
    check: str
    semigroup: str
    cases: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "semigroup": self.semigroup,
            "cases": self.cases,
            "violations": list(self.violations),
        }


def _filters(S: FiniteSemigroup) -> list[PFilter]:
    return [PFilter(S, B) for B in all_subsets(S)]


def _name(S: FiniteSemigroup) -> str:
    return S.label or f"order-{S.order}"


def check_additivity_equivalence(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("additivity-equivalence", _name(S))
    for F in _filters(S):
        out.cases += 1
        verdicts = (is_additive(F), is_subsemigroup(S, F.support), is_additive_char(F))
        if len(set(verdicts)) != 1:
            out.violations.append(f"support {F.support.sorted()}: additive/subsemigroup/char = {verdicts}")
    return out


def check_idempotent_filters(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("idempotent-vs-additive", _name(S))
    for F in _filters(S):
        out.cases += 1
        if is_idempotent_filter(F) != is_additive(F):
            out.violations.append(f"support {F.support.sorted()}: idempotent filter verdict differs from additive")
    return out


def check_pseudo_sum_oracle(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("pseudo-sum-oracle", _name(S))
    filters = _filters(S)
    for F in filters:
        for G in filters:
            out.cases += 1
            closed, brute = pseudo_sum(F, G), pseudo_sum_by_definition(F, G)
            if closed != brute:
                out.violations.append(
                    f"{F.support.sorted()} + {G.support.sorted()}: closed form "
                    f"{closed.support.sorted()} != definition {brute.support.sorted()}"
                )
    return out


def check_associativity(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("pseudo-sum-associativity", _name(S))
    filters = _filters(S)
    for F in filters:
        for G in filters:
            FG = pseudo_sum(F, G)
            for H in filters:
                out.cases += 1
                if pseudo_sum(FG, H) != pseudo_sum(F, pseudo_sum(G, H)):
                    out.violations.append(f"({F.support.sorted()}, {G.support.sorted()}, {H.support.sorted()})")
    return out


def check_fvg_extension(S: FiniteSemigroup) -> CheckOutcome:
    """F(V,G) contains F, and G is contained in F(V,G) + V, whenever G contains F + V."""
    out = CheckOutcome("fvg-extension", _name(S))
    filters = _filters(S)
    for F in filters:
        for v in S.elements():
            FV = pseudo_sum(F, principal(S, v))
            for G in filters:
                if not includes(G, FV):
                    continue
                out.cases += 1
                R = fvg_extend(F, v, G)
                if not includes(R, F):
                    out.violations.append(f"F={F.support.sorted()} v={v} G={G.support.sorted()}: F not in F(V,G)")
                if not includes(pseudo_sum(R, principal(S, v)), G):
                    out.violations.append(f"F={F.support.sorted()} v={v} G={G.support.sorted()}: G not in F(V,G)+V")
    return out


def check_ultrafilter_extension(S: FiniteSemigroup) -> CheckOutcome:
    """Both halves of the ultrafilter corollary on F(V,W), for W containing F + V."""
    out = CheckOutcome("fvw-ultrafilters", _name(S))
    for F in _filters(S):
        for v in S.elements():
            V = principal(S, v)
            FV = pseudo_sum(F, V)
            for w in S.elements():
                W = principal(S, w)
                if not includes(W, FV):
                    continue
                R = fvg_extend(F, v, W)
                for u in S.elements():
                    out.cases += 1
                    U = principal(S, u)
                    if includes(U, R) and pseudo_sum(U, V) != W:
                        out.violations.append(f"F={F.support.sorted()} v={v} w={w} u={u}: U+V != W")
                    if pseudo_sum(U, V) == W and includes(U, F) and not includes(U, R):
                        out.violations.append(f"F={F.support.sorted()} v={v} w={w} u={u}: F(V,W) not in U")
    return out


def check_ultrafilter_lifting(S: FiniteSemigroup) -> CheckOutcome:
    """W contains F + V iff W = U + V for some ultrafilter U containing F."""
    out = CheckOutcome("ultrafilter-lifting", _name(S))
    for F in _filters(S):
        for v in S.elements():
            V = principal(S, v)
            FV = pseudo_sum(F, V)
            for w in S.elements():
                out.cases += 1
                W = principal(S, w)
                lhs = includes(W, FV)
                rhs = any(pseudo_sum(principal(S, u), V) == W for u in F.support)
                if lhs != rhs:
                    out.violations.append(f"F={F.support.sorted()} v={v} w={w}: {lhs} vs {rhs}")
    return out


def check_shift_keeps_additive(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("shift-keeps-additive", _name(S))
    for F in additive_filters(S):
        for v in F.support:
            out.cases += 1
            if not is_additive(pseudo_sum(F, principal(S, v))):
                out.violations.append(f"F={F.support.sorted()} v={v}: F+V not additive")
    return out


def check_fvv_keeps_additive(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("fvv-keeps-additive", _name(S))
    for F in additive_filters(S):
        for v in S.elements():
            V = principal(S, v)
            if not includes(V, pseudo_sum(F, V)):
                continue
            out.cases += 1
            if not is_additive(fvg_extend(F, v, V)):
                out.violations.append(f"F={F.support.sorted()} v={v}: F(V,V) not additive")
    return out


def check_maximal_additive(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("maximal-additive", _name(S))
    idem = idempotents(S)
    singletons = sorted([e] for e in idem)
    maximal = sorted(F.support.sorted() for F in maximal_additive_filters(S))
    minimal = sorted(B.sorted() for B in minimal_subsemigroups(S))
    idempotent_ultra = sorted(
        [x] for x in S.elements() if pseudo_sum(principal(S, x), principal(S, x)) == principal(S, x)
    )
    out.cases = 4
    if maximal != singletons:
        out.violations.append(f"maximal additive supports {maximal} != idempotent singletons {singletons}")
    if minimal != singletons:
        out.violations.append(f"minimal subsemigroups {minimal} != idempotent singletons {singletons}")
    if idempotent_ultra != singletons:
        out.violations.append(f"idempotent ultrafilters {idempotent_ultra} != idempotent singletons {singletons}")
    if not idem.members:
        out.violations.append("no idempotent element")
    return out


def check_fil_cl(S: FiniteSemigroup) -> CheckOutcome:
    out = CheckOutcome("fil-cl", _name(S))
    for C in all_subsets(S):
        out.cases += 1
        F = fil_of(S, C)
        if cl_of(F) != C or fil_of(S, cl_of(F)) != F:
            out.violations.append(f"round trip fails on {C.sorted()}")
        if is_subsemigroup(S, C) and not is_additive(F):
            out.violations.append(f"Fil({C.sorted()}) of a subsemigroup is not additive")
        if is_additive(F) and not is_subsemigroup(S, cl_of(F)):
            out.violations.append(f"Cl of additive filter {C.sorted()} is not a subsemigroup")
    return out


def check_theta(S: FiniteSemigroup, choosers: Sequence[Chooser] = (choose_min, choose_max)) -> CheckOutcome:
    out = CheckOutcome("theta-extension", _name(S))
    idem = idempotents(S)
    for F in additive_filters(S):
        for chooser in choosers:
            out.cases += 1
            result = run_theta(F, chooser)
            u = result.idempotent
            if S.mul(u, u) != u or u not in F.support or u not in idem:
                out.violations.append(f"support {F.support.sorted()}: theta returned {u}")
            if result.rounds > len(F.support):
                out.violations.append(f"support {F.support.sorted()}: {result.rounds} rounds")
            e = idempotent_in_closure(F, chooser)
            if e not in F.support or e not in idem:
                out.violations.append(f"support {F.support.sorted()}: power idempotent {e} escapes")
    return out


CHECKS: Dict[str, Callable[[FiniteSemigroup], CheckOutcome]] = {
    "additivity-equivalence": check_additivity_equivalence,
    "idempotent-vs-additive": check_idempotent_filters,
    "pseudo-sum-oracle": check_pseudo_sum_oracle,
    "pseudo-sum-associativity": check_associativity,
    "fvg-extension": check_fvg_extension,
    "fvw-ultrafilters": check_ultrafilter_extension,
    "ultrafilter-lifting": check_ultrafilter_lifting,
    "shift-keeps-additive": check_shift_keeps_additive,
    "fvv-keeps-additive": check_fvv_keeps_additive,
    "maximal-additive": check_maximal_additive,
    "fil-cl": check_fil_cl,
    "theta-extension": check_theta,
}


def run_suite(semigroups: Sequence[FiniteSemigroup], checks: Sequence[str] | None = None) -> list[CheckOutcome]:
    names = list(checks) if checks else list(CHECKS)
    return [CHECKS[name](S) for S in semigroups for name in names]
