"""Choice-free extension of additive filters to idempotent ultrafilters.

The recursions run over filters on a finite ground set. Every non-fixpoint step
strictly shrinks the support, so each loop stops after at most |support| rounds.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, List

from .config import get_logger
from .errors import NotAdditiveError
from .filters import PFilter, fvg_extend, is_additive, principal, pseudo_sum
from .semigroup import ElementSet, power_idempotent

Chooser = Callable[[ElementSet], int]

logger = get_logger("extension")

PSI_STEP = "psi-step"
FVV_STEP = "fvv-step"
FIXPOINT = "fixpoint"


def choose_min(support: ElementSet) -> int:
    return min(support.members)


def choose_max(support: ElementSet) -> int:
    return max(support.members)


@dataclass
class TraceStep:
    step: int
    support: List[int]
    chosen_v: int
    rule: str

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class PsiResult:
    v: int
    filter: PFilter
    trace: List[TraceStep] = field(default_factory=list)


@dataclass
class ThetaResult:
    idempotent: int
    filter: PFilter
    rounds: int
    trace: List[TraceStep] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "idempotent": self.idempotent,
            "rounds": self.rounds,
            "support": self.filter.support.sorted(),
            "trace": [s.to_dict() for s in self.trace],
        }


def _choose(chooser: Chooser, support: ElementSet) -> int:
    v = chooser(support)
    if v not in support:
        raise ValueError(f"chooser returned {v}, not a member of support {support.sorted()}")
    return v


def _require_additive(F: PFilter) -> None:
    if not is_additive(F):
        raise NotAdditiveError(f"filter with support {F.support.sorted()} is not additive")


def run_psi(F: PFilter, chooser: Chooser = choose_min, first_step: int = 0) -> PsiResult:
    _require_additive(F)
    S = F.ground
    current = F
    trace: list[TraceStep] = []
    for step in range(first_step, first_step + len(F.support) + 1):
        v = _choose(chooser, current.support)
        shifted = pseudo_sum(current, principal(S, v))
        if v in shifted.support:
            trace.append(TraceStep(step, current.support.sorted(), v, FIXPOINT))
            logger.debug(f"[psi-fixpoint] support={current.support.sorted()} v={v}")
            return PsiResult(v=v, filter=current, trace=trace)
        trace.append(TraceStep(step, current.support.sorted(), v, PSI_STEP))
        logger.debug(f"[psi-step] support={current.support.sorted()} v={v} next={shifted.support.sorted()}")
        current = shifted
    raise AssertionError(f"psi recursion did not stabilise on support {F.support.sorted()}")


def psi_extend(F: PFilter, chooser: Chooser = choose_min) -> tuple[int, PFilter]:
    result = run_psi(F, chooser)
    return result.v, result.filter


def run_theta(F: PFilter, chooser: Chooser = choose_min) -> ThetaResult:
    _require_additive(F)
    S = F.ground
    current = F
    trace: list[TraceStep] = []
    for rounds in range(1, len(F.support) + 1):
        psi = run_psi(current, chooser, first_step=len(trace))
        # psi's own fixpoint row is replaced by the theta decision below
        trace.extend(s for s in psi.trace if s.rule == PSI_STEP)
        v = psi.v
        if S.mul(v, v) == v:
            trace.append(TraceStep(len(trace), current.support.sorted(), v, FIXPOINT))
            logger.info(f"[theta] idempotent={v} rounds={rounds} support={F.support.sorted()}")
            return ThetaResult(idempotent=v, filter=current, rounds=rounds, trace=trace)
        trace.append(TraceStep(len(trace), current.support.sorted(), v, FVV_STEP))
        current = fvg_extend(current, v, principal(S, v))
        logger.debug(f"[fvv-step] v={v} next={current.support.sorted()}")
    raise AssertionError(f"theta recursion did not stabilise on support {F.support.sorted()}")


def theta_extend(F: PFilter, chooser: Chooser = choose_min) -> int:
    return run_theta(F, chooser).idempotent


def idempotent_in_closure(F: PFilter, chooser: Chooser = choose_min) -> int:
    """Ellis-Numakura route: the idempotent power of a chosen support element."""
    _require_additive(F)
    return power_idempotent(F.ground, _choose(chooser, F.support))
