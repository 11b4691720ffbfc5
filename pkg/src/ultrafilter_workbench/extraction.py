"""Constructive FS-witness extraction driven by an ultrafilter oracle.

`galvin_extract` follows the idempotent-ultrafilter argument for Hindman's
theorem: shrink A to A* = A n A_V and keep intersecting A* with its shifts by
every partial sum.  `weak_extract` only needs F contained in F + V and
intersects the shift-preimages A_{V^i} on a schedule that loses one power per
stage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import List, Sequence

from .config import get_logger
from .errors import (
    InputFormatError,
    MathPreconditionError,
    OracleInconsistentError,
    OracleUndecidedError,
    PreconditionViolatedError,
    PrincipalOracleDetectedError,
    ShiftOutOfWindowError,
)
from .oracles import UltrafilterOracle, Verdict, oracle_powers, shift_preimage_window
from .windows import FSWitness, WindowSet, shift_set

logger = get_logger("extraction")

GALVIN = "galvin"
WEAK = "weak"
METHODS = (GALVIN, WEAK)


@dataclass
class PickStep:
    step: int
    pick: int
    candidates: int
    verdict: str
    terms: List[List[int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "pick": self.pick,
            "candidates": self.candidates,
            "verdict": self.verdict,
            "terms": [list(t) for t in self.terms],
        }


@dataclass
class ExtractionResult:
    witness: FSWitness
    method: str
    trace: List[PickStep] = field(default_factory=list)

    @property
    def elements(self) -> tuple[int, ...]:
        return self.witness.elements

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            **self.witness.to_dict(),
            "trace": [s.to_dict() for s in self.trace],
        }


def _partial_sums(picks: Sequence[int]) -> list[int]:
    """0 together with every sum of a nonempty subset of picks, sorted and distinct."""
    sums = {0}
    for x in picks:
        sums |= {s + x for s in sums}
    return sorted(sums)


def _shifted(B: WindowSet, s: int) -> WindowSet:
    try:
        return shift_set(B, s)
    except ShiftOutOfWindowError as e:
        raise OracleUndecidedError(f"horizon {B.horizon} exhausted by partial sum {s}") from e


def _above(C: WindowSet, floor: int) -> WindowSet:
    return WindowSet(C.horizon, frozenset(m for m in C.members if m > floor))


def _require_member(A: WindowSet, V: UltrafilterOracle) -> None:
    verdict = V.membership(A)
    if verdict is Verdict.UNKNOWN:
        raise OracleUndecidedError(f"oracle cannot decide the target within horizon {A.horizon}")
    if verdict is Verdict.NO:
        raise PreconditionViolatedError("the oracle does not contain the target set")


def _pick(V: UltrafilterOracle, candidates: WindowSet, floor: int, step: int) -> int:
    x = V.pick(_above(candidates, floor))
    if x is None:
        fallback = V.pick(candidates)
        if fallback is not None and fallback <= floor:
            raise PrincipalOracleDetectedError(
                f"step {step}: the oracle only offers {fallback}, not above the previous pick {floor}"
            )
        raise OracleUndecidedError(f"step {step}: no pick above {floor} within horizon {candidates.horizon}")
    if x not in candidates or x <= floor:
        raise OracleInconsistentError(f"step {step}: oracle picked {x}, outside the candidate set")
    return x


def galvin_extract(A: WindowSet, V: UltrafilterOracle, k: int) -> ExtractionResult:
    if k < 1:
        raise InputFormatError(f"k must be >= 1, got {k}")
    _require_member(A, V)
    # undecided positions stay in A*
    pre = shift_preimage_window(A, V)
    star = A & (pre.yes | pre.unknown)
    logger.debug(f"[galvin] |A|={len(A)} |A*|={len(star)} horizon={A.horizon}")
    running = star
    picks: list[int] = []
    trace: list[PickStep] = []
    for step in range(1, k + 1):
        floor = picks[-1] if picks else 0
        x = _pick(V, running, floor, step)
        verdict = V.membership(running).value
        new_sums = [x + s for s in _partial_sums(picks)]
        trace.append(PickStep(step, x, len(running), verdict, [[s] for s in new_sums]))
        logger.debug(f"[galvin-pick] step={step} x={x} candidates={len(running)}")
        picks.append(x)
        if step < k:
            running = reduce(lambda C, s: C & _shifted(star, s), new_sums, running)
    return ExtractionResult(FSWitness(tuple(picks), A), GALVIN, trace)


def _principal_multiples(A: WindowSet, m: int, k: int) -> ExtractionResult:
    elements = tuple(h * m for h in range(1, k + 1))
    try:
        witness = FSWitness(elements, A)
    except MathPreconditionError as e:
        raise PrincipalOracleDetectedError(
            f"oracle is principal at {m} and A misses some sum of the multiples {list(elements)}"
        ) from e
    trace = [PickStep(h, x, 1, Verdict.YES.value) for h, x in enumerate(elements, start=1)]
    return ExtractionResult(witness, WEAK, trace)


def weak_extract(
    A: WindowSet,
    V: UltrafilterOracle,
    powers: Sequence[UltrafilterOracle] | None,
    k: int,
) -> ExtractionResult:
    """Stage j picks from the intersection of B_i - s over i <= k - j and s in FS(x_1..x_{j-1}) or 0.

    B_0 = A and B_i = A_{V^i}; powers[i - 1] plays V^i.
    """
    if k < 1:
        raise InputFormatError(f"k must be >= 1, got {k}")
    m = V.principal_point
    if m is not None:
        return _principal_multiples(A, m, k)
    chain = list(powers) if powers is not None else oracle_powers(V, k)
    if len(chain) < k - 1:
        raise InputFormatError(f"need {k - 1} oracle powers for k={k}, got {len(chain)}")
    _require_member(A, V)
    B = [A] + [shift_preimage_window(A, P).yes for P in chain[: k - 1]]
    picks: list[int] = []
    trace: list[PickStep] = []
    for step in range(1, k + 1):
        sums = _partial_sums(picks)
        terms = [(i, s) for i in range(k - step + 1) for s in sums]
        candidates = reduce(lambda C, t: C & _shifted(B[t[0]], t[1]), terms, WindowSet.interval(A.horizon))
        floor = picks[-1] if picks else 0
        x = _pick(V, candidates, floor, step)
        trace.append(PickStep(step, x, len(candidates), V.membership(candidates).value, [list(t) for t in terms]))
        logger.debug(f"[weak-pick] step={step} x={x} terms={len(terms)}")
        picks.append(x)
    return ExtractionResult(FSWitness(tuple(picks), A), WEAK, trace)


def extract(A: WindowSet, V: UltrafilterOracle, k: int, method: str = GALVIN) -> ExtractionResult:
    if method == GALVIN:
        return galvin_extract(A, V, k)
    if method == WEAK:
        return weak_extract(A, V, None, k)
    raise InputFormatError(f"unknown method {method!r}; choose from {METHODS}")
