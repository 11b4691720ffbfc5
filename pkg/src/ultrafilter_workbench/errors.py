from __future__ import annotations

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class WorkbenchError(Exception):
    exit_code = EXIT_PRECONDITION


class InputFormatError(WorkbenchError, ValueError):
    """Malformed input file or argument."""

    exit_code = EXIT_USAGE


class MathPreconditionError(WorkbenchError, ValueError):
    """A mathematical hypothesis of an operation does not hold."""

    exit_code = EXIT_PRECONDITION


class BudgetExceededError(WorkbenchError, RuntimeError):
    exit_code = EXIT_BUDGET

    def __init__(self, nodes: int, budget: int) -> None:
        super().__init__(f"search budget exhausted after {nodes} nodes (budget {budget}); result unknown")
        self.nodes = nodes
        self.budget = budget


# semigroup-core
class NonAssociativeError(MathPreconditionError):
    def __init__(self, a: int, b: int, c: int) -> None:
        super().__init__(f"table is not associative at (a, b, c) = ({a}, {b}, {c})")
        self.triple = (a, b, c)


class OutOfRangeError(InputFormatError):
    pass


class GroundMismatchError(MathPreconditionError):
    pass


# filter-algebra
class EmptySupportError(MathPreconditionError):
    pass


class EmptySetError(MathPreconditionError):
    pass


class PreconditionViolatedError(MathPreconditionError):
    pass


class NotAdditiveError(MathPreconditionError):
    pass


# nat-combinatorics
class NonDisjointBlocksError(MathPreconditionError):
    pass


class ShiftOutOfWindowError(MathPreconditionError):
    pass


class OracleUndecidedError(MathPreconditionError):
    pass


class OracleInconsistentError(MathPreconditionError):
    pass


class PrincipalOracleDetectedError(MathPreconditionError):
    pass


# construction-gallery
class NotEvenExponentsError(MathPreconditionError):
    pass


class OddInputError(MathPreconditionError):
    pass


class NotClassZeroError(MathPreconditionError):
    pass


class VacuousWindowError(MathPreconditionError):
    pass


# ramsey-search
class PreconditionNotEstablishedError(MathPreconditionError):
    pass
