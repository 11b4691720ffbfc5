import pytest

from ultrafilter_workbench.errors import (
    InputFormatError,
    OracleUndecidedError,
    PreconditionViolatedError,
    PrincipalOracleDetectedError,
)
from ultrafilter_workbench.extraction import extract, galvin_extract, weak_extract
from ultrafilter_workbench.oracles import FSOracle, PrincipalOracle, oracle_powers
from ultrafilter_workbench.windows import FSGenerator, WindowSet, fs_set, subset_sums


def _target(gens):
    X = FSGenerator.of(gens)
    return X, fs_set(X, sum(gens))


@pytest.mark.parametrize("gens", [[1, 2, 4, 8, 16, 32], [3, 9, 27, 81, 243, 729]])
def test_galvin_extract_size_four(gens):
    X, A = _target(gens)
    result = galvin_extract(A, FSOracle(X), 4)
    assert len(result.elements) == 4
    assert result.witness.sums_checked == 15
    assert all(s in A for s in subset_sums(result.elements))
    assert galvin_extract(A, FSOracle(X), 4).to_dict() == result.to_dict()


def test_galvin_extract_on_powers_of_three_follows_the_generators():
    X, A = _target([3, 9, 27, 81, 243, 729])
    assert galvin_extract(A, FSOracle(X), 4).elements == (3, 9, 27, 81)


def test_galvin_extract_single_pick():
    X, A = _target([1, 2, 4, 8, 16])
    result = galvin_extract(A, FSOracle(X), 1)
    assert result.elements == (1,)
    assert result.trace[0].step == 1


def test_galvin_extract_single_pick_on_a_late_tail():
    X = FSGenerator.of([1, 2, 4, 8, 16])
    A = fs_set(X.tail(4), 31)
    assert galvin_extract(A, FSOracle(X), 1).elements == (16,)


def test_galvin_extract_rejects_sets_outside_the_oracle():
    X = FSGenerator.of([1, 2, 4])
    with pytest.raises(PreconditionViolatedError):
        galvin_extract(WindowSet.of(7, [5]), FSOracle(X), 2)


def test_galvin_extract_undecided_oracle():
    with pytest.raises(OracleUndecidedError):
        galvin_extract(WindowSet.interval(10), FSOracle(FSGenerator.of([100])), 2)


def test_weak_extract_follows_the_intersection_schedule():
    X, A = _target([1, 2, 4, 8, 16, 32])
    V = FSOracle(X)
    result = weak_extract(A, V, oracle_powers(V, 4), 4)
    x = result.elements
    assert len(x) == 4 and list(x) == sorted(set(x))
    assert all(s in A for s in subset_sums(x))
    terms = [{tuple(t) for t in step.terms} for step in result.trace]
    assert terms[0] == {(0, 0), (1, 0), (2, 0), (3, 0)}
    assert terms[1] == {(i, s) for i in range(3) for s in (0, x[0])}
    assert terms[2] == {(i, s) for i in range(2) for s in (0, x[0], x[1], x[0] + x[1])}
    assert terms[3] == {(0, s) for s in {0} | set(subset_sums(x[:3]))}


def test_weak_extract_single_pick():
    X, A = _target([1, 2, 4, 8])
    result = weak_extract(A, FSOracle(X), None, 1)
    assert len(result.elements) == 1
    assert result.trace[0].terms == [[0, 0]]


def test_weak_extract_principal_branch_uses_multiples():
    A = WindowSet.interval(40)
    assert weak_extract(A, PrincipalOracle(3), None, 4).elements == (3, 6, 9, 12)


def test_weak_extract_principal_branch_needs_all_multiples():
    A = WindowSet.of(40, [m for m in range(1, 41) if m != 30])
    with pytest.raises(PrincipalOracleDetectedError):
        weak_extract(A, PrincipalOracle(3), None, 4)


def test_weak_extract_needs_enough_powers():
    X, A = _target([1, 2, 4, 8])
    with pytest.raises(InputFormatError):
        weak_extract(A, FSOracle(X), [], 3)


def test_extract_dispatch():
    X, A = _target([1, 2, 4, 8, 16])
    assert extract(A, FSOracle(X), 2, "weak").method == "weak"
    with pytest.raises(InputFormatError):
        extract(A, FSOracle(X), 2, "zorn")
