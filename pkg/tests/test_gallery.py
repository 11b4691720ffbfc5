from itertools import combinations

import pytest

from ultrafilter_workbench.errors import (
    InputFormatError,
    NotClassZeroError,
    NotEvenExponentsError,
    OddInputError,
    VacuousWindowError,
)
from ultrafilter_workbench.gallery import (
    GALLERY_PARTITION,
    EvenPartition,
    block_of,
    build_X,
    even_class,
    fal_not_al_example,
    psi_decode,
    psi_encode,
    smallest_class_zero_sets,
    star_check,
    verify_no_sum_triple,
    verify_shift_witness,
    x_codes,
)
from ultrafilter_workbench.windows import WindowSet, fal_level

H16 = 1 << 16
H17 = 1 << 17


def _subsets(items):
    return [set(c) for size in range(len(items) + 1) for c in combinations(items, size)]


def test_psi_examples():
    assert psi_encode([]) == 0
    assert psi_encode({0, 2}) == 5
    assert psi_decode(5) == frozenset({0, 2})


def test_psi_round_trip():
    for n in range(1 << 16):
        assert psi_encode(psi_decode(n)) == n


def test_psi_sum_identity():
    pool = _subsets(range(6))
    for F in pool:
        for G in pool:
            assert psi_encode(F) + psi_encode(G) == psi_encode(F ^ G) + 2 * psi_encode(F & G)


def test_star_check_examples():
    assert star_check({2}, {4}) == (True, True, True)
    repeated = star_check({2}, {2})
    assert repeated == (False, False, False)
    assert repeated.holds


def test_star_check_holds_on_all_small_even_pairs():
    pool = _subsets([2, 4, 6, 8])
    assert len(pool) ** 2 == 256
    for F in pool:
        for G in pool:
            assert star_check(F, G).holds


def test_star_check_rejects_odd_exponents():
    with pytest.raises(NotEvenExponentsError):
        star_check({3}, {4})
    with pytest.raises(NotEvenExponentsError):
        star_check({0}, {4})


def test_even_class_table():
    expected = [0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4, 0, 1, 0, 2]
    assert [even_class(2 * t) for t in range(1, 21)] == expected
    assert (even_class(2), even_class(4), even_class(12)) == (0, 1, 1)
    for bad in (0, 3, -2):
        with pytest.raises(OddInputError):
            even_class(bad)


def test_even_partition_overrides():
    assert EvenPartition().class_of(12) == even_class(12)
    assert GALLERY_PARTITION.class_of(4) == 4
    assert GALLERY_PARTITION.class_of(16) == 64
    assert GALLERY_PARTITION.class_of(14) == 68
    assert GALLERY_PARTITION.members(0, 16) == [2, 6, 10]
    with pytest.raises(InputFormatError):
        EvenPartition(((4, 1), (4, 2)))
    with pytest.raises(OddInputError):
        EvenPartition.seeded({1: [5]})


def test_build_x_window():
    X = build_X(H16)
    assert X.sorted() == [20, 260, 276, 4160, 16452]
    assert min(X) == psi_encode({2, 4})
    with pytest.raises(InputFormatError):
        build_X(3)


def test_x_codes_order_and_shape():
    codes = x_codes(H16)
    assert [c.value for c in codes] == [20, 260, 276, 4160, 16452]
    for c in codes:
        classes = {GALLERY_PARTITION.class_of(e) for e in psi_decode(c.value)}
        assert 0 in classes and len(classes) == 2


def test_x_has_no_sum_triple():
    report = verify_no_sum_triple(build_X(H16))
    assert report.no_triple
    assert report.counterexample is None
    assert report.pairs_checked + report.pairs_beyond_horizon == 10


def test_no_sum_triple_control():
    report = verify_no_sum_triple(WindowSet.of(3, [1, 2, 3]))
    assert not report.no_triple
    assert report.counterexample == (1, 2, 3)
    assert report.to_dict()["counterexample"] == [1, 2, 3]


def test_x_is_not_fal_at_level_two():
    assert fal_level(build_X(H16), 2) is None


def test_shift_witnesses_for_smallest_class_zero_sets():
    bases = smallest_class_zero_sets(3)
    assert bases == [[2], [6], [2, 6]]
    reports = [verify_shift_witness(F0, H16) for F0 in bases]
    assert all(r.holds for r in reports)
    assert [r.shift for r in reports] == [4, 64, 68]
    assert [r.codes_checked for r in reports] == [3, 1, 1]
    assert not any(r.vacuous for r in reports)
    assert reports[2].missing == []


def test_shift_witness_with_an_empty_class_is_vacuous():
    report = verify_shift_witness([10], H16)
    assert report.holds and report.vacuous
    assert report.codes_checked == 0


def test_distinct_shift_witnesses_use_disjoint_classes():
    reports = [verify_shift_witness(F0, H16) for F0 in ([2], [6], [2, 6])]
    classes = [set(GALLERY_PARTITION.members(r.witness_class, 16)) for r in reports]
    assert len({r.witness_class for r in reports}) == 3
    assert all(classes)
    assert not (classes[0] & classes[1] or classes[0] & classes[2] or classes[1] & classes[2])


def test_shift_witness_errors():
    with pytest.raises(NotClassZeroError):
        verify_shift_witness([4], H16)
    with pytest.raises(NotClassZeroError):
        verify_shift_witness([], H16)
    with pytest.raises(VacuousWindowError):
        verify_shift_witness([2], 4)


def test_dyadic_blocks():
    A = fal_not_al_example(H17)
    assert 2 in A and 1 not in A
    assert {4, 8, 12} <= A.members and 6 not in A
    assert {1 << 16, 1 << 17} <= A.members


@pytest.mark.parametrize("k, expected", [(1, (2,)), (2, (4, 8)), (3, (16, 32, 48))])
def test_block_set_witnesses_stay_in_one_block(k, expected):
    witness = fal_level(fal_not_al_example(H17), k)
    assert witness is not None
    assert witness.elements == expected
    assert len({block_of(x) for x in witness.elements}) == 1


def test_block_of():
    assert block_of(2) == 1
    assert block_of(12) == 2
    assert block_of(6) is None
    assert block_of(1) is None
