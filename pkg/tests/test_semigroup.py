import pytest

from ultrafilter_workbench.errors import (
    GroundMismatchError,
    InputFormatError,
    NonAssociativeError,
    OutOfRangeError,
)
from ultrafilter_workbench.semigroup import (
    CURATED,
    ElementSet,
    all_subsets,
    curated,
    cyclic_mod,
    from_table,
    idempotents,
    is_subsemigroup,
    minimal_subsemigroups,
    power_idempotent,
    product_set,
    transformation_monoid,
    validate,
)


def test_validate_rejects_ragged_table():
    with pytest.raises(InputFormatError):
        validate([[0, 1], [1]])


def test_validate_rejects_out_of_range_entry():
    with pytest.raises(OutOfRangeError, match=r"table\[1\]\[0\]"):
        validate([[0, 0], [2, 0]])


def test_validate_reports_first_non_associative_triple():
    with pytest.raises(NonAssociativeError) as info:
        validate([[0, 0], [1, 0]])
    assert info.value.triple == (1, 0, 1)


def test_from_table_keeps_label():
    S = from_table([[0, 0], [0, 1]], label="meet")
    assert S.label == "meet"
    assert S.mul(1, 1) == 1
    assert S.to_dict() == {"n": 2, "table": [[0, 0], [0, 1]], "label": "meet"}


@pytest.mark.parametrize(
    "name, expected",
    [("Z4", [0]), ("Z6", [0]), ("LZ4", [0, 1, 2, 3]), ("RZ4", [0, 1, 2, 3]), ("T2", [0, 1, 3]), ("meet2", [0, 1])],
)
def test_idempotents(semigroups, name, expected):
    assert idempotents(semigroups[name]).sorted() == expected


def test_every_curated_semigroup_has_an_idempotent(semigroups):
    for S in semigroups.values():
        assert idempotents(S).members


def test_power_idempotent():
    assert power_idempotent(cyclic_mod(6), 2) == 0
    assert power_idempotent(transformation_monoid(2), 2) == 1


def test_product_set():
    Z4 = cyclic_mod(4)
    assert product_set(Z4, Z4.subset([1]), Z4.subset([1, 2])).sorted() == [2, 3]
    assert product_set(Z4, Z4.subset([]), Z4.subset([1])).sorted() == []


def test_is_subsemigroup():
    Z4 = cyclic_mod(4)
    assert is_subsemigroup(Z4, Z4.subset([0, 2]))
    assert not is_subsemigroup(Z4, Z4.subset([1, 3]))
    assert not is_subsemigroup(Z4, Z4.subset([]))


@pytest.mark.parametrize("name", sorted(CURATED))
def test_minimal_subsemigroups_are_idempotent_singletons(semigroups, name):
    S = semigroups[name]
    assert [B.sorted() for B in minimal_subsemigroups(S)] == [[e] for e in idempotents(S)]


def test_all_subsets_counts():
    Z4 = cyclic_mod(4)
    assert len(list(all_subsets(Z4))) == 15
    assert len(list(all_subsets(Z4, nonempty=False))) == 16


def test_element_set_range_and_ground_checks():
    Z4, Z5 = cyclic_mod(4), cyclic_mod(5)
    with pytest.raises(OutOfRangeError):
        ElementSet.of(Z4, [4])
    with pytest.raises(GroundMismatchError):
        Z4.subset([0]) & Z5.subset([0])


def test_transformation_monoid_bounds():
    assert transformation_monoid(3).order == 27
    with pytest.raises(InputFormatError):
        transformation_monoid(4)


def test_curated_rejects_unknown_name():
    with pytest.raises(InputFormatError):
        curated(["Z7"])
