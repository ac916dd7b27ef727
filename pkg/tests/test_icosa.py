"""Tests for icosa_fibres.icosa: the group construction, its classes and the character identities."""

from fractions import Fraction

import pytest

from icosa_fibres.classify import classify_trivial_central, rationality_field, tau_conjugate
from icosa_fibres.exactnum import ONE, QSQRT5, ZERO, Cyclo, cyclo_make, field_of
from icosa_fibres.icosa import (
    CharacterVector,
    ExactMatrix2,
    GroupData,
    binary_icosahedral_group,
    character_table_rows,
    frobenius_params,
    inner_product,
    rep_character,
    sym_character,
    sym_irreducibility,
    trivial_character,
    verify_icosahedral_identities,
)
from icosa_fibres.params import UnramifiedParam


@pytest.fixture(scope="module")
def group() -> GroupData:
    return binary_icosahedral_group()


# ============================================================================
# region -------- Matrices --------
# ============================================================================


def test_matrix_from_quaternion():
    i = cyclo_make(4, 1)
    assert ExactMatrix2.from_quaternion(ONE, ZERO, ZERO, ZERO) == ExactMatrix2.identity()
    m = ExactMatrix2.from_quaternion(ZERO, ONE, ZERO, ZERO)
    assert m.entries == (i, ZERO, ZERO, -i)
    assert m.det() == ONE
    assert m.order() == 4
    assert m * m.inverse() == ExactMatrix2.identity()


def test_matrix_inverse_with_nontrivial_determinant():
    two = Cyclo.rational(2)
    m = ExactMatrix2(two, ZERO, ZERO, ONE)
    assert m * m.inverse() == ExactMatrix2.identity()
    assert hash(m) == hash(ExactMatrix2(two, ZERO, ZERO, ONE))


# endregion


# ============================================================================
# region -------- Group construction --------
# ============================================================================


def test_group_is_cached():
    assert binary_icosahedral_group() is binary_icosahedral_group()


def test_group_order_and_classes(group: GroupData):
    assert group.order == 120
    assert len(group.classes) == 9
    assert group.class_orders == (1, 2, 3, 4, 5, 5, 6, 10, 10)
    assert group.class_sizes == (1, 1, 20, 30, 12, 12, 20, 12, 12)
    assert sorted(i for cls in group.classes for i in cls) == list(range(120))


def test_classes_are_closed_under_conjugation(group: GroupData):
    elements = group.elements
    for cls in group.classes:
        members = set(cls)
        g = elements[cls[0]]
        for h in elements[::7]:
            assert group.index(h * g * h.inverse()) in members


def test_inverse_index(group: GroupData):
    for i in range(group.order):
        j = group.inverse(i)
        assert group.elements[i] * group.elements[j] == ExactMatrix2.identity()


# endregion


# ============================================================================
# region -------- Characters --------
# ============================================================================


def test_defining_character(group: GroupData):
    chi = rep_character(group)
    assert chi.dimension == 2
    assert chi.values[1] == -2
    assert chi.values[2] == -1
    assert chi.values[3] == 0
    assert field_of(chi.values) == QSQRT5


def test_conjugate_character(group: GroupData):
    chi = rep_character(group)
    chi_conj = rep_character(group, 13)
    assert chi_conj != chi
    assert chi_conj.values[:4] == chi.values[:4]
    # The conjugation swaps the two classes of each of the orders 5 and 10.
    assert {chi_conj.values[4], chi_conj.values[5]} == {chi.values[4], chi.values[5]}
    assert chi_conj.values[4] != chi.values[4]


def test_rep_character_rejects_other_automorphisms(group: GroupData):
    with pytest.raises(ValueError, match="automorphism_k"):
        rep_character(group, 2)


def test_inner_products(group: GroupData):
    chi = rep_character(group)
    chi_conj = rep_character(group, 13)
    assert inner_product(chi, chi) == 1
    assert inner_product(chi_conj, chi_conj) == 1
    assert inner_product(chi, chi_conj) == 0
    assert inner_product(trivial_character(group), trivial_character(group)) == 1
    assert inner_product(chi, trivial_character(group)) == 0


def test_sym_character(group: GroupData):
    chi = rep_character(group)
    det = trivial_character(group)
    assert sym_character(chi, det, 0) == trivial_character(group)
    assert sym_character(chi, det, 1) == chi
    assert sym_character(chi, det, 3).dimension == 4
    assert sym_character(chi, det, 5).dimension == 6
    with pytest.raises(ValueError, match="non-negative"):
        sym_character(chi, det, -1)


def test_sym_irreducibility(group: GroupData):
    norms = sym_irreducibility(group)
    assert all(norms[m] == 1 for m in range(6))
    assert norms[6] > 1
    assert isinstance(norms[6], Fraction)


def test_character_vectors_need_matching_classes(group: GroupData):
    with pytest.raises(ValueError, match="one value per class"):
        CharacterVector((ONE,), (1, 1))
    other = CharacterVector((ONE, ONE), (1, 1))
    with pytest.raises(ValueError, match="different class structures"):
        _ = rep_character(group) + other


def test_icosahedral_identities(group: GroupData):
    report = verify_icosahedral_identities(group)
    assert report.sym3_equal
    assert report.sym5_equal
    assert report.galois_distinct
    assert report.norms == (1, 1, 0)
    assert report.ok
    payload = report.to_json()
    assert payload["ok"] is True
    assert payload["norms"] == {"rho_rho": "1", "rho'_rho'": "1", "rho_rho'": "0"}


def test_character_table_rows(group: GroupData):
    rows = character_table_rows(group)
    assert len(rows) == 9
    two = Cyclo.rational(2).to_json()
    assert rows[0] == {"order": 1, "size": 1, "chi_rho": two, "chi_rho_prime": two}
    assert [row["size"] for row in rows] == list(group.class_sizes)


# endregion


# ============================================================================
# region -------- Frobenius parameters --------
# ============================================================================


def test_frobenius_params(group: GroupData):
    chi = rep_character(group)
    params = frobenius_params(group)
    assert len(params) == 9
    assert params[0] == UnramifiedParam([1, 1])
    assert params[1] == UnramifiedParam([-1, -1])
    for p, value in zip(params, chi.values):
        a, b = p.pair()
        assert a * b == ONE
        assert a + b == value


def test_order_10_frobenius_classes_are_tau_conjugate(group: GroupData):
    params = frobenius_params(group)
    first, second = params[7], params[8]
    a, _ = first.pair()
    c, _ = second.pair()
    assert classify_trivial_central(a, c).case == "ii"
    assert rationality_field(first) == QSQRT5
    assert tau_conjugate(first) == second
    assert tau_conjugate(second) == first


# endregion
