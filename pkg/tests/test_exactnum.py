"""Tests for icosa_fibres.exactnum.

Numeric embeddings are only used as an independent oracle; every equality the library relies on is exact.
"""

import math
import random
from fractions import Fraction
from typing import Optional

import mpmath
import pytest

from icosa_fibres.exactnum import (
    ONE,
    QSQRT5,
    RATIONALS,
    ZERO,
    Cyclo,
    GaloisError,
    NumberFieldDesc,
    _numeric_dps,
    compositum,
    cyclo_from_json,
    cyclo_make,
    field_of,
    galois_apply,
    golden_ratio,
    numeric_precision,
    parse_rational,
    real_subfield,
)


def zeta(n: int, k: int = 1) -> Cyclo:
    return cyclo_make(n, k)


def close_to(x: Cyclo, expected: complex, tol: str = "1e-20") -> bool:
    return abs(x.to_complex() - mpmath.mpc(expected)) < mpmath.mpf(tol)


# ============================================================================
# region -------- Construction and canonical form --------
# ============================================================================


@pytest.mark.parametrize(
    ("n", "k", "conductor"),
    [
        pytest.param(1, 0, 1, id="one"),
        pytest.param(4, 2, 1, id="i squared"),
        pytest.param(10, 2, 5, id="zeta10 squared"),
        pytest.param(6, 1, 3, id="zeta6 lives in Q(zeta3)"),
        pytest.param(10, 1, 5, id="zeta10 lives in Q(zeta5)"),
        pytest.param(12, 1, 12, id="zeta12"),
        pytest.param(60, 30, 1, id="minus one"),
        pytest.param(20, 5, 4, id="i from zeta20"),
    ],
)
def test_cyclo_make_minimal_conductor(n: int, k: int, conductor: int):
    assert zeta(n, k).conductor == conductor


def test_cyclo_make_values():
    assert zeta(1, 0) == ONE
    assert zeta(4, 2) == -1
    assert zeta(10, 2) == zeta(5, 1)
    assert zeta(2, 1) == Cyclo.rational(-1)
    assert zeta(12, -1) == zeta(12, 11)


def test_cyclo_make_rejects_bad_n():
    with pytest.raises(ValueError, match="positive"):
        cyclo_make(0, 1)


def test_constructor_normalises():
    # ζ6 = 1 + ζ3
    z6 = Cyclo(6, [0, 1])
    assert z6.conductor == 3
    assert z6.coeffs == (Fraction(1), Fraction(1))
    assert z6 == zeta(6)

    assert Cyclo(1, ["2/4"]) == Cyclo.rational(Fraction(1, 2))
    assert Cyclo(4, [Fraction(1, 3), 0]).is_rational()


def test_equal_values_share_hash():
    assert len({zeta(10, 1), -zeta(5, 3), Cyclo(10, [0, 1, 0, 0])}) == 1


@pytest.mark.parametrize(
    ("conductor", "coeffs", "exc"),
    [
        pytest.param(0, [], ValueError, id="zero conductor"),
        pytest.param(5, [1, 2], ValueError, id="wrong length"),
        pytest.param(1, ["1.5"], ValueError, id="decimal literal"),
    ],
)
def test_constructor_errors(conductor: int, coeffs: list, exc: type):
    with pytest.raises(exc):
        Cyclo(conductor, coeffs)


def test_large_conductor_warns():
    with pytest.warns(RuntimeWarning, match="desk-scale"):
        cyclo_make(1009, 1)


# endregion


# ============================================================================
# region -------- Field operations --------
# ============================================================================


def test_roots_of_unity_sum_to_zero():
    assert sum((zeta(5, k) for k in range(5)), ZERO).is_zero()
    assert sum(zeta(12, k) for k in range(12)) == 0


def test_inverse_pair():
    assert zeta(10) * zeta(10, 9) == ONE
    assert zeta(10) ** -1 == zeta(10, 9)


def test_inverse_of_general_element():
    x = 1 + zeta(5) - Fraction(1, 2) * zeta(5, 3)
    assert x * x.inverse() == ONE
    assert (3 / x) * x == 3


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_golden_ratio_minimal_polynomial():
    phi = golden_ratio()
    assert phi**2 == phi + 1
    assert (2 * phi - 1) ** 2 == 5
    assert zeta(10) + zeta(10, -1) == phi


def test_zeta5_plus_inverse_numeric():
    x = zeta(5) + zeta(5, 4)
    assert x**2 + x - 1 == 0
    assert close_to(x, (-1 + 5**0.5) / 2, tol="1e-12")
    assert close_to(zeta(10) + zeta(10, -1), (1 + 5**0.5) / 2, tol="1e-12")


def test_arithmetic_with_python_numbers():
    i = zeta(4)
    assert i * i == -1
    assert 1 - i == -(i - 1)
    assert Fraction(1, 2) + i == i + Fraction(1, 2)
    assert (i + 2) - 2 == i


@pytest.mark.parametrize(
    ("x", "order"),
    [
        pytest.param(ONE, 1, id="one"),
        pytest.param(Cyclo.rational(-1), 2, id="minus one"),
        pytest.param(cyclo_make(10, 1), 10, id="zeta10"),
        pytest.param(cyclo_make(12, 5), 12, id="zeta12^5"),
        pytest.param(cyclo_make(6, 1), 6, id="zeta6"),
        pytest.param(golden_ratio(), None, id="golden ratio"),
        pytest.param(Cyclo.rational(2), None, id="two"),
        pytest.param(ZERO, None, id="zero"),
    ],
)
def test_multiplicative_order(x: Cyclo, order: Optional[int]):
    assert x.multiplicative_order() == order


def test_to_fraction():
    assert Cyclo.rational("-7/2").to_fraction() == Fraction(-7, 2)
    with pytest.raises(ValueError, match="not rational"):
        zeta(3).to_fraction()


# endregion


# ============================================================================
# region -------- Galois action --------
# ============================================================================


def test_galois_apply_zeta10():
    assert galois_apply(zeta(10), 3) == zeta(10, 3)


def test_galois_apply_fixes_rationals():
    assert galois_apply(Cyclo.rational(Fraction(2, 3)), 7) == Fraction(2, 3)


def test_galois_apply_conjugates_golden_ratio():
    x = zeta(5) + zeta(5, 4)
    image = galois_apply(x, 2)
    assert image == zeta(5, 2) + zeta(5, 3)
    assert close_to(image, (-1 - 5**0.5) / 2, tol="1e-12")
    assert galois_apply(golden_ratio(), 2) == 1 - golden_ratio()
    assert galois_apply(golden_ratio(), 4) == golden_ratio()


def test_galois_apply_requires_unit():
    with pytest.raises(GaloisError, match="not coprime"):
        galois_apply(zeta(5), 5)
    assert issubclass(GaloisError, ValueError)


def test_conj():
    assert zeta(4).conj() == -zeta(4)
    assert zeta(12, 5).conj() == zeta(12, 7)
    assert golden_ratio().conj() == golden_ratio()


# endregion


# ============================================================================
# region -------- Rendering, parsing and numeric embedding --------
# ============================================================================


@pytest.mark.parametrize(
    ("x", "text"),
    [
        pytest.param(ZERO, "0", id="zero"),
        pytest.param(Cyclo.rational(Fraction(-1, 2)), "-1/2", id="rational"),
        pytest.param(cyclo_make(5, 1), "zeta_5", id="zeta5"),
        pytest.param(golden_ratio(), "-zeta_5^2 - zeta_5^3", id="golden ratio"),
        pytest.param(1 + 3 * cyclo_make(4, 1), "1 + 3*zeta_4", id="gaussian"),
    ],
)
def test_to_text(x: Cyclo, text: str):
    assert x.to_text() == text
    assert str(x) == text


def test_to_json():
    assert zeta(4).to_json() == {"conductor": 4, "coeffs": ["0", "1"]}
    assert Cyclo.rational(Fraction(3, 4)).to_json() == {"conductor": 1, "coeffs": ["3/4"]}


@pytest.mark.parametrize(
    ("obj", "expected"),
    [
        pytest.param({"zeta": [10, 3]}, cyclo_make(10, 3), id="zeta shorthand"),
        pytest.param(3, Cyclo.rational(3), id="int"),
        pytest.param("3/4", Cyclo.rational(Fraction(3, 4)), id="rational string"),
        pytest.param({"conductor": 4, "coeffs": ["0", "1"]}, cyclo_make(4, 1), id="full form"),
    ],
)
def test_cyclo_from_json(obj: object, expected: Cyclo):
    assert cyclo_from_json(obj) == expected


def test_cyclo_from_json_reads_its_own_output():
    x = 1 - Fraction(2, 3) * zeta(12, 5)
    assert cyclo_from_json(x.to_json()) == x


@pytest.mark.parametrize(
    ("obj", "exc"),
    [
        pytest.param(True, TypeError, id="bool"),
        pytest.param(3.5, TypeError, id="float"),
        pytest.param("1/0", ValueError, id="zero denominator"),
        pytest.param({"zeta": [10]}, ValueError, id="short zeta"),
        pytest.param({"conductor": 4, "coeffs": [0, 1]}, ValueError, id="non-string coeffs"),
        pytest.param({"coeffs": ["1"]}, ValueError, id="missing conductor"),
    ],
)
def test_cyclo_from_json_errors(obj: object, exc: type):
    with pytest.raises(exc):
        cyclo_from_json(obj)


@pytest.mark.parametrize("text", ["+3", "-7/2", "0", "12/8"])
def test_parse_rational_accepts(text: str):
    assert parse_rational(text) == Fraction(text)


@pytest.mark.parametrize("text", ["1.5", "", " 1", "1/-2", "1/0", "a", "1/"])
def test_parse_rational_rejects(text: str):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_to_complex():
    assert close_to(zeta(4), 1j)
    assert close_to(zeta(3) + zeta(3).conj(), -1)


def test_numeric_precision_context():
    default = _numeric_dps.get()
    with numeric_precision(50) as ctx:
        assert _numeric_dps.get() == 50
        value = zeta(8).to_complex()
    with mpmath.workdps(50):
        assert abs(value**8 - 1) < mpmath.mpf("1e-45")
    assert _numeric_dps.get() == default

    # Resetting twice is harmless.
    ctx.reset()
    assert _numeric_dps.get() == default


def test_numeric_precision_rejects_nonpositive():
    with pytest.raises(ValueError, match="at least one digit"):
        numeric_precision(0)


# endregion


# ============================================================================
# region -------- Number field descriptors --------
# ============================================================================


def test_field_of_rationals():
    assert field_of([ONE, Cyclo.rational(-1), Cyclo.rational(Fraction(2, 3))]) == RATIONALS
    assert field_of([]) == RATIONALS
    assert RATIONALS.is_rational_field()
    assert RATIONALS.degree == 1
    assert str(RATIONALS) == "Q"


def test_field_of_sqrt5():
    field = field_of([zeta(10) + zeta(10, -1)])
    assert field == QSQRT5
    assert field.degree == 2
    assert str(field) == "Q(zeta_5)^+"
    assert field.to_json() == {"conductor": 5, "subgroup": [1, 4]}


def test_field_of_zeta10_is_full_cyclotomic():
    field = field_of([zeta(10)])
    assert field == NumberFieldDesc(5, frozenset({1}))
    assert field.degree == 4
    assert str(field) == "Q(zeta_5)"


def test_descriptor_presentation_is_canonical():
    assert NumberFieldDesc(10, frozenset({1, 9})) == QSQRT5
    assert NumberFieldDesc(20, frozenset({1, 9, 11, 19})) == QSQRT5


@pytest.mark.parametrize(
    ("conductor", "subgroup"),
    [
        pytest.param(0, {1}, id="zero conductor"),
        pytest.param(5, {0}, id="non-unit"),
        pytest.param(5, {1, 2}, id="not closed"),
        pytest.param(5, set(), id="empty"),
    ],
)
def test_descriptor_validation(conductor: int, subgroup: set):
    with pytest.raises(ValueError):
        NumberFieldDesc(conductor, frozenset(subgroup))


def test_contains_and_subfields():
    assert QSQRT5.contains(golden_ratio())
    assert QSQRT5.contains(Cyclo.rational(7))
    assert not QSQRT5.contains(zeta(5))
    assert QSQRT5.issubfield(field_of([zeta(5)]))
    assert RATIONALS.issubfield(QSQRT5)
    assert not field_of([zeta(4)]).issubfield(QSQRT5)


def test_galois_group_residues():
    assert QSQRT5.galois_group_residues() == (1, 2)
    assert RATIONALS.galois_group_residues() == (0,)
    assert len(field_of([zeta(12)]).galois_group_residues()) == 4


def test_lift():
    assert QSQRT5.lift(10) == frozenset({1, 9})
    with pytest.raises(ValueError, match="not a multiple"):
        QSQRT5.lift(7)


def test_compositum():
    q12 = field_of([zeta(12)])
    assert compositum([field_of([zeta(3)]), field_of([zeta(4)])]) == q12
    assert compositum([QSQRT5, RATIONALS]) == QSQRT5
    assert compositum([]) == RATIONALS


@pytest.mark.parametrize(
    ("field", "expected"),
    [
        pytest.param(field_of([cyclo_make(4, 1)]), RATIONALS, id="Q(zeta4)"),
        pytest.param(field_of([cyclo_make(10, 1)]), QSQRT5, id="Q(zeta10)"),
        pytest.param(RATIONALS, RATIONALS, id="Q"),
    ],
)
def test_real_subfield(field: NumberFieldDesc, expected: NumberFieldDesc):
    assert real_subfield(field) == expected


# endregion


# ============================================================================
# region -------- Properties --------
# ============================================================================


PROPERTY_CONDUCTORS = (1, 3, 4, 5, 7, 8, 12, 15, 20)


def random_element(rng: random.Random) -> Cyclo:
    """A random element of Q(ζ_n) for a small n, with small rational coefficients on 1, ζ_n, ..., ζ_n^(n-1)."""

    n = rng.choice(PROPERTY_CONDUCTORS)
    coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
    return sum((c * zeta(n, j) for j, c in enumerate(coeffs)), ZERO)


def random_unit(rng: random.Random, n: int) -> int:
    return rng.choice([k for k in range(1, n + 1) if math.gcd(k, n) == 1])


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclo_make_order(n: int):
    for k in range(n):
        assert cyclo_make(n, k).multiplicative_order() == n // math.gcd(n, k)


def test_galois_action_is_a_ring_homomorphism():
    rng = random.Random(5)
    for _ in range(60):
        x, y = random_element(rng), random_element(rng)
        k = random_unit(rng, math.lcm(x.conductor, y.conductor))
        assert galois_apply(x + y, k) == galois_apply(x, k) + galois_apply(y, k)
        assert galois_apply(x * y, k) == galois_apply(x, k) * galois_apply(y, k)


def test_galois_action_composes():
    rng = random.Random(6)
    for _ in range(60):
        x = random_element(rng)
        n = 2 * x.conductor
        a, b = random_unit(rng, n), random_unit(rng, n)
        assert galois_apply(galois_apply(x, b), a) == galois_apply(x, a * b)


def test_field_properties():
    rng = random.Random(7)
    for _ in range(40):
        x, y = random_element(rng), random_element(rng)
        field = field_of([x])
        real = real_subfield(field)
        assert field.contains(x)
        assert field.issubfield(field_of([x, y]))
        assert real.issubfield(field)
        assert real_subfield(real) == real
        assert real.contains(x + x.conj())


# endregion
