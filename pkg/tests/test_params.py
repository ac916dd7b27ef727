"""Tests for icosa_fibres.params."""

import random
from fractions import Fraction

import pytest

from icosa_fibres.cli import random_param
from icosa_fibres.exactnum import ONE, Cyclo, cyclo_make
from icosa_fibres.params import (
    AbstractCharacter,
    ArchParam,
    SteinbergBlock,
    SteinbergParam,
    UnramifiedParam,
    adjoint,
    arch_adjoint,
    arch_sym_power,
    arch_tensor,
    dual,
    equivalent_up_to_twist,
    ext_square,
    isobaric_sum,
    multiset_equal,
    steinberg_adjoint,
    steinberg_sym,
    steinberg_tensor,
    steinberg_twist,
    sym_power,
    tensor,
    twist,
)


def P(*values: object) -> UnramifiedParam:
    return UnramifiedParam(values)  # pyright: ignore [reportArgumentType]


ZETA10 = cyclo_make(10, 1)
ZETA5 = cyclo_make(5, 1)
IMAG = cyclo_make(4, 1)


# ============================================================================
# region -------- Unramified parameters --------
# ============================================================================


def test_param_is_an_unordered_multiset():
    assert P(IMAG, 1) == P(1, IMAG)
    assert hash(P(IMAG, 1)) == hash(P(1, IMAG))
    assert P(1, 1) != P(1)
    assert P(2, 3).central == 6
    assert P(2, 3).dimension == len(P(2, 3)) == 2
    assert list(P(3, 2)) == [Cyclo.rational(2), Cyclo.rational(3)]


@pytest.mark.parametrize(
    ("values", "exc"),
    [
        pytest.param((), ValueError, id="empty"),
        pytest.param((1, 0), ValueError, id="zero entry"),
        pytest.param(("1",), TypeError, id="string entry"),
        pytest.param((True,), TypeError, id="bool entry"),
    ],
)
def test_param_validation(values: tuple, exc: type):
    with pytest.raises(exc):
        UnramifiedParam(values)


def test_param_json():
    p = P(ZETA10, Fraction(1, 2))
    assert UnramifiedParam.from_json(p.to_json()) == p
    assert UnramifiedParam.from_json({"inverse_roots": [{"zeta": [10, 1]}, "1/2"]}) == p
    with pytest.raises(ValueError, match="inverse_roots"):
        UnramifiedParam.from_json([1, 2])


def test_pair_needs_dimension_two():
    with pytest.raises(ValueError, match="dimension 2"):
        P(1, 2, 3).pair()


@pytest.mark.parametrize(
    ("p", "m", "expected"),
    [
        pytest.param(P(2, 3), 1, P(2, 3), id="sym1 is the identity"),
        pytest.param(P(2, 1), 3, P(8, 4, 2, 1), id="sym3 of {2, 1}"),
        pytest.param(P(2, 3), 0, P(1), id="sym0"),
        pytest.param(
            P(ZETA10, ZETA10.inverse()),
            5,
            P(-1, -1, cyclo_make(10, 3), ZETA10, cyclo_make(10, 9), cyclo_make(10, 7)),
            id="sym5 of the order 10 pair",
        ),
    ],
)
def test_sym_power(p: UnramifiedParam, m: int, expected: UnramifiedParam):
    assert sym_power(p, m) == expected
    assert sym_power(p, m).dimension == m + 1


def test_sym_power_errors():
    with pytest.raises(ValueError, match="non-negative"):
        sym_power(P(1, 2), -1)
    with pytest.raises(ValueError, match="dimension 2"):
        sym_power(P(1, 2, 3), 2)


@pytest.mark.parametrize(
    ("p", "expected"),
    [
        pytest.param(P(ZETA5, ZETA5), P(1, 1, 1), id="scalar"),
        pytest.param(P(ZETA10, ZETA10.inverse()), P(ZETA5, 1, ZETA5.inverse()), id="order 10"),
        pytest.param(P(2, 1), P(2, 1, Fraction(1, 2)), id="rational"),
    ],
)
def test_adjoint(p: UnramifiedParam, expected: UnramifiedParam):
    assert adjoint(p) == expected
    assert adjoint(p).central == ONE


@pytest.mark.parametrize(
    ("p1", "p2", "expected"),
    [
        pytest.param(P(3), P(1, 2), P(3, 6), id="one-dimensional factor"),
        pytest.param(
            P(-1, 1, -1),
            P(IMAG, -IMAG),
            P(-IMAG, IMAG, IMAG, -IMAG, -IMAG, IMAG),
            id="adjoint of i times std",
        ),
        pytest.param(P(2, 1), P(3, 1), P(6, 2, 3, 1), id="rational"),
    ],
)
def test_tensor(p1: UnramifiedParam, p2: UnramifiedParam, expected: UnramifiedParam):
    assert tensor(p1, p2) == expected
    assert tensor(p1, p2).dimension == p1.dimension * p2.dimension


def test_twist():
    p = P(2, 3)
    assert twist(p, 1) == p
    z = cyclo_make(3, 1)
    assert twist(p, z) == P(2 * z, 3 * z)
    assert twist(P(ZETA5, 1, ZETA5.inverse()), ZETA5) == P(ZETA5**2, ZETA5, 1)
    with pytest.raises(ValueError, match="zero"):
        twist(p, 0)


def test_isobaric_sum_and_dual():
    assert isobaric_sum(P(2), P(3)) == P(2, 3)
    assert isobaric_sum(P(1), P(2), P(3)).dimension == 3
    assert dual(P(2, 1)) == P(Fraction(1, 2), 1)

    a = cyclo_make(7, 2)
    sym3 = sym_power(P(a, a.inverse()), 3)
    assert dual(sym3) == sym3


def test_ext_square():
    assert ext_square(P(2, 3)) == P(6)
    assert ext_square(P(8, 4, 2, 1)) == P(32, 16, 8, 8, 4, 2)
    assert ext_square(sym_power(P(ZETA5, 1), 3)).dimension == 6
    with pytest.raises(ValueError, match="at least 2"):
        ext_square(P(1))


def test_multiset_equal():
    assert multiset_equal(P(2, 3), P(3, 2))
    assert not multiset_equal(P(1, 1), P(1))
    z3 = cyclo_make(10, 3)
    assert multiset_equal(sym_power(P(ZETA10, ZETA10.inverse()), 3), sym_power(P(z3, z3.inverse()), 3))


def random_character(rng: random.Random) -> Cyclo:
    return random_param(rng).inverse_roots[0]


@pytest.mark.parametrize("m", range(7))
def test_sym_power_commutes_with_twist(m: int):
    rng = random.Random(m)
    for _ in range(40):
        p, chi = random_param(rng), random_character(rng)
        assert sym_power(twist(p, chi), m) == twist(sym_power(p, m), chi**m)


def test_adjoint_ignores_twists():
    rng = random.Random(20)
    for _ in range(100):
        p, chi = random_param(rng), random_character(rng)
        assert adjoint(twist(p, chi)) == adjoint(p)


def test_dual_distributes_over_tensor():
    rng = random.Random(21)
    for _ in range(100):
        p, q = random_param(rng), sym_power(random_param(rng), rng.randint(0, 3))
        assert dual(tensor(p, q)) == tensor(dual(p), dual(q))


def test_ext_square_of_sym3():
    rng = random.Random(22)
    for _ in range(200):
        p = random_param(rng)
        w = p.central
        assert ext_square(sym_power(p, 3)) == isobaric_sum(twist(sym_power(p, 4), w), P(w**3))


# endregion


# ============================================================================
# region -------- Steinberg-type parameters --------
# ============================================================================


ST = SteinbergParam([(1, 2)])


def test_steinberg_blocks_are_sorted():
    assert SteinbergParam([(3, 2), (3, 4)]) == SteinbergParam([SteinbergBlock(3, 4), SteinbergBlock(3, 2)])
    assert SteinbergParam([(3, 2), (3, 4)]).block_sizes() == (4, 2)
    assert SteinbergParam([(3, 2), (3, 4)]).dimension == 6
    with pytest.raises(ValueError, match="positive"):
        SteinbergBlock(0, 0)


@pytest.mark.parametrize(
    ("k", "expected"),
    [
        pytest.param(1, SteinbergParam([(1, 2)]), id="sym1"),
        pytest.param(3, SteinbergParam([(3, 4)]), id="sym3"),
        pytest.param(5, SteinbergParam([(5, 6)]), id="sym5"),
    ],
)
def test_steinberg_sym(k: int, expected: SteinbergParam):
    assert steinberg_sym(k, ST) == expected


def test_steinberg_sym_errors():
    with pytest.raises(ValueError, match="positive"):
        steinberg_sym(0, ST)
    with pytest.raises(ValueError, match="single block"):
        steinberg_sym(2, SteinbergParam([(0, 3)]))


def test_steinberg_adjoint_tensor():
    assert steinberg_adjoint(ST) == SteinbergParam([(0, 3)])
    product = steinberg_twist(steinberg_tensor(steinberg_adjoint(ST), ST), 2)
    assert product == SteinbergParam([(3, 4), (3, 2)])
    assert product.lambda_exponents() == frozenset({3})


def test_steinberg_tensor_clebsch_gordan():
    assert steinberg_tensor(SteinbergParam([(0, 2)]), SteinbergParam([(0, 2)])).block_sizes() == (3, 1)
    assert steinberg_tensor(SteinbergParam([(0, 3)]), SteinbergParam([(0, 3)])).block_sizes() == (5, 3, 1)


def test_steinberg_json():
    p = SteinbergParam([(3, 4), (3, 2)])
    assert SteinbergParam.from_json(p.to_json()) == p
    with pytest.raises(ValueError, match="blocks"):
        SteinbergParam.from_json({})


# endregion


# ============================================================================
# region -------- Archimedean parameters --------
# ============================================================================


def test_arch_sym_power_and_adjoint():
    sigma = ArchParam([(1, 0), (-1, 0)])
    assert arch_sym_power(sigma, 5).angular_exponents() == (-5, -3, -1, 1, 3, 5)
    assert arch_adjoint(sigma).angular_exponents() == (-2, 0, 2)
    assert arch_tensor(arch_adjoint(sigma), sigma).angular_exponents() == (-3, -1, -1, 1, 1, 3)


def test_arch_two_s_parsing():
    p = ArchParam([(0, "1/2"), (0, "-1/2")])
    assert p.exponents_of_two_s() == (Fraction(-1, 2), Fraction(1, 2))
    assert p.dual() == p
    assert p.to_json() == {"exponents": [{"m": 0, "two_s": "-1/2"}, {"m": 0, "two_s": "1/2"}]}


def test_equivalent_up_to_twist():
    p = ArchParam([(1, 0), (-3, Fraction(1, 3))])
    assert equivalent_up_to_twist(p, p.twist(3, Fraction(1, 2)))
    assert not equivalent_up_to_twist(p, ArchParam([(1, 0), (-2, 0)]))
    assert not equivalent_up_to_twist(p, ArchParam([(1, 0)]))


def test_arch_pair_dimension():
    with pytest.raises(ValueError, match="dimension 2"):
        arch_adjoint(ArchParam([(0, 0)]))


# endregion


# ============================================================================
# region -------- Cyclic character models --------
# ============================================================================


def test_abstract_character_reduction():
    chi = AbstractCharacter(10, 13)
    assert chi.exponent == 3
    assert chi.order == 10
    assert AbstractCharacter(10, 4).order == 5
    assert AbstractCharacter(6, 6).is_trivial()


def test_abstract_character_group_law():
    product = AbstractCharacter(4, 1) * AbstractCharacter(6, 1)
    assert (product.order_modulus, product.exponent, product.order) == (12, 5, 12)

    nu = AbstractCharacter(2, 1, ramified=True)
    assert (nu * nu).is_trivial()
    assert not (nu * nu).ramified
    assert (AbstractCharacter(5, 2) ** 3).exponent == 1
    assert AbstractCharacter(5, 2).inverse() == AbstractCharacter(5, 3)


def test_abstract_character_lift():
    assert AbstractCharacter(2, 1).lift(6) == AbstractCharacter(6, 3)
    with pytest.raises(ValueError, match="not a multiple"):
        AbstractCharacter(2, 1).lift(3)
    with pytest.raises(ValueError, match="positive"):
        AbstractCharacter(0, 1)


# endregion
