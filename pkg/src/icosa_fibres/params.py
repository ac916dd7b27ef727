# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""Local parameters and their functorial operations.

Unramified parameters are multisets of nonzero cyclotomic numbers (the inverse roots of an Euler factor). Steinberg
parameters are tracked only by the exponent of a symbolic twisting character and the size of an SL(2) Jordan block.
Archimedean parameters are multisets of characters (z/|z|)^m |z|^(2s) of C^*, stored as (m, 2s). Ramified characters
in the finite case analyses are modelled by AbstractCharacter, a character of a cyclic group Z/N.
"""

from __future__ import annotations

import functools
import itertools
import math
import operator
from dataclasses import dataclass
from fractions import Fraction

from icosa_fibres.exactnum import ONE, Cyclo, cyclo_from_json, parse_rational


__all__ = (
    # -- unramified
    "UnramifiedParam",
    "adjoint",
    "dual",
    "ext_square",
    "isobaric_sum",
    "multiset_equal",
    "sym_power",
    "tensor",
    "twist",
    # -- Steinberg
    "SteinbergBlock",
    "SteinbergParam",
    "steinberg_adjoint",
    "steinberg_sym",
    "steinberg_tensor",
    "steinberg_twist",
    # -- archimedean
    "ArchParam",
    "arch_adjoint",
    "arch_sym_power",
    "arch_tensor",
    "equivalent_up_to_twist",
    # -- cyclic models
    "AbstractCharacter",
)

TYPE_CHECKING = False

if TYPE_CHECKING:
    import collections.abc as coll_abc
    import typing


# ============================================================================
# region -------- Unramified parameters --------
# ============================================================================


def _as_cyclo(value: typing.Union[Cyclo, int, Fraction]) -> Cyclo:
    if isinstance(value, Cyclo):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Cyclo.rational(value)
    msg = f"expected a Cyclo, int or Fraction, got {type(value).__name__}"
    raise TypeError(msg)


class UnramifiedParam:
    """A multiset of nonzero inverse roots, kept sorted by Cyclo.sort_key().

    Equality is multiset equality; the class is hashable and immutable.
    """

    __slots__ = ("_roots",)

    _roots: tuple[Cyclo, ...]

    def __init__(self, inverse_roots: coll_abc.Iterable[typing.Union[Cyclo, int, Fraction]]) -> None:
        roots = tuple(sorted((_as_cyclo(r) for r in inverse_roots), key=Cyclo.sort_key))
        if not roots:
            msg = "a parameter has dimension at least 1"
            raise ValueError(msg)
        if any(r.is_zero() for r in roots):
            msg = "inverse roots must be nonzero"
            raise ValueError(msg)
        self._roots = roots

    @property
    def inverse_roots(self) -> tuple[Cyclo, ...]:
        return self._roots

    @property
    def dimension(self) -> int:
        return len(self._roots)

    @property
    def central(self) -> Cyclo:
        """The product of the inverse roots, i.e. the value of the central character."""

        return functools.reduce(operator.mul, self._roots, ONE)

    def pair(self) -> tuple[Cyclo, Cyclo]:
        """The two entries of a dimension-2 parameter, in canonical order."""

        _require_dimension(self, 2, "pair")
        return self._roots[0], self._roots[1]

    def __iter__(self) -> coll_abc.Iterator[Cyclo]:
        return iter(self._roots)

    def __len__(self) -> int:
        return len(self._roots)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnramifiedParam):
            return NotImplemented
        return self._roots == other._roots

    def __hash__(self) -> int:
        return hash(self._roots)

    def __repr__(self) -> str:
        return f"{type(self).__name__}([{', '.join(r.to_text() for r in self._roots)}])"

    def to_json(self) -> dict[str, typing.Any]:
        return {"inverse_roots": [r.to_json() for r in self._roots]}

    @classmethod
    def from_json(cls, obj: object) -> UnramifiedParam:
        if not isinstance(obj, dict) or not isinstance(obj.get("inverse_roots"), list):  # pyright: ignore
            msg = "expected an object with an 'inverse_roots' list"
            raise ValueError(msg)
        return cls(cyclo_from_json(r) for r in obj["inverse_roots"])  # pyright: ignore [reportUnknownVariableType]


def _require_dimension(p: UnramifiedParam, dimension: int, op: str) -> None:
    if p.dimension != dimension:
        msg = f"{op} needs a parameter of dimension {dimension}, got dimension {p.dimension}"
        raise ValueError(msg)


def sym_power(p: UnramifiedParam, m: int) -> UnramifiedParam:
    """{a^j b^(m-j) : 0 ≤ j ≤ m} for p = {a, b}."""

    _require_dimension(p, 2, "sym_power")
    if m < 0:
        msg = "symmetric power exponent must be non-negative"
        raise ValueError(msg)
    a, b = p.pair()
    return UnramifiedParam(a**j * b ** (m - j) for j in range(m + 1))


def adjoint(p: UnramifiedParam) -> UnramifiedParam:
    """{a/b, 1, b/a} for p = {a, b}."""

    _require_dimension(p, 2, "adjoint")
    a, b = p.pair()
    ratio = a / b
    return UnramifiedParam((ratio, ONE, ratio.inverse()))


def tensor(p1: UnramifiedParam, p2: UnramifiedParam) -> UnramifiedParam:
    return UnramifiedParam(x * y for x in p1 for y in p2)


def twist(p: UnramifiedParam, x: typing.Union[Cyclo, int, Fraction]) -> UnramifiedParam:
    x = _as_cyclo(x)
    if x.is_zero():
        msg = "cannot twist by zero"
        raise ValueError(msg)
    return UnramifiedParam(r * x for r in p)


def isobaric_sum(*params: UnramifiedParam) -> UnramifiedParam:
    return UnramifiedParam(itertools.chain.from_iterable(params))


def dual(p: UnramifiedParam) -> UnramifiedParam:
    return UnramifiedParam(r.inverse() for r in p)


def ext_square(p: UnramifiedParam) -> UnramifiedParam:
    """Products over unordered pairs of distinct indices."""

    if p.dimension < 2:
        msg = "exterior square needs dimension at least 2"
        raise ValueError(msg)
    return UnramifiedParam(x * y for x, y in itertools.combinations(p.inverse_roots, 2))


def multiset_equal(p1: UnramifiedParam, p2: UnramifiedParam) -> bool:
    return p1 == p2


# endregion


# ============================================================================
# region -------- Steinberg-type parameters --------
# ============================================================================


@dataclass(frozen=True, order=True)
class SteinbergBlock:
    """λ^lambda_exp ⊗ sym^(size-1)(st) for a symbolic character λ."""

    lambda_exp: int
    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            msg = "block sizes are positive"
            raise ValueError(msg)

    def to_json(self) -> dict[str, int]:
        return {"lambda_exp": self.lambda_exp, "size": self.size}


@dataclass(frozen=True)
class SteinbergParam:
    blocks: tuple[SteinbergBlock, ...]

    def __init__(self, blocks: coll_abc.Iterable[typing.Union[SteinbergBlock, tuple[int, int]]]) -> None:
        normalised = sorted(b if isinstance(b, SteinbergBlock) else SteinbergBlock(*b) for b in blocks)
        object.__setattr__(self, "blocks", tuple(normalised))

    @property
    def dimension(self) -> int:
        return sum(b.size for b in self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(sorted((b.size for b in self.blocks), reverse=True))

    def lambda_exponents(self) -> frozenset[int]:
        return frozenset(b.lambda_exp for b in self.blocks)

    def to_json(self) -> dict[str, typing.Any]:
        return {"blocks": [b.to_json() for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: typing.Any) -> SteinbergParam:
        try:
            return cls((int(b["lambda_exp"]), int(b["size"])) for b in obj["blocks"])
        except (KeyError, TypeError) as exc:
            msg = "expected an object with a 'blocks' list of {lambda_exp, size}"
            raise ValueError(msg) from exc


def steinberg_twist(p: SteinbergParam, lambda_exp: int) -> SteinbergParam:
    return SteinbergParam(SteinbergBlock(b.lambda_exp + lambda_exp, b.size) for b in p.blocks)


def steinberg_tensor(p1: SteinbergParam, p2: SteinbergParam) -> SteinbergParam:
    """Tensor product, splitting each pair of Jordan blocks by Clebsch–Gordan."""

    out: list[SteinbergBlock] = []
    for x, y in itertools.product(p1.blocks, p2.blocks):
        exp = x.lambda_exp + y.lambda_exp
        out.extend(SteinbergBlock(exp, size) for size in range(x.size + y.size - 1, abs(x.size - y.size), -2))
    return SteinbergParam(out)


def _single_st_block(base: SteinbergParam) -> SteinbergBlock:
    if len(base.blocks) != 1 or base.blocks[0].size != 2:
        msg = f"expected a single block λ⊗st of size 2, got sizes {list(base.block_sizes())}"
        raise ValueError(msg)
    return base.blocks[0]


def steinberg_sym(k: int, base: SteinbergParam) -> SteinbergParam:
    """sym^k(λ⊗st) = λ^k ⊗ sym^k(st)."""

    if k < 1:
        msg = "k must be positive"
        raise ValueError(msg)
    block = _single_st_block(base)
    return SteinbergParam([SteinbergBlock(block.lambda_exp * k, k + 1)])


def steinberg_adjoint(base: SteinbergParam) -> SteinbergParam:
    """Ad(λ⊗st) = 1 ⊗ sym²(st); the twist drops out."""

    _single_st_block(base)
    return SteinbergParam([SteinbergBlock(0, 3)])


# endregion


# ============================================================================
# region -------- Archimedean parameters --------
# ============================================================================


ArchExponent = tuple[int, Fraction]


@dataclass(frozen=True)
class ArchParam:
    """A multiset of characters (z/|z|)^m |z|^(2s) of C^*, each stored as (m, 2s)."""

    exponents: tuple[ArchExponent, ...]

    def __init__(self, exponents: coll_abc.Iterable[tuple[int, typing.Union[int, Fraction, str]]]) -> None:
        normalised = sorted(
            (int(m), parse_rational(two_s) if isinstance(two_s, str) else Fraction(two_s)) for m, two_s in exponents
        )
        object.__setattr__(self, "exponents", tuple(normalised))

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    def exponents_of_two_s(self) -> tuple[Fraction, ...]:
        return tuple(sorted(two_s for _, two_s in self.exponents))

    def angular_exponents(self) -> tuple[int, ...]:
        return tuple(sorted(m for m, _ in self.exponents))

    def twist(self, m: int, two_s: typing.Union[int, Fraction] = 0) -> ArchParam:
        return ArchParam((e_m + m, e_s + two_s) for e_m, e_s in self.exponents)

    def dual(self) -> ArchParam:
        return ArchParam((-m, -two_s) for m, two_s in self.exponents)

    def to_json(self) -> dict[str, typing.Any]:
        return {"exponents": [{"m": m, "two_s": str(two_s)} for m, two_s in self.exponents]}


def _arch_pair(p: ArchParam, op: str) -> tuple[ArchExponent, ArchExponent]:
    if p.dimension != 2:
        msg = f"{op} needs an archimedean parameter of dimension 2, got dimension {p.dimension}"
        raise ValueError(msg)
    return p.exponents[0], p.exponents[1]


def arch_sym_power(p: ArchParam, k: int) -> ArchParam:
    (m1, s1), (m2, s2) = _arch_pair(p, "arch_sym_power")
    return ArchParam((j * m1 + (k - j) * m2, j * s1 + (k - j) * s2) for j in range(k + 1))


def arch_adjoint(p: ArchParam) -> ArchParam:
    (m1, s1), (m2, s2) = _arch_pair(p, "arch_adjoint")
    return ArchParam([(m1 - m2, s1 - s2), (0, Fraction(0)), (m2 - m1, s2 - s1)])


def arch_tensor(p1: ArchParam, p2: ArchParam) -> ArchParam:
    return ArchParam((m1 + m2, s1 + s2) for (m1, s1), (m2, s2) in itertools.product(p1.exponents, p2.exponents))


def equivalent_up_to_twist(p1: ArchParam, p2: ArchParam) -> bool:
    """Whether p2 is p1 twisted by a single character of C^*, i.e. a common shift of all exponents."""

    if p1.dimension != p2.dimension:
        return False
    # Translation preserves the sorted order, so the smallest entries must correspond.
    (m1, s1), (m2, s2) = p1.exponents[0], p2.exponents[0]
    return p1.twist(m2 - m1, s2 - s1) == p2


# endregion


# ============================================================================
# region -------- Cyclic character models --------
# ============================================================================


@dataclass(frozen=True)
class AbstractCharacter:
    """The character k ↦ exp(2πi·exponent·k/N) of Z/N, standing in for a (possibly ramified) local character."""

    order_modulus: int
    exponent: int
    ramified: bool = False

    def __post_init__(self) -> None:
        if self.order_modulus < 1:
            msg = "order_modulus must be positive"
            raise ValueError(msg)
        object.__setattr__(self, "exponent", self.exponent % self.order_modulus)

    @property
    def order(self) -> int:
        return self.order_modulus // math.gcd(self.exponent, self.order_modulus)

    def is_trivial(self) -> bool:
        return self.exponent == 0

    def lift(self, modulus: int) -> AbstractCharacter:
        if modulus % self.order_modulus:
            msg = f"{modulus} is not a multiple of {self.order_modulus}"
            raise ValueError(msg)
        return AbstractCharacter(modulus, self.exponent * (modulus // self.order_modulus), self.ramified)

    def __mul__(self, other: object) -> AbstractCharacter:
        if not isinstance(other, AbstractCharacter):
            return NotImplemented
        modulus = math.lcm(self.order_modulus, other.order_modulus)
        x, y = self.lift(modulus), other.lift(modulus)
        product = AbstractCharacter(modulus, x.exponent + y.exponent)
        # A product is ramified unless it is trivial or both factors are unramified.
        ramified = (self.ramified or other.ramified) and not product.is_trivial()
        return AbstractCharacter(modulus, product.exponent, ramified)

    def __pow__(self, k: int) -> AbstractCharacter:
        power = AbstractCharacter(self.order_modulus, self.exponent * k)
        return AbstractCharacter(power.order_modulus, power.exponent, self.ramified and not power.is_trivial())

    def inverse(self) -> AbstractCharacter:
        return self**-1

    def to_json(self) -> dict[str, typing.Any]:
        return {"order_modulus": self.order_modulus, "exponent": self.exponent, "ramified": self.ramified}


# endregion
