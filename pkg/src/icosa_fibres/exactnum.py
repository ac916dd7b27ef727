# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""Exact arithmetic in cyclotomic fields Q(ζ_n), their Galois automorphisms, and abelian number field descriptors.

Elements are stored as residues of polynomials in ζ_n modulo the n-th cyclotomic polynomial Φ_n, with an integer
numerator vector and a single positive denominator. Every construction is normalised eagerly: the conductor is made
minimal and the numerator/denominator are made coprime. Equal field elements therefore have identical
representations, which is what makes hashing, multiset comparison and field_of() sound.
"""

from __future__ import annotations

import contextvars
import functools
import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction

from icosa_fibres._lazy import lazy_import_module


__all__ = (
    "CONDUCTOR_WARN_LIMIT",
    "ONE",
    "QSQRT5",
    "RATIONALS",
    "ZERO",
    "Cyclo",
    "GaloisError",
    "NumberFieldDesc",
    "NumericPrecisionContext",
    "cyclo_from_json",
    "cyclo_make",
    "compositum",
    "field_of",
    "galois_apply",
    "golden_ratio",
    "numeric_precision",
    "parse_rational",
    "real_subfield",
)

TYPE_CHECKING = False

if TYPE_CHECKING:
    import collections.abc as coll_abc
    import typing

    import mpmath
    import sympy
else:
    mpmath = lazy_import_module("mpmath")
    sympy = lazy_import_module("sympy")


CONDUCTOR_WARN_LIMIT = 1000
"""Conductors above this are outside the desk-scale range the arithmetic is tuned for."""


class GaloisError(ValueError):
    """An automorphism exponent is not a unit modulo the conductor."""


# ============================================================================
# region -------- Cyclotomic tables --------
# ============================================================================


@functools.lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of Φ_n, lowest degree first."""

    x = sympy.Symbol("x")
    poly = sympy.cyclotomic_poly(n, x, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _degree(n: int) -> int:
    return len(_cyclotomic_coeffs(n)) - 1


@functools.lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Residues of x^j modulo Φ_n for j in range(n)."""

    phi = _cyclotomic_coeffs(n)
    deg = len(phi) - 1
    current = [0] * deg
    current[0] = 1
    rows: list[tuple[int, ...]] = []
    for _ in range(n):
        rows.append(tuple(current))
        top = current[-1]
        current = [0, *current[:-1]]
        if top:
            for i in range(deg):
                current[i] -= top * phi[i]
    return tuple(rows)


@functools.lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    return tuple(int(p) for p in sympy.primefactors(n))


@functools.lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    """Residues of (Z/n)^*, as integers in range(n). For n == 1 this is (0,)."""

    return tuple(k for k in range(n) if math.gcd(k, n) == 1)


def _reduce(n: int, acc: list[int]) -> list[int]:
    """Fold a length-n vector of coefficients of ζ_n^e (e mod n) into the Φ_n-residue basis."""

    deg = _degree(n)
    out = acc[:deg]
    table = _power_table(n)
    for e in range(deg, n):
        c = acc[e]
        if c:
            row = table[e]
            for i in range(deg):
                out[i] += c * row[i]
    return out


def _embed(num: tuple[int, ...], d: int, n: int) -> list[int]:
    """Embed a Φ_d-residue numerator vector into Q(ζ_n), d | n."""

    if d == n:
        return list(num)
    step = n // d
    acc = [0] * n
    for u, c in enumerate(num):
        if c:
            acc[u * step % n] += c
    return _reduce(n, acc)


def _descend(n: int, p: int, num: tuple[int, ...]) -> typing.Optional[tuple[tuple[int, ...], int]]:
    """Try to rewrite an element of Q(ζ_n) in Q(ζ_{n/p}).

    Returns the new numerator vector and a factor to multiply the denominator by, or None if the element does not lie
    in the subfield. The test projects onto the subfield with the normalised relative trace and checks the projection
    is the element itself.
    """

    d = n // p
    if n % (p * p) == 0:
        # The relative trace kills ζ_n^j for p ∤ j and fixes the rest.
        if any(c for j, c in enumerate(num) if j % p):
            return None
        return tuple(num[::p]), 1

    # n = d·p with p ∤ d: ζ_n^j = ζ_d^u · ζ_p^v where j ≡ u·p + v·d (mod n).
    inv_p = pow(p, -1, d)
    inv_d = pow(d, -1, p)
    acc = [0] * d
    for j, c in enumerate(num):
        if c:
            u = j * inv_p % d
            v = j * inv_d % p
            acc[u] += c * (p - 1) if v == 0 else -c
    projected = _reduce(d, acc)
    if _embed(tuple(projected), d, n) != [c * (p - 1) for c in num]:
        return None
    return tuple(projected), p - 1


# endregion


# ============================================================================
# region -------- Cyclo --------
# ============================================================================


_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse the rational grammar: optional sign, decimal digits, optional "/" and positive decimal digits."""

    if not isinstance(text, str) or _RATIONAL_RE.fullmatch(text) is None:
        msg = f"not a rational literal: {text!r}"
        raise ValueError(msg)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        msg = f"zero denominator in rational literal: {text!r}"
        raise ValueError(msg) from None


_numeric_dps: contextvars.ContextVar[int] = contextvars.ContextVar("_numeric_dps", default=30)
"""Decimal digits used by Cyclo.to_complex()."""


class NumericPrecisionContext:
    """The context manager returned by numeric_precision(). Restores the previous precision on exit."""

    def __init__(self, _dps_ctx_tok: contextvars.Token[int]) -> None:
        self._tok = _dps_ctx_tok

    def __enter__(self) -> NumericPrecisionContext:
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.reset()

    def reset(self) -> None:
        """Restore the previous precision. If already reset, does nothing."""

        try:
            tok = self._tok
        except AttributeError:
            pass
        else:
            _numeric_dps.reset(tok)
            del self._tok


def numeric_precision(dps: int) -> NumericPrecisionContext:
    """Set the number of decimal digits used for numeric embeddings in the current context."""

    if dps < 1:
        msg = "precision must be at least one digit"
        raise ValueError(msg)
    return NumericPrecisionContext(_numeric_dps.set(dps))


class Cyclo:
    """An exact element of a cyclotomic field Q(ζ_n), in canonical (minimal conductor) form.

    Parameters
    ----------
    conductor: int
        The n of Q(ζ_n) the coefficients are given in. Need not be minimal.
    coeffs: Iterable[int | Fraction | str]
        Coefficients of 1, ζ_n, ..., ζ_n^(φ(n)-1), i.e. the residue modulo Φ_n. Strings follow the rational grammar.
    """

    __slots__ = ("_conductor", "_den", "_hash", "_key", "_num")

    _conductor: int
    _num: tuple[int, ...]
    _den: int
    _hash: int
    _key: typing.Optional[tuple[int, tuple[Fraction, ...]]]

    def __init__(self, conductor: int, coeffs: coll_abc.Iterable[typing.Union[int, Fraction, str]]) -> None:
        if conductor < 1:
            msg = "conductor must be positive"
            raise ValueError(msg)
        values = [parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coeffs]
        if len(values) != _degree(conductor):
            msg = f"expected {_degree(conductor)} coefficients for conductor {conductor}, got {len(values)}"
            raise ValueError(msg)
        den = math.lcm(1, *(v.denominator for v in values))
        num = [int(v * den) for v in values]
        self._assign(*_normalise(conductor, num, den))

    def _assign(self, conductor: int, num: tuple[int, ...], den: int) -> None:
        self._conductor = conductor
        self._num = num
        self._den = den
        self._hash = hash((conductor, num, den))
        self._key = None

    @classmethod
    def _make(cls, conductor: int, num: list[int], den: int = 1) -> Cyclo:
        self = object.__new__(cls)
        self._assign(*_normalise(conductor, num, den))
        return self

    @classmethod
    def _from_canonical(cls, conductor: int, num: tuple[int, ...], den: int) -> Cyclo:
        self = object.__new__(cls)
        self._assign(conductor, num, den)
        return self

    @classmethod
    def rational(cls, value: typing.Union[int, Fraction, str]) -> Cyclo:
        """Embed a rational number."""

        r = parse_rational(value) if isinstance(value, str) else Fraction(value)
        return cls._make(1, [r.numerator], r.denominator)

    # -------- Accessors

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients in the Φ_n-residue basis, length φ(conductor)."""

        return tuple(Fraction(c, self._den) for c in self._num)

    def sort_key(self) -> tuple[int, tuple[Fraction, ...]]:
        """Global order used for canonical multisets: conductor, then coefficients lexicographically."""

        if self._key is None:
            self._key = (self._conductor, self.coeffs)
        return self._key

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return self._conductor == 1

    def to_fraction(self) -> Fraction:
        if self._conductor != 1:
            msg = f"{self} is not rational"
            raise ValueError(msg)
        return Fraction(self._num[0], self._den)

    def multiplicative_order(self) -> typing.Optional[int]:
        """The order of the element if it is a root of unity, else None."""

        if self.is_zero():
            return None
        n = self._conductor
        # Roots of unity in Q(ζ_n) with n minimal have order dividing lcm(2, n).
        bound = n if n % 2 == 0 else 2 * n
        if self**bound != ONE:
            return None
        return next(int(d) for d in sympy.divisors(bound) if self ** int(d) == ONE)

    # -------- Arithmetic

    def _lift(self, n: int) -> list[int]:
        return _embed(self._num, self._conductor, n)

    def __add__(self, other: object) -> Cyclo:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        n = math.lcm(self._conductor, rhs._conductor)
        a, b = self._lift(n), rhs._lift(n)
        num = [x * rhs._den + y * self._den for x, y in zip(a, b)]
        return Cyclo._make(n, num, self._den * rhs._den)

    __radd__ = __add__

    def __neg__(self) -> Cyclo:
        return Cyclo._from_canonical(self._conductor, tuple(-c for c in self._num), self._den)

    def __sub__(self, other: object) -> Cyclo:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Cyclo:
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> Cyclo:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs._conductor == 1 and self._conductor == 1:
            return Cyclo._make(1, [self._num[0] * rhs._num[0]], self._den * rhs._den)
        return _product(self, rhs)

    __rmul__ = __mul__

    def inverse(self) -> Cyclo:
        """Multiplicative inverse. Raises ZeroDivisionError for zero."""

        if self.is_zero():
            msg = "inversion of zero"
            raise ZeroDivisionError(msg)
        return _inverse(self)

    def __truediv__(self, other: object) -> Cyclo:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> Cyclo:
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> Cyclo:
        if not isinstance(exponent, int):  # pyright: ignore [reportUnnecessaryIsInstance]
            return NotImplemented
        base = self.inverse() if exponent < 0 else self
        exponent = abs(exponent)
        result = ONE
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def conj(self) -> Cyclo:
        """Complex conjugation, i.e. the automorphism ζ ↦ ζ^-1."""

        return galois_apply(self, -1)

    # -------- Comparison and hashing

    def __eq__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self._conductor == rhs._conductor and self._den == rhs._den and self._num == rhs._num

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -------- Rendering

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._conductor}, {[str(c) for c in self.coeffs]!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Render as a polynomial in zeta_n, e.g. ``1 + zeta_5 - 1/2*zeta_5^3``."""

        n = self._conductor
        parts: list[str] = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            monomial = "" if j == 0 else (f"zeta_{n}" if j == 1 else f"zeta_{n}^{j}")
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts) if parts else "0"

    def to_json(self) -> dict[str, typing.Any]:
        return {"conductor": self._conductor, "coeffs": [str(c) for c in self.coeffs]}

    def to_complex(self, dps: typing.Optional[int] = None) -> mpmath.mpc:
        """Numeric value under ζ_n ↦ exp(2πi/n). For test oracles and display only."""

        n = self._conductor
        with mpmath.workdps(dps or _numeric_dps.get()):
            total = mpmath.mpc(0)
            for j, c in enumerate(self._num):
                if c:
                    total += c * mpmath.expjpi(mpmath.mpf(2 * j) / n)
            return total / self._den


def _normalise(n: int, num: list[int], den: int) -> tuple[int, tuple[int, ...], int]:
    """Make the representation canonical: coprime numerator/denominator, positive denominator, minimal conductor."""

    if den < 0:
        num = [-c for c in num]
        den = -den
    if not any(num):
        return 1, (0,), 1
    if n > CONDUCTOR_WARN_LIMIT:
        msg = f"conductor {n} is beyond the supported desk-scale range"
        warnings.warn(msg, RuntimeWarning, stacklevel=4)

    vec = tuple(num)
    while n > 1:
        for p in _prime_factors(n):
            descended = _descend(n, p, vec)
            if descended is not None:
                vec, factor = descended
                den *= factor
                n //= p
                break
        else:
            break

    g = math.gcd(den, *vec)
    if g > 1:
        vec = tuple(c // g for c in vec)
        den //= g
    return n, vec, den


def _coerce(value: object) -> typing.Optional[Cyclo]:
    if isinstance(value, Cyclo):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return Cyclo.rational(value)
    return None


# Sweeps multiply the same few dozen roots of unity over and over.
@functools.lru_cache(maxsize=1 << 16)
def _product(x: Cyclo, y: Cyclo) -> Cyclo:
    n = math.lcm(x._conductor, y._conductor)
    a, b = x._lift(n), y._lift(n)
    acc = [0] * n
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                if v:
                    acc[(i + j) % n] += u * v
    return Cyclo._make(n, _reduce(n, acc), x._den * y._den)


@functools.lru_cache(maxsize=4096)
def _inverse(x: Cyclo) -> Cyclo:
    n = x._conductor
    if n == 1:
        return Cyclo.rational(Fraction(x._den, x._num[0]))

    var = sympy.Symbol("x")
    modulus = sympy.Poly(list(reversed(_cyclotomic_coeffs(n))), var, domain="QQ")
    value = sympy.Poly(list(reversed(x._num)), var, domain="QQ")
    inverted = value.invert(modulus)
    values = [Fraction(int(c.p), int(c.q)) for c in reversed(inverted.all_coeffs())]
    values += [Fraction(0)] * (_degree(n) - len(values))

    # x = num/den, so x^-1 = den · num^-1.
    den = math.lcm(1, *(v.denominator for v in values))
    return Cyclo._make(n, [int(v * den) * x._den for v in values], den)


ONE = Cyclo.rational(1)
ZERO = Cyclo.rational(0)


@functools.lru_cache(maxsize=4096)
def cyclo_make(n: int, k: int) -> Cyclo:
    """Return ζ_n^k in canonical form."""

    if n < 1:
        msg = "n must be positive"
        raise ValueError(msg)
    k %= n
    g = math.gcd(k, n)
    m, k = n // g, k // g
    return Cyclo._make(m, list(_power_table(m)[k]))


def golden_ratio() -> Cyclo:
    """The golden ratio (1 + √5)/2, as 1 + ζ5 + ζ5⁴."""

    return 1 + cyclo_make(5, 1) + cyclo_make(5, 4)


def galois_apply(x: Cyclo, k: int) -> Cyclo:
    """Apply the automorphism ζ_n ↦ ζ_n^k of Q(ζ_n), n = x.conductor."""

    n = x.conductor
    if math.gcd(k, n) != 1:
        msg = f"exponent {k} is not coprime to the conductor {n}"
        raise GaloisError(msg)
    k %= n
    if n == 1 or k == 1:
        return x
    acc = [0] * n
    for j, c in enumerate(x._num):  # pyright: ignore [reportPrivateUsage]
        if c:
            acc[j * k % n] += c
    # Automorphisms preserve the conductor and the content of the numerator.
    return Cyclo._from_canonical(n, tuple(_reduce(n, acc)), x._den)  # pyright: ignore [reportPrivateUsage]


def cyclo_from_json(obj: object) -> Cyclo:
    """Decode a Cyclo from its JSON form.

    Besides ``{"conductor": n, "coeffs": [...]}``, the shorthand ``{"zeta": [n, k]}`` for ζ_n^k and bare rationals
    (an integer or a rational string) are accepted.
    """

    if isinstance(obj, bool):
        msg = "booleans are not field elements"
        raise TypeError(msg)
    if isinstance(obj, int):
        return Cyclo.rational(obj)
    if isinstance(obj, str):
        return Cyclo.rational(parse_rational(obj))
    if isinstance(obj, dict):
        if "zeta" in obj:
            pair = obj["zeta"]  # pyright: ignore [reportUnknownVariableType]
            if not (isinstance(pair, list) and len(pair) == 2 and all(type(v) is int for v in pair)):  # pyright: ignore
                msg = f"zeta shorthand must be [n, k], got {pair!r}"
                raise ValueError(msg)
            return cyclo_make(pair[0], pair[1])  # pyright: ignore [reportUnknownArgumentType]
        conductor = obj.get("conductor")  # pyright: ignore [reportUnknownMemberType, reportUnknownVariableType]
        coeffs = obj.get("coeffs")  # pyright: ignore [reportUnknownMemberType, reportUnknownVariableType]
        if type(conductor) is not int or not isinstance(coeffs, list):
            msg = "expected an object with an integer 'conductor' and a 'coeffs' list"
            raise ValueError(msg)
        if not all(isinstance(c, str) for c in coeffs):  # pyright: ignore [reportUnknownVariableType]
            msg = "coefficients must be rational strings"
            raise ValueError(msg)
        return Cyclo(conductor, coeffs)  # pyright: ignore [reportUnknownArgumentType]
    msg = f"cannot decode a field element from {type(obj).__name__}"
    raise TypeError(msg)


# endregion


# ============================================================================
# region -------- Abelian number fields --------
# ============================================================================


def _canonical_presentation(n: int, subgroup: frozenset[int]) -> tuple[int, frozenset[int]]:
    """Smallest d | n such that the fixed field of the subgroup lies in Q(ζ_d), with the subgroup's image mod d."""

    units = _units(n)
    for d in (int(v) for v in sympy.divisors(n)):
        kernel = (k for k in units if k % d == 1 % d)
        if all(k in subgroup for k in kernel):
            return d, frozenset(k % d for k in subgroup)
    raise AssertionError  # d == n always qualifies  # pragma: no cover


@dataclass(frozen=True)
class NumberFieldDesc:
    """An abelian number field: the fixed field inside Q(ζ_n) of a subgroup H of (Z/n)^*.

    The presentation is normalised on construction to the minimal conductor, so two descriptors compare equal exactly
    when they describe the same field.
    """

    conductor: int
    fixing_subgroup: frozenset[int]

    def __post_init__(self) -> None:
        n = self.conductor
        if n < 1:
            msg = "conductor must be positive"
            raise ValueError(msg)
        subgroup = frozenset(k % n for k in self.fixing_subgroup)
        if not subgroup or any(math.gcd(k, n) != 1 for k in subgroup):
            msg = f"fixing subgroup must be a non-empty set of units modulo {n}"
            raise ValueError(msg)
        if any((h * k) % n not in subgroup for h in subgroup for k in subgroup):
            msg = f"{sorted(subgroup)} is not closed under multiplication modulo {n}"
            raise ValueError(msg)
        conductor, subgroup = _canonical_presentation(n, subgroup)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "fixing_subgroup", subgroup)

    @property
    def degree(self) -> int:
        return len(_units(self.conductor)) // len(self.fixing_subgroup)

    def is_rational_field(self) -> bool:
        return self.conductor == 1

    def galois_group_residues(self) -> tuple[int, ...]:
        """Smallest representative of each coset of the fixing subgroup, i.e. one residue per automorphism."""

        n = self.conductor
        seen: set[int] = set()
        reps: list[int] = []
        for k in _units(n):
            if k not in seen:
                reps.append(k)
                seen.update((k * h) % n for h in self.fixing_subgroup)
        return tuple(reps)

    def lift(self, m: int) -> frozenset[int]:
        """The fixing subgroup, seen inside (Z/m)^* for a multiple m of the conductor."""

        if m % self.conductor:
            msg = f"{m} is not a multiple of the conductor {self.conductor}"
            raise ValueError(msg)
        return frozenset(k for k in _units(m) if k % self.conductor in self.fixing_subgroup)

    def contains(self, x: Cyclo) -> bool:
        m = math.lcm(self.conductor, x.conductor)
        return all(galois_apply(x, k % x.conductor) == x for k in self.lift(m))

    def issubfield(self, other: NumberFieldDesc) -> bool:
        m = math.lcm(self.conductor, other.conductor)
        return other.lift(m) <= self.lift(m)

    def to_json(self) -> dict[str, typing.Any]:
        return {"conductor": self.conductor, "subgroup": sorted(self.fixing_subgroup)}

    def __str__(self) -> str:
        n, subgroup = self.conductor, self.fixing_subgroup
        if n == 1:
            return "Q"
        if subgroup == {1}:
            return f"Q(zeta_{n})"
        if subgroup == {1, n - 1}:
            return f"Q(zeta_{n})^+"
        return f"Q(zeta_{n})^<{', '.join(map(str, sorted(subgroup)))}>"


RATIONALS = NumberFieldDesc(1, frozenset({0}))
QSQRT5 = NumberFieldDesc(5, frozenset({1, 4}))


def field_of(values: coll_abc.Iterable[Cyclo]) -> NumberFieldDesc:
    """The smallest abelian field containing all the given values."""

    values = tuple(values)
    n = math.lcm(1, *(v.conductor for v in values))
    stabiliser = frozenset(k for k in _units(n) if all(galois_apply(v, k % v.conductor) == v for v in values))
    return NumberFieldDesc(n, stabiliser)


def compositum(fields: coll_abc.Iterable[NumberFieldDesc]) -> NumberFieldDesc:
    """The smallest field containing all the given fields. The empty compositum is Q."""

    fields = tuple(fields)
    n = math.lcm(1, *(f.conductor for f in fields))
    subgroup = frozenset(_units(n))
    for f in fields:
        subgroup &= f.lift(n)
    return NumberFieldDesc(n, subgroup)


def real_subfield(field: NumberFieldDesc) -> NumberFieldDesc:
    """Adjoin complex conjugation to the fixing subgroup."""

    n = field.conductor
    return NumberFieldDesc(n, field.fixing_subgroup | {(-k) % n for k in field.fixing_subgroup})


# endregion
