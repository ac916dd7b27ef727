# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""The binary icosahedral group as exact 2x2 matrices over Q(ζ20), and the characters of its two faithful
2-dimensional representations.

The group is realised as the 120 unit icosians, with the quaternion a + bi + cj + dk sent to
[[a + bi, c + di], [-c + di, a - bi]] and i = ζ4. The Galois conjugate representation is obtained by applying the
automorphism ζ20 ↦ ζ20^13 entrywise, which fixes i and sends √5 to -√5.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, replace
from fractions import Fraction

from icosa_fibres.exactnum import ONE, ZERO, Cyclo, cyclo_make, galois_apply, golden_ratio
from icosa_fibres.params import UnramifiedParam


__all__ = (
    "CharacterVector",
    "ExactMatrix2",
    "GroupData",
    "IcosahedralIdentityReport",
    "binary_icosahedral_group",
    "build_group",
    "character_table_rows",
    "conjugacy_classes",
    "frobenius_params",
    "inner_product",
    "rep_character",
    "sym_character",
    "sym_irreducibility",
    "trivial_character",
    "verify_icosahedral_identities",
)

TYPE_CHECKING = False

if TYPE_CHECKING:
    import collections.abc as coll_abc
    import typing


GROUP_ORDER = 120
CONJUGATE_RESIDUE = 13


# ============================================================================
# region -------- Matrices --------
# ============================================================================


class ExactMatrix2:
    """An immutable 2x2 matrix [[a, b], [c, d]] of Cyclo entries."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, a: Cyclo, b: Cyclo, c: Cyclo, d: Cyclo) -> None:
        self._entries = (a, b, c, d)
        self._hash = hash(self._entries)

    @classmethod
    def identity(cls) -> ExactMatrix2:
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def from_quaternion(cls, a: Cyclo, b: Cyclo, c: Cyclo, d: Cyclo) -> ExactMatrix2:
        i = cyclo_make(4, 1)
        return cls(a + b * i, c + d * i, -c + d * i, a - b * i)

    @property
    def entries(self) -> tuple[Cyclo, Cyclo, Cyclo, Cyclo]:
        return self._entries

    def det(self) -> Cyclo:
        a, b, c, d = self._entries
        return a * d - b * c

    def trace(self) -> Cyclo:
        return self._entries[0] + self._entries[3]

    def inverse(self) -> ExactMatrix2:
        a, b, c, d = self._entries
        det = self.det()
        if det == ONE:
            return ExactMatrix2(d, -b, -c, a)
        inv = det.inverse()
        return ExactMatrix2(d * inv, -b * inv, -c * inv, a * inv)

    def __mul__(self, other: ExactMatrix2) -> ExactMatrix2:
        a, b, c, d = self._entries
        e, f, g, h = other._entries
        return ExactMatrix2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix2):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        a, b, c, d = (e.to_text() for e in self._entries)
        return f"{type(self).__name__}([[{a}, {b}], [{c}, {d}]])"

    def order(self) -> int:
        identity = ExactMatrix2.identity()
        power, k = self, 1
        while power != identity:
            power = power * self
            k += 1
        return k


# endregion


# ============================================================================
# region -------- Group construction --------
# ============================================================================


@dataclass(frozen=True)
class GroupData:
    """The group elements, and once conjugacy_classes() has run, its classes as tuples of element indices.

    Classes are ordered by element order, then class size, then the sort key of the character value; the identity
    class comes first.
    """

    elements: tuple[ExactMatrix2, ...]
    classes: tuple[tuple[int, ...], ...] = ()
    class_orders: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(cls) for cls in self.classes)

    @property
    def class_representatives(self) -> tuple[ExactMatrix2, ...]:
        return tuple(self.elements[cls[0]] for cls in self.classes)

    def index(self, element: ExactMatrix2) -> int:
        return self.elements.index(element)

    def inverse(self, i: int) -> int:
        return self.index(self.elements[i].inverse())


def _half(x: typing.Union[Cyclo, int]) -> Cyclo:
    return Cyclo.rational(Fraction(1, 2)) * x


def _even_permutations(n: int) -> coll_abc.Iterator[tuple[int, ...]]:
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        if inversions % 2 == 0:
            yield perm


def _unit_icosians() -> list[tuple[Cyclo, Cyclo, Cyclo, Cyclo]]:
    """The 120 unit icosians as quaternion coordinates (1, i, j, k)."""

    zero, one = ZERO, ONE
    phi = golden_ratio()
    phi_inv = phi - 1

    quaternions: list[tuple[Cyclo, Cyclo, Cyclo, Cyclo]] = []
    for pos in range(4):
        for sign in (one, -one):
            coords = [zero] * 4
            coords[pos] = sign
            quaternions.append((coords[0], coords[1], coords[2], coords[3]))

    half = _half(1)
    quaternions.extend(itertools.product((half, -half), repeat=4))  # pyright: ignore [reportArgumentType]

    base = (zero, _half(1), _half(phi_inv), _half(phi))
    for perm in _even_permutations(4):
        permuted = [base[p] for p in perm]
        nonzero = [i for i, v in enumerate(permuted) if v]
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            coords = list(permuted)
            for i, s in zip(nonzero, signs):
                coords[i] = coords[i] * s
            quaternions.append((coords[0], coords[1], coords[2], coords[3]))
    return quaternions


def _generators() -> tuple[ExactMatrix2, ExactMatrix2]:
    """An element of order 6, (1 + i + j + k)/2, and one of order 10, (φ + φ⁻¹i + j)/2."""

    phi = golden_ratio()
    half = _half(1)
    s = ExactMatrix2.from_quaternion(half, half, half, half)
    t = ExactMatrix2.from_quaternion(_half(phi), _half(phi - 1), half, ZERO)
    return s, t


def build_group() -> GroupData:
    """Construct the unit icosians and check they form a group.

    The check regenerates the group from two generators. Every product met along the way must already be one of the
    120 constructed elements, and the generated set must be all of them; a finite set closed under multiplication by
    generators is the group they generate.

    Raises
    ------
    RuntimeError
        If the construction is not closed, or an element does not have determinant 1.
    """

    elements = tuple(ExactMatrix2.from_quaternion(*q) for q in _unit_icosians())
    element_set = frozenset(elements)
    if len(element_set) != GROUP_ORDER:
        msg = f"expected {GROUP_ORDER} distinct icosians, got {len(element_set)}"
        raise RuntimeError(msg)
    if any(g.det() != ONE for g in elements):
        msg = "an icosian does not have determinant 1"
        raise RuntimeError(msg)

    generators = _generators()
    seen = {ExactMatrix2.identity()}
    frontier = list(seen)
    while frontier:
        next_frontier: list[ExactMatrix2] = []
        for g in frontier:
            for s in generators:
                h = g * s
                if h not in element_set:
                    msg = f"closure failure: {h!r} is not a unit icosian"
                    raise RuntimeError(msg)
                if h not in seen:
                    seen.add(h)
                    next_frontier.append(h)
        frontier = next_frontier

    if seen != element_set:
        msg = f"the generators only produce {len(seen)} of the {GROUP_ORDER} elements"
        raise RuntimeError(msg)
    return GroupData(elements)


def conjugacy_classes(group: GroupData) -> GroupData:
    """Partition the elements into conjugacy classes, as orbits under conjugation by the generators."""

    conjugators = [(s, s.inverse()) for s in _generators()]
    index = {g: i for i, g in enumerate(group.elements)}
    unassigned = set(range(group.order))
    classes: list[tuple[int, ...]] = []
    while unassigned:
        start = min(unassigned)
        orbit = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for s, s_inv in conjugators:
                j = index[s * group.elements[i] * s_inv]
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        unassigned -= orbit
        classes.append(tuple(sorted(orbit)))

    orders = [group.elements[cls[0]].order() for cls in classes]
    traces = [group.elements[cls[0]].trace() for cls in classes]
    ranking = sorted(range(len(classes)), key=lambda k: (orders[k], len(classes[k]), traces[k].sort_key()))
    return replace(
        group,
        classes=tuple(classes[k] for k in ranking),
        class_orders=tuple(orders[k] for k in ranking),
    )


_group_lock = threading.RLock()
_group_cache: typing.Optional[GroupData] = None


def binary_icosahedral_group() -> GroupData:
    """The group with its classes, built once per process."""

    global _group_cache  # noqa: PLW0603

    with _group_lock:
        if _group_cache is None:
            _group_cache = conjugacy_classes(build_group())
        return _group_cache


# endregion


# ============================================================================
# region -------- Characters --------
# ============================================================================


@dataclass(frozen=True)
class CharacterVector:
    """A class function: one value per conjugacy class, in the group's class order."""

    values: tuple[Cyclo, ...]
    class_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.class_sizes):
            msg = "one value per class is required"
            raise ValueError(msg)

    @property
    def dimension(self) -> Cyclo:
        return self.values[0]

    def _check_compatible(self, other: CharacterVector) -> None:
        if self.class_sizes != other.class_sizes:
            msg = "class functions on different class structures"
            raise ValueError(msg)

    def __add__(self, other: CharacterVector) -> CharacterVector:
        self._check_compatible(other)
        return CharacterVector(tuple(x + y for x, y in zip(self.values, other.values)), self.class_sizes)

    def __sub__(self, other: CharacterVector) -> CharacterVector:
        self._check_compatible(other)
        return CharacterVector(tuple(x - y for x, y in zip(self.values, other.values)), self.class_sizes)

    def __mul__(self, other: CharacterVector) -> CharacterVector:
        self._check_compatible(other)
        return CharacterVector(tuple(x * y for x, y in zip(self.values, other.values)), self.class_sizes)

    def galois(self, k: int) -> CharacterVector:
        return CharacterVector(tuple(galois_apply(v, k % v.conductor) for v in self.values), self.class_sizes)

    def conj(self) -> CharacterVector:
        return CharacterVector(tuple(v.conj() for v in self.values), self.class_sizes)

    def to_json(self) -> list[dict[str, typing.Any]]:
        return [v.to_json() for v in self.values]


def trivial_character(group: GroupData) -> CharacterVector:
    return CharacterVector((ONE,) * len(group.classes), group.class_sizes)


def rep_character(group: GroupData, automorphism_k: int = 1) -> CharacterVector:
    """The character of the defining representation ρ (k = 1) or of its Galois conjugate ρ' (k = 13)."""

    if automorphism_k not in (1, CONJUGATE_RESIDUE):
        msg = f"automorphism_k must be 1 or {CONJUGATE_RESIDUE}, got {automorphism_k}"
        raise ValueError(msg)
    chi = CharacterVector(tuple(g.trace() for g in group.class_representatives), group.class_sizes)
    return chi if automorphism_k == 1 else chi.galois(automorphism_k)


def sym_character(chi: CharacterVector, det_chi: CharacterVector, m: int) -> CharacterVector:
    """Character of sym^m of a 2-dimensional representation, by χ_m = χ·χ_(m-1) - det·χ_(m-2)."""

    if m < 0:
        msg = "m must be non-negative"
        raise ValueError(msg)
    previous = CharacterVector((ONE,) * len(chi.values), chi.class_sizes)
    if m == 0:
        return previous
    current = chi
    for _ in range(m - 1):
        previous, current = current, chi * current - det_chi * previous
    return current


def inner_product(x: CharacterVector, y: CharacterVector) -> Fraction:
    x._check_compatible(y)  # pyright: ignore [reportPrivateUsage]
    total = sum((size * a * b.conj() for size, a, b in zip(x.class_sizes, x.values, y.values)), ZERO)
    return (total / sum(x.class_sizes)).to_fraction()


@dataclass(frozen=True)
class IcosahedralIdentityReport:
    chi: CharacterVector
    chi_conjugate: CharacterVector
    sym3_equal: bool
    sym5_equal: bool
    galois_distinct: bool
    norms: tuple[Fraction, Fraction, Fraction]

    @property
    def ok(self) -> bool:
        return self.sym3_equal and self.sym5_equal and self.galois_distinct and self.norms == (1, 1, 0)

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "sym3_identity": self.sym3_equal,
            "sym5_identity": self.sym5_equal,
            "not_galois_self_conjugate": self.galois_distinct,
            "norms": {
                "rho_rho": str(self.norms[0]),
                "rho'_rho'": str(self.norms[1]),
                "rho_rho'": str(self.norms[2]),
            },
            "ok": self.ok,
        }


def verify_icosahedral_identities(group: GroupData) -> IcosahedralIdentityReport:
    """Check sym³ρ = sym³ρ' and sym⁵ρ = sym²ρ'⊗ρ pointwise on every class, and that ρ is not its own conjugate."""

    chi = rep_character(group, 1)
    chi_conj = rep_character(group, CONJUGATE_RESIDUE)
    det = trivial_character(group)
    sym3_equal = sym_character(chi, det, 3) == sym_character(chi_conj, det, 3)
    sym5_equal = sym_character(chi, det, 5) == sym_character(chi_conj, det, 2) * chi
    norms = (inner_product(chi, chi), inner_product(chi_conj, chi_conj), inner_product(chi, chi_conj))
    return IcosahedralIdentityReport(chi, chi_conj, sym3_equal, sym5_equal, chi != chi_conj, norms)


def sym_irreducibility(group: GroupData, max_power: int = 6) -> dict[int, Fraction]:
    """⟨sym^m χ, sym^m χ⟩ for m = 0..max_power; 1 exactly when sym^m ρ is irreducible."""

    chi = rep_character(group, 1)
    det = trivial_character(group)
    out: dict[int, Fraction] = {}
    for m in range(max_power + 1):
        sym = sym_character(chi, det, m)
        out[m] = inner_product(sym, sym)
    return out


def frobenius_params(group: GroupData) -> list[UnramifiedParam]:
    """The eigenvalue pair {λ, λ⁻¹} of a representative of each class.

    An element of order n in SL(2) has eigenvalues ζ_n^k, ζ_n^-k; the smallest k matching the trace is used.
    """

    params: list[UnramifiedParam] = []
    for g, n in zip(group.class_representatives, group.class_orders):
        trace = g.trace()
        for k in range(n):
            eigenvalue = cyclo_make(n, k)
            if eigenvalue + eigenvalue.inverse() == trace:
                params.append(UnramifiedParam([eigenvalue, eigenvalue.inverse()]))
                break
        else:  # pragma: no cover
            msg = f"no root of unity of order dividing {n} has trace {trace}"
            raise RuntimeError(msg)
    return params


def character_table_rows(group: GroupData) -> list[dict[str, typing.Any]]:
    """One row per class: element order, class size and the values of χ_ρ and χ_ρ'."""

    chi = rep_character(group, 1)
    chi_conj = rep_character(group, CONJUGATE_RESIDUE)
    return [
        {
            "order": order,
            "size": size,
            "chi_rho": value.to_json(),
            "chi_rho_prime": conj_value.to_json(),
        }
        for order, size, value, conj_value in zip(group.class_orders, group.class_sizes, chi.values, chi_conj.values)
    ]


# endregion
