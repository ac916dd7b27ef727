# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""Local classification of a pair of parameters whose symmetric cubes agree.

A pair is given by a, w, c, wp: the first parameter is {a, w/a} with central value w, the second {c, wp/c} with central
value wp, and the central values must satisfy w³ = wp³. The classifiers decide which relations tie the pair together,
whether the sym⁵ identity holds locally, which power relation it forces, and which field the parameter is rational over.
The remaining operations work through the other local types (Steinberg, supercuspidal with unramified adjoint,
ramified principal series, archimedean, non-tempered) by exhibiting the exponent or block bookkeeping that rules them
in or out.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from icosa_fibres.exactnum import (
    ONE,
    QSQRT5,
    RATIONALS,
    Cyclo,
    NumberFieldDesc,
    compositum,
    cyclo_make,
    field_of,
    galois_apply,
    real_subfield,
)
from icosa_fibres.lfactors import check_si3_local
from icosa_fibres.params import (
    AbstractCharacter,
    ArchParam,
    SteinbergParam,
    UnramifiedParam,
    adjoint,
    arch_adjoint,
    arch_sym_power,
    arch_tensor,
    equivalent_up_to_twist,
    steinberg_adjoint,
    steinberg_sym,
    steinberg_tensor,
    steinberg_twist,
    sym_power,
)


__all__ = (
    "CASE_LABELS",
    "TAU_RESIDUE",
    "CaseWitness",
    "CentralCharacterMismatch",
    "ClassificationReport",
    "DihedralReport",
    "EnumerationReport",
    "PowerRelation",
    "PreconditionError",
    "RamifiedPSReport",
    "SteinbergReport",
    "TrivialCentralCase",
    "adjoint_isomorphic",
    "arch_galois_check",
    "check_sym3_match",
    "classify_trivial_central",
    "corollary_field",
    "derive_power_relation",
    "dihedral_adjoint_check",
    "enumerate_solutions",
    "ramified_ps_constrain",
    "rationality_field",
    "steinberg_obstruction",
    "supercuspidal_exclusion",
    "tau_conjugate",
    "tempered_check",
    "witness_holds",
)

TYPE_CHECKING = False

if TYPE_CHECKING:
    import collections.abc as coll_abc
    import typing


class CentralCharacterMismatch(ValueError):
    """The central values of a pair do not satisfy w³ = wp³."""


class PreconditionError(ValueError):
    """The inputs fall outside the hypotheses an operation is stated under."""


CASE_TRANSLATE = "L11B-1"
CASE_QUARTIC = "L11B-2"
CASE_QUINTIC = "L11B-3"
CASE_LABELS = (CASE_TRANSLATE, CASE_QUARTIC, CASE_QUINTIC)

TAU_RESIDUE = 13
"""Residue mod 60 of the automorphism used for τ: 13 ≡ 1 (mod 4), 13 ≡ 1 (mod 3), 13 ≡ 3 (mod 5), so it moves √5."""


# ============================================================================
# region -------- Symmetric cube matching --------
# ============================================================================


@dataclass(frozen=True)
class CaseWitness:
    """Data exhibiting one case of check_sym3_match(): {c, d} = {zx, zy} or {root·zx, root⁻¹·zy} with root = x²/w.

    x is the entry of {a, b} the relation was found for (the pair is unordered). root is None for the translate case.
    """

    case: str
    z: Cyclo
    x: Cyclo
    root: typing.Optional[Cyclo] = None

    def to_json(self) -> dict[str, typing.Any]:
        out: dict[str, typing.Any] = {"z": self.z.to_json(), "x": self.x.to_json()}
        if self.case == CASE_QUARTIC:
            out["mu"] = self.root.to_json()  # pyright: ignore [reportOptionalMemberAccess]
        elif self.case == CASE_QUINTIC:
            out["zeta"] = self.root.to_json()  # pyright: ignore [reportOptionalMemberAccess]
        return out


class PowerRelation(enum.Enum):
    A2_EQ_W = "a2=w"
    A4_EQ_W2 = "a4=w2"
    A6_EQ_W3 = "a6=w3"
    NONE = "none"


@dataclass(frozen=True)
class ClassificationReport:
    a: Cyclo
    w: Cyclo
    c: Cyclo
    wp: Cyclo
    sym3_match: bool
    cases: tuple[str, ...]
    witnesses: dict[str, CaseWitness]
    adjoint_isomorphic: bool
    si3_local: bool
    power_relation: typing.Optional[PowerRelation]
    rationality_field: NumberFieldDesc

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "sym3_match": self.sym3_match,
            "cases": list(self.cases),
            "witnesses": {case: wit.to_json() for case, wit in self.witnesses.items()},
            "adjoint_isomorphic": self.adjoint_isomorphic,
            "si3_local": self.si3_local,
            "power_relation": None if self.power_relation is None else self.power_relation.value,
            "rationality_field": self.rationality_field.to_json(),
        }


def _require_nonzero(**values: Cyclo) -> None:
    for name, value in values.items():
        if value.is_zero():
            msg = f"{name} must be nonzero"
            raise ValueError(msg)


def _ordered_pair(x: Cyclo, y: Cyclo) -> tuple[Cyclo, Cyclo]:
    return (x, y) if x.sort_key() <= y.sort_key() else (y, x)


def adjoint_isomorphic(a: Cyclo, w: Cyclo, c: Cyclo, wp: Cyclo) -> bool:
    return adjoint(UnramifiedParam([a, w / a])) == adjoint(UnramifiedParam([c, wp / c]))


def _find_cases(a: Cyclo, b: Cyclo, c: Cyclo, d: Cyclo, z: Cyclo, w: Cyclo) -> dict[str, CaseWitness]:
    target = UnramifiedParam([c, d])
    found: dict[str, CaseWitness] = {}
    # The relations are stated up to exchanging a with b; {c, d} is compared as a multiset.
    for x, y in ((a, b), (b, a)):
        if CASE_TRANSLATE not in found and UnramifiedParam([z * x, z * y]) == target:
            found[CASE_TRANSLATE] = CaseWitness(CASE_TRANSLATE, z, x)

        root = x**2 / w
        for case, order in ((CASE_QUARTIC, 4), (CASE_QUINTIC, 5)):
            if case in found or root**order != ONE:
                continue
            if UnramifiedParam([root * z * x, root.inverse() * z * y]) == target:
                found[case] = CaseWitness(case, z, x, root)
    return {case: found[case] for case in CASE_LABELS if case in found}


def check_sym3_match(a: Cyclo, w: Cyclo, c: Cyclo, wp: Cyclo) -> ClassificationReport:
    """Decide whether sym³{a, w/a} = sym³{c, wp/c}, and which of the three relations explains it.

    With b = w/a, d = wp/c and z = w/wp (a cube root of unity):

    * translate case: {c, d} = {za, zb};
    * quartic case: μ = a²/w satisfies μ⁴ = 1 and {c, d} = {μza, μ⁻¹zb};
    * quintic case: ζ = a²/w satisfies ζ⁵ = 1 and {c, d} = {ζza, ζ⁻¹zb};

    each up to exchanging a and b. Every case that holds is reported; they overlap (μ = 1 or ζ = 1 is the translate
    case).

    Raises
    ------
    ValueError
        If any input is zero.
    CentralCharacterMismatch
        If w³ ≠ wp³.
    """

    _require_nonzero(a=a, w=w, c=c, wp=wp)
    if w**3 != wp**3:
        msg = f"central values do not satisfy w^3 = wp^3 (w = {w}, wp = {wp})"
        raise CentralCharacterMismatch(msg)

    a, b = _ordered_pair(a, w / a)
    c, d = _ordered_pair(c, wp / c)
    match = sym_power(UnramifiedParam([a, b]), 3) == sym_power(UnramifiedParam([c, d]), 3)
    witnesses = _find_cases(a, b, c, d, w / wp, w) if match else {}

    adjoint_iso = adjoint_isomorphic(a, w, c, wp)
    si3 = check_si3_local(a, w, c, wp).holds
    relation = derive_power_relation(a, w, c, wp) if adjoint_iso and si3 else None
    return ClassificationReport(
        a=a,
        w=w,
        c=c,
        wp=wp,
        sym3_match=match,
        cases=tuple(witnesses),
        witnesses=witnesses,
        adjoint_isomorphic=adjoint_iso,
        si3_local=si3,
        power_relation=relation,
        rationality_field=rationality_field(UnramifiedParam([a, b])),
    )


def witness_holds(report: ClassificationReport, witness: CaseWitness) -> bool:
    """Recheck a witness against the defining relations of its case."""

    w = report.w
    if witness.z**3 != ONE or witness.z != w / report.wp:
        return False
    x = witness.x
    if x not in (report.a, w / report.a):
        return False
    y = w / x
    target = UnramifiedParam([report.c, report.wp / report.c])
    if witness.case == CASE_TRANSLATE:
        return UnramifiedParam([witness.z * x, witness.z * y]) == target
    root = witness.root
    order = 4 if witness.case == CASE_QUARTIC else 5
    return (
        root is not None
        and root**order == ONE
        and x**2 == root * w
        and UnramifiedParam([root * witness.z * x, root.inverse() * witness.z * y]) == target
    )


# endregion


# ============================================================================
# region -------- Power relations and the trivial central character --------
# ============================================================================


def derive_power_relation(a: Cyclo, w: Cyclo, c: Cyclo, wp: Cyclo) -> PowerRelation:
    """The first of a² = w, a⁴ = w², a⁶ = w³ that holds, given isomorphic adjoints and the local sym⁵ identity.

    Returns PowerRelation.NONE if none holds, which the hypotheses are meant to rule out.

    Raises
    ------
    PreconditionError
        If the adjoints differ or the sym⁵ identity fails.
    """

    _require_nonzero(a=a, w=w, c=c, wp=wp)
    if not adjoint_isomorphic(a, w, c, wp):
        msg = "the adjoint parameters are not isomorphic"
        raise PreconditionError(msg)
    if not check_si3_local(a, w, c, wp):
        msg = "the local sym^5 identity does not hold"
        raise PreconditionError(msg)

    # The relations are symmetric in a and b = w/a, so the orientation does not matter.
    for relation, k in ((PowerRelation.A2_EQ_W, 1), (PowerRelation.A4_EQ_W2, 2), (PowerRelation.A6_EQ_W3, 3)):
        if a ** (2 * k) == w**k:
            return relation
    return PowerRelation.NONE


@dataclass(frozen=True)
class TrivialCentralCase:
    """Classification of a pair with trivial central characters.

    case "i": the adjoints agree, a^m = 1 with m in {4, 6} and c = ±a^(±1).
    case "ii": the adjoints differ, c = a^(±3) and a^10 = 1.
    case "none": the symmetric cubes or the sym⁵ identity disagree, or neither description fits.
    """

    case: str
    m: typing.Optional[int] = None

    def to_json(self) -> dict[str, typing.Any]:
        return {"case": self.case, "m": self.m}


def classify_trivial_central(a: Cyclo, c: Cyclo) -> TrivialCentralCase:
    report = check_sym3_match(a, ONE, c, ONE)
    if not (report.sym3_match and report.si3_local):
        return TrivialCentralCase("none")

    a = report.a
    if report.adjoint_isomorphic:
        # Ties go to m = 4, so a = c = 1 is reported with m = 4.
        for m in (4, 6):
            if a**m == ONE:
                return TrivialCentralCase("i", m)
        return TrivialCentralCase("none")

    if c in (a**3, a**-3) and a**10 == ONE:
        return TrivialCentralCase("ii")
    return TrivialCentralCase("none")


def rationality_field(p: UnramifiedParam) -> NumberFieldDesc:
    """The field generated by the trace and determinant of a dimension-2 parameter."""

    a, b = p.pair()
    return field_of([a + b, a * b])


def tau_conjugate(p: UnramifiedParam) -> UnramifiedParam:
    """Apply the automorphism ζ_60 ↦ ζ_60^13 entrywise. It restricts to √5 ↦ −√5 and to ζ10 ↦ ζ10³.

    Raises
    ------
    PreconditionError
        If some entry does not lie in Q(ζ_60).
    """

    conductor = math.lcm(*(r.conductor for r in p))
    if 60 % conductor:
        msg = f"entries of conductor {conductor} do not lie in Q(zeta_60)"
        raise PreconditionError(msg)
    return UnramifiedParam(galois_apply(r, TAU_RESIDUE) for r in p)


def corollary_field(local_fields: coll_abc.Iterable[NumberFieldDesc]) -> NumberFieldDesc:
    """The field of a global finite part: the compositum of its local fields of rationality."""

    return compositum(local_fields)


# endregion


# ============================================================================
# region -------- Steinberg and supercuspidal exclusions --------
# ============================================================================


@dataclass(frozen=True)
class SteinbergReport:
    left: SteinbergParam
    right: SteinbergParam

    @property
    def isomorphic(self) -> bool:
        return self.left == self.right

    @property
    def verdict(self) -> str:
        return "isomorphic" if self.isomorphic else "never isomorphic"

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "left_blocks": list(self.left.block_sizes()),
            "right_blocks": list(self.right.block_sizes()),
            "left_lambda_exponents": sorted(self.left.lambda_exponents()),
            "right_lambda_exponents": sorted(self.right.lambda_exponents()),
            "dimensions": [self.left.dimension, self.right.dimension],
            "verdict": self.verdict,
        }


def steinberg_obstruction() -> SteinbergReport:
    """Compare Ad(λ'⊗st) ⊗ (λ⊗st) ⊗ λ² with sym⁵(λ⊗st) for a symbolic character λ.

    The block shapes are {4, 2} and {6} whatever λ is, so a Steinberg-type local component cannot satisfy the sym⁵
    identity.
    """

    base = SteinbergParam([(1, 2)])
    left = steinberg_twist(steinberg_tensor(steinberg_adjoint(base), base), 2)
    right = steinberg_sym(5, base)
    return SteinbergReport(left, right)


@dataclass(frozen=True)
class DihedralReport:
    lambda0: AbstractCharacter
    nu: AbstractCharacter
    components: tuple[AbstractCharacter, ...]

    @property
    def trivial_multiplicity(self) -> int:
        return sum(1 for chi in self.components if chi.is_trivial())

    @property
    def contradiction(self) -> bool:
        """Whether the trivial character occurs in the adjoint, contradicting irreducibility."""

        return self.trivial_multiplicity >= 1

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "lambda0": self.lambda0.to_json(),
            "nu": self.nu.to_json(),
            "components": [chi.to_json() for chi in self.components],
            "trivial_multiplicity": self.trivial_multiplicity,
            "contradiction": self.contradiction,
        }


def dihedral_adjoint_check(
    lambda0_order: int,
    nu_nontrivial: bool = True,
    lambda0_ramified: bool = False,
) -> DihedralReport:
    """Ad(σ) ≃ λ0 ⊕ λ0ν ⊕ ν for an unramified quadratic ν and an unramified λ0 of order 1 or 2.

    The only unramified quadratic character is ν itself, so λ0 is 1 or ν and either way the trivial character appears.
    """

    if lambda0_ramified:
        msg = "lambda0 is forced to be unramified"
        raise PreconditionError(msg)
    if not nu_nontrivial:
        msg = "nu is the nontrivial unramified quadratic character"
        raise PreconditionError(msg)
    if lambda0_order not in (1, 2):
        msg = f"lambda0 must have order 1 or 2, got {lambda0_order}"
        raise PreconditionError(msg)

    nu = AbstractCharacter(2, 1)
    lambda0 = AbstractCharacter(2, lambda0_order - 1)
    return DihedralReport(lambda0, nu, (lambda0, lambda0 * nu, nu))


def supercuspidal_exclusion() -> tuple[DihedralReport, DihedralReport]:
    """Both branches of dihedral_adjoint_check(); each ends in a contradiction."""

    return dihedral_adjoint_check(1), dihedral_adjoint_check(2)


# endregion


# ============================================================================
# region -------- Ramified principal series --------
# ============================================================================


@dataclass(frozen=True)
class RamifiedPSReport:
    mu: AbstractCharacter
    relation: str
    left: tuple[int, ...]
    right: tuple[int, ...]
    real_field: NumberFieldDesc

    @property
    def allowed(self) -> bool:
        return self.left == self.right

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "mu_order": self.mu.order,
            "relation": self.relation,
            "left_exponents": list(self.left),
            "right_exponents": list(self.right),
            "allowed": self.allowed,
            "field": self.real_field.to_json(),
        }


def _exponents(chars: coll_abc.Iterable[AbstractCharacter]) -> tuple[int, ...]:
    return tuple(sorted(chi.exponent for chi in chars))


def ramified_ps_constrain(mu_order: int, relation: str) -> RamifiedPSReport:
    """Test the sym⁵ identity for principal series {μ, μ⁻¹} and {μ', μ'⁻¹} in the cyclic model Z/N.

    relation "equal" takes μ' = μ, "cube" takes μ' = μ³. After cancelling common terms the identity reduces to
    {μ⁵, μ⁻⁵} = {μ, μ⁻¹} for "equal" (N | 4 or N | 6) and {μ³, μ⁻³} = {μ⁷, μ⁻⁷} for "cube" (N | 4 or N | 10).
    The reported field is Q(μ)⁺, the real subfield of Q(ζ_N).
    """

    if mu_order < 1:
        msg = "mu_order must be positive"
        raise PreconditionError(msg)
    if relation not in ("equal", "cube"):
        msg = f"relation must be 'equal' or 'cube', got {relation!r}"
        raise PreconditionError(msg)

    mu = AbstractCharacter(mu_order, 1, ramified=mu_order > 1)
    mu_prime = mu if relation == "equal" else mu**3
    std = (mu, mu.inverse())
    left = (mu**j * mu ** (j - 5) for j in range(6))
    adjoint_prime = (mu_prime**2, mu_prime**0, mu_prime**-2)
    right = (x * y for x, y in itertools.product(adjoint_prime, std))
    real_field = real_subfield(field_of([cyclo_make(mu_order, 1)]))
    return RamifiedPSReport(mu, relation, _exponents(left), _exponents(right), real_field)


# endregion


# ============================================================================
# region -------- Archimedean and tempered exponents --------
# ============================================================================


def _sym5_vs_adjoint_tensor(sigma: ArchParam) -> bool:
    left = arch_tensor(arch_adjoint(sigma), sigma)
    right = arch_sym_power(sigma, 5)
    return equivalent_up_to_twist(left, right)


def arch_galois_check(m: int) -> bool:
    """Whether (z/|z|)^m ⊕ (z/|z|)^-m can satisfy the sym⁵ identity up to a one-dimensional twist. Only m = 0 can."""

    return _sym5_vs_adjoint_tensor(ArchParam([(m, 0), (-m, 0)]))


def tempered_check(t: typing.Union[Fraction, int]) -> bool:
    """Whether |·|^t ⊕ |·|^-t can satisfy the sym⁵ identity up to twist. Only t = 0 can."""

    t = Fraction(t)
    return _sym5_vs_adjoint_tensor(ArchParam([(0, t), (0, -t)]))


# endregion


# ============================================================================
# region -------- Exhaustive enumeration --------
# ============================================================================


@dataclass
class EnumerationReport:
    max_order: int
    w_trivial: bool
    central_order: int
    pairs_examined: int = 0
    solutions: int = 0
    case_counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CASE_LABELS, 0))
    trivial_central_counts: dict[str, int] = field(default_factory=lambda: {"i": 0, "ii": 0, "none": 0})
    power_relation_counts: dict[str, int] = field(default_factory=lambda: {r.value: 0 for r in PowerRelation})
    uncovered: list[dict[str, typing.Any]] = field(default_factory=list)
    violations: list[dict[str, typing.Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.uncovered and not self.violations

    def merge(self, other: EnumerationReport) -> None:
        """Fold in the counts of a report over a disjoint part of the same search space."""

        self.pairs_examined += other.pairs_examined
        self.solutions += other.solutions
        for mine, theirs in (
            (self.case_counts, other.case_counts),
            (self.trivial_central_counts, other.trivial_central_counts),
            (self.power_relation_counts, other.power_relation_counts),
        ):
            for key, count in theirs.items():
                mine[key] = mine.get(key, 0) + count
        self.uncovered.extend(other.uncovered)
        self.violations.extend(other.violations)

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "max_order": self.max_order,
            "w_trivial": self.w_trivial,
            "central_order": self.central_order,
            "pairs_examined": self.pairs_examined,
            "solutions": self.solutions,
            "case_counts": dict(self.case_counts),
            "trivial_central_counts": dict(self.trivial_central_counts),
            "power_relation_counts": dict(self.power_relation_counts),
            "uncovered": list(self.uncovered),
            "violations": list(self.violations),
            "ok": self.ok,
        }


def _quadruple_json(a: Cyclo, w: Cyclo, c: Cyclo, wp: Cyclo) -> dict[str, typing.Any]:
    return {"a": a.to_json(), "w": w.to_json(), "c": c.to_json(), "wp": wp.to_json()}


def _sym3_exponents(x: int, y: int, modulus: int) -> list[int]:
    return sorted((j * x + (3 - j) * y) % modulus for j in range(4))


def _record_solution(report: EnumerationReport, a: Cyclo, w: Cyclo, c: Cyclo, wp: Cyclo) -> None:
    result = check_sym3_match(a, w, c, wp)
    report.solutions += 1
    here = _quadruple_json(a, w, c, wp)

    if not result.cases:
        report.uncovered.append(here)
    for case in result.cases:
        report.case_counts[case] += 1
        if not witness_holds(result, result.witnesses[case]):
            report.violations.append({"kind": "witness-relation", "case": case, **here})

    if result.power_relation is not None:
        report.power_relation_counts[result.power_relation.value] += 1
        if result.power_relation is PowerRelation.NONE:
            report.violations.append({"kind": "power-relation-closure", **here})

    if CASE_QUARTIC in result.cases and w == ONE and result.si3_local and result.a**4 != ONE:
        report.violations.append({"kind": "quartic-sharpening", **here})

    if w == ONE and wp == ONE:
        _record_trivial_central(report, result, here)


def _record_trivial_central(
    report: EnumerationReport,
    result: ClassificationReport,
    here: dict[str, typing.Any],
) -> None:
    if not result.si3_local:
        return
    a, c = result.a, result.c
    case = classify_trivial_central(a, c)
    report.trivial_central_counts[case.case] += 1
    field_ = result.rationality_field

    if case.case == "none":
        report.violations.append({"kind": "trivial-central-dichotomy", **here})
    elif case.case == "i":
        if field_ != RATIONALS:
            report.violations.append({"kind": "case-i-field", **here})
        if c not in (a, -a, a.inverse(), -a.inverse()):
            report.violations.append({"kind": "case-i-sign", **here})
    else:
        if field_ != QSQRT5:
            report.violations.append({"kind": "case-ii-field", **here})
        if UnramifiedParam([c, c.inverse()]) != tau_conjugate(UnramifiedParam([a, a.inverse()])):
            report.violations.append({"kind": "tau-coherence", **here})


def enumerate_solutions(max_order: int, w_trivial: bool = True, central_order: int = 12) -> EnumerationReport:
    """Classify every pair of roots of unity a, c of order dividing max_order whose symmetric cubes agree.

    With w_trivial the central values are w = wp = 1; otherwise they range over roots of unity of order dividing
    central_order with w³ = wp³. Candidates are filtered with exponent arithmetic in Z/L and every survivor is then
    classified exactly. A solution not covered by any case, or any failed consequence of the classification (witness
    relations, the power relation closure, the a⁴ = 1 sharpening of the quartic case, the trivial central dichotomy
    with its fields, τ-coherence), is recorded in the report.
    """

    if max_order < 1 or central_order < 1:
        msg = "max_order and central_order must be positive"
        raise ValueError(msg)

    report = EnumerationReport(max_order, w_trivial, 1 if w_trivial else central_order)
    modulus = max_order if w_trivial else math.lcm(max_order, central_order)
    root_step = modulus // max_order
    roots = [k * root_step for k in range(max_order)]
    if w_trivial:
        centrals = [(0, 0)]
    else:
        central_step = modulus // central_order
        values = [k * central_step for k in range(central_order)]
        centrals = [(w, wp) for w in values for wp in values if (3 * (w - wp)) % modulus == 0]

    for w, wp in centrals:
        w_value, wp_value = cyclo_make(modulus, w), cyclo_make(modulus, wp)
        right_by_c = {c: _sym3_exponents(c, wp - c, modulus) for c in roots}
        for a in roots:
            left = _sym3_exponents(a, w - a, modulus)
            for c in roots:
                report.pairs_examined += 1
                if left == right_by_c[c]:
                    _record_solution(report, cyclo_make(modulus, a), w_value, cyclo_make(modulus, c), wp_value)
    return report


# endregion
