# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""Local L-factors as exact Euler factors, their truncated Dirichlet expansions, and the local identities between
symmetric powers that the classification relies on.

Notes
-----
Factors are compared structurally, as multisets of inverse roots. The truncated expansion in q^-s is an independent
oracle: two factors of the same degree d agree as multisets exactly when their first d coefficients agree, since the
complete homogeneous polynomials h_1..h_d determine the elementary ones by Newton's identities.

q is carried for display. None of the identities depend on it.
"""

from __future__ import annotations

import collections
import json
from dataclasses import dataclass

from icosa_fibres.exactnum import ONE, ZERO, Cyclo
from icosa_fibres.params import (
    UnramifiedParam,
    adjoint,
    ext_square,
    isobaric_sum,
    sym_power,
    tensor,
    twist,
)


__all__ = (
    "IdentityCheck",
    "LocalLFactor",
    "check_clebsch_gordon",
    "check_lambda2_sym3",
    "check_si3_local",
    "convolve",
    "dirichlet_coeffs",
    "euler_product",
    "factors_equal",
    "factors_equal_by_coeffs",
    "local_l_factor",
    "render_euler_factor",
    "si3_sides",
)

TYPE_CHECKING = False

if TYPE_CHECKING:
    import collections.abc as coll_abc
    import typing


# ============================================================================
# region -------- Euler factors --------
# ============================================================================


@dataclass(frozen=True)
class LocalLFactor:
    """∏ (1 - γ q^-s)^-1 over the inverse roots γ of an unramified parameter."""

    inverse_roots: UnramifiedParam
    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            msg = f"q must be at least 2, got {self.q}"
            raise ValueError(msg)

    @property
    def degree(self) -> int:
        return self.inverse_roots.dimension

    def to_json(self) -> dict[str, typing.Any]:
        return {"q": self.q, **self.inverse_roots.to_json()}


def local_l_factor(p: UnramifiedParam, q: int = 2) -> LocalLFactor:
    return LocalLFactor(p, q)


def dirichlet_coeffs(factor: LocalLFactor, terms: int) -> list[Cyclo]:
    """Coefficients of q^(-ks) for k = 0..terms, i.e. h_k of the inverse roots."""

    if terms < 1:
        msg = "terms must be at least 1"
        raise ValueError(msg)
    coeffs = [ONE] + [ZERO] * terms
    # Multiply in one geometric series 1/(1 - γX) at a time.
    for gamma in factor.inverse_roots:
        for k in range(1, terms + 1):
            coeffs[k] = coeffs[k] + gamma * coeffs[k - 1]
    return coeffs


def convolve(c1: coll_abc.Sequence[Cyclo], c2: coll_abc.Sequence[Cyclo]) -> list[Cyclo]:
    """Cauchy product of two truncated series, truncated to the shorter length."""

    length = min(len(c1), len(c2))
    return [sum((c1[j] * c2[k - j] for j in range(k + 1)), ZERO) for k in range(length)]


def euler_product(f1: LocalLFactor, f2: LocalLFactor) -> LocalLFactor:
    if f1.q != f2.q:
        msg = f"cannot multiply Euler factors at different q ({f1.q} and {f2.q})"
        raise ValueError(msg)
    return LocalLFactor(isobaric_sum(f1.inverse_roots, f2.inverse_roots), f1.q)


def factors_equal(f1: LocalLFactor, f2: LocalLFactor) -> bool:
    return f1.q == f2.q and f1.inverse_roots == f2.inverse_roots


def factors_equal_by_coeffs(f1: LocalLFactor, f2: LocalLFactor) -> bool:
    if f1.q != f2.q or f1.degree != f2.degree:
        return False
    return dirichlet_coeffs(f1, f1.degree) == dirichlet_coeffs(f2, f2.degree)


def render_euler_factor(factor: LocalLFactor) -> str:
    """Render as ``(1 - g_1 * q^-s)^-1 * (1 - g_2 * q^-s)^-1 ...`` with each g_i in its JSON form."""

    return " * ".join(
        f"(1 - {json.dumps(gamma.to_json(), sort_keys=True)} * {factor.q}^-s)^-1" for gamma in factor.inverse_roots
    )


# endregion


# ============================================================================
# region -------- Local identities --------
# ============================================================================


@dataclass(frozen=True)
class IdentityCheck:
    """The outcome of comparing two sides of a local identity.

    witness is an inverse root whose multiplicity differs between the sides, or None when they agree.
    """

    name: str
    left: UnramifiedParam
    right: UnramifiedParam

    @property
    def holds(self) -> bool:
        return self.left == self.right

    @property
    def witness(self) -> typing.Optional[Cyclo]:
        if self.holds:
            return None
        diff = collections.Counter(self.left.inverse_roots)
        diff.subtract(self.right.inverse_roots)
        return min((r for r, count in diff.items() if count), key=Cyclo.sort_key)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict[str, typing.Any]:
        witness = self.witness
        return {
            "identity": self.name,
            "holds": self.holds,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "witness": None if witness is None else witness.to_json(),
        }


def check_clebsch_gordon(p: UnramifiedParam) -> IdentityCheck:
    """sym⁴(p) ⊗ p = sym⁵(p) ⊞ sym³(p)⊗ω."""

    left = tensor(sym_power(p, 4), p)
    right = isobaric_sum(sym_power(p, 5), twist(sym_power(p, 3), p.central))
    return IdentityCheck("clebsch-gordon", left, right)


def check_lambda2_sym3(p: UnramifiedParam) -> IdentityCheck:
    """Λ²(sym³(p)) = sym⁴(p)⊗ω ⊞ ω³."""

    w = p.central
    left = ext_square(sym_power(p, 3))
    right = isobaric_sum(twist(sym_power(p, 4), w), UnramifiedParam([w**3]))
    return IdentityCheck("lambda2-sym3", left, right)


def si3_sides(a: Cyclo, w: Cyclo, c: Cyclo, wp: Cyclo) -> tuple[UnramifiedParam, UnramifiedParam]:
    """sym⁵ of {a, w/a}, and Ad({c, wp/c}) ⊗ {a, w/a} twisted by w²."""

    std = UnramifiedParam([a, w / a])
    std_prime = UnramifiedParam([c, wp / c])
    return sym_power(std, 5), twist(tensor(adjoint(std_prime), std), w**2)


def check_si3_local(a: Cyclo, w: Cyclo, c: Cyclo, wp: Cyclo) -> IdentityCheck:
    left, right = si3_sides(a, w, c, wp)
    return IdentityCheck("si3-local", left, right)


# endregion
