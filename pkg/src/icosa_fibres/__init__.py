# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""Exact local algebra of icosahedral-type automorphic parameters.

Cyclotomic arithmetic, functorial operations on local parameters, local L-factor identities, the classification of
parameter pairs with matching symmetric cubes, and the binary icosahedral group as ground truth.
"""

from __future__ import annotations


__version__ = "0.1.0.dev0"

from icosa_fibres.classify import (
    ClassificationReport,
    EnumerationReport,
    PowerRelation,
    TrivialCentralCase,
    check_sym3_match,
    classify_trivial_central,
    derive_power_relation,
    enumerate_solutions,
    rationality_field,
    tau_conjugate,
)
from icosa_fibres.exactnum import Cyclo, NumberFieldDesc, cyclo_make, field_of, galois_apply, real_subfield
from icosa_fibres.lfactors import LocalLFactor, dirichlet_coeffs, local_l_factor
from icosa_fibres.params import UnramifiedParam, adjoint, sym_power, tensor, twist


__all__ = (
    "ClassificationReport",
    "Cyclo",
    "EnumerationReport",
    "LocalLFactor",
    "NumberFieldDesc",
    "PowerRelation",
    "TrivialCentralCase",
    "UnramifiedParam",
    "adjoint",
    "check_sym3_match",
    "classify_trivial_central",
    "cyclo_make",
    "derive_power_relation",
    "dirichlet_coeffs",
    "enumerate_solutions",
    "field_of",
    "galois_apply",
    "local_l_factor",
    "rationality_field",
    "real_subfield",
    "sym_power",
    "tau_conjugate",
    "tensor",
    "twist",
)
