# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""The ``icosa`` command line.

Every subcommand prints one report on stdout (JSON by default, sorted keys, no timings) and returns an exit status:
0 on success, 1 when a mathematical violation was found, 2 on malformed input or usage errors. Progress and timings
go to the log on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import random
import sys
import time
import typing
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from icosa_fibres import __version__
from icosa_fibres.classify import (
    CentralCharacterMismatch,
    PowerRelation,
    arch_galois_check,
    check_sym3_match,
    classify_trivial_central,
    corollary_field,
    enumerate_solutions,
    rationality_field,
    tau_conjugate,
    tempered_check,
)
from icosa_fibres.exactnum import ONE, QSQRT5, Cyclo, cyclo_from_json, cyclo_make
from icosa_fibres.icosa import (
    binary_icosahedral_group,
    character_table_rows,
    frobenius_params,
    rep_character,
    sym_character,
    trivial_character,
    verify_icosahedral_identities,
)
from icosa_fibres.lfactors import (
    check_clebsch_gordon,
    check_lambda2_sym3,
    dirichlet_coeffs,
    local_l_factor,
    render_euler_factor,
    si3_sides,
)
from icosa_fibres.params import UnramifiedParam, sym_power


__all__ = (
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VIOLATION",
    "IDENTITIES",
    "InputError",
    "RunConfig",
    "cmd_classify",
    "cmd_demo",
    "cmd_enumerate",
    "cmd_lfactor",
    "cmd_verify",
    "main",
    "random_param",
    "sweep_params",
)

TYPE_CHECKING = False

if TYPE_CHECKING:
    import collections.abc as coll_abc

    from icosa_fibres.exactnum import NumberFieldDesc

    Report = dict[str, typing.Any]


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

IDENTITIES = ("clebsch-gordon", "lambda2-sym3", "power-relations", "arch", "tempered", "all")

RANDOM_CONDUCTORS = (1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60)
RANDOM_RATIONALS = (Fraction(2), Fraction(1, 2), Fraction(3), Fraction(1, 3))
RATIONAL_PROBABILITY = 0.1

MAX_REPORTED_FAILURES = 20


class InputError(ValueError):
    """Malformed or missing command input."""


# ============================================================================
# region -------- Configuration --------
# ============================================================================


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input_path: typing.Optional[str] = None
    identity: str = "all"
    max_order: int = 60
    trials: int = 500
    seed: int = 0
    terms: int = 12
    strict: bool = False
    output_format: str = "json"
    q: int = 2
    central_order: int = 1
    verbose: bool = False

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> RunConfig:
        return cls(
            subcommand=args.subcommand,
            input_path=args.input,
            identity=args.identity,
            max_order=args.max_order,
            trials=args.trials,
            seed=args.seed,
            terms=args.terms,
            strict=args.strict,
            output_format=args.format,
            q=args.q,
            central_order=args.central_order,
            verbose=args.verbose,
        )

    def validate(self) -> None:
        for name in ("max_order", "terms", "central_order"):
            if getattr(self, name) < 1:
                msg = f"--{name.replace('_', '-')} must be at least 1"
                raise InputError(msg)
        if self.trials < 0:
            msg = "--trials must be non-negative"
            raise InputError(msg)
        if self.q < 2:
            msg = "--q must be at least 2"
            raise InputError(msg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icosa",
        description="Exact local algebra of icosahedral-type parameter pairs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("subcommand", choices=("classify", "verify", "enumerate", "demo", "lfactor"))
    parser.add_argument("--input", metavar="PATH", help="JSON input file; '-' reads stdin")
    parser.add_argument("--identity", choices=IDENTITIES, default="all", help="identity campaign for 'verify'")
    parser.add_argument("--trials", type=int, default=500, help="number of seeded random parameters")
    parser.add_argument("--seed", type=int, default=0, help="seed for the random campaigns")
    parser.add_argument("--max-order", type=int, default=60, help="bound on root-of-unity orders in sweeps")
    parser.add_argument("--terms", type=int, default=12, help="number of Dirichlet coefficients for 'lfactor'")
    parser.add_argument("--strict", action="store_true", help="exit 1 when 'classify' or 'lfactor' finds a failure")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--q", type=int, default=2, help="norm of the place for rendered Euler factors")
    parser.add_argument(
        "--central-order",
        type=int,
        default=1,
        help="central values range over roots of unity of this order (1 means trivial central characters)",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


# endregion


# ============================================================================
# region -------- Input and output --------
# ============================================================================


def _read_input(config: RunConfig) -> typing.Any:
    if config.input_path is None:
        msg = f"'{config.subcommand}' needs --input"
        raise InputError(msg)
    try:
        if config.input_path == "-":
            text = sys.stdin.read()
        else:
            text = Path(config.input_path).read_text(encoding="utf-8")
    except OSError as exc:
        msg = f"cannot read {config.input_path}: {exc}"
        raise InputError(msg) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        msg = f"malformed JSON: {exc}"
        raise InputError(msg) from exc


def _cyclo_field(obj: dict[str, typing.Any], *keys: str) -> Cyclo:
    for key in keys:
        if key in obj:
            try:
                return cyclo_from_json(obj[key])
            except (TypeError, ValueError) as exc:
                msg = f"bad value for {key!r}: {exc}"
                raise InputError(msg) from exc
    msg = f"missing field {keys[0]!r}"
    raise InputError(msg)


def _param_field(obj: dict[str, typing.Any], key: str) -> UnramifiedParam:
    try:
        p = UnramifiedParam.from_json(obj[key])
    except KeyError:
        msg = f"missing field {key!r}"
        raise InputError(msg) from None
    except (TypeError, ValueError) as exc:
        msg = f"bad parameter {key!r}: {exc}"
        raise InputError(msg) from exc
    if p.dimension != 2:
        msg = f"{key!r} must have dimension 2"
        raise InputError(msg)
    return p


def _quadruple(obj: typing.Any) -> tuple[Cyclo, Cyclo, Cyclo, Cyclo]:
    """Read {a, w, c, wp} (wp may be spelled w'), or a pair of parameters {pi, pi_prime}."""

    if not isinstance(obj, dict):
        msg = "input must be a JSON object"
        raise InputError(msg)
    obj = typing.cast("dict[str, typing.Any]", obj)
    if "pi" in obj:
        p1, p2 = _param_field(obj, "pi"), _param_field(obj, "pi_prime")
        return p1.inverse_roots[0], p1.central, p2.inverse_roots[0], p2.central
    values: tuple[Cyclo, Cyclo, Cyclo, Cyclo] = (
        _cyclo_field(obj, "a"),
        _cyclo_field(obj, "w"),
        _cyclo_field(obj, "c"),
        _cyclo_field(obj, "wp", "w'"),
    )
    for name, value in zip(("a", "w", "c", "wp"), values):
        if value.is_zero():
            msg = f"{name} must be nonzero"
            raise InputError(msg)
    return values


def _is_cyclo_json(obj: object) -> bool:
    return isinstance(obj, dict) and set(obj) == {"conductor", "coeffs"}  # pyright: ignore [reportUnknownArgumentType]


def _render_text(obj: typing.Any, indent: int = 0) -> list[str]:
    """Render a report for humans, with field elements written as polynomials in zeta_n."""

    pad = "  " * indent
    if _is_cyclo_json(obj):
        return [pad + cyclo_from_json(obj).to_text()]
    if isinstance(obj, dict):
        lines: list[str] = []
        for key in sorted(obj):  # pyright: ignore [reportUnknownVariableType, reportUnknownArgumentType]
            value = obj[key]  # pyright: ignore [reportUnknownVariableType]
            if _is_cyclo_json(value):
                lines.append(f"{pad}{key}: {cyclo_from_json(value).to_text()}")
            elif isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(value)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for item in obj:  # pyright: ignore [reportUnknownVariableType]
            rendered = _render_text(item, indent + 1)
            lines.append(f"{pad}- {rendered[0].strip()}")
            lines.extend(rendered[1:])
        return lines
    return [pad + json.dumps(obj)]


def emit(report: Report, config: RunConfig) -> None:
    if config.output_format == "text":
        print("\n".join(_render_text(report)))  # noqa: T201
    else:
        print(json.dumps(report, sort_keys=True, indent=2))  # noqa: T201


# endregion


# ============================================================================
# region -------- Subcommands --------
# ============================================================================


def cmd_classify(config: RunConfig) -> tuple[int, Report]:
    a, w, c, wp = _quadruple(_read_input(config))
    try:
        result = check_sym3_match(a, w, c, wp)
    except CentralCharacterMismatch as exc:
        msg = str(exc)
        raise InputError(msg) from exc
    report = result.to_json()
    if w == ONE and wp == ONE:
        report["trivial_central"] = classify_trivial_central(a, c).to_json()

    consistent = result.sym3_match and result.si3_local and result.power_relation is not PowerRelation.NONE
    status = EXIT_VIOLATION if config.strict and not consistent else EXIT_OK
    return status, report


def random_param(rng: random.Random) -> UnramifiedParam:
    """A dimension-2 parameter with entries ζ_n^k for n dividing 60, or occasionally a small rational."""

    def entry() -> Cyclo:
        if rng.random() < RATIONAL_PROBABILITY:
            return Cyclo.rational(rng.choice(RANDOM_RATIONALS))
        n = rng.choice(RANDOM_CONDUCTORS)
        return cyclo_make(n, rng.randrange(n))

    return UnramifiedParam([entry(), entry()])


def sweep_params(max_order: int) -> coll_abc.Iterator[UnramifiedParam]:
    """Every unordered pair {ζ_n^i, ζ_n^j} of roots of unity whose orders have lcm n ≤ max_order, each exactly once.

    A pair is listed under the n it generates, i.e. with gcd(i, j, n) = 1, so every order up to max_order occurs.
    """

    for n in range(1, max_order + 1):
        for i in range(n):
            for j in range(i, n):
                if math.gcd(i, j, n) == 1:
                    yield UnramifiedParam([cyclo_make(n, i), cyclo_make(n, j)])


def _identity_campaign(name: str, config: RunConfig) -> Report:
    check = check_clebsch_gordon if name == "clebsch-gordon" else check_lambda2_sym3
    rng = random.Random(config.seed)
    random_params = [random_param(rng) for _ in range(config.trials)]
    swept = list(sweep_params(config.max_order))

    failures = [check(p) for p in (*random_params, *swept)]
    failures = [result for result in failures if not result.holds]
    return {
        "identity": name,
        "trials": len(random_params),
        "sweep": len(swept),
        "passed": len(random_params) + len(swept) - len(failures),
        "failures": [result.to_json() for result in failures[:MAX_REPORTED_FAILURES]],
        "violations": len(failures),
    }


def _power_relation_campaign(config: RunConfig) -> Report:
    enumeration = enumerate_solutions(
        config.max_order,
        w_trivial=config.central_order == 1,
        central_order=config.central_order,
    )
    return {
        "identity": "power-relations",
        "solutions": enumeration.solutions,
        "case_counts": enumeration.case_counts,
        "power_relation_counts": enumeration.power_relation_counts,
        "uncovered": enumeration.uncovered[:MAX_REPORTED_FAILURES],
        "failures": enumeration.violations[:MAX_REPORTED_FAILURES],
        "violations": len(enumeration.uncovered) + len(enumeration.violations),
    }


ARCH_RANGE = range(-10, 11)
TEMPERED_GRID = tuple(
    sorted({Fraction(k, 4) for k in range(-8, 9)} | {Fraction(s, d) for s in (-1, 1) for d in (2, 3, 6)}),
)


def _arch_campaign() -> Report:
    consistent = [m for m in ARCH_RANGE if arch_galois_check(m)]
    return {
        "identity": "arch",
        "checked": [ARCH_RANGE.start, ARCH_RANGE.stop - 1],
        "consistent": consistent,
        "violations": 0 if consistent == [0] else 1,
    }


def _tempered_campaign() -> Report:
    consistent = [t for t in TEMPERED_GRID if tempered_check(t)]
    return {
        "identity": "tempered",
        "checked": [str(t) for t in TEMPERED_GRID],
        "consistent": [str(t) for t in consistent],
        "violations": 0 if consistent == [0] else 1,
    }


def cmd_verify(config: RunConfig) -> tuple[int, Report]:
    names = IDENTITIES[:-1] if config.identity == "all" else (config.identity,)
    campaigns: dict[str, Report] = {}
    for name in names:
        started = time.perf_counter()
        if name in ("clebsch-gordon", "lambda2-sym3"):
            campaigns[name] = _identity_campaign(name, config)
        elif name == "power-relations":
            campaigns[name] = _power_relation_campaign(config)
        elif name == "arch":
            campaigns[name] = _arch_campaign()
        else:
            campaigns[name] = _tempered_campaign()
        logger.info("%s: %d violations in %.2fs", name, campaigns[name]["violations"], time.perf_counter() - started)

    total = sum(campaign["violations"] for campaign in campaigns.values())
    report = {"seed": config.seed, "campaigns": campaigns, "violations": total}
    return (EXIT_OK if total == 0 else EXIT_VIOLATION), report


def cmd_enumerate(config: RunConfig) -> tuple[int, Report]:
    started = time.perf_counter()
    result = enumerate_solutions(
        config.max_order,
        w_trivial=config.central_order == 1,
        central_order=config.central_order,
    )
    logger.info(
        "examined %d pairs, %d solutions in %.2fs",
        result.pairs_examined,
        result.solutions,
        time.perf_counter() - started,
    )
    return (EXIT_OK if result.ok else EXIT_VIOLATION), result.to_json()


def cmd_demo(config: RunConfig) -> tuple[int, Report]:
    group = binary_icosahedral_group()
    identities = verify_icosahedral_identities(group)
    chi = rep_character(group, 1)
    det = trivial_character(group)
    params = frobenius_params(group)
    rows = character_table_rows(group)

    classes: list[Report] = []
    fields: list[NumberFieldDesc] = []
    all_consistent = True
    for row, p in zip(rows, params):
        conjugate = tau_conjugate(p)
        a, c = p.inverse_roots[0], conjugate.inverse_roots[0]
        case = classify_trivial_central(a, c)
        field = rationality_field(p)
        fields.append(field)
        paired = conjugate in params
        consistent = case.case != "none" and paired and (row["order"] != 10 or field == QSQRT5)
        all_consistent = all_consistent and consistent
        classes.append(
            {
                **row,
                "parameter": p.to_json(),
                "tau_conjugate": conjugate.to_json(),
                "tau_pairs_with_a_class": paired,
                "trivial_central": case.to_json(),
                "rationality_field": field.to_json(),
                "consistent": consistent,
            }
        )

    report = {
        "group_order": group.order,
        "class_count": len(group.classes),
        "dimensions": {
            "rho": chi.dimension.to_json(),
            "sym3": sym_character(chi, det, 3).dimension.to_json(),
            "sym5": sym_character(chi, det, 5).dimension.to_json(),
        },
        "identities": identities.to_json(),
        "classes": classes,
        "global_field": corollary_field(fields).to_json(),
    }
    ok = identities.ok and all_consistent
    return (EXIT_OK if ok else EXIT_VIOLATION), report


def cmd_lfactor(config: RunConfig) -> tuple[int, Report]:
    obj = _read_input(config)
    if not isinstance(obj, dict):
        msg = "input must be a JSON object"
        raise InputError(msg)
    obj = typing.cast("dict[str, typing.Any]", obj)
    q = obj.get("q", config.q)
    if type(q) is not int or q < 2:
        msg = "q must be an integer at least 2"
        raise InputError(msg)

    def describe(p: UnramifiedParam) -> Report:
        factor = local_l_factor(p, q)
        return {
            "euler_factor": render_euler_factor(factor),
            "degree": factor.degree,
            "dirichlet_coeffs": [x.to_json() for x in dirichlet_coeffs(factor, config.terms)],
        }

    if "inverse_roots" in obj:
        try:
            p = UnramifiedParam.from_json(obj)
        except (TypeError, ValueError) as exc:
            msg = f"bad parameter: {exc}"
            raise InputError(msg) from exc
        if "sym" in obj:
            m = obj["sym"]
            if type(m) is not int or m < 0 or p.dimension != 2:
                msg = "'sym' needs a non-negative integer and a dimension-2 parameter"
                raise InputError(msg)
            p = sym_power(p, m)
        return EXIT_OK, {"q": q, "terms": config.terms, **describe(p)}

    a, w, c, wp = _quadruple(obj)
    left, right = si3_sides(a, w, c, wp)
    left_report, right_report = describe(left), describe(right)
    coefficientwise = left_report["dirichlet_coeffs"] == right_report["dirichlet_coeffs"]
    report = {
        "q": q,
        "terms": config.terms,
        "sym5": left_report,
        "adjoint_tensor": right_report,
        "coefficientwise_equal": coefficientwise,
        "multiset_equal": left == right,
    }
    status = EXIT_VIOLATION if config.strict and not coefficientwise else EXIT_OK
    return status, report


COMMANDS: dict[str, coll_abc.Callable[[RunConfig], tuple[int, Report]]] = {
    "classify": cmd_classify,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "demo": cmd_demo,
    "lfactor": cmd_lfactor,
}


# endregion


def main(argv: typing.Optional[coll_abc.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig.from_namespace(args)

    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        config.validate()
        status, report = COMMANDS[config.subcommand](config)
    except InputError as exc:
        logger.error("%s", exc)  # noqa: TRY400
        return EXIT_USAGE

    emit(report, config)
    return status
