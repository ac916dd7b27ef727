"""Wall-clock timing of the acceptance-scale campaigns: the icosahedral group build, the root-of-unity enumerations
and the identity campaigns.

Run with ``python -m bench.bench_campaigns`` (or ``hatch run bench:campaigns``). Each benchmark runs once in a fresh
state for the group build; the enumerations share the process-wide arithmetic caches, so their order matters.
"""

import platform
import random
import sys
import time

from icosa_fibres import icosa
from icosa_fibres.classify import enumerate_solutions, ramified_ps_constrain
from icosa_fibres.cli import random_param
from icosa_fibres.lfactors import check_clebsch_gordon, check_lambda2_sym3


class CatchTime:
    """A context manager that measures the time taken to execute its body."""

    def __enter__(self):
        self.elapsed = time.perf_counter()
        return self

    def __exit__(self, *exc_info: object):
        self.elapsed = time.perf_counter() - self.elapsed


def bench_group_build() -> float:
    with CatchTime() as ct:
        group = icosa.conjugacy_classes(icosa.build_group())
        icosa.verify_icosahedral_identities(group)
    return ct.elapsed


def bench_identity_campaign() -> float:
    rng = random.Random(0)
    params = [random_param(rng) for _ in range(500)]
    with CatchTime() as ct:
        for p in params:
            check_clebsch_gordon(p)
            check_lambda2_sym3(p)
    return ct.elapsed


def bench_enumerate_trivial() -> float:
    with CatchTime() as ct:
        enumerate_solutions(60)
    return ct.elapsed


def bench_enumerate_central() -> float:
    with CatchTime() as ct:
        enumerate_solutions(60, w_trivial=False, central_order=12)
    return ct.elapsed


def bench_ramified_ps() -> float:
    with CatchTime() as ct:
        for order in range(1, 61):
            ramified_ps_constrain(order, "cube")
    return ct.elapsed


def pretty_print_results(results: dict[str, float]) -> None:
    """Format and print results as an reST-style list table."""

    impl_header = "Implementation"
    impl_len = len(impl_header)
    impl_divider = "=" * impl_len

    version_header = "Version"
    version_len = len(version_header)
    version_divider = "=" * version_len

    benchmark_len = max(len("Benchmark"), *(len(name) for name in results))
    benchmark_header = "Benchmark".ljust(benchmark_len)
    benchmark_divider = "=" * benchmark_len

    time_len = 12
    time_header = "Time".ljust(time_len)
    time_divider = "=" * time_len

    divider = "  ".join((impl_divider, version_divider, benchmark_divider, time_divider))

    impl = platform.python_implementation().ljust(impl_len)
    version = f"{sys.version_info.major}.{sys.version_info.minor}".ljust(version_len)

    print(divider)
    print(impl_header, version_header, benchmark_header, time_header, sep="  ")
    print(divider)

    for bench_type, result in results.items():
        print(impl, version, bench_type.ljust(benchmark_len), f"{result:.3f}s".ljust(time_len), sep="  ")

    print(divider)


BENCH_FUNCS = {
    "group build + identities": bench_group_build,
    "identity campaign (500)": bench_identity_campaign,
    "ramified ps (N <= 60)": bench_ramified_ps,
    "enumerate (60, w = 1)": bench_enumerate_trivial,
    "enumerate (60, w^12 = 1)": bench_enumerate_central,
}


def main() -> None:
    import argparse

    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--only",
        action="extend",
        nargs="+",
        choices=BENCH_FUNCS.keys(),
        type=str,
        help="Run only the named benchmarks, in the given order",
    )
    args = parser.parse_args()

    exec_order: list[str] = args.only or list(BENCH_FUNCS)
    results = {name: BENCH_FUNCS[name]() for name in exec_order}
    pretty_print_results(results)


if __name__ == "__main__":
    raise SystemExit(main())
