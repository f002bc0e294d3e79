"""Exhaustive verification suites over small tube ranks.

Each suite sweeps every branch module on a single tube (and both choices of
localizing the tube or not, where relevant), checking one law: the
perpendicularity equality, witness totality, closure stability, or the
minimality criteria.  Pair spaces are partitioned across a thread pool capped
by the REGULUS_THREADS environment variable; inputs are immutable and the
per-pair results are merged in submission order, so reports are
deterministic.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .localization import (
    closure_probe,
    full_turn_witness,
    generator_system,
    localization_match_report,
    verify_witness,
    wide_closure_description,
)
from .tilting import (
    Pair,
    build_cotilting,
    build_tilting,
    enumerate_branch_modules,
    is_minimal_cotilting,
    is_minimal_tilting,
    pruefer_socles,
)
from .tubes import TubeConfig

SCHEMA = "regulus/1"


def worker_count() -> int:
    env = os.environ.get("REGULUS_THREADS", "")
    if env.isdigit() and int(env) >= 1:
        return int(env)
    return min(8, os.cpu_count() or 1)


def _map_ordered(fn: Callable, items: Sequence) -> list:
    workers = worker_count()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def single_tube_pairs(rank: int, localize: bool = True) -> list[Pair]:
    config = TubeConfig((("t1", rank),))
    tube_set = frozenset({"t1"}) if localize else frozenset()
    return [Pair(config, bm, tube_set) for bm in enumerate_branch_modules(config)]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: int
    failed: int
    seconds: float
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        # Wall-clock stays off the document so identical inputs produce
        # identical bytes.
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "failures": list(self.failures),
        }


def _run_suite(name: str, units: Sequence, check: Callable) -> SuiteResult:
    """Each check returns a list of failure records (empty means the unit
    passed)."""
    start = time.perf_counter()
    results = _map_ordered(check, units)
    failures = [rec for recs in results for rec in recs]
    failed_units = sum(1 for recs in results if recs)
    return SuiteResult(
        name,
        len(units) - failed_units,
        failed_units,
        time.perf_counter() - start,
        tuple(failures),
    )


def perp_match_suite(ranks: Iterable[int], len_bound_mult: int = 3) -> SuiteResult:
    pairs = [p for rank in ranks for p in single_tube_pairs(rank)]

    def check(pair: Pair) -> list[dict]:
        rank = pair.config.rank_of("t1")
        report = localization_match_report(pair, len_bound_mult * rank)
        return [
            {"pair": pair.to_json(), **m.to_json()} for m in report.mismatches
        ]

    return _run_suite("perp_match", pairs, check)


def witness_suite(ranks: Iterable[int]) -> SuiteResult:
    pairs = [p for rank in ranks for p in single_tube_pairs(rank)]

    def check(pair: Pair) -> list[dict]:
        failures = []
        system = generator_system(pair)
        for s in pruefer_socles(pair):
            witness = full_turn_witness(s, pair)
            ok, diagnostic = verify_witness(witness, system)
            if not ok:
                failures.append(
                    {"pair": pair.to_json(), "S": str(s), "diagnostic": diagnostic}
                )
        return failures

    return _run_suite("witness", pairs, check)


def closure_suite(ranks: Iterable[int], len_bound_mult: int = 3) -> SuiteResult:
    pairs = [p for rank in ranks for p in single_tube_pairs(rank)]

    def check(pair: Pair) -> list[dict]:
        rank = pair.config.rank_of("t1")
        desc = wide_closure_description(pair)
        return [
            {"pair": pair.to_json(), "Z": str(z)}
            for z in closure_probe(desc, len_bound_mult * rank)
            if not desc.contains(z)
        ]

    return _run_suite("closure", pairs, check)


def minimality_suite(ranks: Iterable[int]) -> SuiteResult:
    pairs = [
        p
        for rank in ranks
        for localize in (True, False)
        for p in single_tube_pairs(rank, localize)
    ]

    def check(pair: Pair) -> list[dict]:
        failures = []
        p_nonempty = bool(pair.tube_set)
        tilting = build_tilting(pair)
        cotilting = build_cotilting(pair)
        has_adic = bool(cotilting.adic_socles)
        laws = [
            ("tilting minimal iff P nonempty", is_minimal_tilting(tilting) == p_nonempty),
            ("U nonempty iff P nonempty", bool(pruefer_socles(pair)) == p_nonempty),
            ("cotilting minimal iff adic summand", is_minimal_cotilting(cotilting) == has_adic),
            ("adic summand iff P nonempty", has_adic == p_nonempty),
        ]
        for law, holds in laws:
            if not holds:
                failures.append({"pair": pair.to_json(), "law": law})
        return failures

    return _run_suite("minimality", pairs, check)


@dataclass(frozen=True)
class VerificationReport:
    suites: tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def mismatches(self) -> list[dict]:
        return [rec for s in self.suites for rec in s.failures]

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "ok": self.ok,
            "suites": [s.to_json() for s in sorted(self.suites, key=lambda s: s.name)],
        }


def run_suites(ranks: Iterable[int], len_bound_mult: int = 3) -> VerificationReport:
    ranks = tuple(ranks)
    return VerificationReport(
        (
            perp_match_suite(ranks, len_bound_mult),
            witness_suite(ranks),
            closure_suite(ranks, len_bound_mult),
            minimality_suite(ranks),
        )
    )
