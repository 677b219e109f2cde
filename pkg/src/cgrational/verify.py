"""Run identity suites over a rectangle of (m, n) instances."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from .clebsch_gordan import verify_orthogonality
from .normalized import verify_normalized
from .projectors import verify_projectors
from .reference import verify_worked_example
from .report import Report
from .symmetries import verify_recurrences, verify_regge

SUITES: dict[str, Callable[[int, int], Report]] = {
    "orthogonality": verify_orthogonality,
    "recurrences": verify_recurrences,
    "regge": verify_regge,
    "normalized": verify_normalized,
    "projectors": verify_projectors,
}


def worker_count() -> int:
    env = os.environ.get("CG_EXACT_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"CG_EXACT_THREADS must be a positive integer, got {env!r}") from None
        if value < 1:
            raise ValueError(f"CG_EXACT_THREADS must be a positive integer, got {env!r}")
        return value
    return os.cpu_count() or 1


def run_instance(args: tuple[int, int, tuple[str, ...]]) -> Report:
    m, n, suites = args
    report = Report()
    for name in suites:
        report.merge(SUITES[name](m, n))
    return report


def run_suites(
    m_max: int,
    n_max: int,
    suites: Iterable[str],
    *,
    m_min: int = 0,
    n_min: int = 0,
    workers: int | None = None,
    fail_fast: bool = False,
) -> Report:
    """All instances m_min<=m<=m_max, n_min<=n<=n_max, merged in (m, n) order."""
    suites = tuple(suites)
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    jobs = [(m, n, suites) for m in range(m_min, m_max + 1) for n in range(n_min, n_max + 1)]
    workers = worker_count() if workers is None else workers
    total = Report()
    if "projectors" in suites and m_min <= 3 <= m_max and n_min <= 4 <= n_max:
        total.merge(verify_worked_example())
    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            total.merge(run_instance(job))
            if fail_fast and not total.passed:
                break
        return total
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rep in pool.map(run_instance, jobs):
            total.merge(rep)
            if fail_fast and not total.passed:
                pool.shutdown(wait=False, cancel_futures=True)
                break
    return total
