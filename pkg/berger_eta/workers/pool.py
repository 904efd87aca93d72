"""
Per-n fan-out for coefficient computation.

Each n is independent; the only shared state is the Bernoulli cache, which
every worker process warms once before taking tasks.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Iterable, List

from loguru import logger

from berger_eta.algebra.bernoulli_poly import bernoulli_numbers
from berger_eta.algebra.exact_arith import RationalLike
from berger_eta.services.eta_engine import DEFAULT_SERIES_MARGIN, compute_coefficient
from berger_eta.services.models import EtaCoefficient


def _warm_cache(max_m: int) -> None:
    """Worker initializer: build B_0..B_max_m before any task runs."""
    bernoulli_numbers(max_m)


def compute_coefficients(
    ns: Iterable[int],
    rho: RationalLike = 1,
    workers: int = 1,
    series_margin: int = DEFAULT_SERIES_MARGIN
) -> List[EtaCoefficient]:
    """
    Compute EtaCoefficient records for every n.

    Args:
        ns: Indices, each >= 2
        rho: Squashing parameter for the eta values
        workers: Process count; 1 runs in the calling process
        series_margin: Working-order margin for the generating-function route

    Returns:
        Records sorted by n, independent of completion order
    """
    indices = sorted(set(ns))
    if not indices:
        return []

    max_m = indices[-1] + 1
    task = partial(compute_coefficient, rho=rho, series_margin=series_margin)

    if workers <= 1 or len(indices) == 1:
        _warm_cache(max_m)
        records = [task(n) for n in indices]
    else:
        logger.info(f"Fanning out {len(indices)} coefficients over {workers} processes")
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_warm_cache,
            initargs=(max_m,)
        ) as executor:
            records = list(executor.map(task, indices))

    return sorted(records, key=lambda record: record.n)
