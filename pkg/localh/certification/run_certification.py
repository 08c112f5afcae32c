# pylint: disable=logging-format-interpolation
# pylint: disable=logging-not-lazy
"""
Batch loop behind the command line.

Every task is independent. With more than one worker the tasks are spread
over a process pool, but results are always handed back in task order so
that the emitted records do not depend on the worker count.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from time import perf_counter
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

from tqdm import tqdm

from localh.certification.records import (
    Record,
    certificate_record,
    chebyshev_check_record,
    h_poly_record,
    local_h_record,
    narayana_record,
    oracle_record,
    transfer_record,
    xi_record,
)
from localh.combinatorics.basis_transforms import (
    location_counts,
    realrootedness_transfer_check,
)
from localh.combinatorics.chebyshev import (
    DEFAULT_PRECISION_BITS,
    OracleReport,
    certify_h_poly,
    oracle_agreement,
    reciprocal_substitution_check,
    reindex_check,
    u_poly,
    u_poly_closed,
)
from localh.combinatorics.cluster_xi import (
    RootSystem,
    catalan,
    local_h,
    narayana_poly,
    verify_d_identity,
    xi_vector,
)
from localh.errors import ZeroInput
from localh.polynomials.real_roots import certify_real_rooted

T = TypeVar("T")

Worker = Callable[[T], List[Record]]


@dataclass(frozen=True)
class CertifyTask:
    system: RootSystem
    show_roots: bool = False
    timings: bool = False


@dataclass(frozen=True)
class ChebyshevTask:
    n: int
    precision_bits: int = DEFAULT_PRECISION_BITS
    show_roots: bool = False


def xi_task(system: RootSystem) -> List[Record]:
    return [xi_record(system, xi_vector(system).xi)]


def local_h_task(system: RootSystem) -> List[Record]:
    return [local_h_record(system, local_h(system))]


def certify_task(task: CertifyTask) -> List[Record]:
    """Sturm certificate and root locations of one local h-polynomial."""
    start = perf_counter()
    poly = local_h(task.system)
    certificate = certify_real_rooted(poly, with_intervals=task.show_roots)
    counts = None if poly.is_zero() else location_counts(poly)
    runtime_ms = round(1000 * (perf_counter() - start)) if task.timings else None
    logging.info(
        f"Certified local h-polynomial of {task.system}".ljust(65, ".")
        + ("[done]" if certificate.is_real_rooted else "[failed]")
    )
    return [
        certificate_record(
            task.system, poly, certificate, counts, runtime_ms, task.show_roots
        )
    ]


def transfer_task(system: RootSystem) -> List[Record]:
    try:
        report = realrootedness_transfer_check(xi_vector(system))
    except ZeroInput:
        logging.warning(
            f"Zero expansion for {system}, transfer check skipped".ljust(65, ".")
            + "[WARNING]"
        )
        return [{"input": system.label, "n": system.rank, "skipped": True, "passed": True}]
    return [transfer_record(system.label, report)]


def narayana_task(n: int) -> List[Record]:
    passed = verify_d_identity(n) and narayana_poly(n).evaluate(1) == catalan(n + 1)
    return [narayana_record(n, passed)]


def chebyshev_task(task: ChebyshevTask) -> List[Record]:
    """Recurrence, substitution, certificate and oracle checks for one order."""
    n = task.n
    records = [
        chebyshev_check_record(n, "recurrence_closed_form", u_poly(n) == u_poly_closed(n)),
        chebyshev_check_record(n, "reciprocal_substitution", reciprocal_substitution_check(n)),
    ]
    if n >= 2:
        records.append(chebyshev_check_record(n, "reindex", reindex_check(n)))
    records.append(h_poly_record(certify_h_poly(n), task.show_roots))
    if n >= 2:
        oracle = oracle_agreement(n, precision_bits=task.precision_bits)
    else:
        oracle = OracleReport(n, (), ())
    records.append(oracle_record(oracle))
    return records


def _guarded(worker: Worker[T], task: T) -> List[Record]:
    try:
        return worker(task)
    except Exception:
        logging.exception(f"Task {task} failed!")
        raise


def run_ordered(
    worker: Worker[T],
    tasks: Iterable[T],
    workers: int = 1,
    progress: bool = False,
    description: Optional[str] = None,
) -> Iterator[Record]:
    """
    Run ``worker`` on every task and yield the records in task order.

    :param worker: Module level function, so it can be sent to a process pool.
    :param tasks: Picklable task descriptions.
    :param workers: Number of processes; 1 runs in the calling process.
    :param progress: Show a tqdm bar on stderr.
    :param description: Label of the progress bar.
    """
    task_list = list(tasks)
    guarded = partial(_guarded, worker)
    if workers <= 1 or len(task_list) < 2:
        for task in tqdm(task_list, disable=not progress, desc=description):
            yield from guarded(task)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(guarded, task_list)
        for batch in tqdm(results, total=len(task_list), disable=not progress, desc=description):
            yield from batch
