"""
Batch verifier for the identity catalog.

Compares both sides of every case of an identity coefficientwise up to the
requested order and records the first disagreement.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple

from flask import Flask

from app.models import VerificationReport
from app.services.identities import (
    IdentityEvaluationError,
    default_order_for,
    get_identity,
    list_identities,
)
from app.services.series import QSeriesError, config_value, equal_to_order

logger = logging.getLogger(__name__)

# settings a worker process needs to rebuild the same cases
WORKER_SETTINGS = ('DEFAULT_ORDER', 'PROPERTY_SAMPLES', 'RANDOM_SEED', 'SUITE_ORDER')


def verify(name: str, order: Optional[int] = None) -> VerificationReport:
    """
    Verify one registered identity.

    Args:
        name: Registry key
        order: Comparison order; None uses the identity's default order

    Returns:
        VerificationReport naming the first failing case, if any

    Raises:
        UnknownIdentity: if name is not registered
        IdentityEvaluationError: if a side cannot be built
    """
    identity = get_identity(name)
    order = default_order_for(name) if order is None else int(order)
    started = time.perf_counter()

    try:
        cases = identity.cases()
    except (QSeriesError, ValueError) as e:
        raise IdentityEvaluationError(f"{name}: could not build cases: {e}") from e

    checked = 0
    mismatch = None
    for case in cases:
        try:
            lhs, rhs = case.evaluate(order)
            comparison = equal_to_order(lhs, rhs, order)
        except IdentityEvaluationError:
            raise
        except (QSeriesError, ValueError) as e:
            raise IdentityEvaluationError(f"{name} [{case.label}]: {e}") from e
        checked += 1
        if not comparison:
            mismatch = comparison.mismatch(case.label)
            break

    report = VerificationReport(
        name=name,
        order_checked=order,
        passed=mismatch is None,
        first_mismatch=mismatch,
        wall_time=time.perf_counter() - started,
        cases_checked=checked,
    )
    if report.passed:
        logger.info(f"{name}: passed {checked} case(s) to order {order} in {report.wall_time:.2f}s")
    else:
        logger.warning(f"{name}: failed at q^{mismatch.exponent} in case {mismatch.case!r}")
    return report


def _verify_in_worker(job: Tuple[str, int, Dict[str, object]]) -> VerificationReport:
    name, order, settings = job
    app = Flask('qseries-worker')
    app.config.update(settings)
    with app.app_context():
        return verify(name, order)


def verify_all(order: Optional[int] = None, jobs: Optional[int] = None) -> List[VerificationReport]:
    """
    Verify every registered identity; reports come back in registry order.

    With jobs > 1 identities are evaluated in a process pool. Orders and
    sampling settings are resolved here so workers see the same configuration.
    """
    jobs = int(config_value('VERIFY_JOBS')) if jobs is None else int(jobs)
    names = [identity_class.NAME for identity_class in list_identities()]
    orders = [default_order_for(name) if order is None else int(order) for name in names]
    logger.info(f"Verifying {len(names)} identities with {jobs} worker(s)")

    if jobs <= 1:
        return [verify(name, n) for name, n in zip(names, orders)]

    settings = {key: config_value(key) for key in WORKER_SETTINGS}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_in_worker, [(name, n, settings) for name, n in zip(names, orders)]))
