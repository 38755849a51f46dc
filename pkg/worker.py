import concurrent.futures
from typing import Callable, Iterable, List, Optional, TypeVar

import structlog

from core.config import settings

logger = structlog.get_logger()

T = TypeVar("T")
R = TypeVar("R")


class WorkerManager:
    """
    Runs independent evaluations over a process pool. Results come back in input
    order, so the output never depends on the number of workers.
    """

    def __init__(self, num_workers: Optional[int] = None):
        self.num_workers = num_workers if num_workers is not None else settings.THREADS

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        if self.num_workers <= 1 or len(items) <= 1:
            return [func(item) for item in items]
        logger.info("worker.pool", workers=self.num_workers, jobs=len(items))
        with concurrent.futures.ProcessPoolExecutor(max_workers=self.num_workers) as executor:
            futures = [executor.submit(func, item) for item in items]
            return [future.result() for future in futures]
