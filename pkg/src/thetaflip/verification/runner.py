from __future__ import annotations

import logging
import queue
import threading
from queue import Queue
from typing import Iterable, Optional

from thetaflip.verification.base import Suite, SuiteResult, SuiteState

logger = logging.getLogger(__name__)


def _cancelled(suite: Suite) -> SuiteResult:
    return SuiteResult(suite.name, SuiteState.CANCELLED, 0, (), 0)


class SuiteRunner:
    """
    Runs verification suites on a pool of daemon worker threads.

    Suites are taken from a thread-safe queue; results are collected under a
    reentrant lock and returned in the order the suites were submitted, so the
    printed table does not depend on scheduling.

    :ivar suite_queue: pending suites with their submission index.
    :ivar workers: number of worker threads.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError(f"At least one worker is needed, got {workers}")
        self.workers = workers
        self.suite_queue: Queue[tuple[int, Suite]] = queue.Queue()
        self.running_suites: dict[int, Suite] = {}
        self._results: dict[int, SuiteResult] = {}
        self._threads: list[threading.Thread] = []
        self._submitted = 0
        self._running = False
        self._lock = threading.RLock()

    def start(self) -> None:
        with self._lock:
            if self._running:
                return
            self._running = True
            self._threads = [
                threading.Thread(target=self._suite_worker, daemon=True)
                for _ in range(self.workers)
            ]
            for thread in self._threads:
                thread.start()

    def stop(self) -> None:
        """Cancel the running suites and drop everything still queued."""
        with self._lock:
            if not self._running:
                return
            self._running = False
            for suite in self.running_suites.values():
                suite.cancel()
            while not self.suite_queue.empty():
                try:
                    index, suite = self.suite_queue.get_nowait()
                except queue.Empty:
                    break
                suite.cancel()
                self._results[index] = _cancelled(suite)
                self.suite_queue.task_done()

    def _suite_worker(self) -> None:
        while self._running:
            try:
                index, suite = self.suite_queue.get(timeout=0.1)
            except queue.Empty:
                continue
            with self._lock:
                if not self._running:
                    suite.cancel()
                    self._results[index] = _cancelled(suite)
                    self.suite_queue.task_done()
                    break
                self.running_suites[index] = suite
            try:
                result = suite.run()
            except Exception as e:
                logger.exception("suite %s crashed", suite.name)
                crash = f"{type(e).__name__}: {e}"
                result = SuiteResult(suite.name, SuiteState.COMPLETED, 0, (crash,), 1)
            finally:
                with self._lock:
                    self.running_suites.pop(index, None)
            with self._lock:
                self._results[index] = result
            self.suite_queue.task_done()

    def queue_suite(self, suite: Suite) -> None:
        if not self._running:
            self.start()
        with self._lock:
            index = self._submitted
            self._submitted += 1
        self.suite_queue.put((index, suite))

    def join(self) -> list[SuiteResult]:
        """Wait for the queue to drain and return results in submission order."""
        self.suite_queue.join()
        with self._lock:
            return [self._results[index] for index in sorted(self._results)]

    def run(self, suites: Iterable[Suite]) -> list[SuiteResult]:
        for suite in suites:
            self.queue_suite(suite)
        results = self.join()
        self.stop()
        return results

    @property
    def is_running(self) -> bool:
        with self._lock:
            busy = bool(self.running_suites)
        return busy or not self.suite_queue.empty()

    @property
    def current_suite(self) -> Optional[Suite]:
        with self._lock:
            return next(iter(self.running_suites.values()), None)
