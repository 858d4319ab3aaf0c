"""
Atomic artifact-directory lock.
Parallel `run` invocations (and xdist workers in the smoke suite) may target
the same artifacts directory; every write of a transcript, proof or
certificate happens while holding the directory lock so files from two runs
never interleave.
"""

import logging
import os

from filelock import FileLock, Timeout

from tentacle.errors import LockTimeout

logger = logging.getLogger(__name__)

LOCK_NAME = ".artifacts.lock"


class AtomicLock:
    def __init__(self, directory: str, timeout_seconds: float = 10):
        """
        :param directory: Artifacts directory to guard. Created if missing.
        :param timeout_seconds: Fail fast after this long; a run that waits
                                longer is stuck behind a dead writer.
        """
        os.makedirs(directory, exist_ok=True)
        self.lock_file = os.path.join(directory, LOCK_NAME)
        self.timeout = timeout_seconds
        self.lock = FileLock(self.lock_file, timeout=timeout_seconds)

    def acquire(self):
        try:
            self.lock.acquire()
        except Timeout:
            raise LockTimeout(
                f"Failed to acquire {self.lock_file} after {self.timeout}s. "
                "Another run is writing to this artifacts directory."
            )
        logger.debug("[ArtifactLock] acquired %s", self.lock_file)

    def release(self):
        self.lock.release()
        logger.debug("[ArtifactLock] released %s", self.lock_file)

    def __enter__(self):
        self.acquire()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.release()
