"""
Verification Script: Lock Contention
Reason: Verify that AtomicLock serializes writers to one artifacts directory
across processes.
"""
import multiprocessing
import os
import time

import pytest

from utils.file_lock import AtomicLock

pytestmark = pytest.mark.verification

WORKERS = 5


def worker(worker_id, directory, output_file):
    """
    Acquire the directory lock, write start, wait, write end, release.
    """
    with AtomicLock(directory, timeout_seconds=20):
        print(f"[Lock] worker {worker_id} acquired lock.")
        with open(output_file, "a") as f:
            f.write(f"Worker {worker_id} start\n")

        time.sleep(0.3)

        with open(output_file, "a") as f:
            f.write(f"Worker {worker_id} end\n")
        print(f"[Lock] worker {worker_id} released lock.")


def test_lock_contention_verification(artifact_dir):
    output_file = os.path.join(artifact_dir, "contention.txt")

    print(f"\n[Lock] spawning {WORKERS} workers...")
    processes = [
        multiprocessing.Process(target=worker, args=(i, artifact_dir, output_file))
        for i in range(WORKERS)
    ]
    for p in processes:
        p.start()
    for p in processes:
        p.join()
    assert all(p.exitcode == 0 for p in processes)

    with open(output_file, "r") as f:
        lines = f.readlines()

    # start / end pairs must never interleave
    is_valid = True
    active_worker = None
    for line in lines:
        _, w_id, action = line.split()
        if action == "start":
            if active_worker is not None:
                print(f"[Lock] ERROR: worker {w_id} started while worker {active_worker} was running!")
                is_valid = False
            active_worker = w_id
        elif active_worker != w_id:
            print(f"[Lock] ERROR: worker {w_id} ended but {active_worker} was supposed to be running!")
            is_valid = False
        else:
            active_worker = None

    if not is_valid:
        print("".join(lines))
    assert is_valid, "Lock contention verification failed"
    assert len(lines) == 2 * WORKERS
    print("[Lock] SUCCESS: Lock enforced perfect serialization.")
