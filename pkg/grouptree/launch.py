"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree import maybe_initialize_process
from grouptree.exceptions import WorkerError
import multiprocessing as m
import queue


# seconds to wait on the result queue before checking worker liveness
POLL_SECONDS = 1.0


def run_variant(
    baseline,
    variant,
    dataset,
    index,
    output_queue
):
    # run one experiment inside a worker and send the result back with its position
    try:
        output_queue.put((index, baseline(variant, dataset), None))
    except Exception as error:
        output_queue.put((index, None, error))


def collect_batch(
    output_queue,
    pending,
    results,
    poll_seconds
):
    # receive one message per pending worker and return the reported errors
    errors = []
    exited = set()
    while pending:
        try:
            index, result, error = output_queue.get(timeout=poll_seconds)
        except queue.Empty:

            # a worker that exited one full poll ago without reporting never will
            dead = [i for i in sorted(exited) if i in pending]
            if dead:
                process = pending[dead[0]]
                raise WorkerError(
                    "worker for variant {} exited with code {} without a result".format(
                        dead[0], process.exitcode))
            exited = {i for i, p in pending.items() if p.exitcode is not None}
            continue

        pending.pop(index)
        results[index] = result
        if error is not None:
            errors.append((index, error))
    return errors


def launch_local(
    baseline,
    variants,
    dataset,
    num_workers=1,
    poll_seconds=POLL_SECONDS
):
    # results come back in the order of variants, and everything must be
    # picklable when more than one worker is used
    if num_workers <= 1 or len(variants) <= 1:
        return [baseline(variant, dataset) for variant in variants]

    # initialize the multiprocessing interface
    maybe_initialize_process()

    # launch the experiments in batches of num_workers processes
    results = [None] * len(variants)
    output_queue = m.Queue()
    for start in range(0, len(variants), num_workers):
        pending = dict()
        for index in range(start, min(start + num_workers, len(variants))):
            pending[index] = m.Process(
                target=run_variant,
                args=(baseline, variants[index], dataset, index, output_queue))
        processes = list(pending.values())

        # collect results before joining so full pipes never block a worker
        for p in processes:
            p.start()
        try:
            errors = collect_batch(output_queue, pending, results, poll_seconds)
        finally:
            for p in processes:
                if p.is_alive() and p in pending.values():
                    p.terminate()
            for p in processes:
                p.join()

        # re-raise the error of the earliest failed variant
        if errors:
            raise min(errors, key=lambda e: e[0])[1]
    return results
