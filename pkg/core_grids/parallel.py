from concurrent.futures import ThreadPoolExecutor, as_completed

from ridgenet.config import WORKERS, CHUNK_SIZE, ridgenet_logger


def chunk_bounds(count, chunk_size):
    return [(start, min(start + chunk_size, count)) for start in range(0, count, chunk_size)]


def map_chunks(work, count, workers=None, chunk_size=None):
    """
    Run work(start, stop) over consecutive blocks of range(count) and return the results in block order

    Blocks are fixed by chunk_size alone and every result is stored at its block index as it completes, so the
    output (and any reduction over it in list order) is the same whatever the number of workers. numpy releases
    the GIL inside the vectorized kernels, which is what makes threads pay off here.

    Args:
        work (callable): work(start, stop) -> result for the rows [start, stop)
        count (int): number of rows
        workers (int, optional): pool size, defaults to RIDGENET_WORKERS
        chunk_size (int, optional): rows per block, defaults to RIDGENET_CHUNK_SIZE

    Returns:
        list: one result per block, in order
    """
    workers = workers or WORKERS
    chunk_size = chunk_size or CHUNK_SIZE
    tasks = list(enumerate(chunk_bounds(count, chunk_size)))
    n_workers = min(len(tasks), workers)
    ridgenet_logger.debug('Dispatching %d rows in %d blocks to %d workers' % (count, len(tasks), n_workers))
    results = [None] * len(tasks)
    if n_workers <= 1:
        for index, (start, stop) in tasks:
            results[index] = work(start, stop)
        return results
    with ThreadPoolExecutor(max_workers=n_workers) as executor:
        futures = {executor.submit(work, start, stop): index for index, (start, stop) in tasks}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
    return results
