import math
import os
from multiprocessing import Pool
from typing import Callable, List, Sequence

from fcs.utils.log import logger


def default_workers() -> int:
    return max(1, int(os.getenv('FCS_WORKERS', 1)))


def _run_shard(args):
    function, shard = args
    return [function(item) for item in shard]


def handle_queue(function: Callable, items: Sequence, workers: int = None) -> List:
    """
    按顺序把 items 切成连续分片交给 worker 进程，结果按分片顺序合并，
    串行与并行得到的列表完全一致。
    :param function: 可 pickle 的顶层函数
    :param items: 待处理的对象序列
    :param workers: 进程数，默认读取 FCS_WORKERS，1 表示直接在当前进程执行
    """
    items = list(items)
    workers = workers or default_workers()
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    size = int(math.ceil(len(items) / workers))
    shards = [items[i:i + size] for i in range(0, len(items), size)]
    logger.info(f"handle_queue: {len(items)} items, {len(shards)} shards, {workers} workers")
    with Pool(processes=workers) as pool:
        # Pool.map 保持分片顺序
        results = pool.map(_run_shard, [(function, shard) for shard in shards])
    merged = []
    for part in results:
        merged.extend(part)
    return merged
