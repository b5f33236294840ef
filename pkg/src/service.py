import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import aclosing
from datetime import datetime, timezone
from math import isqrt
from typing import AsyncIterator, Callable, List, Optional, Tuple

from .arithmetic.sieve import sieve_primes
from .errors import CapacityError
from .models.arithmetic import PrimeTable
from .models.config import EngineConfig, SumConfig
from .models.sums import Checkpoint, PartialSums, RunReport
from .summation.accumulator import INT64_MAX, block_fits_int64, sum_range

logger = logging.getLogger(__name__)

CheckpointCallback = Callable[[Checkpoint], None]
SegmentCallback = Callable[[int, int], None]

_WORKER_BASE: Optional[PrimeTable] = None


def _install_base(base: PrimeTable) -> None:
    global _WORKER_BASE
    _WORKER_BASE = base


def _sum_segment(lo: int, hi: int, ks: List[int], orders: List[int],
                 cross_check: bool) -> PartialSums:
    if _WORKER_BASE is None:
        raise RuntimeError("worker started without a prime table")
    return sum_range(lo, hi, ks, orders, _WORKER_BASE, cross_check)


def check_capacity(config: SumConfig, engine: EngineConfig) -> List[int]:
    """
    Refuse configurations whose block sums could overflow, and return the
    moment orders that need arbitrary-precision block sums.
    """
    if config.x_max > engine.max_x:
        raise CapacityError(f"x_max={config.x_max} is beyond the supported {engine.max_x}")
    if not block_fits_int64(config.block_size, config.x_max):
        raise CapacityError(
            f"block_size={config.block_size} with x_max={config.x_max} overflows int64 block sums"
        )
    if isqrt(config.x_max) > engine.max_prime_limit:
        raise CapacityError(f"base primes to {isqrt(config.x_max)} exceed the prime budget")
    wide = [r for r in config.moment_orders
            if config.block_size * config.x_max ** r > INT64_MAX]
    if wide:
        logger.info(f"Moment orders {wide} use arbitrary-precision block sums")
    return wide


def plan_segments(config: SumConfig) -> List[Tuple[int, int]]:
    """Split [1, x_max] into blocks, cutting additionally after every checkpoint."""
    segments: List[Tuple[int, int]] = []
    lo = 1
    for x in config.checkpoints:
        cut = x + 1
        while lo < cut:
            hi = min(lo + config.block_size, cut)
            segments.append((lo, hi))
            lo = hi
    return segments


class SummationService:

    def __init__(self, config: SumConfig, engine: Optional[EngineConfig] = None):
        self.config = config
        self.engine = engine or EngineConfig()

    async def _partials(self, segments: List[Tuple[int, int]],
                        base: PrimeTable) -> AsyncIterator[PartialSums]:
        ks, orders = self.config.ks, self.config.moment_orders
        cross_check = self.config.cross_check

        if self.config.workers == 1:
            for lo, hi in segments:
                yield sum_range(lo, hi, ks, orders, base, cross_check)
                await asyncio.sleep(0)
            return

        loop = asyncio.get_running_loop()
        semaphore = asyncio.Semaphore(2 * self.config.workers)
        pool = ProcessPoolExecutor(
            max_workers=self.config.workers,
            initializer=_install_base,
            initargs=(base,),
        )

        async def compute_with_semaphore(lo: int, hi: int) -> PartialSums:
            async with semaphore:
                return await loop.run_in_executor(
                    pool, _sum_segment, lo, hi, ks, orders, cross_check
                )

        tasks = [asyncio.ensure_future(compute_with_semaphore(lo, hi)) for lo, hi in segments]
        try:
            # awaited in block order, whatever order they finish in
            for task in tasks:
                yield await task
        finally:
            for task in tasks:
                task.cancel()
            pool.shutdown(wait=True, cancel_futures=True)

    async def run(self, on_checkpoint: Optional[CheckpointCallback] = None,
                  on_segment: Optional[SegmentCallback] = None) -> RunReport:
        config = self.config
        check_capacity(config, self.engine)
        base = sieve_primes(isqrt(config.x_max), self.engine)
        segments = plan_segments(config)
        grid = set(config.checkpoints)

        logger.info(
            f"Starting sums to {config.x_max}: {len(segments)} blocks, "
            f"{len(grid)} checkpoints, {config.workers} workers"
        )
        started_at = datetime.now(timezone.utc).isoformat()
        t0 = time.perf_counter()

        state = PartialSums.empty(config.ks, config.moment_orders)
        checkpoints: List[Checkpoint] = []
        done = 0
        async with aclosing(self._partials(segments, base)) as partials:
            async for partial in partials:
                state = state.merge(partial)
                state.check_invariants()
                done += 1
                if on_segment:
                    on_segment(done, len(segments))
                if state.stop - 1 in grid:
                    checkpoint = state.to_checkpoint()
                    checkpoint.check_invariants(checkpoints[-1] if checkpoints else None)
                    checkpoints.append(checkpoint)
                    logger.debug(f"Checkpoint x={checkpoint.x}: sum_f={checkpoint.sum_f}")
                    if on_checkpoint:
                        on_checkpoint(checkpoint)

        elapsed = time.perf_counter() - t0
        logger.info(f"Sums complete: {len(checkpoints)} checkpoints in {elapsed:.2f}s")
        return RunReport(
            config=config,
            checkpoints=checkpoints,
            started_at=started_at,
            elapsed_seconds=elapsed,
        )


def run_sums(config: SumConfig, engine: Optional[EngineConfig] = None,
             on_checkpoint: Optional[CheckpointCallback] = None) -> RunReport:
    return asyncio.run(SummationService(config, engine).run(on_checkpoint))
