"""
Per-block accumulation of the exact sums.

Inside a block the arithmetic runs on int64 arrays; everything leaving
the block is a Python int, so running totals never overflow.
"""
import logging
from typing import Dict, Iterable, Mapping

import numpy as np

from ..arithmetic.kempner import block_kempner, fast_path_mask
from ..arithmetic.sieve import factorize_block, kfree_blocks, kfree_from_factors
from ..errors import CapacityError, InvariantViolation, PreconditionError
from ..models.arithmetic import FactorSieveBlock, KfreeBlock, PrimeTable
from ..models.sums import PartialSums

logger = logging.getLogger(__name__)

INT64_MAX = np.iinfo(np.int64).max


def block_fits_int64(size: int, top: int, power: int = 1) -> bool:
    """Whether size terms of at most top**power can be summed in int64."""
    return size * top ** power <= INT64_MAX


def power_sum(values: np.ndarray, r: int) -> int:
    """Exact sum of values**r: int64 chunks where they cannot overflow, else Python ints."""
    if values.size == 0:
        return 0
    top = int(values.max())
    if block_fits_int64(values.size, top, r):
        return int(np.sum(values ** r))
    chunk = INT64_MAX // max(top, 1) ** r
    if chunk == 0:
        return sum(v ** r for v in values.tolist())
    powers = values ** r
    return sum(int(np.sum(powers[i:i + chunk])) for i in range(0, values.size, chunk))


def accumulate_block(block: FactorSieveBlock, kblocks: Mapping[int, KfreeBlock],
                     state: PartialSums) -> PartialSums:
    """Return state extended by every n in the block."""
    if block.size == 0:
        return state
    if block.lo != state.stop:
        raise PreconditionError(
            f"block starts at {block.lo} but the sums stop at {state.stop}"
        )
    for k, kb in kblocks.items():
        if (kb.lo, kb.hi) != (block.lo, block.hi):
            raise PreconditionError(f"k={k} flags cover [{kb.lo}, {kb.hi}), block is "
                                    f"[{block.lo}, {block.hi})")
    missing = set(state.sum_f_kfree) - set(kblocks)
    if missing:
        raise PreconditionError(f"no k-free flags supplied for k in {sorted(missing)}")
    top = block.hi - 1
    if not block_fits_int64(block.size, top):
        raise CapacityError(f"block [{block.lo}, {block.hi}) could overflow int64 sums")

    numbers = block.numbers()
    largest = block.largest
    fast = fast_path_mask(numbers, largest)
    f = np.where(fast, largest, block_kempner(block, ~fast))

    delta = PartialSums(
        start=block.lo,
        stop=block.hi,
        sum_f=int(f.sum()),
        sum_P=int(largest.sum()),
        sum_f_hard=int(f[~fast].sum()),
        sum_f_kfree={k: int(f[kblocks[k].flags].sum()) for k in state.sum_f_kfree},
        count_kfree={k: kblocks[k].count() for k in state.count_kfree},
        sum_f_pow={r: power_sum(f, r) for r in state.sum_f_pow},
    )
    merged = state.merge(delta)
    merged.check_invariants()
    return merged


def sum_range(lo: int, hi: int, ks: Iterable[int], orders: Iterable[int],
              base: PrimeTable, cross_check: bool = False) -> PartialSums:
    """Sieve [lo, hi) and return its sums; the unit of work handed to workers."""
    ks, orders = list(ks), list(orders)
    block = factorize_block(lo, hi, base, block_size=max(hi - lo, 1))
    kblocks: Dict[int, KfreeBlock] = kfree_blocks(block, ks, base)
    if cross_check:
        for k, kb in kblocks.items():
            reference = kfree_from_factors(block, k)
            if not np.array_equal(kb.flags, reference.flags):
                bad = int(np.argmax(kb.flags != reference.flags)) + lo
                raise InvariantViolation(f"k={k} sieve flag disagrees with exponents at n={bad}")
    logger.debug(f"Accumulating block [{lo}, {hi})")
    return accumulate_block(block, kblocks, PartialSums.empty(ks, orders, start=lo))
