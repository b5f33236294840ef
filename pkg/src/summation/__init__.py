from .accumulator import accumulate_block, power_sum, sum_range
from .naive import sum_f_naive

__all__ = ["accumulate_block", "power_sum", "sum_f_naive", "sum_range"]
