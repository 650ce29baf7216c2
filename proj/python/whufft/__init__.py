"""Walsh-Hadamard transforms and split-radix FFTs with exact operation counts."""

from ._whufft import (
    algorithms,
    count,
    crossover,
    f_count,
    fft,
    hprime,
    lemma_checks,
    partition,
    predict,
    reduction_leading_constant,
    split_radix_order,
    wht,
)

__all__ = [
    "algorithms",
    "count",
    "crossover",
    "f_count",
    "fft",
    "hprime",
    "lemma_checks",
    "partition",
    "predict",
    "reduction_leading_constant",
    "split_radix_order",
    "wht",
]
