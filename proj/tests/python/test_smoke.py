from fractions import Fraction

import numpy as np
import pytest

import whufft


def test_fft_matches_numpy():
    rng = np.random.default_rng(3)
    for log2n in range(0, 11):
        x = rng.uniform(-1, 1, 2**log2n) + 1j * rng.uniform(-1, 1, 2**log2n)
        ref = np.fft.fft(x)
        for algo in ("sr", "msr", "whufft"):
            y = whufft.fft(x, algo)
            assert np.max(np.abs(y - ref)) <= 1e-10 * max(1.0, np.max(np.abs(ref)))


def test_scaled_variant():
    x = np.arange(16, dtype=complex)
    plain = whufft.fft(x, "msr")
    scaled = whufft.fft(x, "msr", "s")
    assert not np.allclose(plain, scaled)
    assert np.allclose(whufft.fft(x, "whufft", "s"), scaled)


def test_wht_small():
    assert list(whufft.wht([1, 2, 3, 4], "naive")) == [10, -2, -4, 0]
    assert list(whufft.wht([1, 2, 3, 4], "h4", k=1)) == [20, -4, -8, 0]
    with pytest.raises(ValueError):
        whufft.wht([1, 2, 3])


def test_counts_and_predictions():
    assert whufft.count("wht-folklore", 3)["total"] == 24
    assert whufft.count("wht-h8", 3) == {"add_sub": 22, "mul": 0, "div2": 1, "mul_pow2": 7, "total": 30}
    assert whufft.predict("h8", 3)["total"] == 30
    assert whufft.predict("msr", 10)["kind"] == "exact-candidate"
    assert whufft.crossover("h8", "folklore", 40) == 24
    assert whufft.reduction_leading_constant(1) == Fraction(34, 9)
    assert whufft.reduction_leading_constant(Fraction(23, 24)) == Fraction(15, 4)


def test_partition_and_hprime():
    assert whufft.partition(8) == [[0], [1], [2, 3], [4, 6], [5, 7]]
    assert whufft.f_count(8, 2) == 3
    e2 = np.zeros(8, dtype=complex)
    e2[2] = 1
    assert list(np.real(whufft.hprime(e2))) == [0, 0, 1, 1, 0, 0, 0, 0]
    assert whufft.lemma_checks(20)["identities_hold"]
