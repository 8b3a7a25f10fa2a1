"""
Lucas-Lehmer Tests
"""
import pytest
from utils.primes import lucas_lehmer, mersenne_prime_exponents

MERSENNE_PRIME_EXPONENTS = [2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521]


def test_lucas_lehmer():
    assert lucas_lehmer(2)
    assert lucas_lehmer(3)
    assert lucas_lehmer(7)
    assert not lucas_lehmer(11)  # 2047 = 23 * 89
    assert not lucas_lehmer(4)
    assert not lucas_lehmer(9)
    assert lucas_lehmer(127)


def test_lucas_lehmer_bad():
    with pytest.raises(ValueError):
        lucas_lehmer(1)
    with pytest.raises(ValueError):
        lucas_lehmer(-7)
    with pytest.raises(TypeError):
        lucas_lehmer(True)


def test_exponents_up_to_521():
    assert mersenne_prime_exponents(521) == MERSENNE_PRIME_EXPONENTS
    assert mersenne_prime_exponents(520) == MERSENNE_PRIME_EXPONENTS[:-1]
    assert mersenne_prime_exponents(1) == []
