"""
    Mersenne Primality

    Lucas-Lehmer test for M_p = 2^p - 1 on gmpy2 integers.
    A composite exponent gives a composite M_p, so only prime
    exponents run the iteration.
"""
import logging

from gmpy2 import is_prime, mpz

logger = logging.getLogger(__name__)


def lucas_lehmer(p):
    """
    True iff M_p is prime. s_0 = 4, s_{i+1} = s_i^2 - 2 mod M_p,
    M_p prime iff s_{p-2} = 0. Raise ValueError for p < 2.
    """
    if isinstance(p, bool) or int(p) != p:
        raise TypeError("Exponent must be an integer.")
    p = int(p)
    if p < 2:
        raise ValueError(f"Lucas-Lehmer needs p >= 2, got {p}.")
    if p == 2:
        return True
    if not is_prime(p):
        return False
    modulus = (mpz(1) << p) - 1
    s = mpz(4)
    for _ in range(p - 2):
        s = (s * s - 2) % modulus
    return s == 0


def mersenne_prime_exponents(limit):
    """Every p <= limit with M_p prime, ascending."""
    found = [p for p in range(2, limit + 1) if lucas_lehmer(p)]
    logger.debug("%s Mersenne prime exponents up to %s", len(found), limit)
    return found
