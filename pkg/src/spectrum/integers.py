"""
Primary decomposition of ideals (m) of the integers.

(m) is the intersection of the prime-power ideals (p^e) read off the prime
factorization of m; the radicals of the factors are the (p).
"""

import logging
from typing import Dict, List

import numpy as np
from sympy import factorint

from src.config import config
from src.error_handling.exceptions import VerificationFailedException
from src.error_handling.validators import validate_number

logger = logging.getLogger("boolring.spectrum.integers")


def _prime_factorization(m: int) -> Dict[int, int]:
    validate_number(m, "m", min_value=2, max_value=config.INTDEMO_MAX)
    return factorint(m, use_rho=False, use_pm1=False)


def divisibility_agrees(m: int, factors: List[int], window: int) -> bool:
    """k divisible by m iff divisible by every factor, for k = 1..window."""
    ks = np.arange(1, window + 1, dtype=np.int64)
    by_m = ks % m == 0
    by_factors = np.logical_and.reduce([ks % q == 0 for q in factors])
    return bool(np.array_equal(by_m, by_factors))


def check_window(m: int) -> int:
    """Cross-check range 1..window; always long enough to hold several multiples of m."""
    return max(config.DIVISIBILITY_WINDOW, 3 * m)


def integer_demo(m: int) -> List[int]:
    """The prime powers p^e of m in increasing prime order."""
    factorization = _prime_factorization(m)
    factors = [p ** e for p, e in sorted(factorization.items())]

    product = 1
    for q in factors:
        product *= q
    if product != m:
        raise VerificationFailedException(f"Prime powers of {m} multiply to {product}", check="integer_demo")

    if m <= config.INTDEMO_CHECK_MAX and not divisibility_agrees(m, factors, check_window(m)):
        raise VerificationFailedException(
            f"({m}) differs from the intersection of {factors}", check="integer_demo"
        )
    logger.debug(f"({m}) = " + " ∩ ".join(f"({q})" for q in factors))
    return factors


def integer_radicals(m: int) -> List[int]:
    """The primes p, i.e. the radicals (p) of the primary factors of (m)."""
    return sorted(_prime_factorization(m))


def format_integer_demo(m: int, factors: List[int]) -> str:
    return f"({m}) = " + " ∩ ".join(f"({q})" for q in factors)
