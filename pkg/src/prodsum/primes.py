"""Primality, prime indexing and the two progression families.

The progression families are the arithmetic progressions

    Form3:  (2t + 1) m + (t + 2)
    Form4:  (4t + 1) m + (t + 3)        t, m >= 2

Every Form3 term is a value of the arity-3 form (witness ``sorted(2, t, m)``)
and every Form4 term plus one is a value of the arity-4 form (witness
``sorted(2, 2, t, m)``).  A spec is *admissible* when the progression's
coefficients are coprime, so that it contains infinitely many primes.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InadmissibleSpec
from .forms import Representation, check_u64, representation_counts

_TRIAL_LIMIT = 1 << 16
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic primality test.

    Trial division below 2**16, strong probable-prime tests to the first
    twelve prime bases above; that base set has no strong pseudoprimes below
    3.3e24, which covers the whole unsigned 64-bit range.
    """
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m % p == 0:
            return m == p
    if m < _TRIAL_LIMIT:
        d = 41
        while d * d <= m:
            if m % d == 0:
                return False
            d += 2
        return True
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class PrimeIndex(NamedTuple):
    n: int
    p: int


class PrimeSieve:
    """Grow-only table of primes backed by a segmented sieve.

    The covered range doubles on demand.  Growth holds a lock; readers take
    the current array reference, which is never mutated after publication,
    so they always observe a consistent prefix of the primes.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._limit = 1
        self._primes = np.zeros(0, dtype=np.int64)

    @property
    def limit(self) -> int:
        return self._limit

    def extend_to(self, limit: int) -> None:
        if limit <= self._limit:
            return
        check_u64(limit)
        with self._lock:
            while self._limit < limit:
                cur = self._limit
                # cap at cur**2 so existing primes always cover the sqrt
                hi = max(min(limit, cur * cur), 2 * cur, 1024)
                self._sieve_segment(self._limit + 1, hi)

    def _sieve_segment(self, lo: int, hi: int) -> None:
        root = math.isqrt(hi)
        if root > self._limit:
            # only on the first segment: bootstrap from a plain sieve
            flags = np.ones(hi + 1, dtype=bool)
            flags[:2] = False
            for p in range(2, root + 1):
                if flags[p]:
                    flags[p * p :: p] = False
            new = np.flatnonzero(flags[lo:]).astype(np.int64) + lo
        else:
            flags = np.ones(hi - lo + 1, dtype=bool)
            for p in self._primes[: np.searchsorted(self._primes, root, side="right")]:
                p = int(p)
                start = max(p * p, -(-lo // p) * p)
                flags[start - lo :: p] = False
            new = np.flatnonzero(flags).astype(np.int64) + lo
        self._primes = np.concatenate([self._primes, new])
        self._limit = hi

    def primes_up_to(self, limit: int) -> np.ndarray:
        self.extend_to(limit)
        primes = self._primes
        return primes[: np.searchsorted(primes, limit, side="right")]

    def prime_count(self, x: int) -> int:
        """Number of primes <= x."""
        return len(self.primes_up_to(x))

    def nth(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"prime index must be >= 1, got {n}")
        primes = self._primes
        if n > len(primes):
            self.extend_to(_nth_prime_upper_bound(n))
            primes = self._primes
        return int(primes[n - 1])


def _nth_prime_upper_bound(n: int) -> int:
    # Rosser: p_n < n (ln n + ln ln n) for n >= 6
    if n < 6:
        return 13
    ln = math.log(n)
    return int(n * (ln + math.log(ln))) + 1


_SIEVE = PrimeSieve()


def nth_prime(n: int) -> PrimeIndex:
    """The ``n``-th prime, counting ``p_1 = 2``."""
    return PrimeIndex(n, _SIEVE.nth(n))


def primes_up_to(limit: int) -> np.ndarray:
    """Sorted int64 array of all primes ``<= limit``."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    return _SIEVE.primes_up_to(limit)


def prime_count(x: int) -> int:
    return 0 if x < 2 else _SIEVE.prime_count(x)


class Family(enum.IntEnum):
    FORM3 = 3
    FORM4 = 4


@dataclass(frozen=True)
class ProgressionSpec:
    family: Family
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))

    @property
    def admissible(self) -> bool:
        if self.t < 2:
            return False
        if self.family is Family.FORM3:
            return self.t % 3 in (0, 2)
        # t = -3 (mod 11) normalised to its canonical residue 8
        return self.t % 11 != 8

    @property
    def slope(self) -> int:
        return (2 * self.t + 1) if self.family is Family.FORM3 else (4 * self.t + 1)

    @property
    def intercept(self) -> int:
        return (self.t + 2) if self.family is Family.FORM3 else (self.t + 3)

    def check(self) -> None:
        if not self.admissible:
            if self.family is Family.FORM3:
                why = "t must be >= 2 with t = 0 or 2 (mod 3)"
            else:
                why = "t must be >= 2 with t != 8 (mod 11)"
            raise InadmissibleSpec(f"{self.family.name} t={self.t}: {why}")


def progression_term(spec: ProgressionSpec, m: int) -> int:
    spec.check()
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return check_u64(spec.slope * m + spec.intercept)


def progression_witness(spec: ProgressionSpec, m: int) -> Representation:
    """Representation certifying that a progression term is a form value.

    Form3 terms equal ``F_3(sorted(2, t, m))``; Form4 terms plus one equal
    ``F_4(sorted(2, 2, t, m))``.
    """
    spec.check()
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if spec.family is Family.FORM3:
        return tuple(sorted((2, spec.t, m)))
    return tuple(sorted((2, 2, spec.t, m)))


def scan_question1(limit: int) -> list[int]:
    """Primes ``p <= limit`` that are not values of the arity-3 form."""
    if limit < 2:
        return []
    counts = representation_counts(limit, 3)
    return [int(p) for p in primes_up_to(limit) if counts[p] == 0]


def scan_question2(limit: int) -> list[int]:
    """Primes ``p <= limit`` such that ``p + 1`` is not a value of the arity-4 form."""
    if limit < 2:
        return []
    counts = representation_counts(limit + 1, 4)
    return [int(p) for p in primes_up_to(limit) if counts[p + 1] == 0]
