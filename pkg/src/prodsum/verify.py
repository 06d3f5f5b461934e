"""Built-in fixture suite behind ``prodsum verify``."""

from __future__ import annotations

import numpy as np

from .forms import representation_counts
from .primes import primes_up_to
from .sequences import generate_table
from .smallest_k import MultiplicityProfile, b_value, smallest_k_direct, smallest_k_profiles

# first 31 published terms of s(n)
S_PREFIX = (0, 0, 0, 0, 0, 0, 0, 3, 4, 3, 0, 0, 4, 0, 3, 0, 3, 3, 0, 4, 3, 3, 4, 3, 4, 0, 3, 5, 3, 4, 3)


def _check_prefix():
    got = generate_table("smallest_k", len(S_PREFIX)).values
    return got == S_PREFIX, f"got {list(got)}"


def _check_97():
    want = MultiplicityProfile({2: 2, 3: 1, 7: 1})
    results = [smallest_k_direct(97), smallest_k_profiles(97)]
    ok = all(r.k == 4 and r.witness == want for r in results) and b_value(want) == 97
    return ok, f"got {[str(r) for r in results]}"


def _check_101():
    results = [smallest_k_direct(101), smallest_k_profiles(101)]
    return all(r.k == 0 for r in results), f"got {[str(r) for r in results]}"


def _check_nu2_primes(limit: int = 10**5):
    zero = representation_counts(limit, 2)[1:] == 0
    prime_next = np.zeros(limit + 2, dtype=bool)
    prime_next[primes_up_to(limit + 1)] = True
    bad = np.flatnonzero(zero != prime_next[2:]) + 1
    return bad.size == 0, f"mismatches at n={bad[:10].tolist()}"


FIXTURES = (
    ("s(n) prefix of 31 terms", _check_prefix),
    ("s(25)=4 for p=97, witness 2^2*3*7, both solvers", _check_97),
    ("s(26)=0 for p=101, both solvers", _check_101),
    ("nu2(n)=0 iff n+1 prime for n<=10^5", _check_nu2_primes),
)


def run_fixtures() -> list[tuple[str, bool, str]]:
    results = []
    for name, check in FIXTURES:
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing fixture is a failed fixture
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    return results
