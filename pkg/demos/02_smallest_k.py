"""The smallest arity s at which p + k - 3 becomes a form value, for primes p."""

import math

from prodsum import (
    MultiplicityProfile,
    b_value,
    kmax_bound,
    nth_prime,
    s_sequence,
    smallest_k_direct,
    smallest_k_profiles,
)

print("s(1..31):", s_sequence(31))

# p_25 = 97: the grouped witness 2^2*3*7 satisfies 2^2*3*7 + 2 + 2 + 6 + 3 = 97
p = nth_prime(25).p
print(p, smallest_k_direct(p), smallest_k_profiles(p))
print("b_value(2^2*3*7) =", b_value(MultiplicityProfile.parse("2^2*3*7")))

# p_26 = 101 has no arity in range; the search is capped by 2^k + k + 3 <= p
p = nth_prime(26).p
print(p, smallest_k_direct(p), "arities searched: 3 ..", kmax_bound(p), "| floor(log2 p) =", math.floor(math.log2(p)))

# the largest s among the first few thousand primes
best = max(range(1, 3001), key=lambda n: smallest_k_direct(nth_prime(n).p).k)
p = nth_prime(best).p
print(f"largest s for n <= 3000: n={best} p={p} {smallest_k_direct(p)}")
