"""Counting and listing representations n = x1*...*xk + x1 + ... + xk."""

import numpy as np

from prodsum import (
    count_representations,
    enumerate_representations,
    eval_form,
    lift_representation,
    primes_up_to,
    representation_counts,
)

# 12 has two representations at arity 3
print(enumerate_representations(12, 3))  # [(1, 1, 5), (1, 2, 3)]
print(count_representations(12, 3))

# restricting to parts >= 2 drops everything containing a 1
print(enumerate_representations(98, 4, min_part=2))

# arity 2: ij + i + j = (i+1)(j+1) - 1, so n is missed exactly when n+1 is prime
counts = representation_counts(10_000, 2)
missed = np.flatnonzero(counts[1:] == 0) + 1
print("n <= 10^4 with no ij+i+j form:", len(missed), "| primes in [2, 10001]:", len(primes_up_to(10_001)))

# padding with ones moves a representation up in arity and shifts its value by the same amount
rep = (2, 2, 3)
lifted = lift_representation(rep, 6)
print(rep, eval_form(rep), "->", lifted, eval_form(lifted))

# a table of nu_3 and nu_4 side by side
nu3 = representation_counts(40, 3)
nu4 = representation_counts(40, 4)
for n in range(4, 41, 6):
    print(f"n={n:3d}  nu3={nu3[n]}  nu4={nu4[n]}")
