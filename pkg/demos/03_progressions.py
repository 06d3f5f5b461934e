"""Progressions of guaranteed form values, and the primes they leave out."""

from prodsum import (
    Family,
    ProgressionSpec,
    eval_form,
    is_prime,
    progression_term,
    progression_witness,
    scan_question1,
    scan_question2,
)

# (2t+1)m + (t+2) is a value of the arity-3 form with witness sorted(2, t, m)
spec = ProgressionSpec(Family.FORM3, 5)
for m in range(2, 7):
    term = progression_term(spec, m)
    w = progression_witness(spec, m)
    print(f"m={m} term={term} prime={is_prime(term)} witness={w} F={eval_form(w)}")

# (4t+1)m + (t+3) plus one is a value of the arity-4 form
spec = ProgressionSpec(Family.FORM4, 2)
print([(progression_term(spec, m), eval_form(progression_witness(spec, m))) for m in range(2, 6)])

# t = 4 breaks the coprimality condition of the first family
print("FORM3 t=4 admissible:", ProgressionSpec(Family.FORM3, 4).admissible)

# primes that escape every arity-3 representation, and those whose successor escapes arity 4
for limit in (10**3, 10**4, 10**5):
    q1, q2 = scan_question1(limit), scan_question2(limit)
    print(f"<= {limit}: {len(q1)} primes with nu3(p)=0, {len(q2)} with nu4(p+1)=0; last {q1[-1]} / {q2[-1]}")
