"""The product-plus-sum form and its representations.

For an arity ``k`` the form is ``F_k(x1, ..., xk) = x1*...*xk + x1 + ... + xk``
evaluated over nondecreasing tuples of positive integers.  A *representation*
of ``n`` is such a tuple with ``F_k = n``; here it is simply a ``tuple`` of
ints.  ``k = 2`` is admitted for the classical ``ij + i + j`` case.

All arithmetic is checked against the unsigned 64-bit range so that scans
fail loudly rather than silently producing values no fixed-width
implementation could agree with.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .errors import InvalidArity, InvalidMinPart, InvalidRepresentation

U64_MAX = (1 << 64) - 1

Representation = tuple[int, ...]


def check_u64(value: int) -> int:
    if value < 0 or value > U64_MAX:
        raise OverflowError(f"{value} does not fit in an unsigned 64-bit integer")
    return value


def validate_parts(parts: Sequence[int]) -> Representation:
    """Return ``parts`` as a tuple, raising if it is not a valid representation."""
    rep = tuple(int(x) for x in parts)
    if len(rep) < 2:
        raise InvalidRepresentation(f"need at least 2 parts, got {len(rep)}")
    if rep[0] < 1:
        raise InvalidRepresentation(f"parts must be >= 1: {rep}")
    if any(a > b for a, b in zip(rep, rep[1:])):
        raise InvalidRepresentation(f"parts must be nondecreasing: {rep}")
    return rep


def eval_form(parts: Sequence[int]) -> int:
    """Evaluate ``prod(parts) + sum(parts)`` with 64-bit overflow checking.

    >>> eval_form((2, 2, 3))
    19
    """
    rep = validate_parts(parts)
    product = 1
    for x in rep:
        product = check_u64(product * check_u64(x))
    return check_u64(product + sum(rep))


def _check_args(n: int, k: int, min_part: int = 1) -> None:
    if k < 2:
        raise InvalidArity(f"arity must be >= 2, got {k}")
    if min_part not in (1, 2):
        raise InvalidMinPart(f"min_part must be 1 or 2, got {min_part}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_u64(n)


def _walk(n: int, r: int, lo: int, prod: int, total: int, prefix: Representation) -> Iterator[Representation]:
    # r >= 1 positions left, every one of them >= lo
    if r == 1:
        rest = n - total
        if rest > 0 and rest % (prod + 1) == 0:
            x = rest // (prod + 1)
            if x >= lo:
                yield prefix + (x,)
        return
    x = lo
    # smallest completion puts x in all r remaining slots; it grows with x
    while prod * x**r + total + r * x <= n:
        yield from _walk(n, r - 1, x, prod * x, total + x, prefix + (x,))
        x += 1


def _count(n: int, r: int, lo: int, prod: int, total: int) -> int:
    if r == 1:
        rest = n - total
        if rest > 0 and rest % (prod + 1) == 0 and rest // (prod + 1) >= lo:
            return 1
        return 0
    found = 0
    x = lo
    while prod * x**r + total + r * x <= n:
        found += _count(n, r - 1, x, prod * x, total + x)
        x += 1
    return found


def enumerate_representations(n: int, k: int, min_part: int = 1) -> list[Representation]:
    """All representations of ``n`` at arity ``k`` in lexicographic order.

    Prefixes are extended depth first and abandoned as soon as the smallest
    possible completion exceeds ``n``; the last part is solved from
    ``prod_prefix * x + x = n - sum_prefix``.
    """
    _check_args(n, k, min_part)
    return list(_walk(n, k, min_part, 1, 0, ()))


def iter_representations(n: int, k: int, min_part: int = 1) -> Iterator[Representation]:
    """Lazy form of :func:`enumerate_representations`."""
    _check_args(n, k, min_part)
    return _walk(n, k, min_part, 1, 0, ())


def count_representations(n: int, k: int) -> int:
    """Number of representations of ``n`` by the arity-``k`` form."""
    _check_args(n, k)
    return _count(n, k, 1, 1, 0)


def nu2_is_zero(n: int) -> bool:
    """True iff ``n`` has no representation ``ij + i + j`` (equivalently n+1 is prime)."""
    return count_representations(n, 2) == 0


def lift_representation(rep: Sequence[int], k2: int) -> Representation:
    """Pad ``rep`` with leading ones up to arity ``k2``.

    The value of the form grows by exactly ``k2 - len(rep)``.
    """
    rep = validate_parts(rep)
    if k2 <= len(rep):
        raise InvalidArity(f"target arity {k2} must exceed {len(rep)}")
    return (1,) * (k2 - len(rep)) + rep


def representation_counts(limit: int, k: int, min_part: int = 1) -> np.ndarray:
    """Counts of representations for every ``n`` in ``0..limit`` at once.

    Returns an int64 array ``c`` with ``c[n]`` the number of arity-``k``
    representations of ``n``.  Every tuple with form value ``<= limit`` is
    visited once and bucketed by value, so this is far cheaper than calling
    :func:`count_representations` per index when a whole table is needed.
    """
    _check_args(max(limit, 1), k, min_part)
    counts = np.zeros(limit + 1, dtype=np.int64)

    def visit(r: int, lo: int, prod: int, total: int) -> None:
        if r == 1:
            # values (prod + 1) * x + total form an arithmetic progression in x
            start = (prod + 1) * lo + total
            if start <= limit:
                counts[start :: prod + 1] += 1
            return
        x = lo
        while prod * x**r + total + r * x <= limit:
            visit(r - 1, x, prod * x, total + x)
            x += 1

    visit(k, min_part, 1, 0)
    return counts
