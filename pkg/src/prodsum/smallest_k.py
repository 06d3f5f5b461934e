"""The smallest arity ``s`` at which a prime shifts onto the form.

For a prime ``p`` let ``s(p)`` be the least ``k >= 3`` such that
``p + k - 3`` is a value of the arity-``k`` form, or 0 if there is none.
A minimal representation never contains a 1 (dropping the ones yields a
representation at smaller arity), so with all parts ``>= 2`` we get
``2**k + 2k <= p + k - 3``.  That caps the search at :func:`kmax_bound` and
makes a 0 answer decidable.

Grouping the parts of an all->=2 representation by value gives a
:class:`MultiplicityProfile` ``{v: t_v}`` and the shift condition becomes

    prod(v ** t_v) + sum((v - 1) * t_v) + 3 == p

which :func:`smallest_k_profiles` searches directly.  The two solvers share
an ordering (lexicographic on the expanded sorted parts) so they return the
same witness, not only the same ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import NotPrime
from .forms import check_u64, iter_representations
from .primes import is_prime, nth_prime, primes_up_to


class MultiplicityProfile:
    """Multiset of parts ``>= 2`` stored as ascending ``(value, multiplicity)`` pairs."""

    __slots__ = ("_items",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]]):
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        merged: dict[int, int] = {}
        for v, t in pairs:
            v, t = int(v), int(t)
            if v < 2:
                raise ValueError(f"profile values must be >= 2, got {v}")
            if t < 0:
                raise ValueError(f"multiplicity must be >= 0, got {t}")
            if t:
                merged[v] = merged.get(v, 0) + t
        if not merged:
            raise ValueError("profile must contain at least one value")
        self._items = tuple(sorted(merged.items()))

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> MultiplicityProfile:
        counts: dict[int, int] = {}
        for x in parts:
            counts[x] = counts.get(x, 0) + 1
        return cls(counts)

    @classmethod
    def parse(cls, text: str) -> MultiplicityProfile:
        """Inverse of ``str()``: ``"2^2*3*7"`` -> ``{2: 2, 3: 1, 7: 1}``."""
        pairs = []
        for token in text.split("*"):
            value, _, mult = token.strip().partition("^")
            pairs.append((int(value), int(mult) if mult else 1))
        return cls(pairs)

    @property
    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def arity(self) -> int:
        return sum(t for _, t in self._items)

    def to_parts(self) -> tuple[int, ...]:
        return tuple(v for v, t in self._items for _ in range(t))

    def as_dict(self) -> dict[int, int]:
        return dict(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiplicityProfile):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self._items == MultiplicityProfile(other)._items
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._items)

    def __str__(self) -> str:
        return "*".join(f"{v}^{t}" if t > 1 else str(v) for v, t in self._items)

    def __repr__(self) -> str:
        return f"MultiplicityProfile({self.as_dict()})"


def b_value(profile: MultiplicityProfile | Mapping[int, int]) -> int:
    """``prod(v**t) + sum((v - 1) * t) + 3`` with 64-bit overflow checking."""
    if not isinstance(profile, MultiplicityProfile):
        profile = MultiplicityProfile(profile)
    prod = 1
    linear = 3
    for v, t in profile.items:
        prod = check_u64(prod * check_u64(v**t))
        linear += (v - 1) * t
    return check_u64(prod + linear)


def kmax_bound(p: int) -> int:
    """Largest ``k`` with ``2**k + k + 3 <= p``, or 2 when no ``k >= 3`` qualifies."""
    k = 2
    while (1 << (k + 1)) + (k + 1) + 3 <= p:
        k += 1
    return max(k, 2)


@dataclass(frozen=True)
class SmallestKResult:
    """``k == 0`` with ``witness is None`` encodes a zero answer."""

    k: int
    witness: MultiplicityProfile | None = None

    @property
    def found(self) -> bool:
        return self.k > 0

    def __str__(self) -> str:
        return f"s={self.k} witness={self.witness}" if self.found else "s=0"


ZERO = SmallestKResult(0)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def smallest_k_direct(p: int) -> SmallestKResult:
    """Search arities 3..kmax for a representation of ``p + k - 3`` with parts >= 2."""
    _require_prime(p)
    for k in range(3, kmax_bound(p) + 1):
        rep = next(iter_representations(p + k - 3, k, min_part=2), None)
        if rep is not None:
            return SmallestKResult(k, MultiplicityProfile.from_parts(rep))
    return ZERO


def _profile_search(p: int, remaining: int, lo: int, prod: int, linear: int) -> list[tuple[int, int]] | None:
    # linear already includes the constant 3
    if remaining == 1:
        # prod * v + linear + (v - 1) == p  =>  v = (p - linear + 1) / (prod + 1)
        num = p - linear + 1
        if num > 0 and num % (prod + 1) == 0:
            v = num // (prod + 1)
            if v >= lo:
                return [(v, 1)]
        return None
    v = lo
    while prod * v**remaining <= p - 3:
        for t in range(remaining, 0, -1):
            rest = remaining - t
            grown = prod * v**t
            # the other groups need distinct larger values
            if grown * (v + 1) ** rest > p - 3:
                continue
            if rest == 0:
                if grown + linear + (v - 1) * t == p:
                    return [(v, t)]
                continue
            tail = _profile_search(p, rest, v + 1, grown, linear + (v - 1) * t)
            if tail is not None:
                return [(v, t)] + tail
        v += 1
    return None


def smallest_k_profiles(p: int) -> SmallestKResult:
    """Solve ``b_value(profile) == p`` over profiles of increasing arity.

    Within an arity, profiles are visited by smallest value first and, for a
    given value, largest multiplicity first, which is lexicographic order on
    the expanded parts.
    """
    _require_prime(p)
    for k in range(3, kmax_bound(p) + 1):
        hit = _profile_search(p, k, 2, 1, 3)
        if hit is not None:
            return SmallestKResult(k, MultiplicityProfile(hit))
    return ZERO


def s_value(p: int) -> int:
    return smallest_k_direct(p).k


def s_sequence(n_max: int) -> list[int]:
    """``[s(p_1), ..., s(p_n_max)]`` over the first ``n_max`` primes."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    limit = nth_prime(n_max).p
    return [s_value(int(p)) for p in primes_up_to(limit)]
