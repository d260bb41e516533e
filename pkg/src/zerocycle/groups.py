"""Arithmetic over Z_k and finite abelian groups, and the near-arithmetic-
progression machinery.

A subset A of Z_k is a *near arithmetic progression* if 2 <= |A| <= k-2 and
some (|A|-1)-subset of A can be shifted by a nonzero amount without leaving
A.  The *shift set* X(A) collects every amount x for which such a subset
exists.  For every near arithmetic progression, X(A) is either contained in
the multiples of a proper divisor d > 1 of k, or contained in {0, a, -a} for
a unit a; ``classify_near_ap`` decides which.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as _iter_product
from typing import Iterator, NamedTuple, Optional

from .errors import LemmaViolation

# An element of a finite abelian group in invariant-factor form: one residue
# per cyclic factor.  Plain Z_k is the single-factor case.
GroupElem = tuple[int, ...]


def omega(k: int) -> int:
    """Number of prime factors of k counted with multiplicity; omega(1) = 0."""
    if k <= 0:
        raise ValueError(f"omega requires k >= 1, got {k}")
    count = 0
    d = 2
    while d * d <= k:
        while k % d == 0:
            k //= d
            count += 1
        d += 1
    if k > 1:
        count += 1
    return count


def proper_divisors(k: int) -> list[int]:
    """Divisors d of k with 1 < d < k, ascending."""
    return [d for d in range(2, k) if k % d == 0]


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group as a direct sum of cyclic groups.

    ``factors`` are the cyclic orders (k_1, ..., k_m), each >= 2; elements
    are residue vectors of the same length.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(f) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise ValueError("group must have at least one cyclic factor")
        for f in factors:
            if f < 2:
                raise ValueError(f"cyclic factor must be >= 2, got {f}")

    @staticmethod
    def cyclic(k: int) -> "GroupSpec":
        return GroupSpec((k,))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def modulus(self) -> int:
        """The k of a single-factor group Z_k."""
        if len(self.factors) != 1:
            raise ValueError(f"group {self.factors} is not in single-factor form")
        return self.factors[0]

    def zero(self) -> GroupElem:
        return (0,) * len(self.factors)

    def make(self, values) -> GroupElem:
        vals = tuple(int(v) for v in values)
        if len(vals) != len(self.factors):
            raise ValueError(
                f"element has {len(vals)} residues, group has {len(self.factors)} factors"
            )
        return tuple(v % f for v, f in zip(vals, self.factors))

    def contains(self, elem: GroupElem) -> bool:
        return (
            isinstance(elem, tuple)
            and len(elem) == len(self.factors)
            and all(isinstance(r, int) and 0 <= r < f for r, f in zip(elem, self.factors))
        )

    def add(self, a: GroupElem, b: GroupElem) -> GroupElem:
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a: GroupElem) -> GroupElem:
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def sub(self, a: GroupElem, b: GroupElem) -> GroupElem:
        return tuple((x - y) % f for x, y, f in zip(a, b, self.factors))

    def times(self, a: GroupElem, m: int) -> GroupElem:
        return tuple((x * m) % f for x, f in zip(a, self.factors))

    def sum(self, elems) -> GroupElem:
        total = self.zero()
        for e in elems:
            total = self.add(total, e)
        return total

    def elements(self) -> Iterator[GroupElem]:
        """All elements in mixed-radix order (last factor varies fastest)."""
        return _iter_product(*(range(f) for f in self.factors))

    def element_at(self, index: int) -> GroupElem:
        """Inverse of ``index_of``; mixed-radix decode."""
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for group of order {self.order}")
        residues = []
        for f in reversed(self.factors):
            index, r = divmod(index, f)
            residues.append(r)
        return tuple(reversed(residues))

    def index_of(self, elem: GroupElem) -> int:
        index = 0
        for r, f in zip(elem, self.factors):
            index = index * f + r
        return index


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z_k."""

    k: int
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.k < 1:
            raise ValueError(f"modulus must be >= 1, got {self.k}")
        for m in self.members:
            if not 0 <= m < self.k:
                raise ValueError(f"residue {m} out of range [0, {self.k})")

    @staticmethod
    def of(k: int, values) -> "ResidueSet":
        return ResidueSet(k, frozenset(v % k for v in values))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def translate(self, t: int) -> "ResidueSet":
        return ResidueSet(self.k, frozenset((m + t) % self.k for m in self.members))


def shift_set(a_set: ResidueSet) -> ResidueSet:
    """X(A): all x such that some (|A|-1)-subset of A shifted by x stays in A.

    Exact, by brute force over every way to drop one element of A and every
    shift in Z_k.  0 is always a member when A is nonempty.
    """
    if not a_set.members:
        raise ValueError("shift set requires a nonempty set")
    k = a_set.k
    members = a_set.members
    shifts = set()
    for dropped in members:
        rest = members - {dropped}
        for x in range(k):
            if x in shifts:
                continue
            if all((m + x) % k in members for m in rest):
                shifts.add(x)
    return ResidueSet(k, frozenset(shifts))


class NearAPWitness(NamedTuple):
    """A certificate (B, a): B a (|A|-1)-subset of A with B + a inside A, a != 0."""

    b_set: frozenset[int]
    a: int


def near_ap_witness(a_set: ResidueSet) -> Optional[NearAPWitness]:
    """First (B, a) certifying that A is a near arithmetic progression, else None.

    Search order: drop elements of A ascending, then shifts ascending.
    """
    k = a_set.k
    if not 2 <= len(a_set.members) <= k - 2:
        return None
    for dropped in sorted(a_set.members):
        rest = a_set.members - {dropped}
        for a in range(1, k):
            if all((m + a) % k in a_set.members for m in rest):
                return NearAPWitness(rest, a)
    return None


def is_near_ap(a_set: ResidueSet) -> bool:
    return near_ap_witness(a_set) is not None


@dataclass(frozen=True)
class NearAPClassification:
    """Outcome of the divisor/unit dichotomy.

    kind is one of "not_near_ap", "divisor" (every valid shift of A is a
    multiple of d, the largest qualifying proper divisor), or "unit" (the
    shift set is contained in {0, a, -a} with gcd(a, k) = 1, a canonicalized
    to min(a, k - a)).  ``both_cases`` records the degenerate tie where both
    constructions succeed and the divisor case was preferred.
    """

    kind: str
    d: Optional[int] = None
    a: Optional[int] = None
    witness: Optional[NearAPWitness] = None
    both_cases: bool = False


def classify_near_ap(a_set: ResidueSet) -> NearAPClassification:
    """Decide the divisor/unit dichotomy for A.

    For every near arithmetic progression exactly one branch applies except
    for degenerate shift sets, where the divisor case wins.  A near
    arithmetic progression escaping both branches is impossible; that path
    raises LemmaViolation to flag an implementation bug.
    """
    witness = near_ap_witness(a_set)
    if witness is None:
        return NearAPClassification("not_near_ap")
    k = a_set.k
    shifts = shift_set(a_set).members

    divisor = None
    for d in reversed(proper_divisors(k)):
        if all(x % d == 0 for x in shifts):
            divisor = d
            break

    unit = None
    nonzero = sorted(x for x in shifts if x != 0)
    if nonzero:
        a = min(nonzero[0], k - nonzero[0])
        if math.gcd(a, k) == 1 and shifts <= {0, a, (k - a) % k}:
            unit = a

    if divisor is not None:
        return NearAPClassification(
            "divisor", d=divisor, witness=witness, both_cases=unit is not None
        )
    if unit is not None:
        return NearAPClassification("unit", a=unit, witness=witness)
    raise LemmaViolation(
        "near arithmetic progression escaped the divisor/unit dichotomy: "
        f"k={k}, A={sorted(a_set.members)}, shifts={sorted(shifts)}"
    )
