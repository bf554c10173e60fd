"""Numerical semigroups: construction, membership and classical invariants.

Membership below the conductor is stored as a Python int used as a bit-vector
(bit ``n`` set means ``n`` is in the semigroup); everything at or above the
conductor is implicitly a member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import IsN, NotAMember, NotCoprime, NotNumerical


def closure_mask(gens: Iterable[int], limit: int) -> int:
    """Bit-vector of the monoid generated by ``gens``, truncated to ``[0, limit)``.

    This is the bounded coin-problem table: bit ``t`` is set iff ``t`` is a
    nonnegative integer combination of ``gens``.
    """
    mask = 1 if limit > 0 else 0
    for g in gens:
        mask = close_under(mask, g, limit)
    return mask


def close_under(mask: int, g: int, limit: int) -> int:
    """Close the bit-vector ``mask`` under adding ``g``, within ``[0, limit)``."""
    # after the loop every m + k*g < limit is present, by binary expansion of k
    if g <= 0:
        return mask
    cap = (1 << limit) - 1
    step = g
    while step < limit:
        mask |= (mask << step) & cap
        step <<= 1
    return mask


def _first_run(mask: int, length: int) -> int | None:
    """Lowest ``p`` such that bits ``p .. p+length-1`` of ``mask`` are all set."""
    run, have = mask, 1
    while have < length:
        shift = min(have, length - have)
        run &= run >> shift
        have += shift
    if not run:
        return None
    return (run & -run).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_gens(gens: Iterable[int]) -> list[int]:
    out = []
    for g in gens:
        if isinstance(g, bool) or not isinstance(g, int):
            raise TypeError(f"generators must be integers, got {g!r}")
        if g <= 0:
            raise ValueError(f"generators must be positive, got {g}")
        out.append(g)
    return sorted(set(out))


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, identified by its minimal generators.

    Two values compare equal iff their ``msg`` tuples are equal.
    """

    msg: tuple[int, ...]
    conductor: int = field(compare=False)
    small: int = field(compare=False, repr=False)

    @classmethod
    def _from_mask(cls, mask: int, limit: int) -> NumericalSemigroup:
        """Build from membership on ``[0, limit)``; every ``n >= limit`` is a member.

        The caller guarantees the described set is a submonoid.
        """
        inside = (1 << limit) - 1
        conductor = (~mask & inside).bit_length()
        if conductor == 0:
            return NATURALS
        small = mask & ((1 << conductor) - 1)
        nonzero = small & ~1
        m = (nonzero & -nonzero).bit_length() - 1 if nonzero else conductor
        top = conductor + m
        full = (small | (((1 << top) - 1) ^ ((1 << conductor) - 1))) & ~1
        # the smallest member not generated by smaller minimal generators is minimal
        msg = []
        generated = 1
        while True:
            rest = full & ~generated
            if not rest:
                break
            x = (rest & -rest).bit_length() - 1
            msg.append(x)
            generated = close_under(generated, x, top)
        return cls(tuple(msg), conductor, small)

    # --- invariants -----------------------------------------------------

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        return self.msg[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.msg)

    @property
    def sporadic_count(self) -> int:
        """Number of members below the Frobenius number, 0 included."""
        return self.small.bit_count()

    @property
    def genus(self) -> int:
        return self.conductor - self.small.bit_count()

    @property
    def is_naturals(self) -> bool:
        return self.conductor == 0

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(iter_bits(~self.small & ((1 << self.conductor) - 1)))

    @property
    def small_elements(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.small))

    def mask(self, limit: int) -> int:
        """Membership bits on ``[0, limit)``."""
        if limit <= self.conductor:
            return self.small & ((1 << limit) - 1)
        return self.small | (((1 << limit) - 1) ^ ((1 << self.conductor) - 1))

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self.small >> n & 1)

    def __str__(self) -> str:
        return ",".join(map(str, self.msg))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({', '.join(map(str, self.msg))})"

    def to_json(self) -> dict:
        return {"msg": list(self.msg), "frobenius": self.frobenius, "genus": self.genus}


NATURALS = NumericalSemigroup((1,), 0, 0)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """The numerical semigroup generated by ``gens``.

    >>> from_generators([6, 8, 10, 7, 9]).msg
    (6, 7, 8, 9, 10)
    """
    gens = _check_gens(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    if math.gcd(*gens) != 1:
        raise NotCoprime(f"gcd({','.join(map(str, gens))}) = {math.gcd(*gens)}")
    m = gens[0]
    if m == 1:
        return NATURALS
    limit = gens[-1] + m + 1
    while True:
        # generators arrive in increasing order, so g is redundant iff it is
        # already generated by the smaller ones
        mask, msg = 1, []
        for g in gens:
            if not mask >> g & 1:
                msg.append(g)
                mask = close_under(mask, g, limit)
        conductor = _first_run(mask, m)
        if conductor is not None:
            break
        limit *= 2
    small = mask & ((1 << conductor) - 1)
    return NumericalSemigroup(tuple(msg), conductor, small)


def contains(S: NumericalSemigroup, n: int) -> bool:
    return n in S


@dataclass(frozen=True)
class Invariants:
    multiplicity: int
    frobenius: int
    genus: int
    embedding_dimension: int
    sporadic_count: int
    conductor: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def invariants(S: NumericalSemigroup) -> Invariants:
    return Invariants(
        multiplicity=S.multiplicity,
        frobenius=S.frobenius,
        genus=S.genus,
        embedding_dimension=S.embedding_dimension,
        sporadic_count=S.sporadic_count,
        conductor=S.conductor,
    )


@dataclass(frozen=True)
class AperyTable:
    """``reps[r]`` is the least member of S congruent to ``r`` modulo ``base``."""

    base: int
    reps: tuple[int, ...]

    def elements(self) -> list[int]:
        return sorted(self.reps)

    def __contains__(self, w: int) -> bool:
        return 0 <= w and self.reps[w % self.base] == w

    def __len__(self) -> int:
        return len(self.reps)

    def to_json(self) -> dict:
        return {"base": self.base, "apery": self.elements()}


def apery(S: NumericalSemigroup, m: int) -> AperyTable:
    if m <= 0 or m not in S:
        raise NotAMember(f"{m} is not a nonzero element of <{S}>")
    reps = []
    for r in range(m):
        w = r
        while w not in S:
            w += m
        reps.append(w)
    return AperyTable(m, tuple(reps))


def pseudo_frobenius(S: NumericalSemigroup) -> list[int]:
    """Gaps ``x`` with ``x + s`` in S for every nonzero ``s`` in S.

    Only the minimal generators need to be tried as ``s``.
    """
    if S.is_naturals:
        raise IsN("pseudo-Frobenius numbers are undefined for N")
    full = S.mask(S.conductor + S.msg[-1])
    pf = ~S.small & ((1 << S.conductor) - 1)
    for n in S.msg:
        pf &= full >> n
    return list(iter_bits(pf))


def type_of(S: NumericalSemigroup) -> int:
    return len(pseudo_frobenius(S))


def is_symmetric(S: NumericalSemigroup) -> bool:
    return pseudo_frobenius(S) == [S.frobenius]


def wilf_margin(S: NumericalSemigroup) -> int:
    """``e(S) * n(S) - c(S)``; Wilf's inequality holds iff this is >= 0."""
    return S.embedding_dimension * S.sporadic_count - S.conductor


def depth(S: NumericalSemigroup) -> int:
    if S.is_naturals:
        raise IsN("depth is undefined for N")
    return -(-S.conductor // S.multiplicity)


@dataclass(frozen=True)
class Monoid:
    """A submonoid of (N,+), stored as ``scale * base`` with ``base`` numerical.

    ``scale`` is the gcd of the generators; ``scale == 0`` encodes the trivial
    monoid {0}. Monoids such as ``d * Delta`` are not numerical semigroups.
    """

    scale: int
    base: NumericalSemigroup

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> Monoid:
        gens = [g for g in _check_gens_nonneg(gens) if g]
        if not gens:
            return cls(0, NATURALS)
        g = math.gcd(*gens)
        return cls(g, from_generators([x // g for x in gens]))

    @classmethod
    def of(cls, S: NumericalSemigroup) -> Monoid:
        return cls(1, S)

    @property
    def msg(self) -> tuple[int, ...]:
        if self.scale == 0:
            return ()
        return tuple(self.scale * x for x in self.base.msg)

    @property
    def is_numerical(self) -> bool:
        return self.scale == 1

    @property
    def semigroup(self) -> NumericalSemigroup:
        if self.scale != 1:
            raise NotNumerical(f"<{','.join(map(str, self.msg))}> has gcd {self.scale}")
        return self.base

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if self.scale == 0:
            return n == 0
        return n % self.scale == 0 and n // self.scale in self.base

    def mask(self, limit: int) -> int:
        if self.scale == 0:
            return 1 if limit > 0 else 0
        out = 0
        for k in range(0, -(-limit // self.scale)):
            if k in self.base:
                out |= 1 << (k * self.scale)
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self.msg))


def _check_gens_nonneg(gens: Iterable[int]) -> list[int]:
    out = []
    for g in gens:
        if isinstance(g, bool) or not isinstance(g, int) or g < 0:
            raise ValueError(f"generators must be nonnegative integers, got {g!r}")
        out.append(g)
    return out
