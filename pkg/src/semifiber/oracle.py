"""Brute-force references for the test suites.

Everything here is computed from definitions on a bounded window ``[0, bound]``
and shares no code with the rest of the package: no import from ``core`` or the
formula modules. Bounds are the caller's responsibility; a bound too small to
decide the requested quantity raises :class:`BoundTooSmall` rather than
truncating silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundTooSmall


@dataclass(frozen=True)
class BoundedSet:
    """Members of a subset of N on the window ``[0, bound]`` as a bit-vector."""

    bound: int
    members: int

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.bound:
            raise BoundTooSmall(f"{n} lies outside the window [0, {self.bound}]")
        return bool(self.members >> n & 1)

    def elements(self) -> list[int]:
        return [n for n in range(self.bound + 1) if self.members >> n & 1]


def oracle_closure(gens: Iterable[int], bound: int) -> BoundedSet:
    """``<gens>`` on ``[0, bound]`` by saturation: add every generator to every
    known member until nothing new appears."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    gens = [g for g in gens if g > 0]
    window = (1 << (bound + 1)) - 1
    members = 1
    while True:
        grown = members
        for g in gens:
            grown |= (members << g) & window
        if grown == members:
            return BoundedSet(bound, members)
        members = grown


def oracle_snapshot(gens: Iterable[int], conductor_multiple: int = 1) -> BoundedSet:
    """``<gens>`` (gcd 1) on a window grown by doubling until it shows the
    conductor ``c``, reaches ``F + m`` and reaches ``conductor_multiple * c``."""
    gens = sorted(g for g in gens if g > 0)
    if not gens or math.gcd(*gens) != 1:
        raise ValueError("need positive generators with gcd 1")
    bound = 2 * (gens[-1] + gens[0])
    while True:
        snap = oracle_closure(gens, bound)
        try:
            c = oracle_conductor(snap)
        except BoundTooSmall:
            bound *= 2
            continue
        if bound >= max(c + _multiplicity(snap), conductor_multiple * c):
            return snap
        bound *= 2


def oracle_quotient(snap: BoundedSet, d: int) -> BoundedSet:
    """``{x : d*x in snap}`` on the window ``[0, bound // d]``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    top = snap.bound // d
    members = 0
    for x in range(top + 1):
        if snap.members >> (d * x) & 1:
            members |= 1 << x
    return BoundedSet(top, members)


def _multiplicity(snap: BoundedSet) -> int:
    nonzero = snap.members & ~1
    if not nonzero:
        raise BoundTooSmall("no nonzero member in the window")
    return (nonzero & -nonzero).bit_length() - 1


def oracle_conductor(snap: BoundedSet) -> int:
    """Conductor, certified by a run of ``m`` consecutive members at the top of
    the window (beyond such a run every integer is a member)."""
    window = (1 << (snap.bound + 1)) - 1
    c = (~snap.members & window).bit_length()
    m = _multiplicity(snap) if c else 1
    if snap.bound + 1 - c < m:
        raise BoundTooSmall(f"window [0, {snap.bound}] does not show the conductor")
    return c


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def oracle_msg(snap: BoundedSet) -> list[int]:
    """Nonzero members that are not a sum of two nonzero members."""
    c = oracle_conductor(snap)
    m = _multiplicity(snap)
    top = max(c + m, m + 1)  # minimal generators lie in [m, c + m)
    if top - 1 > snap.bound:
        raise BoundTooSmall("window too small for the minimal generators")
    window = (1 << top) - 1
    nonzero = snap.members & window & ~1
    sums = 0
    for s in _bits(nonzero & ((1 << (top // 2 + 1)) - 1)):
        sums |= (nonzero << s) & window
    return _bits(nonzero & ~sums)


def oracle_invariants(snap: BoundedSet) -> dict:
    c = oracle_conductor(snap)
    F = c - 1
    msg = oracle_msg(snap)
    below_c = (1 << c) - 1
    below_f = (1 << F) - 1 if F > 0 else 0
    return {
        "multiplicity": msg[0],
        "frobenius": F,
        "genus": (~snap.members & below_c).bit_count(),
        "embedding_dimension": len(msg),
        "sporadic_count": (snap.members & below_f).bit_count(),
        "conductor": c,
        "msg": msg,
    }


def oracle_apery(snap: BoundedSet, m: int) -> list[int]:
    """``{s in S : s - m not in S}``; needs the window to reach ``F + m``."""
    c = oracle_conductor(snap)
    if m <= 0 or m > snap.bound or not snap.members >> m & 1:
        raise ValueError(f"{m} is not a nonzero member")
    if snap.bound < c - 1 + m:
        raise BoundTooSmall("Apery scan needs bound >= F + m")
    window = (1 << (c + m)) - 1
    return _bits(snap.members & ~(snap.members << m) & window)


def oracle_pf(snap: BoundedSet) -> list[int]:
    """Gaps ``x`` with ``x + s`` a member for every nonzero member ``s``."""
    c = oracle_conductor(snap)
    if snap.bound < 2 * c:
        raise BoundTooSmall("pseudo-Frobenius scan needs bound >= 2 * conductor")
    pf = ~snap.members & ((1 << c) - 1)
    # members s >= c are harmless: x + s >= c
    for s in _bits(snap.members & ((1 << c) - 2)):
        pf &= snap.members >> s
    return _bits(pf)


def _factorizations(gens: Sequence[int], n: int) -> list[tuple[int, ...]]:
    out = []

    def walk(i, rest, prefix):
        if i == len(gens) - 1:
            if rest % gens[i] == 0:
                out.append(prefix + (rest // gens[i],))
            return
        for k in range(rest // gens[i] + 1):
            walk(i + 1, rest - k * gens[i], prefix + (k,))

    if gens:
        walk(0, n, ())
    elif n == 0:
        out.append(())
    return out


def oracle_congruence_connected(S, relations, n: int) -> bool:
    """Are all factorizations of ``n`` linked by translates of ``relations``?

    Two factorizations are adjacent when ``alpha = gamma + r`` and
    ``beta = gamma + r'`` for a relation ``(r, r')`` and some ``gamma >= 0``.
    """
    gens = list(getattr(S, "msg", S))
    facts = _factorizations(gens, n)
    if len(facts) <= 1:
        return True
    parent = list(range(len(facts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pairs = [(tuple(r), tuple(s)) for r, s in relations]
    for i, alpha in enumerate(facts):
        for j in range(i + 1, len(facts)):
            beta = facts[j]
            for r, s in pairs:
                if _translate_pair(alpha, beta, r, s) or _translate_pair(alpha, beta, s, r):
                    parent[find(i)] = find(j)
                    break
    return len({find(i) for i in range(len(facts))}) == 1


def _translate_pair(alpha, beta, r, s) -> bool:
    gamma = [a - x for a, x in zip(alpha, r)]
    return min(gamma) >= 0 and all(g + y == b for g, y, b in zip(gamma, s, beta))


def oracle_semigroups(max_genus: int, max_multiplicity: int | None = None) -> list[tuple[int, ...]]:
    """Minimal generators of every numerical semigroup S != N with
    ``g(S) <= max_genus`` (and ``m(S) <= max_multiplicity``), via the genus tree:
    the children of S are ``S \\ {x}`` for minimal generators ``x > F(S)``."""
    out = []
    stack = [(0, -1, 0)]  # (gap bit-vector, Frobenius number, genus), root is N
    while stack:
        gaps, F, g = stack.pop()
        top = F + 2 + max(F, 1)  # covers [0, F + m] since m <= F + 1
        members = ~gaps & ((1 << top) - 1)
        snap = BoundedSet(top - 1, members)
        msg = oracle_msg(snap)
        if g:
            out.append(tuple(msg))
        if g == max_genus:
            continue
        for x in msg:
            if x <= F:
                continue
            child_m = msg[0] if x != msg[0] else msg[0] + 1
            if max_multiplicity is not None and child_m > max_multiplicity:
                continue
            stack.append((gaps | 1 << x, x, g + 1))
    out.sort()
    return out


def oracle_gcd(gens: Iterable[int]) -> int:
    return math.gcd(*gens)
