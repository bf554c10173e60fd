"""Quotients S/d and the fiber M_d(Delta) of numerical semigroups S with S/d = Delta.

A submonoid M of N with M/d = Delta is an *M_d(Delta)-monoid*; it need not be
a numerical semigroup (``d * Delta`` itself is one). Every element of the fiber
is ``<X> + d*Delta`` for a finite X avoiding ``d * gaps(Delta)``, and its
*relative* minimal generators are ``msg(S)`` minus the members of ``d*Delta``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

from .core import (
    NATURALS,
    Monoid,
    NumericalSemigroup,
    close_under,
    closure_mask,
    from_generators,
)
from .errors import BadDivisor, IsN, NotAnMdSet, WrongQuotient

MonoidLike = Union[NumericalSemigroup, Monoid]


def quotient(S: MonoidLike, d: int) -> MonoidLike:
    """``S/d = {x : d*x in S}``. Numerical semigroups map to numerical semigroups."""
    if d < 1:
        raise BadDivisor(f"d must be >= 1, got {d}")
    if isinstance(S, Monoid):
        return _monoid_quotient(S, d)
    if d == 1:
        return S
    top = -(-S.conductor // d)
    mask = 0
    for x in range(top):
        if S.small >> (d * x) & 1:
            mask |= 1 << x
    return NumericalSemigroup._from_mask(mask, top)


def _monoid_quotient(M: Monoid, d: int) -> Monoid:
    # M = g*R, and d*x in g*R iff x = (g/k)*y with y in R/(d/k), k = gcd(g, d)
    if M.scale == 0:
        return M
    k = math.gcd(M.scale, d)
    return Monoid(M.scale // k, quotient(M.base, d // k))


@dataclass(frozen=True)
class FiberContext:
    """A fixed target ``delta`` (not N) and divisor ``d >= 2``."""

    delta: NumericalSemigroup
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise BadDivisor(f"the fiber needs d >= 2, got {self.d}")
        if self.delta.is_naturals:
            raise IsN("the fiber is only studied for Delta != N")

    @cached_property
    def delta_gaps(self) -> tuple[int, ...]:
        return self.delta.gaps

    @cached_property
    def d_delta_msg(self) -> tuple[int, ...]:
        return tuple(self.d * n for n in self.delta.msg)

    @cached_property
    def forbidden(self) -> int:
        """Bit-vector of ``d * (N \\ Delta)``."""
        out = 0
        for n in self.delta_gaps:
            out |= 1 << (self.d * n)
        return out

    @property
    def forbidden_limit(self) -> int:
        return self.d * self.delta.frobenius + 1

    def in_d_delta(self, n: int) -> bool:
        return n >= 0 and n % self.d == 0 and n // self.d in self.delta

    @property
    def d_delta(self) -> Monoid:
        return Monoid(self.d, self.delta)


@dataclass(frozen=True)
class FiberElement:
    semigroup: NumericalSemigroup
    relative_msg: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.relative_msg)

    def to_json(self) -> dict:
        S = self.semigroup
        return {
            "msg": list(S.msg),
            "relative_msg": list(self.relative_msg),
            "rank": self.rank,
            "frobenius": S.frobenius,
            "genus": S.genus,
        }


def is_md_set(ctx: FiberContext, X: Iterable[int]) -> bool:
    """True iff no ``d*n`` with ``n`` a gap of Delta is a combination of X."""
    reach = closure_mask(X, ctx.forbidden_limit)
    return not reach & ctx.forbidden


def md_closure(ctx: FiberContext, X: Iterable[int]) -> Monoid:
    """Smallest M_d(Delta)-monoid containing X, namely ``<X> + d*Delta``."""
    X = sorted(set(X))
    if not is_md_set(ctx, X):
        raise NotAnMdSet(f"<{X}> meets d*(N \\ Delta)")
    return Monoid.from_generators(X + list(ctx.d_delta_msg))


def relative_generators(ctx: FiberContext, M: MonoidLike) -> tuple[int, ...]:
    """``msg(M)`` minus ``d*Delta``; raises WrongQuotient unless ``M/d = Delta``."""
    q = quotient(M, ctx.d)
    if q.msg != ctx.delta.msg:
        raise WrongQuotient(f"<{M}>/{ctx.d} = <{q}>, expected <{ctx.delta}>", actual=q)
    return tuple(x for x in M.msg if not ctx.in_d_delta(x))


def in_fiber(ctx: FiberContext, S: NumericalSemigroup) -> FiberElement:
    return FiberElement(S, relative_generators(ctx, S))


def cofinite_extension(M: MonoidLike, n: int) -> NumericalSemigroup:
    """``M`` together with every integer ``>= n``."""
    n = max(n, 0)
    return NumericalSemigroup._from_mask(M.mask(n), n)


def intersect(S: NumericalSemigroup, T: NumericalSemigroup) -> NumericalSemigroup:
    limit = max(S.conductor, T.conductor)
    return NumericalSemigroup._from_mask(S.mask(limit) & T.mask(limit), limit)


def enumerate_fiber(ctx: FiberContext, gen_bound: int) -> list[FiberElement]:
    """Every S in M_d(Delta) whose relative generators all lie in ``[1, gen_bound]``.

    Relative generator sets are grown in increasing order: a candidate ``y`` is
    admissible when it is not already in ``<A> + d*Delta`` and adding it keeps
    the monoid away from ``d*(N \\ Delta)``. Every fiber element arises from
    exactly one such chain, its own relative generators.
    """
    if gen_bound < 0:
        raise ValueError("gen_bound must be >= 0")
    d, delta = ctx.d, ctx.delta
    limit = max(gen_bound, ctx.forbidden_limit) + 1
    forbidden = ctx.forbidden
    start = closure_mask(ctx.d_delta_msg, limit)
    candidates = [y for y in range(1, gen_bound + 1) if y in delta and not ctx.in_d_delta(y)]
    found: list[tuple[int, ...]] = []

    def grow(M, i0, chosen, g):
        if g == 1:
            found.append(tuple(chosen))
        for i in range(i0, len(candidates)):
            y = candidates[i]
            if M >> y & 1:
                continue
            grown = close_under(M, y, limit)
            if grown & forbidden:
                continue
            chosen.append(y)
            grow(grown, i + 1, chosen, math.gcd(g, y))
            chosen.pop()

    grow(start, 0, [], d)
    out = []
    for A in found:
        S = from_generators(list(A) + list(ctx.d_delta_msg))
        out.append(FiberElement(S, tuple(x for x in S.msg if not ctx.in_d_delta(x))))
    out.sort(key=lambda el: (el.rank, el.semigroup.msg))
    return out


def sample_md_set(
    ctx: FiberContext, rng: random.Random, max_size: int = 3, bound: int | None = None
) -> list[int]:
    """A random X inside Delta \\ d*Delta with ``is_md_set`` true and
    ``gcd(X + [d]) == 1``, so that ``<X> + d*Delta`` lies in the fiber."""
    if bound is None:
        bound = ctx.d * (ctx.delta.conductor + ctx.delta.multiplicity)
    pool = [y for y in range(1, bound + 1) if y in ctx.delta and not ctx.in_d_delta(y)]
    while True:
        X = sorted(rng.sample(pool, rng.randint(1, min(max_size, len(pool)))))
        if math.gcd(ctx.d, *X) == 1 and is_md_set(ctx, X):
            return X


__all__ = [
    "NATURALS",
    "FiberContext",
    "FiberElement",
    "cofinite_extension",
    "enumerate_fiber",
    "in_fiber",
    "intersect",
    "is_md_set",
    "md_closure",
    "quotient",
    "relative_generators",
    "sample_md_set",
]
