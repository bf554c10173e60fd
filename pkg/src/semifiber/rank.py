"""Rank in the fiber M_d(Delta), and the rank-one layer ``<x> + d*Delta``."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    NATURALS,
    NumericalSemigroup,
    closure_mask,
    from_generators,
    pseudo_frobenius,
)
from .errors import BadGluing, InDDelta, IsDDelta, NotCoprime, NotInDelta
from .quotient_fiber import (
    FiberContext,
    FiberElement,
    MonoidLike,
    in_fiber,
    quotient,
    relative_generators,
)


def relative_msg(ctx: FiberContext, S: MonoidLike) -> tuple[int, ...]:
    """``msg(S)`` minus ``d*Delta``; the unique minimal A with ``S = <A> + d*Delta``."""
    return relative_generators(ctx, S)


def rank(ctx: FiberContext, S: MonoidLike) -> int:
    return len(relative_generators(ctx, S))


def max_rank_witness(ctx: FiberContext) -> tuple[int, FiberElement]:
    """``(d-1)*m(Delta)`` and an element attaining it.

    With B the least multiple of ``d*m`` above ``d*F(Delta)``, the witness is
    generated over ``d*Delta`` by ``B + r`` for ``0 <= r < d*m`` and ``d`` not
    dividing ``r``.
    """
    d, delta = ctx.d, ctx.delta
    dm = d * delta.multiplicity
    B = (d * delta.frobenius // dm + 1) * dm
    X = [B + r for r in range(dm) if r % d]
    S = from_generators(X + list(ctx.d_delta_msg))
    return (d - 1) * delta.multiplicity, in_fiber(ctx, S)


@dataclass(frozen=True)
class EmbeddingSplit:
    """``e = e(Delta) + rank - |absorbed|`` where ``absorbed`` lists the
    generators ``n`` of Delta with ``d*n`` already in ``<A>``."""

    e: int
    rank: int
    relative_msg: tuple[int, ...]
    absorbed: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "rank": self.rank,
            "relative_msg": list(self.relative_msg),
            "absorbed": list(self.absorbed),
        }


def embedding_dim_via_rank(ctx: FiberContext, S: NumericalSemigroup) -> EmbeddingSplit:
    A = relative_generators(ctx, S)
    d, base = ctx.d, ctx.delta.msg
    reach = closure_mask(A, d * base[-1] + 1)
    absorbed = tuple(n for n in base if reach >> (d * n) & 1)
    e = len(base) + len(A) - len(absorbed)
    return EmbeddingSplit(e, len(A), A, absorbed)


def mu(ctx: FiberContext, S: MonoidLike) -> int:
    """Least element of S outside ``d*Delta``."""
    A = relative_generators(ctx, S)
    if not A:
        raise IsDDelta("S = d*Delta has no element outside d*Delta")
    return A[0]


@dataclass(frozen=True)
class RankOneSpec:
    ctx: FiberContext
    x: int

    def __post_init__(self):
        x, d = self.x, self.ctx.d
        if x not in self.ctx.delta:
            raise NotInDelta(f"{x} is not in <{self.ctx.delta}>")
        if self.ctx.in_d_delta(x):
            raise InDDelta(f"{x} lies in {d}*<{self.ctx.delta}>")
        if math.gcd(x, d) != 1:
            raise NotCoprime(f"gcd({x}, {d}) = {math.gcd(x, d)}")

    @classmethod
    def of(cls, delta: NumericalSemigroup, d: int, x: int) -> RankOneSpec:
        return cls(FiberContext(delta, d), x)


def rank_one_build(spec: RankOneSpec) -> FiberElement:
    S = from_generators([spec.x, *spec.ctx.d_delta_msg])
    return in_fiber(spec.ctx, S)


@dataclass(frozen=True)
class RankOneInvariants:
    frobenius: int
    genus: int

    def to_json(self) -> dict:
        return {"frobenius": self.frobenius, "genus": self.genus}


def rank_one_invariants(spec: RankOneSpec) -> RankOneInvariants:
    delta, d, x = spec.ctx.delta, spec.ctx.d, spec.x
    # x and d are coprime, so one of them is odd and (d-1)(x-1) is even
    return RankOneInvariants(
        frobenius=d * delta.frobenius + (d - 1) * x,
        genus=d * delta.genus + (d - 1) * (x - 1) // 2,
    )


def rank_one_pf(spec: RankOneSpec) -> list[int]:
    d, x = spec.ctx.d, spec.x
    return sorted(d * f + (d - 1) * x for f in pseudo_frobenius(spec.ctx.delta))


@dataclass(frozen=True)
class GluingCertificate:
    semigroup: NumericalSemigroup
    quotient: NumericalSemigroup
    is_gluing: bool

    def to_json(self) -> dict:
        return {
            "msg": list(self.semigroup.msg),
            "quotient": list(self.quotient.msg),
            "is_gluing": self.is_gluing,
        }


def gluing_quotient_check(
    delta: NumericalSemigroup, T: NumericalSemigroup, d: int, e: int
) -> GluingCertificate:
    """Build ``S = <d*msg(Delta) ∪ e*msg(T)>`` and certify ``S/d = Delta``.

    The quotient only needs ``gcd(d, e) = 1`` and ``e`` in Delta. ``is_gluing``
    records whether the full gluing conditions hold as well. With ``T = N``
    those full conditions are required, so ``S = <e> + d*Delta``.
    """
    if d < 2 or e < 1 or math.gcd(d, e) != 1:
        raise BadGluing(f"need d >= 2 and gcd(d, e) = 1, got d = {d}, e = {e}")
    if e not in delta:
        raise BadGluing(f"{e} is not in <{delta}>")
    full = e >= 2 and e not in delta.msg and d in T and d not in T.msg
    if T == NATURALS and not full:
        raise BadGluing(f"with T = N, e must lie in Delta minus msg(Delta), got {e}")
    S = from_generators([d * n for n in delta.msg] + [e * t for t in T.msg])
    q = quotient(S, d)
    if q != delta:
        raise BadGluing(f"<{S}>/{d} = <{q}>, expected <{delta}>")
    return GluingCertificate(S, q, full)


__all__ = [
    "EmbeddingSplit",
    "GluingCertificate",
    "RankOneInvariants",
    "RankOneSpec",
    "embedding_dim_via_rank",
    "gluing_quotient_check",
    "max_rank_witness",
    "mu",
    "rank",
    "rank_one_build",
    "rank_one_invariants",
    "rank_one_pf",
    "relative_msg",
]
