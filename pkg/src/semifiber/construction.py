"""The multiple Delta_d(a) and its invariants in closed form.

For ``a`` with ``a, a+1`` in Delta, Delta_d(a) adds one generator in every
nonzero residue class mod ``d`` to ``d * Delta``:

    Delta_d(a) = <d*n_1, ..., d*n_e, d*a + 1, ..., d*a + d - 1>.

The ``predicted_*`` functions work from Delta's invariants alone and never
build the multiple, so they can be checked against a construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AperyTable,
    NumericalSemigroup,
    apery,
    from_generators,
    wilf_margin,
)
from .errors import BadBase, BadTarget, InvalidA, IsN
from .quotient_fiber import FiberContext, FiberElement, quotient


@dataclass(frozen=True)
class DeltaDaSpec:
    ctx: FiberContext
    a: int

    def __post_init__(self):
        delta = self.ctx.delta
        if self.a <= 0 or self.a not in delta or self.a + 1 not in delta:
            raise InvalidA(f"need a and a+1 in <{delta}> with a > 0, got a = {self.a}")

    @classmethod
    def of(cls, delta: NumericalSemigroup, d: int, a: int) -> DeltaDaSpec:
        return cls(FiberContext(delta, d), a)

    @property
    def delta(self) -> NumericalSemigroup:
        return self.ctx.delta

    @property
    def d(self) -> int:
        return self.ctx.d

    @property
    def new_generators(self) -> tuple[int, ...]:
        da = self.d * self.a
        return tuple(da + i for i in range(1, self.d))

    @property
    def generators(self) -> tuple[int, ...]:
        return self.ctx.d_delta_msg + self.new_generators


def smallest_a(delta: NumericalSemigroup) -> int:
    """Least ``a > 0`` with ``a`` and ``a+1`` in Delta (``a = c(Delta)`` always works)."""
    a = 1
    while a not in delta or a + 1 not in delta:
        a += 1
    return a


def build_delta_d_a(spec: DeltaDaSpec) -> FiberElement:
    S = from_generators(spec.generators)
    relative = tuple(x for x in S.msg if not spec.ctx.in_d_delta(x))
    return FiberElement(S, relative)


@dataclass(frozen=True)
class PredictedInvariants:
    multiplicity: int
    frobenius: int
    genus: int
    sporadic_count: int
    embedding_dimension: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def predicted_invariants(spec: DeltaDaSpec) -> PredictedInvariants:
    delta, d, a = spec.delta, spec.d, spec.a
    return PredictedInvariants(
        multiplicity=d * delta.multiplicity,
        frobenius=d * delta.frobenius + d * a + d - 1,
        genus=d * delta.genus + (d - 1) * a,
        sporadic_count=d * delta.sporadic_count + a,
        embedding_dimension=delta.embedding_dimension + d - 1,
    )


def predicted_apery_parts(spec: DeltaDaSpec) -> list[list[int]]:
    """``[d*Ap(Delta, m)] + [d*a + i + d*Ap(Delta, m) for i in 1..d-1]``."""
    d, a = spec.d, spec.a
    base = apery(spec.delta, spec.delta.multiplicity).elements()
    parts = [[d * w for w in base]]
    for i in range(1, d):
        parts.append([d * a + i + d * w for w in base])
    return parts


def predicted_apery(spec: DeltaDaSpec) -> AperyTable:
    """Apery set of Delta_d(a) with respect to ``d * m(Delta)``, from Ap(Delta, m)."""
    dm = spec.d * spec.delta.multiplicity
    reps: list[int | None] = [None] * dm
    for part in predicted_apery_parts(spec):
        for w in part:
            if reps[w % dm] is not None:
                raise AssertionError(f"residue {w % dm} hit twice")
            reps[w % dm] = w
    return AperyTable(dm, tuple(reps))


def apery_quotient_reduction(S: NumericalSemigroup, d: int, m: int) -> AperyTable:
    """``Ap(S/d, m/d)`` read off from ``Ap(S, m)``: keep multiples of ``d``, divide."""
    if d < 1 or m % d or m <= 0 or m not in S:
        raise BadBase(f"need d | m and m a nonzero member, got d = {d}, m = {m}")
    k = m // d
    reps: list[int] = [0] * k
    for w in apery(S, m).reps:
        if w % d == 0:
            reps[(w // d) % k] = w // d
    return AperyTable(k, tuple(reps))


@dataclass(frozen=True)
class WilfIdentity:
    """``lhs = d*wilf(Delta) + d*(d-1)*n(Delta) + a*(e(Delta)-1)``."""

    lhs: int
    decomposition: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "decomposition": list(self.decomposition)}


def wilf_decomposition(spec: DeltaDaSpec) -> tuple[int, int, int]:
    delta, d, a = spec.delta, spec.d, spec.a
    return (
        d * wilf_margin(delta),
        d * (d - 1) * delta.sporadic_count,
        a * (delta.embedding_dimension - 1),
    )


def wilf_identity_margin(spec: DeltaDaSpec) -> WilfIdentity:
    lhs = wilf_margin(build_delta_d_a(spec).semigroup)
    return WilfIdentity(lhs, wilf_decomposition(spec))


def predicted_depth(spec: DeltaDaSpec) -> int:
    """``ceil((c(Delta) + a) / m(Delta))``; does not depend on ``d``."""
    delta = spec.delta
    return -(-(delta.conductor + spec.a) // delta.multiplicity)


def realize_embedding_dimension(delta: NumericalSemigroup, k: int) -> tuple[int, NumericalSemigroup]:
    """Some ``(d, S)`` with ``S/d = Delta`` and ``e(S) = k``, taking ``d = k - e(Delta) + 1``."""
    if delta.is_naturals:
        raise IsN("Delta must not be N")
    e = delta.embedding_dimension
    if k < e:
        raise BadTarget(f"embedding dimension {k} < e(Delta) = {e}")
    if k == e:
        return 1, delta
    d = k - e + 1
    S = build_delta_d_a(DeltaDaSpec.of(delta, d, smallest_a(delta))).semigroup
    assert quotient(S, d) == delta
    return d, S
