"""Factorizations and presentations of numerical semigroups.

A factorization of ``n`` is an exponent vector over a generator list whose dot
product with the list is ``n``. A presentation is a finite set of pairs of
factorizations generating the kernel congruence of the factorization map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .construction import DeltaDaSpec
from .core import NumericalSemigroup
from .errors import BadFactorization

Factorization = tuple[int, ...]
Relation = tuple[Factorization, Factorization]


def evaluate(gens: Sequence[int], alpha: Sequence[int]) -> int:
    return sum(g * k for g, k in zip(gens, alpha))


def factorizations_over(gens: Sequence[int], n: int) -> list[Factorization]:
    """Every exponent vector over ``gens`` with value ``n``, in lexicographic order."""
    if n < 0:
        return []
    k = len(gens)
    if k == 0:
        return [()] if n == 0 else []
    # reach[i] holds the values representable by gens[i:], up to n
    reach = [0] * (k + 1)
    reach[k] = 1
    cap = (1 << (n + 1)) - 1
    for i in range(k - 1, -1, -1):
        mask, step = reach[i + 1], gens[i]
        while step <= n:
            mask |= (mask << step) & cap
            step <<= 1
        reach[i] = mask
    out: list[Factorization] = []
    prefix = [0] * k

    def walk(i, rest):
        if i == k - 1:
            if rest % gens[i] == 0:
                prefix[i] = rest // gens[i]
                out.append(tuple(prefix))
            return
        g = gens[i]
        for c in range(rest // g + 1):
            r = rest - c * g
            if reach[i + 1] >> r & 1:
                prefix[i] = c
                walk(i + 1, r)
        prefix[i] = 0

    if reach[0] >> n & 1:
        walk(0, n)
    return out


def factorizations(S: NumericalSemigroup, n: int) -> list[Factorization]:
    """Factorizations of ``n`` over ``msg(S)``; empty iff ``n`` is not in S."""
    return factorizations_over(S.msg, n)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[int, ...]
    relations: tuple[Relation, ...]

    def __post_init__(self):
        k = len(self.generators)
        for left, right in self.relations:
            if len(left) != k or len(right) != k:
                raise ValueError(f"relation {left} ~ {right} has the wrong length")
            if min(left + right, default=0) < 0:
                raise ValueError(f"relation {left} ~ {right} has a negative exponent")
            if left == right:
                raise ValueError(f"relation pairs {left} with itself")
            if evaluate(self.generators, left) != evaluate(self.generators, right):
                raise ValueError(f"relation {left} ~ {right} does not balance")

    @classmethod
    def of(cls, generators: Iterable[int], relations: Iterable) -> Presentation:
        return cls(
            tuple(generators),
            tuple((tuple(left), tuple(right)) for left, right in relations),
        )

    def __len__(self) -> int:
        return len(self.relations)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [[list(left), list(right)] for left, right in self.relations],
        }


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        parent = self.parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        self.parent[self.find(i)] = self.find(j)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return out


def betti_bound(S: NumericalSemigroup) -> int:
    """Past ``F + 2*max(msg)`` every factorization graph is connected."""
    return S.frobenius + 2 * S.msg[-1]


def _support_classes(facts: list[Factorization]) -> list[list[Factorization]]:
    """Components of the graph joining factorizations with a common generator."""
    uf = _UnionFind(len(facts))
    owner: dict[int, int] = {}
    for idx, alpha in enumerate(facts):
        for i, k in enumerate(alpha):
            if k:
                if i in owner:
                    uf.union(idx, owner[i])
                else:
                    owner[i] = idx
    comps = [sorted(facts[i] for i in members) for members in uf.classes().values()]
    comps.sort()
    return comps


def minimal_presentation(S: NumericalSemigroup) -> Presentation:
    """For each Betti element, chain the least factorization of each component."""
    gens = S.msg
    relations: list[Relation] = []
    if len(gens) > 1:
        for n in range(gens[0] + gens[1], betti_bound(S) + 1):
            if n not in S:
                continue
            facts = factorizations_over(gens, n)
            if len(facts) < 2:
                continue
            comps = _support_classes(facts)
            for prev, nxt in zip(comps, comps[1:]):
                relations.append((prev[0], nxt[0]))
    return Presentation(tuple(gens), tuple(relations))


def _pad(alpha: Sequence[int], extra: int) -> Factorization:
    return tuple(alpha) + (0,) * extra


def _lex_least(gens: Sequence[int], n: int) -> Factorization:
    facts = factorizations_over(gens, n)
    return facts[0]


def lifted_presentation(
    spec: DeltaDaSpec,
    sigma: Presentation | None = None,
    u: Sequence[int] | None = None,
    v: Sequence[int] | None = None,
) -> Presentation:
    """A presentation of Delta_d(a) over ``d*msg(Delta)`` followed by
    ``d*a + 1, ..., d*a + d - 1``.

    The relations of ``sigma`` are padded with zeros on the new coordinates.
    Writing ``f_i`` for the unit vector of ``d*a + i`` and lifting ``u`` (a
    factorization of ``a``) and ``v`` (of ``a + 1``), each pair ``i <= j``
    contributes ``f_i + f_j ~ u + f_{i+j}``, ``u + v`` or ``v + f_{i+j-d}``
    according as ``i + j`` is below, equal to or above ``d``.
    """
    delta, d, a = spec.delta, spec.d, spec.a
    base = delta.msg
    e = len(base)
    if sigma is None:
        sigma = minimal_presentation(delta)
    if tuple(sigma.generators) != base:
        raise ValueError("sigma must be written over msg(Delta)")
    u = _lex_least(base, a) if u is None else tuple(u)
    v = _lex_least(base, a + 1) if v is None else tuple(v)
    for name, alpha, value in (("u", u, a), ("v", v, a + 1)):
        if len(alpha) != e or min(alpha) < 0 or evaluate(base, alpha) != value:
            raise BadFactorization(f"{name} = {alpha} is not a factorization of {value}")

    extra = d - 1
    gens = tuple(d * n for n in base) + spec.new_generators
    width = e + extra

    def unit(i: int) -> list[int]:
        vec = [0] * width
        vec[e + i - 1] = 1
        return vec

    def add(*vecs) -> Factorization:
        return tuple(map(sum, zip(*vecs)))

    u_l, v_l = _pad(u, extra), _pad(v, extra)
    rho2 = [(_pad(left, extra), _pad(right, extra)) for left, right in sigma.relations]
    rho1 = []
    for i in range(1, d):
        for j in range(i, d):
            left = add(unit(i), unit(j))
            if i + j < d:
                right = add(u_l, unit(i + j))
            elif i + j == d:
                right = add(u_l, v_l)
            else:
                right = add(v_l, unit(i + j - d))
            rho1.append((left, right))
    return Presentation(gens, tuple(rho2 + rho1))


def verify_presentation(S: NumericalSemigroup, P: Presentation, bound: int | None = None) -> bool:
    """Check that ``P`` connects the factorizations of every ``n <= bound``.

    ``P.generators`` may list ``msg(S)`` in any order. The default bound is the
    Betti bound, which makes a positive answer a proof that ``P`` presents S.
    """
    gens = P.generators
    if sorted(gens) != list(S.msg) or len(set(gens)) != len(gens):
        raise ValueError(f"presentation generators {list(gens)} are not msg(S) = {list(S.msg)}")
    if bound is None:
        bound = betti_bound(S)
    moves = []
    for left, right in P.relations:
        moves.append((left, right))
        moves.append((right, left))
    for n in range(bound + 1):
        if n not in S:
            continue
        facts = factorizations_over(gens, n)
        if len(facts) < 2:
            continue
        index = {alpha: i for i, alpha in enumerate(facts)}
        uf = _UnionFind(len(facts))
        for i, alpha in enumerate(facts):
            for src, dst in moves:
                if all(x >= y for x, y in zip(alpha, src)):
                    beta = tuple(x - y + z for x, y, z in zip(alpha, src, dst))
                    uf.union(i, index[beta])
        if len(uf.classes()) > 1:
            return False
    return True


__all__ = [
    "Factorization",
    "Presentation",
    "betti_bound",
    "evaluate",
    "factorizations",
    "factorizations_over",
    "lifted_presentation",
    "minimal_presentation",
    "verify_presentation",
]
