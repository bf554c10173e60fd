import itertools
import math
import random

import pytest

from semifiber import oracle as O
from semifiber.core import NATURALS, Monoid, from_generators
from semifiber.errors import BadDivisor, IsN, NotAnMdSet, WrongQuotient
from semifiber.quotient_fiber import (
    FiberContext,
    cofinite_extension,
    enumerate_fiber,
    in_fiber,
    intersect,
    is_md_set,
    md_closure,
    quotient,
    relative_generators,
    sample_md_set,
)


def sg(*gens):
    return from_generators(gens)


DELTA = sg(3, 4, 5)
CTX = FiberContext(DELTA, 2)


def oracle_quotient_msg(S, d):
    window = d * (S.conductor + S.msg[-1] + 1)
    return O.oracle_msg(O.oracle_quotient(O.oracle_closure(S.msg, window), d))


# --- quotient ----------------------------------------------------------------


def test_quotient_examples():
    assert quotient(sg(12, 13, 14, 15), 3) == sg(4, 5)
    assert quotient(sg(3, 5), 2) == DELTA
    assert quotient(sg(3, 5), 1) == sg(3, 5)
    assert quotient(sg(4, 5), 12) is NATURALS
    with pytest.raises(BadDivisor):
        quotient(sg(4, 5), 0)


def test_quotient_matches_oracle():
    for gens in itertools.combinations(range(2, 12), 2):
        if math.gcd(*gens) != 1:
            continue
        S = from_generators(gens)
        for d in range(1, 7):
            q = quotient(S, d)
            assert q.is_naturals or list(q.msg) == oracle_quotient_msg(S, d)
            if q.is_naturals:
                assert oracle_quotient_msg(S, d) == [1]


def test_quotient_of_quotient():
    for gens in [(3, 5), (4, 5), (5, 7, 9), (6, 7, 8, 9, 10), (7, 11)]:
        S = from_generators(gens)
        for a in range(1, 5):
            for b in range(1, 5):
                assert quotient(quotient(S, a), b) == quotient(S, a * b)


def test_monoid_quotient():
    M = Monoid.from_generators([6, 8, 10])  # 2 * <3,4,5>
    assert quotient(M, 2).msg == DELTA.msg
    assert quotient(M, 4).msg == (2, 3)  # {x : 4x in 2<3,4,5>} = <3,4,5>/2
    q = quotient(Monoid.from_generators([12, 18]), 4)  # 6<2,3> / 4 = 3 * (<2,3>/2)
    assert q.scale == 3 and q.base is NATURALS


# --- context / md-sets ---------------------------------------------------------


def test_context_validation():
    with pytest.raises(BadDivisor):
        FiberContext(DELTA, 1)
    with pytest.raises(IsN):
        FiberContext(NATURALS, 2)
    assert CTX.forbidden_limit == 5
    assert CTX.d_delta_msg == (6, 8, 10)
    assert CTX.in_d_delta(6) and not CTX.in_d_delta(2) and not CTX.in_d_delta(7)


def test_md_set_examples():
    assert is_md_set(CTX, [7, 9])
    assert not is_md_set(CTX, [2])
    assert is_md_set(CTX, [])


def test_md_closure_examples():
    assert md_closure(CTX, [3]).semigroup == sg(3, 8, 10)
    assert md_closure(CTX, [7, 9]).semigroup == sg(6, 7, 8, 9, 10)
    empty = md_closure(CTX, [])
    assert empty.msg == (6, 8, 10) and not empty.is_numerical
    with pytest.raises(NotAnMdSet):
        md_closure(CTX, [2, 7])


# --- fiber membership -----------------------------------------------------------


def test_in_fiber_examples():
    el = in_fiber(CTX, sg(6, 7, 8, 9, 10))
    assert (el.rank, el.relative_msg) == (2, (7, 9))
    el = in_fiber(CTX, sg(3, 5))
    assert (el.rank, el.relative_msg) == (2, (3, 5))
    with pytest.raises(WrongQuotient) as err:
        in_fiber(FiberContext(sg(4, 5), 3), sg(4, 5))
    assert err.value.actual == DELTA  # 9, 12, 15 are in <4,5>; 3, 6 are not
    assert err.value.code == "wrong-quotient"


def test_fiber_element_json():
    el = in_fiber(CTX, sg(6, 7, 8, 9, 10))
    assert el.to_json() == {
        "msg": [6, 7, 8, 9, 10],
        "relative_msg": [7, 9],
        "rank": 2,
        "frobenius": 11,
        "genus": 6,
    }


def test_relative_generators_of_d_delta():
    assert relative_generators(CTX, CTX.d_delta) == ()


# --- cofinite extensions / intersections ------------------------------------------


def test_cofinite_extension_examples():
    S = cofinite_extension(Monoid.from_generators([6, 8, 10]), 5)
    assert S == sg(5, 6, 7, 8, 9)
    assert quotient(S, 2) == DELTA
    assert cofinite_extension(Monoid.from_generators([2]), 7) == sg(2, 7)
    assert cofinite_extension(Monoid.of(NATURALS), 0) is NATURALS


def test_intersect_examples():
    assert intersect(sg(2, 3), DELTA) == DELTA
    assert intersect(sg(4, 5), NATURALS) == sg(4, 5)
    both = intersect(sg(6, 7, 8, 9, 10), sg(3, 5))
    assert in_fiber(CTX, both).semigroup == both
    assert oracle_quotient_msg(both, 2) == [3, 4, 5]


def test_intersect_matches_oracle():
    S, T = sg(3, 7), sg(4, 5, 6)
    U = intersect(S, T)
    bound = 40
    ref = O.oracle_closure(S.msg, bound).members & O.oracle_closure(T.msg, bound).members
    assert U.mask(bound + 1) == ref


# --- enumeration -----------------------------------------------------------------


def test_enumerate_fiber_example():
    found = {el.semigroup.msg for el in enumerate_fiber(CTX, 11)}
    assert {(3, 5), (6, 7, 8, 9, 10), (6, 7, 8, 9, 10, 11)} <= found
    assert len(found) == 15
    assert enumerate_fiber(CTX, 0) == []


def brute_force_fiber(ctx, gen_bound):
    """Every subset of the admissible candidates, filtered by the fiber test."""
    pool = [y for y in range(1, gen_bound + 1) if y in ctx.delta and not ctx.in_d_delta(y)]
    out = set()
    for k in range(1, len(pool) + 1):
        for X in itertools.combinations(pool, k):
            if math.gcd(ctx.d, *X) != 1:
                continue
            S = from_generators(list(X) + list(ctx.d_delta_msg))
            if oracle_quotient_msg(S, ctx.d) != list(ctx.delta.msg):
                continue
            A = tuple(x for x in S.msg if not ctx.in_d_delta(x))
            if max(A) <= gen_bound:
                out.add(S.msg)
    return out


@pytest.mark.parametrize("gens,d,bound", [((3, 4, 5), 2, 11), ((4, 5), 2, 13), ((3, 5), 3, 12), ((2, 5), 2, 9)])
def test_enumerate_fiber_is_complete(gens, d, bound):
    ctx = FiberContext(from_generators(gens), d)
    found = enumerate_fiber(ctx, bound)
    msgs = [el.semigroup.msg for el in found]
    assert len(msgs) == len(set(msgs))
    assert set(msgs) == brute_force_fiber(ctx, bound)


def test_enumerate_fiber_grows_with_bound():
    small = {el.semigroup.msg for el in enumerate_fiber(CTX, 9)}
    large = {el.semigroup.msg for el in enumerate_fiber(CTX, 13)}
    assert small < large


def test_enumerate_fiber_sorted_by_rank():
    found = enumerate_fiber(CTX, 13)
    keys = [(el.rank, el.semigroup.msg) for el in found]
    assert keys == sorted(keys)


# --- round trips ------------------------------------------------------------------


def test_closure_round_trip_and_minimality():
    rng = random.Random(7)
    deltas = [sg(3, 4, 5), sg(4, 5), sg(3, 5), sg(5, 7, 9), sg(2, 3)]
    for _ in range(150):
        ctx = FiberContext(rng.choice(deltas), rng.randint(2, 4))
        X = sample_md_set(ctx, rng, max_size=4)
        S = md_closure(ctx, X).semigroup
        assert quotient(S, ctx.d) == ctx.delta
        A = relative_generators(ctx, S)
        assert set(A) <= set(X)
        antichain = not any(x != y and y - x in S for x in X for y in X)
        assert (set(A) == set(X)) == antichain


def test_sample_md_set_is_valid():
    rng = random.Random(1)
    for _ in range(50):
        X = sample_md_set(CTX, rng)
        assert is_md_set(CTX, X) and math.gcd(2, *X) == 1
