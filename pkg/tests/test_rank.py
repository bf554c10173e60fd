import math

import pytest

from semifiber import oracle as O
from semifiber.construction import DeltaDaSpec, build_delta_d_a
from semifiber.core import NATURALS, Monoid, from_generators, is_symmetric, pseudo_frobenius
from semifiber.errors import BadGluing, InDDelta, IsDDelta, NotCoprime, NotInDelta, WrongQuotient
from semifiber.quotient_fiber import FiberContext, enumerate_fiber, quotient
from semifiber.rank import (
    RankOneSpec,
    embedding_dim_via_rank,
    gluing_quotient_check,
    max_rank_witness,
    mu,
    rank,
    rank_one_build,
    rank_one_invariants,
    rank_one_pf,
    relative_msg,
)


def sg(*gens):
    return from_generators(gens)


DELTA = sg(3, 4, 5)
CTX = FiberContext(DELTA, 2)


# --- relative generators / rank --------------------------------------------------


def test_relative_msg_examples():
    assert relative_msg(CTX, sg(6, 7, 8, 9, 10)) == (7, 9)
    assert relative_msg(CTX, sg(3, 5)) == (3, 5)
    assert relative_msg(FiberContext(sg(4, 5), 3), sg(12, 13, 14, 15)) == (13, 14)
    with pytest.raises(WrongQuotient):
        relative_msg(CTX, sg(4, 5))


def test_rank_examples():
    assert rank(CTX, sg(6, 7, 8, 9, 10)) == 2
    assert rank(CTX, CTX.d_delta) == 0
    for d in (2, 3, 4, 5):
        spec = DeltaDaSpec.of(sg(5, 7, 9), d, 9)
        assert rank(spec.ctx, build_delta_d_a(spec).semigroup) == d - 1


def test_relative_msg_regenerates():
    for el in enumerate_fiber(CTX, 13):
        M = Monoid.from_generators(list(el.relative_msg) + list(CTX.d_delta_msg))
        assert M.semigroup == el.semigroup


# --- maximal rank ---------------------------------------------------------------------


def test_max_rank_witness_examples():
    bound, el = max_rank_witness(CTX)
    assert bound == 3
    assert el.relative_msg == (7, 9, 11)
    assert el.semigroup == sg(6, 7, 8, 9, 10, 11)
    assert max_rank_witness(FiberContext(sg(4, 5), 2))[0] == 4


def test_max_rank_bounds_enumeration():
    for gens in ([3, 4, 5], [4, 5], [3, 5], [2, 3]):
        for d in (2, 3):
            ctx = FiberContext(from_generators(gens), d)
            bound, witness = max_rank_witness(ctx)
            ranks = [el.rank for el in enumerate_fiber(ctx, d * ctx.delta.conductor + 2 * d * ctx.delta.multiplicity)]
            assert max(ranks) == bound == witness.rank
            ref = O.oracle_msg(O.oracle_snapshot(witness.semigroup.msg))
            assert sum(1 for x in ref if not ctx.in_d_delta(x)) == bound


# --- embedding dimension ------------------------------------------------------------------


def test_embedding_split_examples():
    split = embedding_dim_via_rank(CTX, sg(6, 7, 8, 9, 10))
    assert (split.e, split.absorbed) == (5, ())
    split = embedding_dim_via_rank(CTX, sg(3, 5))
    assert (split.e, split.absorbed) == (2, (3, 4, 5))
    split = embedding_dim_via_rank(CTX, sg(3, 8, 10))
    assert (split.e, split.absorbed) == (3, (3,))
    assert split.to_json() == {"e": 3, "rank": 1, "relative_msg": [3], "absorbed": [3]}


def test_embedding_split_on_fibers():
    for gens in ([3, 4, 5], [4, 5], [5, 7, 9]):
        for d in (2, 3):
            ctx = FiberContext(from_generators(gens), d)
            for el in enumerate_fiber(ctx, d * (ctx.delta.conductor + ctx.delta.multiplicity)):
                split = embedding_dim_via_rank(ctx, el.semigroup)
                assert split.e == len(el.semigroup.msg)
                assert split.rank <= split.e <= split.rank + ctx.delta.embedding_dimension


# --- mu -------------------------------------------------------------------------------------


def test_mu_examples():
    assert mu(CTX, sg(6, 7, 8, 9, 10)) == 7
    assert mu(CTX, sg(3, 5)) == 3
    with pytest.raises(IsDDelta):
        mu(CTX, CTX.d_delta)


def test_mu_is_least_element_outside_d_delta():
    for el in enumerate_fiber(CTX, 13):
        S = el.semigroup
        least = next(x for x in range(1, S.conductor + 2 * max(S.msg)) if x in S and not CTX.in_d_delta(x))
        assert mu(CTX, S) == least


# --- rank one --------------------------------------------------------------------------------


def test_rank_one_build_examples():
    el = rank_one_build(RankOneSpec.of(DELTA, 2, 3))
    assert el.semigroup == sg(3, 8, 10) and el.rank == 1
    el = rank_one_build(RankOneSpec.of(sg(4, 5), 3, 5))
    assert el.semigroup == sg(5, 12)


@pytest.mark.parametrize(
    "gens,d,x,err",
    [
        ([4, 5], 2, 4, NotCoprime),
        ([4, 5], 2, 6, NotInDelta),
        ([4, 5], 2, 8, InDDelta),
        ([4, 5], 3, 12, InDDelta),
        ([3, 4, 5], 2, 1, NotInDelta),
    ],
)
def test_rank_one_spec_errors(gens, d, x, err):
    with pytest.raises(err):
        RankOneSpec.of(from_generators(gens), d, x)


def test_rank_one_invariants_examples():
    inv = rank_one_invariants(RankOneSpec.of(sg(4, 5), 3, 5))
    assert (inv.frobenius, inv.genus) == (43, 22)
    assert (5 * 12 - 5 - 12, 4 * 11 // 2) == (43, 22)
    inv = rank_one_invariants(RankOneSpec.of(DELTA, 2, 3))
    assert (inv.frobenius, inv.genus) == (7, 5)
    assert inv.to_json() == {"frobenius": 7, "genus": 5}
    assert sg(3, 8, 10).gaps == (1, 2, 4, 5, 7)


def test_rank_one_pf_examples():
    assert rank_one_pf(RankOneSpec.of(DELTA, 2, 3)) == [5, 7]
    assert rank_one_pf(RankOneSpec.of(sg(4, 5), 3, 5)) == [43]
    assert O.oracle_pf(O.oracle_snapshot([3, 8, 10], 2)) == [5, 7]
    assert is_symmetric(sg(5, 12))


def test_rank_one_formulas_genus_up_to_7():
    for msg in O.oracle_semigroups(7):
        delta = from_generators(msg)
        for d in (2, 3, 4, 5):
            ctx = FiberContext(delta, d)
            for x in range(2, delta.conductor + 2 * d + 1):
                if x not in delta or ctx.in_d_delta(x) or math.gcd(x, d) != 1:
                    continue
                spec = RankOneSpec(ctx, x)
                el = rank_one_build(spec)
                S = el.semigroup
                assert el.rank == 1 and mu(ctx, S) == x
                inv = rank_one_invariants(spec)
                assert (inv.frobenius, inv.genus) == (S.frobenius, S.genus)
                pf = rank_one_pf(spec)
                assert pf == pseudo_frobenius(S)
                assert len(pf) == len(pseudo_frobenius(delta))
                assert is_symmetric(S) == is_symmetric(delta)


def test_rank_one_elements_are_rank_one_builds():
    for gens in ([3, 4, 5], [4, 5], [3, 5]):
        for d in (2, 3):
            ctx = FiberContext(from_generators(gens), d)
            for el in enumerate_fiber(ctx, 3 * d * ctx.delta.conductor):
                if el.rank == 1:
                    assert rank_one_build(RankOneSpec(ctx, mu(ctx, el.semigroup))) == el


def test_delta_2_a_is_rank_one():
    for msg in O.oracle_semigroups(6):
        delta = from_generators(msg)
        for a in range(1, delta.conductor + 4):
            if a in delta and a + 1 in delta:
                left = build_delta_d_a(DeltaDaSpec.of(delta, 2, a))
                right = rank_one_build(RankOneSpec.of(delta, 2, 2 * a + 1))
                assert left == right


# --- gluing -------------------------------------------------------------------------------------


def test_gluing_examples():
    cert = gluing_quotient_check(sg(4, 5), NATURALS, 2, 9)
    assert cert.semigroup == sg(8, 9, 10) and cert.quotient == sg(4, 5) and cert.is_gluing
    with pytest.raises(BadGluing):
        gluing_quotient_check(sg(4, 5), NATURALS, 2, 5)
    cert = gluing_quotient_check(DELTA, sg(2, 3), 5, 3)
    assert cert.quotient == DELTA
    assert quotient(cert.semigroup, 5) == DELTA
    # 3 is a minimal generator of <3,4,5>, so this is not a gluing in the strict sense
    assert not cert.is_gluing
    assert cert.to_json()["quotient"] == [3, 4, 5]


@pytest.mark.parametrize("d,e", [(2, 4), (1, 9), (3, 7), (3, 4)])
def test_gluing_rejections(d, e):
    # common factor; d < 2; e = 7 is a gap of <4,5>; e = 4 is a minimal generator
    with pytest.raises(BadGluing):
        gluing_quotient_check(sg(4, 5), NATURALS, d, e)


def test_gluing_with_naturals_is_rank_one():
    delta = sg(4, 5)
    for d in (2, 3, 5):
        for e in range(2, 30):
            if e in delta and e not in delta.msg and math.gcd(d, e) == 1:
                cert = gluing_quotient_check(delta, NATURALS, d, e)
                assert cert.semigroup == rank_one_build(RankOneSpec.of(delta, d, e)).semigroup
