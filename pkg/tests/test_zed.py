import random
from fractions import Fraction

import pytest

from hypothesis import given, settings
import hypothesis.strategies as st

from shoelace.exactlin import FieldSpec, Matrix
from shoelace.interleave import unpack, validate_interleaving
from shoelace.proset import (
    TranslationHeight,
    iso_pairs,
    translation_height,
    validate_proset,
)
from shoelace.rep import (
    chain_representation,
    direct_sum,
    restrict,
    validate_nat_trans,
    validate_representation,
)
from shoelace.selftest import _conjugate, _rand_invertible
from shoelace.zed import (
    Barcode,
    DecomposedShoelaceRep,
    Ext,
    Interval,
    Matching,
    NEG_INF,
    POS_INF,
    Window,
    barcode,
    canonical_pair,
    condition_star,
    endpoint_distance,
    expand_decomposed,
    expand_summand,
    find_matching,
    hom_dimension,
    interval_to_module,
    is_essential,
    iter_matchings,
    lambda_eps,
    matching_interleaving,
    matching_to_rep,
    pack_decomposed,
    rep_to_matching,
    shift_interval,
    shoelace_window,
    summand_support,
    support_is_interval,
    validate_decomposed,
    validate_matching,
    window_chain,
)

F2 = FieldSpec(2)
F5 = FieldSpec(5)


def test_endpoint_distance_conventions():
    assert endpoint_distance(POS_INF, POS_INF) == Ext(0)
    assert endpoint_distance(NEG_INF, NEG_INF) == Ext(0)
    assert endpoint_distance(POS_INF, NEG_INF) == POS_INF
    assert endpoint_distance(NEG_INF, POS_INF) == POS_INF
    assert endpoint_distance(POS_INF, 5) == POS_INF
    assert endpoint_distance(5, NEG_INF) == POS_INF
    assert endpoint_distance(3, 7) == Ext(4)
    assert endpoint_distance("-inf", "-inf") == Ext(0)


def test_ext_ordering_and_arithmetic():
    assert NEG_INF < Ext(-10 ** 9) < Ext(0) < Ext(10 ** 9) < POS_INF
    assert Ext(3) == 3
    assert Ext(3) <= 3 and Ext(3) >= 3
    assert POS_INF + 5 == POS_INF
    assert NEG_INF - 5 == NEG_INF
    assert Ext(2) + 3 == Ext(5)
    assert Ext(2) - 3 == Ext(-1)
    assert str(NEG_INF) == "-inf" and str(POS_INF) == "+inf"
    assert Ext.of("+inf") is POS_INF
    with pytest.raises(ValueError, match="not an extended integer"):
        Ext.of("infinity")
    with pytest.raises(ValueError, match="not an extended integer"):
        Ext.of(1.5)
    with pytest.raises(ValueError):
        Ext(True)


def test_interval_shapes_and_refusals():
    assert str(Interval(0, 3)) == "[0,3]"
    assert str(Interval(NEG_INF, 3)) == "(-inf,3]"
    assert str(Interval(0, POS_INF)) == "[0,+inf)"
    assert str(Interval(NEG_INF, POS_INF)) == "(-inf,+inf)"
    with pytest.raises(ValueError, match="cannot start"):
        Interval(POS_INF, POS_INF)
    with pytest.raises(ValueError, match="cannot end"):
        Interval(NEG_INF, NEG_INF)
    with pytest.raises(ValueError, match="empty interval"):
        Interval(3, 0)
    with pytest.raises(AttributeError):
        Interval(0, 1).lo = Ext(2)


def test_interval_length_and_shortness():
    assert Interval(0, 3).length() == Ext(3)
    assert Interval(0, POS_INF).length() == POS_INF
    assert Interval(NEG_INF, POS_INF).length() == POS_INF
    assert Interval(0, 0).is_short(1)
    assert not Interval(0, 0).is_short(0)
    assert not Interval(0, 2).is_short(1)
    assert not Interval(0, POS_INF).is_short(10 ** 6)
    assert Interval(0, 3).contains(0) and Interval(0, 3).contains(3)
    assert not Interval(0, 3).contains(4)
    assert Interval(NEG_INF, 2).contains(-10 ** 9)


def test_interval_canonical_order():
    bars = [
        Interval(0, POS_INF),
        Interval(0, 1),
        Interval(NEG_INF, 5),
        Interval(NEG_INF, POS_INF),
        Interval(-2, 0),
    ]
    b = Barcode(bars)
    assert list(b) == [
        Interval(NEG_INF, 5),
        Interval(NEG_INF, POS_INF),
        Interval(-2, 0),
        Interval(0, 1),
        Interval(0, POS_INF),
    ]


def test_barcode_multiset_semantics():
    a = Barcode([Interval(0, 1), Interval(0, 1), Interval(2, 3)])
    b = Barcode([Interval(2, 3), Interval(0, 1), Interval(0, 1)])
    assert a == b
    assert a.counts()[Interval(0, 1)] == 2
    assert len(a) == 3
    assert Barcode([]) == Barcode([])
    with pytest.raises(ValueError, match="not an interval"):
        Barcode([(0, 1)])


def test_window_basics():
    w = Window(-2, 3)
    assert w.size == 6
    assert w.index(-2) == 0 and w.index(3) == 5
    assert w.value(0) == -2 and w.value(5) == 3
    with pytest.raises(ValueError, match="outside window"):
        w.index(4)
    with pytest.raises(ValueError, match="empty window"):
        Window(1, 0)


def test_window_chain_labels_and_heights():
    p, h = window_chain(Window(-1, 2))
    assert p.n == 4
    assert [p.label(i) for i in range(4)] == ["-1", "0", "1", "2"]
    assert h.values == (Fraction(-1), Fraction(0), Fraction(1), Fraction(2))


def test_lambda_eps_examples():
    w = Window(0, 5)
    assert lambda_eps(w, 0).mapping == (0, 1, 2, 3, 4, 5)
    assert lambda_eps(w, 2).mapping == (2, 3, 4, 5, 5, 5)
    with pytest.raises(ValueError, match="negative epsilon"):
        lambda_eps(w, -1)


def test_lambda_eps_interior_height_is_uniform():
    w = Window(0, 5)
    _, h = window_chain(w)
    t = lambda_eps(w, 2)
    interior = translation_height(t, h, elements=range(4))
    assert interior == TranslationHeight(Fraction(2), True, Fraction(2))
    full = translation_height(t, h)
    assert full.height == Fraction(2)
    assert not full.uniform


def test_shoelace_window_iso_pairs_at_eps_zero():
    sh, _ = shoelace_window(Window(0, 1), 0)
    assert iso_pairs(sh) == frozenset(
        {frozenset({0, 2}), frozenset({1, 3})})


def test_shoelace_window_cross_pairs():
    sh, h = shoelace_window(Window(0, 3), 2)
    assert validate_proset(sh) is None
    plain_to_primed = {(i, j) for i in range(4) for j in range(4)
                       if sh.rel[i][4 + j]}
    primed_to_plain = {(i, j) for i in range(4) for j in range(4)
                       if sh.rel[4 + i][j]}
    assert plain_to_primed == {(0, 2), (0, 3), (1, 3)}
    assert primed_to_plain == {(0, 2), (0, 3), (1, 3)}
    assert sh.label(5) == "1'"
    assert h.values[2] == h.values[6] == Fraction(2)
    with pytest.raises(ValueError, match="negative epsilon"):
        shoelace_window(Window(0, 3), -1)


def test_interval_to_module_support():
    w = Window(0, 3)
    m = interval_to_module(Interval(1, 2), w)
    assert m.dims == (0, 1, 1, 0)
    assert m.maps[(1, 2)] == Matrix.identity(F2, 1)
    assert interval_to_module(Interval(NEG_INF, POS_INF), w).dims == (1, 1, 1, 1)
    assert interval_to_module(Interval(NEG_INF, 1), w).dims == (1, 1, 0, 0)
    with pytest.raises(ValueError, match="outside window"):
        interval_to_module(Interval(5, 9), w)
    with pytest.raises(ValueError, match="refusing a lossy clamp"):
        interval_to_module(Interval(0, 9), w)


def test_barcode_single_bar():
    w = Window(0, 3)
    m = interval_to_module(Interval(0, 3), w)
    assert barcode(m, w) == Barcode([Interval(0, 3)])


def test_barcode_two_bar_example():
    w = Window(0, 2)
    p, _ = window_chain(w)
    m = chain_representation(p, F2, (1, 2, 1),
                             [Matrix(F2, 2, 1, [[1], [0]]),
                              Matrix(F2, 1, 2, [[0, 1]])])
    assert barcode(m, w) == Barcode([Interval(0, 1), Interval(1, 2)])


def test_barcode_boundary_infinite():
    w = Window(0, 3)
    full = interval_to_module(Interval(NEG_INF, POS_INF), w)
    assert barcode(full, w) == Barcode([Interval(0, 3)])
    assert barcode(full, w, boundary="infinite") == Barcode(
        [Interval(NEG_INF, POS_INF)])
    low = interval_to_module(Interval(0, 2), w)
    assert barcode(low, w, boundary="infinite") == Barcode(
        [Interval(NEG_INF, 2)])
    high = interval_to_module(Interval(1, 3), w)
    assert barcode(high, w, boundary="infinite") == Barcode(
        [Interval(1, POS_INF)])


def test_barcode_rejects_bad_arguments():
    w = Window(0, 3)
    m = interval_to_module(Interval(0, 3), w)
    with pytest.raises(ValueError, match="boundary"):
        barcode(m, w, boundary="open")
    with pytest.raises(ValueError, match="points"):
        barcode(m, Window(0, 4))


def test_barcode_scramble_oracle():
    rng = random.Random(3)
    w = Window(0, 2)
    truth = [Interval(0, 1), Interval(0, 1), Interval(1, 2),
             Interval(NEG_INF, POS_INF)]
    parts = [interval_to_module(i, w, F5) for i in truth]
    total, _ = direct_sum(parts, proset=parts[0].proset, field=F5)
    us = [_rand_invertible(rng, F5, d) for d in total.dims]
    scrambled, _ = _conjugate(total, us)
    assert validate_representation(scrambled) is None
    got = barcode(scrambled, w)
    assert got == Barcode([Interval(0, 1), Interval(0, 1), Interval(1, 2),
                           Interval(0, 2)])
    for k in range(w.size):
        covering = sum(1 for bar in got if bar.contains(w.value(k)))
        assert covering == scrambled.dims[k]


def test_condition_star_examples():
    assert condition_star(Interval(0, 1), Interval(1, 2), 1)
    assert not condition_star(Interval(0, 0), Interval(2, 2), 1)
    for i in (Interval(0, 0), Interval(1, 3), Interval(NEG_INF, POS_INF)):
        assert condition_star(i, i, 0)
    # the disjunction is symmetric in the two intervals
    assert condition_star(Interval(1, 2), Interval(0, 1), 1)


def test_validate_matching_infinite_conventions():
    inf1 = Interval(1, POS_INF)
    inf0 = Interval(0, POS_INF)
    good = Matching(Barcode([inf1]), Barcode([inf0]), [(inf1, inf0)], 1)
    assert validate_matching(good) is None
    long_bar = Interval(1, 10000)
    bad = Matching(Barcode([long_bar]), Barcode([inf0]), [(long_bar, inf0)], 1)
    report = validate_matching(bad)
    assert report is not None
    assert "right endpoints differ by +inf" in report


def test_validate_matching_shortness_and_multiset():
    long_bar = Interval(1, 10000)
    unmatched = Matching(Barcode([long_bar]), Barcode([]), [], 1)
    report = validate_matching(unmatched)
    assert report is not None and "not < 2" in report
    inf_unmatched = Matching(Barcode([Interval(0, POS_INF)]), Barcode([]), [], 3)
    report = validate_matching(inf_unmatched)
    assert report is not None and "length +inf" in report
    short = Matching(Barcode([Interval(5, 5)]), Barcode([]), [], 1)
    assert validate_matching(short) is None
    i01 = Interval(0, 1)
    overdrawn = Matching(Barcode([i01]), Barcode([i01, i01]),
                         [(i01, i01), (i01, i01)], 0)
    report = validate_matching(overdrawn)
    assert report is not None and "source barcode provides" in report
    with pytest.raises(ValueError, match="epsilon"):
        Matching(Barcode([]), Barcode([]), [], -1)


def test_matching_epsilon_zero_degenerate():
    a, b = Interval(0, 1), Interval(2, 3)
    bars = Barcode([a, b])
    exact = Matching(bars, bars, [(a, a), (b, b)], 0)
    assert validate_matching(exact) is None
    dangling = Matching(bars, bars, [(a, a)], 0)
    report = validate_matching(dangling)
    assert report is not None and "not < 0" in report


def test_is_essential_examples():
    i02, i13 = Interval(0, 2), Interval(1, 3)
    exempt = Matching(Barcode([i02]), Barcode([i13]), [(i02, i13)], 1)
    assert is_essential(exempt) == []
    i00, i11 = Interval(0, 0), Interval(1, 1)
    ok = Matching(Barcode([i00]), Barcode([i11]), [(i00, i11)], 1)
    assert is_essential(ok) == []
    bad = Matching(Barcode([i00]), Barcode([i11]), [(i00, i11)], 2)
    assert is_essential(bad) == [(i00, i11)]
    broken = Matching(Barcode([i00]), Barcode([]), [(i00, i11)], 2)
    with pytest.raises(ValueError, match="invalid matching"):
        is_essential(broken)


def test_hom_dimension_examples():
    w = Window(0, 4)
    assert hom_dimension(Interval(1, 3), Interval(0, 2), w) == 1
    assert hom_dimension(Interval(0, 1), Interval(2, 3), Window(0, 3)) == 0
    for i in (Interval(0, 2), Interval(0, POS_INF), Interval(NEG_INF, POS_INF)):
        assert hom_dimension(i, i, w) == 1
        assert hom_dimension(i, i, w, F5) == 1


def test_canonical_pair_one_sided_support():
    w = Window(-1, 3)
    f, g = canonical_pair(Interval(0, 1), Interval(1, 2), 1, w)
    assert validate_nat_trans(f) is None
    assert validate_nat_trans(g) is None
    f_support = {w.value(a) for a, c in enumerate(f.components)
                 if not c.is_zero()}
    assert f_support == {0, 1}
    assert all(c.is_zero() for c in g.components)


def test_canonical_pair_two_sided_support():
    w = Window(-1, 4)
    f, g = canonical_pair(Interval(0, 2), Interval(1, 3), 1, w)
    f_support = {w.value(a) for a, c in enumerate(f.components)
                 if not c.is_zero()}
    g_support = {w.value(a) for a, c in enumerate(g.components)
                 if not c.is_zero()}
    assert f_support == {0, 1, 2}
    assert g_support == {1}


def test_canonical_pair_identity_at_eps_zero():
    from shoelace.rep import identity_nat

    w = Window(0, 3)
    i = Interval(1, 2)
    f, g = canonical_pair(i, i, 0, w)
    m = interval_to_module(i, w)
    assert f == identity_nat(m)
    assert g == identity_nat(m)


def test_canonical_pair_refusals():
    with pytest.raises(ValueError, match="no headroom"):
        canonical_pair(Interval(0, 4), Interval(0, 4), 2, Window(0, 4))
    with pytest.raises(ValueError, match="not realizable"):
        canonical_pair(Interval(0, 9), Interval(0, 1), 1, Window(0, 4))


def test_star_hom_canonical_equivalence_small_sweep():
    w = Window(-3, 5)
    pool = [Interval(a, b) for a in range(4) for b in range(a, 4)]
    for eps in (0, 1, 2):
        for i in pool:
            for j in pool:
                h1 = hom_dimension(i, shift_interval(j, eps), w)
                h2 = hom_dimension(j, shift_interval(i, eps), w)
                star = condition_star(i, j, eps)
                assert star == (h1 > 0 or h2 > 0)
                f, g = canonical_pair(i, j, eps, w)
                assert validate_nat_trans(f) is None
                assert validate_nat_trans(g) is None
                f_nonzero = any(not c.is_zero() for c in f.components)
                g_nonzero = any(not c.is_zero() for c in g.components)
                assert f_nonzero == (h1 > 0)
                assert g_nonzero == (h2 > 0)


def test_matching_to_rep_worked_example():
    i02, i13, i55 = Interval(0, 2), Interval(1, 3), Interval(5, 5)
    s = Matching(Barcode([i02, i55]), Barcode([i13]), [(i02, i13)], 1)
    w = Window(-2, 7)
    l = matching_to_rep(s, w)
    assert l.summands == ((i02, i13), (i55, None))
    assert l.epsilon == 1 and l.window == w
    assert validate_decomposed(l) is None
    empty = matching_to_rep(Matching(Barcode([]), Barcode([]), [], 1), w)
    assert empty.summands == ()


def test_matching_to_rep_fprime_splits_star_violations():
    i00, i11 = Interval(0, 0), Interval(1, 1)
    s = Matching(Barcode([i00]), Barcode([i11]), [(i00, i11)], 2)
    w = Window(-4, 5)
    l = matching_to_rep(s, w, variant="nonessential_Fprime")
    assert l.summands == ((i00, None), (None, i11))
    with pytest.raises(ValueError, match="not essential"):
        matching_to_rep(s, w, variant="essential_F")
    with pytest.raises(ValueError, match="window too small"):
        matching_to_rep(s, Window(0, 5), variant="nonessential_Fprime")
    with pytest.raises(ValueError, match="unknown variant"):
        matching_to_rep(s, w, variant="F")
    bad = Matching(Barcode([Interval(0, 9)]), Barcode([]), [], 1)
    with pytest.raises(ValueError, match="invalid matching"):
        matching_to_rep(bad, Window(-10, 20))


def test_rep_to_matching_round_trips():
    i02, i13, i55 = Interval(0, 2), Interval(1, 3), Interval(5, 5)
    s = Matching(Barcode([i02, i55]), Barcode([i13]), [(i02, i13)], 1)
    w = Window(-2, 7)
    assert rep_to_matching(matching_to_rep(s, w)) == s
    single = DecomposedShoelaceRep(Window(-2, 5), 1, F2, [(i02, i13)])
    got = rep_to_matching(single)
    assert got == Matching(Barcode([i02]), Barcode([i13]), [(i02, i13)], 1)
    i00, i11 = Interval(0, 0), Interval(1, 1)
    star_violating = Matching(Barcode([i00]), Barcode([i11]), [(i00, i11)], 2)
    back = rep_to_matching(matching_to_rep(
        star_violating, Window(-4, 5), variant="nonessential_Fprime"))
    assert back != star_violating
    assert back == Matching(Barcode([i00]), Barcode([i11]), [], 2)


def test_validate_decomposed_violations():
    w = Window(-4, 9)
    ok_long = DecomposedShoelaceRep(w, 1, F2, [(Interval(0, 6), Interval(1, 5))])
    assert validate_decomposed(ok_long) is None
    no_sides = DecomposedShoelaceRep(w, 1, F2, [(None, None)])
    assert "no sides" in validate_decomposed(no_sides)
    long_single = DecomposedShoelaceRep(w, 1, F2, [(Interval(0, 5), None)])
    assert "not < 2" in validate_decomposed(long_single)
    far_apart = DecomposedShoelaceRep(w, 1, F2, [(Interval(0, 0), Interval(2, 2))])
    assert "differ" in validate_decomposed(far_apart)
    star_fail = DecomposedShoelaceRep(w, 2, F2, [(Interval(0, 0), Interval(1, 1))])
    assert "overlap condition" in validate_decomposed(star_fail)
    cramped = DecomposedShoelaceRep(Window(0, 3), 1, F2, [(Interval(0, 1), None)])
    assert "padding" in validate_decomposed(cramped)
    with pytest.raises(ValueError, match="Interval or None"):
        DecomposedShoelaceRep(w, 1, F2, [((0, 1), None)])


def test_summand_support_and_interval_check():
    w = Window(0, 3)
    assert summand_support((Interval(0, 1), None), w, 1) == frozenset({0, 1})
    assert summand_support((None, Interval(1, 2)), w, 1) == frozenset({5, 6})
    assert summand_support((Interval(0, 1), Interval(1, 2)), w, 1) == frozenset(
        {0, 1, 5, 6})
    p, _ = window_chain(w)
    assert support_is_interval(p, frozenset({0, 1}))
    assert support_is_interval(p, frozenset({2}))
    assert not support_is_interval(p, frozenset())
    assert not support_is_interval(p, frozenset({0, 3}))


def test_expand_summand_is_thin():
    w = Window(-2, 5)
    e = expand_summand((Interval(0, 2), Interval(1, 3)), w, 1, F2)
    assert validate_representation(e) is None
    assert all(d <= 1 for d in e.dims)
    assert restrict(e, "left") == interval_to_module(Interval(0, 2), w)
    assert restrict(e, "right") == interval_to_module(Interval(1, 3), w)
    support = frozenset(k for k, d in enumerate(e.dims) if d)
    assert support == summand_support((Interval(0, 2), Interval(1, 3)), w, 1)
    sh, _ = shoelace_window(w, 1)
    assert support_is_interval(sh, support)
    single = expand_summand((Interval(5, 5), None), Window(-2, 7), 1, F2)
    assert validate_representation(single) is None


def test_expand_decomposed_restriction_barcodes():
    i02, i13, i55 = Interval(0, 2), Interval(1, 3), Interval(5, 5)
    s = Matching(Barcode([i02, i55]), Barcode([i13]), [(i02, i13)], 1)
    w = Window(-2, 7)
    cert = matching_to_rep(s, w)
    v = expand_decomposed(cert)
    sh, _ = shoelace_window(w, 1)
    assert v.proset == sh
    assert validate_representation(v) is None
    assert barcode(restrict(v, "left"), w) == Barcode([i02, i55])
    assert barcode(restrict(v, "right"), w) == Barcode([i13])
    pv = pack_decomposed(cert)
    x = unpack(pv)
    assert validate_interleaving(x) is None
    broken = DecomposedShoelaceRep(w, 1, F2, [(Interval(0, 5), None)])
    with pytest.raises(ValueError, match="invalid decomposed"):
        pack_decomposed(broken)


def test_find_matching_examples():
    a, b = Interval(0, 1), Interval(2, 3)
    bars = Barcode([a, b])
    assert find_matching(bars, bars, 0) == Matching(bars, bars,
                                                    [(a, a), (b, b)], 0)
    left = Barcode([Interval(0, 2)])
    right = Barcode([Interval(1, 3)])
    got = find_matching(left, right, 1)
    assert got == Matching(left, right, [(Interval(0, 2), Interval(1, 3))], 1)
    long_only = Barcode([Interval(0, 9)])
    assert find_matching(long_only, Barcode([]), 0) is None
    assert find_matching(long_only, Barcode([]), 3) is None
    assert find_matching(Barcode([]), long_only, 3) is None


def test_find_matching_essential_flag():
    i00, i11 = Interval(0, 0), Interval(1, 1)
    bm, bn = Barcode([i00]), Barcode([i11])
    loose = find_matching(bm, bn, 2)
    assert loose.pairs == ((i00, i11),)
    strict = find_matching(bm, bn, 2, require_essential=True)
    assert strict.pairs == ()
    assert is_essential(strict) == []


def test_iter_matchings_deterministic_enumeration():
    bm = Barcode([Interval(0, 1)])
    bn = Barcode([Interval(0, 1), Interval(1, 2)])
    first = list(iter_matchings(bm, bn, 1))
    second = list(iter_matchings(bm, bn, 1))
    assert first == second
    assert len(first) == 3
    assert first[0].pairs == ((Interval(0, 1), Interval(0, 1)),)
    with pytest.raises(ValueError, match="negative epsilon"):
        list(iter_matchings(bm, bn, -1))


def test_matching_interleaving_blocks():
    i02, i13 = Interval(0, 2), Interval(1, 3)
    s = Matching(Barcode([i02]), Barcode([i13]), [(i02, i13)], 1)
    w = Window(-2, 5)
    x = matching_interleaving(s, w)
    assert validate_interleaving(x) is None
    assert x.m == interval_to_module(i02, w)
    assert x.n == interval_to_module(i13, w)
    f, g = canonical_pair(i02, i13, 1, w)
    assert x.phi == f and x.psi == g


def test_matching_interleaving_star_violation_gives_zero_blocks():
    i00, i11 = Interval(0, 0), Interval(1, 1)
    s = Matching(Barcode([i00]), Barcode([i11]), [(i00, i11)], 2)
    x = matching_interleaving(s, Window(-4, 5))
    assert validate_interleaving(x) is None
    assert all(c.is_zero() for c in x.phi.components)
    assert all(c.is_zero() for c in x.psi.components)


def test_matching_interleaving_refusals():
    i00 = Interval(0, 0)
    bad = Matching(Barcode([Interval(0, 9)]), Barcode([]), [], 1)
    with pytest.raises(ValueError, match="invalid matching"):
        matching_interleaving(bad, Window(-10, 20))
    tight = Matching(Barcode([i00]), Barcode([i00]), [(i00, i00)], 1)
    with pytest.raises(ValueError, match="window too small"):
        matching_interleaving(tight, Window(0, 4))


def test_shift_interval():
    assert shift_interval(Interval(1, 3), 1) == Interval(0, 2)
    assert shift_interval(Interval(NEG_INF, 3), 2) == Interval(NEG_INF, 1)
    assert shift_interval(Interval(0, POS_INF), 2) == Interval(-2, POS_INF)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_barcode_survives_random_scrambles(seed):
    rng = random.Random(seed)
    lo = rng.randint(-3, 3)
    w = Window(lo, lo + rng.randint(1, 4))
    truth = []
    for _ in range(rng.randint(1, 4)):
        a = rng.randint(w.lo, w.hi)
        b = rng.randint(a, w.hi)
        truth.append(Interval(a, b))
    parts = [interval_to_module(i, w, F5) for i in truth]
    total, _ = direct_sum(parts, proset=parts[0].proset, field=F5)
    us = [_rand_invertible(rng, F5, d) for d in total.dims]
    scrambled, _ = _conjugate(total, us)
    assert barcode(scrambled, w) == Barcode(truth)
    for k in range(w.size):
        covering = sum(1 for bar in Barcode(truth) if bar.contains(w.value(k)))
        assert covering == scrambled.dims[k]
