import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nvlogic.services.connectives import (
    Bound,
    IndeterminacyMode,
    PriorityOrder,
    n_conorm,
    n_norm,
    negate,
    priority_and,
    priority_combine,
    priority_mass,
    priority_or,
    project_fuzzy,
    project_intuitionistic,
)
from nvlogic.services.core_values import RefinedValue, Signature, UnitInterval, crisp_false, crisp_true, make_refined
from nvlogic.services.errors import (
    AsymmetricSignature,
    InvalidOrder,
    OutOfRange,
    SignatureMismatch,
)
from nvlogic.services.tnorms import NormFamily, t_conorm, t_norm
from tests.strategies import refined_values, signatures, sub_unit_triads

TRIAD = Signature(1, 1, 1)
TOL = 1e-12
X = RefinedValue.triad(0.5, 0.3, 0.2)
Y = RefinedValue.triad(0.4, 0.4, 0.2)
MODES = list(IndeterminacyMode)
FAMILIES = list(NormFamily)


def assert_masses(value, expected):
    np.testing.assert_allclose(value.masses(), expected, atol=TOL)


# ---- oracles ----
def brute_force(x, y, order):
    """Enumerate all n*n pairs; credit each product to the higher-ranked slot."""
    rank = {slot: position for position, slot in enumerate(order.order)}
    xv, yv = x.masses(), y.masses()
    out = [0.0] * x.sig.n
    for a, b in itertools.product(range(x.sig.n), repeat=2):
        out[max(a, b, key=rank.get)] += xv[a] * yv[b]
    return out


def lower_and_expansion(x, y):
    (t1, i1, f1), (t2, i2, f2) = x.masses(), y.masses()
    return [
        t1 * t2,
        i1 * i2 + i1 * t2 + t1 * i2,
        f1 * f2 + f1 * i2 + f1 * t2 + i1 * f2 + t1 * f2,
    ]


def upper_or_expansion(x, y):
    (t1, i1, f1), (t2, i2, f2) = x.masses(), y.masses()
    return [
        t1 * t2 + t1 * i2 + t1 * f2 + i1 * t2 + f1 * t2,
        i1 * i2 + i1 * f2 + f1 * i2,
        f1 * f2,
    ]


def random_triads(rng, count):
    return [RefinedValue.triad(*m) for m in rng.random((count, 3))]


# ---- worked example ----
def test_worked_example_lower_and():
    assert_masses(priority_and(X, Y, Bound.LOWER), [0.2, 0.44, 0.36])


def test_worked_example_upper_or():
    assert_masses(priority_or(X, Y, Bound.UPPER), [0.7, 0.26, 0.04])


def test_worked_example_other_bounds():
    assert_masses(priority_and(X, Y, Bound.UPPER), [0.52, 0.12, 0.36])
    assert_masses(priority_or(X, Y, Bound.LOWER), [0.7, 0.12, 0.18])


def test_bounds_bracket_the_truth_slot():
    assert priority_and(X, Y, Bound.LOWER).t[0].lo <= priority_and(X, Y, Bound.UPPER).t[0].lo
    assert priority_or(X, Y, Bound.LOWER).i[0].lo <= priority_or(X, Y, Bound.UPPER).i[0].lo


def test_expansions_against_brute_force():
    rng = np.random.default_rng(7)
    for x, y in zip(random_triads(rng, 1000), random_triads(rng, 1000)):
        np.testing.assert_allclose(
            priority_mass(x, y, PriorityOrder.and_default(TRIAD)), lower_and_expansion(x, y), atol=TOL
        )
        np.testing.assert_allclose(
            priority_mass(x, y, PriorityOrder.or_default(TRIAD)), upper_or_expansion(x, y), atol=TOL
        )


@settings(max_examples=200)
@given(sub_unit_triads(), sub_unit_triads())
def test_priority_combinators_match_expansions(x, y):
    assert_masses(priority_and(x, y), lower_and_expansion(x, y))
    assert_masses(priority_or(x, y), upper_or_expansion(x, y))


@settings(max_examples=100)
@given(st.data())
def test_refined_mass_matches_brute_force(data):
    sig = data.draw(signatures())
    x = data.draw(refined_values(sig, st.floats(0, 1).map(UnitInterval.scalar)))
    y = data.draw(refined_values(sig, st.floats(0, 1).map(UnitInterval.scalar)))
    order = PriorityOrder(sig, tuple(data.draw(st.permutations(range(sig.n)))))
    np.testing.assert_allclose(priority_mass(x, y, order), brute_force(x, y, order), atol=TOL)


# ---- mass conservation ----
def test_mass_conservation():
    rng = np.random.default_rng(11)
    orders = [
        PriorityOrder.and_default(TRIAD),
        PriorityOrder.and_upper(TRIAD),
        PriorityOrder.or_default(TRIAD),
        PriorityOrder.or_lower(TRIAD),
    ] + [PriorityOrder(TRIAD, tuple(rng.permutation(3))) for _ in range(20)]
    xs, ys = random_triads(rng, 1000), random_triads(rng, 1000)
    for order in orders:
        for x, y in zip(xs, ys):
            assert priority_mass(x, y, order).sum() == pytest.approx(x.masses().sum() * y.masses().sum(), abs=TOL)


def test_unit_operands_give_unit_result():
    assert priority_and(X, Y).masses().sum() == pytest.approx(1.0, abs=TOL)


def test_overflow_is_reported():
    big = RefinedValue.triad(1.0, 1.0, 1.0)
    with pytest.raises(OutOfRange):
        priority_and(big, big)


# ---- degeneration ----
@pytest.mark.parametrize("sig", [TRIAD, Signature(2, 1, 2), Signature(1, 3, 1)])
def test_crisp_inputs_give_classical_connectives(sig):
    crisp = {True: crisp_true(sig), False: crisp_false(sig)}
    for a, b in itertools.product((True, False), repeat=2):
        and_want, or_want = crisp[a and b], crisp[a or b]
        for fam, mode in itertools.product(FAMILIES, MODES):
            assert n_norm(crisp[a], crisp[b], fam, mode) == and_want
            assert n_conorm(crisp[a], crisp[b], fam, mode) == or_want
        if sig.p > 1 or sig.s > 1:
            # refined crisp values carry more than unit mass
            continue
        for bound in Bound:
            assert priority_and(crisp[a], crisp[b], bound) == and_want
            assert priority_or(crisp[a], crisp[b], bound) == or_want


def test_fuzzy_reduction_to_product():
    rng = np.random.default_rng(3)
    for a, b in rng.random((1000, 2)):
        out = priority_and(RefinedValue.triad(a, 0.0, 1.0 - a), RefinedValue.triad(b, 0.0, 1.0 - b))
        assert out.t[0].lo == pytest.approx(a * b, abs=TOL)
        assert out.i[0].lo == 0.0


# ---- n-norm / n-conorm ----
@settings(max_examples=200)
@given(st.data())
def test_n_norm_slot_law(data):
    sig = data.draw(signatures())
    x, y = data.draw(refined_values(sig)), data.draw(refined_values(sig))
    fam = data.draw(st.sampled_from(FAMILIES))
    pess = n_norm(x, y, fam, IndeterminacyMode.PESSIMISTIC)
    opt = n_norm(x, y, fam, IndeterminacyMode.OPTIMISTIC)
    assert pess.t == tuple(t_norm(fam, a, b) for a, b in zip(x.t, y.t))
    assert pess.f == tuple(t_conorm(fam, a, b) for a, b in zip(x.f, y.f))
    assert pess.i == tuple(t_conorm(fam, a, b) for a, b in zip(x.i, y.i))
    assert opt.i == tuple(t_norm(fam, a, b) for a, b in zip(x.i, y.i))
    for o, p in zip(opt.i, pess.i):
        assert o.lo <= p.lo + TOL and o.hi <= p.hi + TOL


@settings(max_examples=200)
@given(st.data())
def test_n_conorm_slot_law(data):
    sig = data.draw(signatures())
    x, y = data.draw(refined_values(sig)), data.draw(refined_values(sig))
    fam = data.draw(st.sampled_from(FAMILIES))
    out = n_conorm(x, y, fam, IndeterminacyMode.PESSIMISTIC)
    assert out.t == tuple(t_conorm(fam, a, b) for a, b in zip(x.t, y.t))
    assert out.i == tuple(t_norm(fam, a, b) for a, b in zip(x.i, y.i))
    assert out.f == tuple(t_norm(fam, a, b) for a, b in zip(x.f, y.f))


@settings(max_examples=200)
@given(st.data())
def test_n_conorm_is_dual_of_n_norm(data):
    part = data.draw(st.integers(1, 3))
    sig = Signature(part, data.draw(st.integers(1, 3)), part)
    x, y = data.draw(refined_values(sig)), data.draw(refined_values(sig))
    fam = data.draw(st.sampled_from(FAMILIES))
    for mode in MODES:
        dual = negate(n_norm(negate(x), negate(y), fam, mode.opposite))
        for a, b in zip(n_conorm(x, y, fam, mode).components, dual.components):
            assert a.lo == pytest.approx(b.lo, abs=TOL) and a.hi == pytest.approx(b.hi, abs=TOL)


@given(sub_unit_triads(), sub_unit_triads())
def test_priority_or_is_dual_of_priority_and(x, y):
    dual = negate(priority_and(negate(x), negate(y), Bound.LOWER))
    assert_masses(priority_or(x, y, Bound.UPPER), dual.masses())


@given(refined_values(TRIAD), refined_values(TRIAD), refined_values(TRIAD))
def test_n_norm_monotone_in_truth(x, y, z):
    # raising T of one operand never lowers T of the result
    raised = RefinedValue(TRIAD, (UnitInterval(max(x.t[0].lo, z.t[0].lo), max(x.t[0].hi, z.t[0].hi)),), x.i, x.f)
    for fam in FAMILIES:
        assert n_norm(raised, y, fam).t[0].lo >= n_norm(x, y, fam).t[0].lo - TOL


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        n_norm(X, crisp_true(Signature(2, 1, 1)), NormFamily.MIN_MAX)
    with pytest.raises(SignatureMismatch):
        priority_and(X, crisp_true(Signature(2, 1, 1)))


# ---- priority orders ----
def test_refined_presets():
    sig = Signature(2, 1, 2)
    assert PriorityOrder.and_default(sig).labels() == ("T1", "T2", "I1", "F1", "F2")
    assert PriorityOrder.and_upper(sig).labels() == ("I1", "T1", "T2", "F1", "F2")
    assert PriorityOrder.or_default(sig).labels() == ("F2", "F1", "I1", "T2", "T1")
    assert PriorityOrder.or_lower(sig).labels() == ("I1", "F2", "F1", "T2", "T1")


def test_parse_order():
    sig = Signature(1, 2, 1)
    assert PriorityOrder.parse("T1<I1<I2<F1", sig) == PriorityOrder.and_default(sig)
    assert PriorityOrder.parse("T>I>F", sig) == PriorityOrder.or_default(sig)
    assert PriorityOrder.parse("U<C<T<F", sig).order == (1, 2, 0, 3)
    assert str(PriorityOrder.and_default(TRIAD)) == "T1<I1<F1"


@pytest.mark.parametrize("text", ["T1<I1", "T1<I1<F1<T1", "T<I>F", "T1<X1<F1"])
def test_invalid_orders(text):
    with pytest.raises(InvalidOrder):
        PriorityOrder.parse(text, TRIAD)


def test_order_for_other_signature():
    with pytest.raises(InvalidOrder):
        priority_combine(X, Y, PriorityOrder.and_default(Signature(1, 2, 1)))


# ---- negation & projections ----
def test_negate_swaps_blocks_in_reverse():
    v = make_refined(Signature(2, 1, 2), [0.1, 0.2], [0.3], [0.4, 0.5])
    assert negate(v) == make_refined(Signature(2, 1, 2), [0.5, 0.4], [0.3], [0.2, 0.1])


@given(refined_values())
def test_negate_is_involution(v):
    if v.sig.p == v.sig.s:
        assert negate(negate(v)) == v
    else:
        with pytest.raises(AsymmetricSignature):
            negate(v)


def test_project_fuzzy():
    v = make_refined(Signature(1, 2, 1), [0.6], [0.2, 0.0], [0.4])
    out, lossy = project_fuzzy(v)
    assert lossy
    assert out == make_refined(Signature(1, 2, 1), [0.6], [0.0, 0.0], [0.4])
    assert project_fuzzy(out) == (out, False)


def test_project_intuitionistic():
    out, clamped = project_intuitionistic(make_refined(Signature(1, 2, 1), [0.6], [0.2, 0.3], [0.4]))
    assert out == RefinedValue.triad(0.6, 0.5, 0.4)
    assert not clamped
    out, clamped = project_intuitionistic(make_refined(Signature(1, 3, 1), [0.0], [0.5, 0.4, 0.3], [0.0]))
    assert out.i == (UnitInterval.scalar(1.0),)
    assert clamped


def test_project_intuitionistic_keeps_triads():
    assert project_intuitionistic(X) == (X, False)


# ---- commutativity & associativity ----
def assert_close_values(a, b):
    for p, q in zip(a.components, b.components):
        assert p.lo == pytest.approx(q.lo, abs=TOL) and p.hi == pytest.approx(q.hi, abs=TOL)


@settings(max_examples=200)
@given(st.data())
def test_n_norm_and_n_conorm_commute(data):
    sig = data.draw(signatures())
    x, y = data.draw(refined_values(sig)), data.draw(refined_values(sig))
    fam = data.draw(st.sampled_from(FAMILIES))
    mode = data.draw(st.sampled_from(MODES))
    assert_close_values(n_norm(x, y, fam, mode), n_norm(y, x, fam, mode))
    assert_close_values(n_conorm(x, y, fam, mode), n_conorm(y, x, fam, mode))


@settings(max_examples=300)
@given(sub_unit_triads(), sub_unit_triads(), st.permutations(range(3)))
def test_priority_combine_commutes(x, y, order):
    order = PriorityOrder(TRIAD, tuple(order))
    assert_masses(priority_combine(x, y, order), priority_combine(y, x, order).masses())


@settings(max_examples=300)
@given(sub_unit_triads(), sub_unit_triads(), sub_unit_triads(), st.permutations(range(3)))
def test_priority_combine_associates(x, y, z, order):
    order = PriorityOrder(TRIAD, tuple(order))
    left = priority_combine(priority_combine(x, y, order), z, order)
    right = priority_combine(x, priority_combine(y, z, order), order)
    assert_masses(left, right.masses())
