import math
import random

from hypothesis import given, strategies as st
import pytest

from wsing.classify import (
    CompareKind,
    ConicalKind,
    Mechanism,
    compare_weights,
    conical_cyclic,
    conical_from_weights,
    corollary_report,
    verify_compare_certificate,
    verify_conical_certificate,
)
from wsing.cyclic_quotient import InvariantMonomial, diagonal_weights, make_cyclic
from wsing.exactnum import ratio
from wsing.link_topology import LinkComparison
from wsing.weights import from_list, normalize

weight_lists = st.lists(st.integers(1, 100), min_size=2, max_size=6)


def W(*xs):
    return from_list(xs)


@pytest.mark.parametrize(
    "w, kind, mech",
    [
        ((1, 1, 1), ConicalKind.METRICALLY_CONICAL, None),
        ((15, 10, 6), ConicalKind.NOT_CONICAL, Mechanism.THEOREM_1),
        ((3, 2, 2), ConicalKind.UNKNOWN, None),
    ],
)
def test_conical_from_weights(w, kind, mech):
    v = conical_from_weights(W(*w))
    assert (v.kind, v.mechanism) == (kind, mech)


def test_conical_cyclic_examples():
    assert conical_cyclic(make_cyclic(8, 1)).kind is ConicalKind.METRICALLY_CONICAL
    v = conical_cyclic(make_cyclic(3, 2))
    assert (v.kind, v.mechanism) == (ConicalKind.NOT_CONICAL, Mechanism.THEOREM_1)
    v = conical_cyclic(make_cyclic(8, 5))
    assert (v.kind, v.mechanism) == (ConicalKind.NOT_CONICAL, Mechanism.THEOREM_1_5)
    assert (v.action.alpha, v.action.beta) == (2, 1)
    assert v.generator == InvariantMonomial(1, 3)


def test_compare_examples():
    v = compare_weights(W(51, 2, 1), W(5, 4, 3))
    assert v.kind is CompareKind.NOT_BI_LIPSCHITZ
    assert (v.certificate.side, v.certificate.lhs, v.certificate.rhs) == ("left", ratio(2), ratio(5, 3))
    v = compare_weights(W(2, 2, 1), W(1, 1, 1))
    assert (v.certificate.side, v.certificate.lhs, v.certificate.rhs) == ("left", ratio(2), ratio(1))
    v = compare_weights(W(5, 4, 3), W(51, 2, 1))
    assert v.certificate.side == "right"


@given(weight_lists)
def test_self_comparison_inconclusive(values):
    w = from_list(values)
    assert compare_weights(w, w).kind is CompareKind.INCONCLUSIVE


@given(weight_lists, weight_lists)
def test_mutual_exclusivity_and_symmetry(a, b):
    v, w = from_list(a), from_list(b)
    left = v[-2] * w[-1] > w[0] * v[-1]
    right = w[-2] * v[-1] > v[0] * w[-1]
    assert not (left and right)
    assert compare_weights(v, w).kind is compare_weights(w, v).kind


@given(weight_lists, weight_lists, st.integers(1, 30), st.integers(1, 30))
def test_scaling_invariance(a, b, c, d):
    v, w = from_list(a), from_list(b)
    assert compare_weights(v.scaled(c), w.scaled(d)) == compare_weights(v, w)
    assert conical_from_weights(v.scaled(c)).kind is conical_from_weights(v).kind


@given(weight_lists, weight_lists)
def test_compare_certificates_verify(a, b):
    v, w = from_list(a), from_list(b)
    assert verify_compare_certificate(v, w, compare_weights(v, w))


@given(weight_lists)
def test_unknown_characterization(values):
    w = from_list(values)
    unknown = conical_from_weights(w).kind is ConicalKind.UNKNOWN
    assert unknown == (w[0] != w[-1] and w[-2] == w[-1])


def test_kleinian_sweep():
    assert conical_from_weights(normalize(W(2, 2, 2))).kind is ConicalKind.METRICALLY_CONICAL
    for k in range(2, 30):
        assert conical_from_weights(W(k + 1, k + 1, 2)).kind is ConicalKind.NOT_CONICAL
    for k in range(5, 30):
        assert conical_from_weights(W(k - 1, k - 2, 2)).kind is ConicalKind.NOT_CONICAL
    for w in [(6, 4, 3), (9, 6, 4), (15, 10, 6)]:
        assert conical_from_weights(W(*w)).kind is ConicalKind.NOT_CONICAL
    assert conical_from_weights(W(3, 2, 2)).kind is ConicalKind.UNKNOWN


def test_cyclic_theorem1_agreement():
    for n in range(2, 80):
        for q in range(1, n):
            if math.gcd(q, n) != 1:
                continue
            cq = make_cyclic(n, q)
            v = conical_cyclic(cq)
            assert verify_conical_certificate(cq, v)
            if v.mechanism is Mechanism.THEOREM_1:
                assert conical_from_weights(diagonal_weights(cq)).kind is ConicalKind.NOT_CONICAL


def test_verifier_catches_forged_certificate():
    from wsing.classify import Certificate, CompareVerdict

    v, w = W(51, 2, 1), W(5, 4, 3)
    forged = CompareVerdict(CompareKind.NOT_BI_LIPSCHITZ, Certificate("left", ratio(2), ratio(1)))
    assert not verify_compare_certificate(v, w, forged)


def test_corollary_report():
    r = corollary_report()
    assert [tuple(w) for w in r.weights] == [(51, 2, 1), (5, 4, 3)]
    assert r.link is LinkComparison.EQUIVALENT_BUNDLE
    assert all(s.euler == -1 and s.fibers == () for s in r.seifert)
    assert r.seifert[0].genus == r.seifert[1].genus == r.computed_genus
    assert r.compare.kind is CompareKind.NOT_BI_LIPSCHITZ
    assert str(r.compare.certificate) == "2/1 > 5/3"
    assert r.paper_stated_genus == 26
