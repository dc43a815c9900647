import pytest

from dualform.catalog import group_by_name, groups_up_to
from dualform.core import DualModel
from dualform.errors import HypothesisError, ParentMismatchError
from dualform.groups import make_group
from dualform.theorems import (
    butterfly,
    diamond_iso,
    double_quotient,
    image_theorem,
    lemma_join_normality,
    lemma_meet_normality,
    modular_counterexample,
    restricted_modular_law,
)


@pytest.fixture(scope="module")
def Z8():
    return make_group("cyclic", 8)


def test_meet_and_join_lemmas(grp, S3):
    one, top = grp.bottom(S3), grp.top(S3)
    A3 = grp.subobject(S3, [0, 4, 5])
    B = grp.subobject(S3, [0, 1])
    assert lemma_meet_normality(grp, A3, top, B)
    assert lemma_join_normality(grp, one, B, A3)
    with pytest.raises(HypothesisError):
        lemma_meet_normality(grp, B, top, A3)


def test_lemmas_hold_on_small_groups(grp):
    for G in groups_up_to(8):
        subs = grp.subobjects(G)
        for A in subs:
            for B in subs:
                for C in subs:
                    try:
                        assert lemma_meet_normality(grp, A, B, C)
                    except HypothesisError:
                        pass
                    try:
                        assert lemma_join_normality(grp, A, B, C)
                    except HypothesisError:
                        pass


def test_diamond_on_s3(grp, S3):
    A3 = grp.subobject(S3, [0, 4, 5])
    B = grp.subobject(S3, [0, 1])
    report = diamond_iso(grp, A3, B)
    assert report.passed, report.failures()
    (iso,) = report.isomorphisms.values()
    assert grp.order(iso.dom) == grp.order(iso.cod) == 2
    assert set(report.witnesses["B/(A^B) ~ (AvB)/A"]) >= {"engine", "inverse", "oracle", "cardinality"}


def test_diamond_needs_normality(grp, S3):
    with pytest.raises(HypothesisError):
        diamond_iso(grp, grp.subobject(S3, [0, 1]), grp.subobject(S3, [0, 2]))


def test_diamond_rejects_mixed_parents(grp, S3, Z4):
    with pytest.raises(ParentMismatchError):
        diamond_iso(grp, grp.top(S3), grp.top(Z4))


def test_double_quotient_on_z8(grp, Z8):
    N = grp.subobject(Z8, [0, 4])
    pN = grp.projection(N)
    S = grp.direct_image(pN, grp.subobject(Z8, [0, 2, 4, 6]))
    report = double_quotient(grp, N, S)
    assert report.passed, report.failures()
    assert report.trace[0] == "R = {0,2,4,6}"
    iso = report.isomorphisms["G/R ~ (G/N)/S"]
    assert grp.order(iso.dom) == 2


def test_double_quotient_on_s3(grp, S3):
    A3 = grp.subobject(S3, [0, 4, 5])
    pA = grp.projection(A3)
    for S in grp.subobjects(pA.cod):
        report = double_quotient(grp, A3, S)
        assert report.passed, report.failures()
    with pytest.raises(HypothesisError):
        double_quotient(grp, grp.subobject(S3, [0, 1]), grp.top(S3))
    with pytest.raises(ParentMismatchError):
        double_quotient(grp, A3, grp.top(S3))


def test_image_theorem_mod_four(grp, Z8, Z4):
    f = grp.morphism(Z8, Z4, [x % 4 for x in range(8)])
    report = image_theorem(grp, f, grp.subobject(Z8, [0, 4]), grp.subobject(Z8, [0, 2, 4, 6]))
    assert report.passed, report.failures()
    (iso,) = report.isomorphisms.values()
    assert grp.order(iso.dom) == 2


def test_image_theorem_sign(grp, S3, Z2):
    sign = grp.morphism(S3, Z2, [0, 1, 1, 1, 0, 0])
    A3 = grp.subobject(S3, [0, 4, 5])
    report = image_theorem(grp, sign, A3, grp.top(S3))
    assert report.passed
    assert report.trace[0] == "W <| X: True; fW <| fX: True"
    with pytest.raises(HypothesisError):
        image_theorem(grp, sign, grp.subobject(S3, [0, 1]), grp.top(S3))


def test_image_theorem_both_sides_fail_together(grp, S3):
    ident = grp.identity(S3)
    report = image_theorem(grp, ident, grp.subobject(S3, [0, 1]), grp.top(S3))
    assert report.passed and not report.isomorphisms


def test_butterfly_on_z8(grp, Z8):
    sub = lambda *xs: grp.subobject(Z8, xs)
    report = butterfly(grp, sub(0, 4), sub(0, 2, 4, 6), sub(0), sub(0, 4))
    assert report.passed, report.failures()
    assert "left wing ~ right wing" in report.isomorphisms


def test_butterfly_on_s4(grp):
    S4 = group_by_name("S4")
    subs = grp.subobjects(S4)
    normal = [N for N in subs if grp.is_normal(N)]
    V4 = next(N for N in normal if grp.order(grp.embedding(N).dom) == 4)
    A4 = next(N for N in normal if grp.order(grp.embedding(N).dom) == 12)
    report = butterfly(grp, V4, A4, grp.bottom(S4), V4)
    assert report.passed, report.failures()


def test_butterfly_needs_normal_pairs(grp, S3):
    with pytest.raises(HypothesisError):
        butterfly(grp, grp.subobject(S3, [0, 1]), grp.top(S3), grp.bottom(S3), grp.top(S3))


def test_restricted_modular_law(grp, S3):
    A3 = grp.subobject(S3, [0, 4, 5])
    B = grp.subobject(S3, [0, 1])
    report = restricted_modular_law(grp, grp.bottom(S3), A3, B)
    assert report.passed
    assert report.notes == ["branch: Y normal, Z conormal"]


def test_first_nonmodular_triple_is_in_d4(grp):
    found = modular_counterexample(grp, groups_up_to(8))
    assert found is not None and found.group.name == "D4"
    assert grp.leq(found.X, found.Z) and found.lhs != found.rhs
    with pytest.raises(HypothesisError):
        restricted_modular_law(grp, found.X, found.Y, found.Z)


def test_abelian_groups_are_modular(grp):
    abelian = [G for G in groups_up_to(12) if G.is_abelian()]
    assert modular_counterexample(grp, abelian) is None


def test_diamond_in_the_dual_model(grp, S3):
    dual = DualModel(grp)
    checked = 0
    subs = dual.subobjects(S3)
    for A in subs:
        for B in subs:
            try:
                report = diamond_iso(dual, A, B)
            except HypothesisError:
                continue
            checked += 1
            assert report.passed, report.failures()
            assert set(report.witnesses["B/(A^B) ~ (AvB)/A"]) == {"engine", "inverse"}
    assert checked > 0


def test_double_quotient_in_the_dual_model(grp, S3):
    dual = DualModel(grp)
    checked = 0
    for N in dual.subobjects(S3):
        if not dual.is_normal(N):
            continue
        for S in dual.subobjects(dual.projection(N).cod):
            report = double_quotient(dual, N, S)
            assert report.passed, report.failures()
            checked += 1
    assert checked > 0
