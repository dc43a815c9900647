import pytest

from dualform.axioms import (
    AXIOMS,
    Scope,
    WithheldProjectionModel,
    check_axioms,
    check_observations,
    close_scope,
    duality_selftest,
    involution_violations,
    ring_standard,
    standard_model,
)
from dualform.catalog import group_by_name
from dualform.concrete import GroupModel, RelabeledGroupModel
from dualform.core import DualModel
from dualform.rings import RingModel


@pytest.fixture(scope="module")
def small():
    return Scope([group_by_name(n) for n in ("Z1", "Z2", "Z4", "S3")], name="small")


def test_standard_model_picks_by_object():
    assert isinstance(standard_model(ring_standard().objects), RingModel)
    assert isinstance(standard_model([group_by_name("Z2")]), GroupModel)


def test_group_model_satisfies_every_axiom(grp, small):
    report = check_axioms(grp, small)
    assert report.passed(), report.lines()
    assert list(report.violations) == list(AXIOMS)
    assert all(report.counts[a] > 0 for a in AXIOMS)
    assert report.lines()[0].startswith("axiom 1.1: ok (")


def test_ring_model_satisfies_every_axiom(ring):
    report = check_axioms(ring, ring_standard())
    assert report.passed(), report.lines()


def test_closure_adds_quotients_and_carriers(grp, small):
    closed = close_scope(grp, small)
    assert closed.base == small.objects
    assert len(closed.objects) > len(small.objects)
    assert not closed.missing


def test_withheld_projection_is_reported(S3, small):
    A3 = GroupModel().subobject(S3, [0, 4, 5])
    model = WithheldProjectionModel([A3])
    report = check_axioms(model, small)
    assert not report.passed("3")
    assert any(w.startswith("(S3, {0,4,5}): projection missing:") for w in report.violations["3"])
    assert report.passed("1.1") and report.passed("1.2")


def test_withheld_projection_in_the_dual(S3, small):
    A3 = GroupModel().subobject(S3, [0, 4, 5])
    duality = duality_selftest(WithheldProjectionModel([A3]), small)
    assert duality.matches
    assert not duality.dual.passed("3")
    assert any("embedding missing" in w for w in duality.dual.violations["3"])


def test_duality_verdicts_match(grp, small):
    duality = duality_selftest(grp, small)
    assert duality.matches and duality.primal.passed() and duality.dual.passed()


def test_double_dual_answers_identically(grp, ring, small):
    assert involution_violations(grp, small) == []
    assert involution_violations(ring, ring_standard()) == []


def test_relabeled_model_also_satisfies_the_axioms(small):
    assert check_axioms(RelabeledGroupModel(), small).passed()


@pytest.mark.parametrize("model_factory", [GroupModel, lambda: DualModel(GroupModel())])
def test_observations(model_factory, small):
    model = model_factory()
    scope = small if not isinstance(model, DualModel) else small.dual()
    obs = check_observations(model, scope)
    assert "AF" in obs and "kernels" in obs
    assert {k: v for k, v in obs.items() if v} == {}


def test_report_is_deterministic(grp, small):
    first = check_axioms(grp, small, which=("2", "4"))
    second = check_axioms(grp, small, which=("4", "2"))
    assert first == second
    assert list(first.violations) == ["2", "4"]
