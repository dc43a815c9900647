from hypothesis import given, settings
from hypothesis import strategies as st

from dualform.catalog import groups_up_to
from dualform.concrete import GroupModel
from dualform.core import op
from dualform.engine import (
    BWD,
    FWD,
    Zigzag,
    chase,
    induced_homomorphism,
    induces_homomorphism,
    relation_oracle,
)
from dualform.script import parse_script

MODEL = GroupModel()
GROUPS = groups_up_to(8)


@st.composite
def homs(draw):
    X = draw(st.sampled_from(GROUPS))
    Y = draw(st.sampled_from(GROUPS))
    return draw(st.sampled_from(MODEL.morphisms(X, Y)))


@st.composite
def zigzags(draw):
    X = draw(st.sampled_from(GROUPS))
    steps = []
    for _ in range(draw(st.integers(1, 4))):
        Y = draw(st.sampled_from(GROUPS))
        d = draw(st.sampled_from((FWD, BWD)))
        options = MODEL.morphisms(X, Y) if d == FWD else MODEL.morphisms(Y, X)
        steps.append((draw(st.sampled_from(options)), d))
        X = Y
    return Zigzag.of(*steps)


@given(homs(), st.data())
def test_direct_and_inverse_image_are_adjoint(f, data):
    A = data.draw(st.sampled_from(MODEL.subobjects(f.dom)))
    B = data.draw(st.sampled_from(MODEL.subobjects(f.cod)))
    assert MODEL.leq(MODEL.direct_image(f, A), B) == MODEL.leq(A, MODEL.inverse_image(f, B))


@given(homs())
def test_op_is_an_involution(f):
    assert op(op(f)) == f
    assert op(f).dom == f.cod and op(f).cod == f.dom


@given(zigzags(), st.data())
def test_chase_is_monotone(z, data):
    subs = MODEL.subobjects(z.nodes[0])
    A = data.draw(st.sampled_from(subs))
    B = data.draw(st.sampled_from(subs))
    if MODEL.leq(A, B):
        assert MODEL.leq(chase(MODEL, z, A).result, chase(MODEL, z, B).result)


@settings(max_examples=150)
@given(zigzags())
def test_chase_criterion_matches_oracle(z):
    report = relation_oracle(MODEL, z)
    assert induces_homomorphism(MODEL, z) == (report.is_function and report.is_total)
    if report.is_function and report.is_total:
        assert induced_homomorphism(MODEL, z).data == report.relation.as_map()


@given(st.lists(st.integers(0, 7), max_size=8))
def test_literal_round_trip(elements):
    body = ",".join(str(x) for x in elements)
    script = parse_script(f"group G cyclic 8\nsub S of G = {{{body}}}\n")
    canonical = "{" + ",".join(str(x) for x in sorted(set(elements))) + "}"
    assert script.statements[1].args[2] == canonical
    assert parse_script(script.pretty()) == script
