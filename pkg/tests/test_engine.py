import random

import pytest

from dualform.catalog import groups_up_to
from dualform.concrete import RelabeledGroupModel
from dualform.core import DualModel
from dualform.engine import (
    BWD,
    FWD,
    Zigzag,
    build_pyramid,
    chase,
    check_pyramid,
    coquotient,
    identity_zigzag,
    induced_homomorphism,
    induces_homomorphism,
    is_collapsible,
    normality_relation,
    path_independence_violations,
    principal_zigzag,
    projection_diamond_violations,
    relation_oracle,
    subquotient,
    vertical_law_violations,
    vertical_paths,
    vertical_subquotient_violations,
)
from dualform.errors import (
    ModelCapabilityError,
    NormalityViolationError,
    NotInducibleError,
    ParentMismatchError,
    ZigzagError,
)


@pytest.fixture
def diamond_zigzag(grp, S3):
    A, B = grp.subobject(S3, [0, 4, 5]), grp.subobject(S3, [0, 1])
    iB, iJ = grp.embedding(B), grp.embedding(grp.join(A, B))
    return Zigzag.of(
        (grp.projection(grp.inverse_image(iB, grp.meet(A, B))), BWD),
        (iB, FWD),
        (iJ, BWD),
        (grp.projection(grp.inverse_image(iJ, A)), FWD),
    )


def test_zigzag_endpoints_must_agree(grp, parity, Z4):
    with pytest.raises(ZigzagError):
        Zigzag.of((parity, FWD), (parity, FWD))
    z = Zigzag.of((parity, FWD), (parity, BWD))
    assert z.nodes[0] == Z4 and z.nodes[-1] == Z4 and len(z) == 2


def test_chase_through_parity(grp, Z4, Z2, parity):
    z = Zigzag.of((parity, FWD), (grp.identity(Z2), BWD))
    trace = chase(grp, z, grp.subobject(Z4, [0, 2]), FWD)
    assert [str(S) for S in trace.subobjects] == ["{0,2}", "{0}", "{0}"]


def test_chase_there_and_back_adds_the_kernel(grp, S3):
    for N in grp.subobjects(S3):
        if not grp.is_normal(N):
            continue
        p = grp.projection(N)
        z = Zigzag.of((p, FWD))
        for T in grp.subobjects(S3):
            there = chase(grp, z, T, FWD).result
            assert chase(grp, z, there, BWD).result == grp.join(T, N)


def test_chase_checks_parent(grp, Z2, parity):
    with pytest.raises(ParentMismatchError):
        chase(grp, Zigzag.of((parity, FWD)), grp.top(Z2), FWD)


def test_identity_zigzag(grp, S3):
    z = identity_zigzag(grp, S3)
    assert induces_homomorphism(grp, z)
    assert induced_homomorphism(grp, z) == grp.identity(S3)
    for S in grp.subobjects(S3):
        assert chase(grp, z, S).subobjects == (S, S)


def test_parity_induces_itself(grp, parity):
    z = Zigzag.of((parity, FWD))
    assert induced_homomorphism(grp, z) == parity
    assert len(build_pyramid(grp, z).nodes) == 3


def test_parity_backward_does_not_induce(grp, parity):
    z = Zigzag.of((parity, BWD))
    assert not induces_homomorphism(grp, z)
    with pytest.raises(NotInducibleError) as info:
        induced_homomorphism(grp, z)
    assert info.value.message == "forward chase of 1 = {0,2}"


def test_diamond_zigzag(grp, diamond_zigzag):
    z = diamond_zigzag
    assert induces_homomorphism(grp, z)
    pyr = build_pyramid(grp, z)
    assert len(pyr.nodes) == 15
    assert check_pyramid(grp, pyr) == []
    h = induced_homomorphism(grp, z, pyr)
    assert grp.is_isomorphism(h) and grp.order(h.dom) == 2
    report = relation_oracle(grp, z)
    assert report.is_function and report.is_total
    assert report.relation.as_map() == h.data == (0, 1)


def test_diamond_pyramid_flank_keeps_top(grp, diamond_zigzag):
    pyr = build_pyramid(grp, diamond_zigzag)
    flank = tuple((0, q) for q in range(pyr.n + 1))
    from dualform.engine import chase_path

    for k in range(1, len(flank)):
        end = pyr.nodes[flank[k]]
        assert chase_path(grp, pyr, flank[:k + 1], grp.top(pyr.nodes[(0, 0)])) == grp.top(end)
    assert vertical_law_violations(grp, pyr) == []
    assert path_independence_violations(grp, pyr) == []
    assert vertical_subquotient_violations(grp, pyr) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pyramid_size(grp, S3, n):
    z = Zigzag.of(*[(grp.identity(S3), FWD if i % 2 else BWD) for i in range(n)])
    pyr = build_pyramid(grp, z)
    assert len(pyr.nodes) == (n + 1) * (n + 2) // 2
    assert len(principal_zigzag(pyr)) == 2 * n
    assert all(p[0] <= p[1] for p in pyr.nodes)


def test_oracle_examples(grp, parity):
    fwd = relation_oracle(grp, Zigzag.of((parity, FWD)))
    assert fwd.relation.pairs() == [(0, 0), (1, 1), (2, 0), (3, 1)]
    assert fwd.is_function and fwd.is_hom
    bwd = relation_oracle(grp, Zigzag.of((parity, BWD)))
    assert not bwd.is_function
    assert (0, 0) in bwd.relation.pairs() and (0, 2) in bwd.relation.pairs()


def test_oracle_needs_elements(grp, parity):
    with pytest.raises(ModelCapabilityError):
        from dualform.core import op

        relation_oracle(DualModel(grp), Zigzag.of((op(parity), FWD)))


def test_normality_relation(grp, S3):
    one, top = grp.bottom(S3), grp.top(S3)
    B = grp.subobject(S3, [0, 1])
    assert normality_relation(grp, one, B)
    assert not normality_relation(grp, B, top)
    assert normality_relation(grp, one, top)
    A3 = grp.subobject(S3, [0, 4, 5])
    assert normality_relation(grp, A3, top, "conormal_to")


def test_subquotients(grp, S3):
    top, one = grp.top(S3), grp.bottom(S3)
    A3 = grp.subobject(S3, [0, 4, 5])
    assert grp.order(subquotient(grp, top, A3)) == 2
    assert grp.order(subquotient(grp, A3, A3)) == 1
    B = grp.subobject(S3, [0, 1])
    AB = subquotient(grp, B, one)
    assert AB == grp.embedding(B).dom
    assert grp.order(coquotient(grp, A3, top)) == 2
    with pytest.raises(NormalityViolationError):
        subquotient(grp, top, B)


def test_subquotient_opposite_collapses_iff_trivial_chase(grp):
    for G in groups_up_to(8):
        for A in grp.subobjects(G):
            i = grp.embedding(A)
            for B in grp.subobjects(G):
                if not normality_relation(grp, B, A):
                    continue
                p = grp.projection(grp.inverse_image(i, B))
                z = Zigzag.of((p, BWD), (i, FWD))
                keeps_one = chase(grp, z, grp.bottom(p.cod), FWD).result == grp.bottom(G)
                assert is_collapsible(grp, z) == keeps_one


def test_projection_diamond_identity(grp, S3):
    normal = [N for N in grp.subobjects(S3) if grp.is_normal(N)]
    for N in normal:
        for R in normal:
            assert projection_diamond_violations(grp, N, R) == []


def test_vertical_paths_climb(grp, parity):
    pyr = build_pyramid(grp, Zigzag.of((parity, FWD), (parity, BWD)))
    for path in vertical_paths(pyr):
        for a, b in zip(path, path[1:]):
            assert b in pyr.upper_neighbours(a)


def _random_zigzag(rng, groups, model):
    X = rng.choice(groups)
    steps = []
    for _ in range(rng.randint(1, 4)):
        Y = rng.choice(groups)
        d = rng.choice((FWD, BWD))
        homs = model.morphisms(X, Y) if d == FWD else model.morphisms(Y, X)
        steps.append((rng.choice(homs), d))
        X = Y
    return Zigzag.of(*steps)


def test_induced_morphism_does_not_depend_on_canonical_choices(grp):
    relabeled = RelabeledGroupModel()
    rng = random.Random(11)
    groups = groups_up_to(8)
    inducing = 0
    for _ in range(400):
        z = _random_zigzag(rng, groups, grp)
        ours = induces_homomorphism(grp, z)
        assert induces_homomorphism(relabeled, z) == ours
        if ours:
            inducing += 1
            assert induced_homomorphism(relabeled, z) == induced_homomorphism(grp, z)
    assert inducing > 50


def test_ring_zigzags_against_the_additive_oracle(ring, Z6r, V4r):
    from dualform.rings import zmod

    Z2, Z3 = zmod(2), zmod(3)
    objects = [Z6r, Z2, Z3, V4r]
    rng = random.Random(5)
    seen = 0
    for _ in range(200):
        X = rng.choice(objects)
        steps = []
        for _ in range(rng.randint(1, 3)):
            Y = rng.choice(objects)
            d = rng.choice((FWD, BWD))
            homs = ring.morphisms(X, Y) if d == FWD else ring.morphisms(Y, X)
            if not homs:
                break
            steps.append((rng.choice(homs), d))
            X = Y
        if not steps:
            continue
        z = Zigzag.of(*steps)
        seen += 1
        oracle = relation_oracle(ring, z)
        induces = induces_homomorphism(ring, z)
        assert induces == (oracle.is_function and oracle.is_total)
        if induces:
            assert induced_homomorphism(ring, z).data == oracle.relation.as_map()
    assert seen > 50
