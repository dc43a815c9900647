import pytest

from dualform.core import DualModel, Morphism, SubObject, dualize, op
from dualform.errors import (
    ModelCapabilityError,
    NotConormalError,
    NotIsomorphismError,
    NotNormalError,
    ParentMismatchError,
)


def test_direct_image_of_parity(grp, Z4, parity):
    assert grp.direct_image(parity, grp.subobject(Z4, [0, 2])).elements == (0,)
    assert grp.direct_image(parity, grp.top(Z4)).elements == (0, 1)


def test_inverse_image_of_parity(grp, Z2, parity):
    assert grp.inverse_image(parity, grp.bottom(Z2)).elements == (0, 2)


def test_identity_images(grp, S3):
    one = grp.identity(S3)
    for A in grp.subobjects(S3):
        assert grp.direct_image(one, A) == A
        assert grp.inverse_image(one, A) == A


def test_parent_mismatch(grp, Z4, Z2, parity):
    with pytest.raises(ParentMismatchError):
        grp.direct_image(parity, grp.top(Z2))
    with pytest.raises(ParentMismatchError):
        grp.meet(grp.top(Z4), grp.top(Z2))


def test_factorize_identity(grp, S3):
    fac = grp.factorize(grp.identity(S3))
    one = grp.identity(S3)
    assert (fac.projection, fac.iso, fac.embedding) == (one, one, one)


def test_factorize_parity(grp, Z4, Z2, parity):
    fac = grp.factorize(parity)
    assert fac.projection == grp.projection(grp.subobject(Z4, [0, 2]))
    assert grp.order(fac.iso.dom) == 2 and grp.is_isomorphism(fac.iso)
    assert fac.embedding == grp.identity(Z2)
    assert grp.compose_all(fac.embedding, fac.iso, fac.projection) == parity


def test_factorize_inclusion(grp, Z4, Z2):
    f = grp.morphism(Z2, Z4, [0, 2])
    fac = grp.factorize(f)
    assert fac.projection == grp.identity(Z2)
    assert fac.embedding == grp.embedding(grp.subobject(Z4, [0, 2]))
    assert grp.compose_all(fac.embedding, fac.iso, fac.projection) == f


def test_projection_conventions(grp, Z4):
    p = grp.projection(grp.subobject(Z4, [0, 2]))
    assert p.data == (0, 1, 0, 1)
    assert grp.projection(grp.bottom(Z4)) == grp.identity(Z4)
    assert grp.embedding(grp.top(Z4)) == grp.identity(Z4)


def test_embedding_needs_conormal(ring, Z6r):
    with pytest.raises(NotConormalError) as info:
        ring.embedding(ring.subobject(Z6r, [0, 2, 4]))
    assert info.value.code == "not-conormal"


def test_projection_needs_normal(grp, S3):
    with pytest.raises(NotNormalError):
        grp.projection(grp.subobject(S3, [0, 1]))


def test_invert(grp, Z4, parity):
    a = grp.morphism(Z4, Z4, [0, 3, 2, 1])
    assert grp.invert(a) == a
    one = grp.identity(Z4)
    assert grp.invert(one) == one
    with pytest.raises(NotIsomorphismError):
        grp.invert(parity)


def test_op_is_an_involution(parity):
    assert op(op(parity)) == parity
    assert op(parity).dom == parity.cod and op(parity).cod == parity.dom
    assert str(op(parity)) == "op map [0 1 0 1]"


def test_subobject_formatting(grp, S3):
    S = grp.subobject(S3, [5, 0, 4])
    assert str(S) == "{0,4,5}" and len(S) == 3 and S.elements == (0, 4, 5)


def test_dual_swaps_everything(grp, Z4, Z2, parity):
    d = dualize(grp)
    f = op(parity)
    E = grp.subobject(Z4, [0, 2])
    assert d.top(Z4) == grp.bottom(Z4) and d.bottom(Z4) == grp.top(Z4)
    assert d.leq(grp.top(Z4), E) and not d.leq(E, grp.top(Z4))
    assert d.meet(E, grp.bottom(Z4)) == grp.join(E, grp.bottom(Z4))
    assert d.direct_image(f, grp.bottom(Z2)) == grp.inverse_image(parity, grp.bottom(Z2))
    assert d.kernel(f) == grp.image(parity) and d.image(f) == grp.kernel(parity)
    assert d.embedding(E) == op(grp.projection(E))
    assert d.is_embedding(f) == grp.is_projection(parity)


def test_dual_factorization_composes(grp, parity):
    d = DualModel(grp)
    f = op(parity)
    fac = d.factorize(f)
    assert d.compose_all(fac.embedding, fac.iso, fac.projection) == f


def test_double_dual_reads_like_the_base(grp, parity, Z4):
    dd = DualModel(DualModel(grp))
    E = grp.subobject(Z4, [0, 2])
    assert dd.projection(E) == grp.projection(E)
    assert dd.direct_image(parity, E) == grp.direct_image(parity, E)
    assert dd.morphisms(Z4, Z4) == grp.morphisms(Z4, Z4)


def test_morphism_is_hashable_value(Z4, Z2):
    assert Morphism(Z4, Z2, (0, 1, 0, 1)) == Morphism(Z4, Z2, (0, 1, 0, 1))
    assert len({Morphism(Z4, Z2, (0, 1, 0, 1)), Morphism(Z4, Z2, (0, 1, 0, 1))}) == 1


def test_subobject_equality_includes_parent(Z4, Z2):
    assert SubObject(Z4, 1) != SubObject(Z2, 1)


def test_capability_error_is_reported(grp, S3):
    from dualform.axioms import WithheldProjectionModel

    A3 = grp.subobject(S3, [0, 4, 5])
    faulty = WithheldProjectionModel([A3])
    sign = faulty.morphisms(S3, S3)[1]
    assert faulty.kernel(sign) == A3
    with pytest.raises(ModelCapabilityError):
        faulty.factorize(sign)
