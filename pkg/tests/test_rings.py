import pytest

from dualform.errors import InvalidRingError, NotAdditiveSubgroupError, NotIdealError
from dualform.rings import (
    RingTable,
    classify_subobject,
    quotient_ring,
    ring_hom_maps,
    zero_ring,
    zmod,
)
from dualform.core import SubObject, mask_of


def test_standard_rings_validate(Z6r, V4r):
    RingTable("Z6", Z6r.add.table, Z6r.mul, 1)
    RingTable("V", V4r.add.table, V4r.mul, V4r.one)
    assert V4r.one == 3


def test_broken_distributivity():
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[(a * b) % 3 for b in range(3)] for a in range(3)]
    mul[2][2] = 2
    with pytest.raises(InvalidRingError) as info:
        RingTable("bad", add, mul, 1)
    assert info.value.code == "invalid-ring"


def test_non_identity_rejected():
    with pytest.raises(InvalidRingError):
        RingTable("bad", zmod(4).add.table, zmod(4).mul, 2)


@pytest.mark.parametrize("elements, expected", [
    ([0, 2, 4], (True, False)),
    ([0, 3], (True, False)),
    ([0], (True, False)),
    ([0, 1, 2, 3, 4, 5], (True, True)),
])
def test_classify_z6(ring, Z6r, elements, expected):
    assert classify_subobject(Z6r, ring.subobject(Z6r, elements)) == expected


def test_classify_diagonal(ring, V4r):
    # (1,1) is element 3; the diagonal is {(0,0),(1,1)}
    assert classify_subobject(V4r, ring.subobject(V4r, [0, 3])) == (False, True)


def test_not_an_additive_subgroup(ring, Z6r):
    with pytest.raises(NotAdditiveSubgroupError) as info:
        classify_subobject(Z6r, SubObject(Z6r, mask_of([0, 1])))
    assert info.value.code == "not-an-additive-subgroup"
    with pytest.raises(NotAdditiveSubgroupError):
        ring.subobject(Z6r, [0, 1])


def test_quotient_rings(ring, Z6r):
    p = quotient_ring(Z6r, ring.subobject(Z6r, [0, 3]))
    assert ring.order(p.cod) == 3 and p.data == (0, 1, 2, 0, 1, 2)
    assert ring.order(quotient_ring(Z6r, ring.subobject(Z6r, [0, 2, 4])).cod) == 2
    assert quotient_ring(Z6r, ring.bottom(Z6r)) == ring.identity(Z6r)


def test_quotient_needs_ideal(ring, V4r):
    with pytest.raises(NotIdealError):
        quotient_ring(V4r, ring.subobject(V4r, [0, 3]))


def test_zero_subgroup_has_no_embedding(ring):
    for R in (zmod(2), zmod(4), zmod(6)):
        assert not ring.is_conormal(ring.bottom(R))
    Z0 = zero_ring()
    assert ring.is_conormal(ring.bottom(Z0))


def test_ring_homs(Z6r):
    assert ring_hom_maps(Z6r, zmod(2)) == ((0, 1, 0, 1, 0, 1),)
    assert ring_hom_maps(Z6r, zmod(3)) == ((0, 1, 2, 0, 1, 2),)
    assert ring_hom_maps(zmod(2), Z6r) == ()
    assert len(ring_hom_maps(Z6r, zero_ring())) == 1


def test_kernels_are_ideals_and_images_unital(ring, Z6r, V4r):
    for R in (Z6r, V4r):
        for S in (zmod(2), zmod(3), V4r, zero_ring()):
            for f in ring.morphisms(R, S):
                assert ring.is_normal(ring.kernel(f))
                assert ring.is_conormal(ring.image(f))


def test_every_ideal_is_a_kernel(ring, Z6r, V4r):
    for R in (Z6r, V4r, zmod(4)):
        for I in ring.subobjects(R):
            if ring.is_normal(I):
                assert ring.kernel(ring.projection(I)) == I


def test_classification_matches_kernels_and_images(ring):
    from dualform.axioms import ring_standard

    rings = ring_standard().objects
    # Z3 is needed as a target: {0,3} in Z6 is only the kernel of Z6 -> Z3
    targets = rings + [zmod(3)]
    for R in rings:
        kernels = {ring.kernel(f) for S in targets for f in ring.morphisms(R, S)}
        images = {ring.image(f) for S in rings for f in ring.morphisms(S, R)}
        for A in ring.subobjects(R):
            assert ring.is_normal(A) == (A in kernels), A
            assert ring.is_conormal(A) == (A in images), A
