"""Element-level models: objects have finitely many elements and morphisms are maps.

:class:`ElementModel` implements the whole model contract on top of an
underlying group operation (the group itself, or the additive group of a
ring).  Subclasses decide which subobjects are normal or conormal and how
quotient and carrier objects are built.
"""

from __future__ import annotations

from abc import abstractmethod
from functools import lru_cache
from typing import Iterable, Sequence

from .core import FormModel, Morphism, SubObject, bits, object_name
from .errors import InvalidMorphismError, InvalidSubobjectError, ParentMismatchError
from .groups import (
    GroupTable,
    carrier_data,
    check_elements,
    hom_maps,
    is_hom_map,
    is_normal_mask,
    is_subgroup_mask,
    join_masks,
    quotient_data,
    subgroup_masks,
)


class ElementModel(FormModel):
    element_level = True

    def __init__(self):
        self._hom_cache: dict = {}

    # -- subclass hooks ----------------------------------------------------

    @abstractmethod
    def group_of(self, X) -> GroupTable:
        """The group whose subgroups are the subobjects of ``X``."""

    @abstractmethod
    def _carrier(self, X, mask: int) -> tuple[object, tuple[int, ...]]: ...

    @abstractmethod
    def _quotient(self, X, mask: int) -> tuple[object, tuple[int, ...]]: ...

    @abstractmethod
    def _hom_maps(self, X, Y) -> Sequence[tuple[int, ...]]: ...

    @abstractmethod
    def _is_hom_map(self, X, Y, data: Sequence[int]) -> bool: ...

    # -- objects and subobjects ------------------------------------------

    def order(self, X) -> int:
        return self.group_of(X).order

    def subobjects(self, X) -> list[SubObject]:
        return [SubObject(X, m) for m in subgroup_masks(self.group_of(X))]

    def top(self, X) -> SubObject:
        return SubObject(X, self.group_of(X).full_mask)

    def bottom(self, X) -> SubObject:
        return SubObject(X, 1)

    def subobject(self, X, elements: Iterable[int]) -> SubObject:
        G = self.group_of(X)
        mask = check_elements(G, elements)
        if not is_subgroup_mask(G, mask):
            raise InvalidSubobjectError(
                f"{{{','.join(str(e) for e in bits(mask))}}} is not a subgroup of {object_name(X)}"
            )
        return SubObject(X, mask)

    def from_mask(self, X, mask: int) -> SubObject:
        if not is_subgroup_mask(self.group_of(X), mask):
            raise InvalidSubobjectError(f"mask {mask:#x} is not a subgroup of {object_name(X)}")
        return SubObject(X, mask)

    # -- morphisms ---------------------------------------------------------

    def identity(self, X) -> Morphism:
        return Morphism(X, X, tuple(range(self.order(X))))

    def morphisms(self, X, Y) -> list[Morphism]:
        key = (X, Y)
        homs = self._hom_cache.get(key)
        if homs is None:
            homs = [Morphism(X, Y, m) for m in self._hom_maps(X, Y)]
            self._hom_cache[key] = homs
        return list(homs)

    def morphism(self, X, Y, data: Sequence[int]) -> Morphism:
        """Validate a map and wrap it as a morphism."""
        data = tuple(int(x) for x in data)
        if len(data) != self.order(X):
            raise InvalidMorphismError(
                f"map has {len(data)} entries but {object_name(X)} has {self.order(X)} elements"
            )
        if not self._is_hom_map(X, Y, data):
            raise InvalidMorphismError(
                f"map [{' '.join(map(str, data))}] is not a homomorphism "
                f"{object_name(X)} -> {object_name(Y)}"
            )
        return Morphism(X, Y, data)

    # -- lattice -------------------------------------------------------------

    def _leq(self, A, B):
        return A.mask & ~B.mask == 0

    def _meet(self, A, B):
        return SubObject(A.parent, A.mask & B.mask)

    def _join(self, A, B):
        return SubObject(A.parent, join_masks(self.group_of(A.parent), A.mask, B.mask))

    # -- images --------------------------------------------------------------

    def _direct_image(self, f, A):
        d = f.data
        m = 0
        for a in bits(A.mask):
            m |= 1 << d[a]
        return SubObject(f.cod, m)

    def _inverse_image(self, f, B):
        b = B.mask
        m = 0
        for a, y in enumerate(f.data):
            if (b >> y) & 1:
                m |= 1 << a
        return SubObject(f.dom, m)

    def _compose(self, g, f):
        gd = g.data
        return Morphism(f.dom, g.cod, tuple(gd[x] for x in f.data))

    # -- canonical morphisms ---------------------------------------------------

    def _embedding(self, S):
        obj, members = self._carrier(S.parent, S.mask)
        return Morphism(obj, S.parent, members)

    def _projection(self, S):
        obj, proj = self._quotient(S.parent, S.mask)
        return Morphism(S.parent, obj, proj)

    def _lift(self, m, f):
        back = {y: i for i, y in enumerate(m.data)}
        return Morphism(f.dom, m.dom, tuple(back[y] for y in f.data))

    def _descend(self, p, g):
        v = [0] * self.order(p.cod)
        for x, q in enumerate(p.data):
            v[q] = g.data[x]
        return Morphism(p.cod, g.cod, tuple(v))

    def _invert(self, f):
        v = [0] * len(f.data)
        for x, y in enumerate(f.data):
            v[y] = x
        return Morphism(f.cod, f.dom, tuple(v))

    # -- element-level helpers ---------------------------------------------------

    def preimages(self, f: Morphism) -> list[int]:
        """For each codomain element, the mask of its preimages."""
        out = [0] * self.order(f.cod)
        for x, y in enumerate(f.data):
            out[y] |= 1 << x
        return out


class GroupModel(ElementModel):
    """Finite groups; every subgroup is conormal and normal means conjugation-closed."""

    name = "Grp"

    def group_of(self, X) -> GroupTable:
        if not isinstance(X, GroupTable):
            raise ParentMismatchError(f"{object_name(X)} is not a group")
        return X

    def _is_normal(self, S):
        return is_normal_mask(S.parent, S.mask)

    def _is_conormal(self, S):
        return True

    def _carrier(self, X, mask):
        return carrier_data(X, mask)

    def _quotient(self, X, mask):
        return quotient_data(X, mask)

    def _hom_maps(self, X, Y):
        return hom_maps(self.group_of(X), self.group_of(Y))

    def _is_hom_map(self, X, Y, data):
        return is_hom_map(self.group_of(X), self.group_of(Y), data)


def _relabel(G: GroupTable, name: str, perm: Sequence[int]) -> GroupTable:
    """Copy of ``G`` in which element ``x`` is renamed ``perm[x]``."""
    inv = [0] * G.order
    for x, y in enumerate(perm):
        inv[y] = x
    rows = [[perm[G.table[inv[a]][inv[b]]] for b in range(G.order)] for a in range(G.order)]
    return GroupTable(name, rows, validate=False)


def _reversal(n: int) -> list[int]:
    # identity stays 0, every other element is numbered from the end
    return [0] + [n - x for x in range(1, n)]


@lru_cache(maxsize=None)
def _relabeled_quotient(X: GroupTable, mask: int):
    Q, proj = quotient_data(X, mask)
    perm = _reversal(Q.order)
    return _relabel(Q, Q.name + "~", perm), tuple(perm[q] for q in proj)


@lru_cache(maxsize=None)
def _relabeled_carrier(X: GroupTable, mask: int):
    C, members = carrier_data(X, mask)
    perm = _reversal(C.order)
    inv = [0] * C.order
    for x, y in enumerate(perm):
        inv[y] = x
    return _relabel(C, C.name + "~", perm), tuple(members[inv[y]] for y in range(C.order))


class RelabeledGroupModel(GroupModel):
    """The group model with a different, equally valid numbering of quotients and carriers.

    Pyramids built here pass through objects isomorphic to, but not equal to,
    the canonical ones, so induced morphisms between catalog groups must
    still agree with :class:`GroupModel`.
    """

    name = "Grp-relabeled"

    def _carrier(self, X, mask):
        return _relabeled_carrier(X, mask)

    def _quotient(self, X, mask):
        return _relabeled_quotient(X, mask)
