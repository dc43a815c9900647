"""The model contract shared by every form model, plus the dual model.

A model supplies, for each object, a bounded lattice of subobjects and, for
each morphism, a direct/inverse image pair.  Canonical embeddings and
projections are partial: they exist exactly for conormal and normal
subobjects respectively, and asking for one elsewhere raises.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Hashable, Iterable

from .errors import (
    FactorizationError,
    InvalidMorphismError,
    ModelCapabilityError,
    NotConormalError,
    NotIsomorphismError,
    NotNormalError,
    ParentMismatchError,
    PartialityError,
)


@dataclass(frozen=True, slots=True)
class SubObject:
    """A subobject of ``parent``; ``mask`` has bit i set iff element i belongs."""

    parent: Hashable
    mask: int

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return format_elements(self.elements)


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def format_elements(elements: Iterable[int]) -> str:
    return "{" + ",".join(str(e) for e in elements) + "}"


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


@dataclass(frozen=True, slots=True)
class Op:
    """Payload of a morphism of a dual model: the reversed base morphism."""

    inner: "Morphism"


@dataclass(frozen=True, slots=True)
class Morphism:
    dom: Hashable
    cod: Hashable
    data: Any

    def __str__(self) -> str:
        return describe_morphism(self)


def op(f: Morphism) -> Morphism:
    """Reverse a morphism; ``op(op(f)) == f`` holds exactly."""
    if isinstance(f.data, Op):
        return f.data.inner
    return Morphism(f.cod, f.dom, Op(f))


def describe_morphism(f: Morphism) -> str:
    if isinstance(f.data, Op):
        return "op " + describe_morphism(f.data.inner)
    if isinstance(f.data, tuple):
        return "map [" + " ".join(str(x) for x in f.data) + "]"
    return repr(f.data)


def object_name(X: Any) -> str:
    return getattr(X, "name", None) or repr(X)


@dataclass(frozen=True)
class Factorization:
    """``f = embedding . iso . projection`` with the canonical outer parts."""

    projection: Morphism
    iso: Morphism
    embedding: Morphism


class FormModel(ABC):
    """Abstract model of the axioms.

    Subclasses implement the underscored hooks; the public methods validate
    arguments, enforce partiality of the canonical morphisms and apply the
    convention that the embedding of the top subobject and the projection of
    the bottom one are identities.
    """

    element_level = False
    name = "model"

    # -- hooks -----------------------------------------------------------

    @abstractmethod
    def subobjects(self, X) -> list[SubObject]: ...

    @abstractmethod
    def top(self, X) -> SubObject: ...

    @abstractmethod
    def bottom(self, X) -> SubObject: ...

    @abstractmethod
    def subobject(self, X, elements: Iterable[int]) -> SubObject: ...

    @abstractmethod
    def identity(self, X) -> Morphism: ...

    @abstractmethod
    def morphisms(self, X, Y) -> list[Morphism]: ...

    @abstractmethod
    def _leq(self, A: SubObject, B: SubObject) -> bool: ...

    @abstractmethod
    def _meet(self, A: SubObject, B: SubObject) -> SubObject: ...

    @abstractmethod
    def _join(self, A: SubObject, B: SubObject) -> SubObject: ...

    @abstractmethod
    def _direct_image(self, f: Morphism, A: SubObject) -> SubObject: ...

    @abstractmethod
    def _inverse_image(self, f: Morphism, B: SubObject) -> SubObject: ...

    @abstractmethod
    def _compose(self, g: Morphism, f: Morphism) -> Morphism: ...

    @abstractmethod
    def _is_normal(self, S: SubObject) -> bool: ...

    @abstractmethod
    def _is_conormal(self, S: SubObject) -> bool: ...

    @abstractmethod
    def _embedding(self, S: SubObject) -> Morphism: ...

    @abstractmethod
    def _projection(self, S: SubObject) -> Morphism: ...

    @abstractmethod
    def _lift(self, m: Morphism, f: Morphism) -> Morphism: ...

    @abstractmethod
    def _descend(self, p: Morphism, g: Morphism) -> Morphism: ...

    @abstractmethod
    def _invert(self, f: Morphism) -> Morphism: ...

    # -- lattice ---------------------------------------------------------

    @staticmethod
    def _same_parent(A: SubObject, B: SubObject) -> None:
        if A.parent != B.parent:
            raise ParentMismatchError(
                f"{A} of {object_name(A.parent)} and {B} of {object_name(B.parent)}"
            )

    def leq(self, A: SubObject, B: SubObject) -> bool:
        self._same_parent(A, B)
        return self._leq(A, B)

    def meet(self, A: SubObject, B: SubObject) -> SubObject:
        self._same_parent(A, B)
        return self._meet(A, B)

    def join(self, A: SubObject, B: SubObject) -> SubObject:
        self._same_parent(A, B)
        return self._join(A, B)

    # -- images ----------------------------------------------------------

    def direct_image(self, f: Morphism, A: SubObject) -> SubObject:
        if A.parent != f.dom:
            raise ParentMismatchError(
                f"{A} is a subobject of {object_name(A.parent)}, "
                f"not of the domain {object_name(f.dom)}"
            )
        return self._direct_image(f, A)

    def inverse_image(self, f: Morphism, B: SubObject) -> SubObject:
        if B.parent != f.cod:
            raise ParentMismatchError(
                f"{B} is a subobject of {object_name(B.parent)}, "
                f"not of the codomain {object_name(f.cod)}"
            )
        return self._inverse_image(f, B)

    def kernel(self, f: Morphism) -> SubObject:
        return self._inverse_image(f, self.bottom(f.cod))

    def image(self, f: Morphism) -> SubObject:
        return self._direct_image(f, self.top(f.dom))

    def is_embedding(self, f: Morphism) -> bool:
        return self.kernel(f) == self.bottom(f.dom)

    def is_projection(self, f: Morphism) -> bool:
        return self.image(f) == self.top(f.cod)

    def is_isomorphism(self, f: Morphism) -> bool:
        return self.is_embedding(f) and self.is_projection(f)

    # -- composition -----------------------------------------------------

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """``g . f`` (apply ``f`` first)."""
        if f.cod != g.dom:
            raise InvalidMorphismError(
                f"cannot compose: codomain {object_name(f.cod)} "
                f"differs from domain {object_name(g.dom)}"
            )
        return self._compose(g, f)

    def compose_all(self, *fs: Morphism) -> Morphism:
        """Compose right to left: ``compose_all(h, g, f) == h . g . f``."""
        result = fs[-1]
        for g in reversed(fs[:-1]):
            result = self.compose(g, result)
        return result

    # -- normality and canonical morphisms --------------------------------

    def is_normal(self, S: SubObject) -> bool:
        return self._is_normal(S)

    def is_conormal(self, S: SubObject) -> bool:
        return self._is_conormal(S)

    def embedding(self, S: SubObject) -> Morphism:
        """The canonical embedding with image ``S``; identity when ``S`` is top."""
        if not self._is_conormal(S):
            raise NotConormalError(f"{S} of {object_name(S.parent)} is not conormal")
        if S == self.top(S.parent):
            return self.identity(S.parent)
        return self._embedding(S)

    def projection(self, S: SubObject) -> Morphism:
        """The canonical projection with kernel ``S``; identity when ``S`` is bottom."""
        if not self._is_normal(S):
            raise NotNormalError(f"{S} of {object_name(S.parent)} is not normal")
        if S == self.bottom(S.parent):
            return self.identity(S.parent)
        return self._projection(S)

    def lift(self, m: Morphism, f: Morphism) -> Morphism:
        """The unique ``u`` with ``m . u == f`` for an embedding ``m``."""
        if m.cod != f.cod:
            raise ParentMismatchError("lift: codomains differ")
        if not self._leq(self.image(f), self.image(m)):
            raise FactorizationError(
                f"image {self.image(f)} is not contained in {self.image(m)}"
            )
        return self._lift(m, f)

    def descend(self, p: Morphism, g: Morphism) -> Morphism:
        """The unique ``v`` with ``v . p == g`` for a projection ``p``."""
        if p.dom != g.dom:
            raise ParentMismatchError("descend: domains differ")
        if not self._leq(self.kernel(p), self.kernel(g)):
            raise FactorizationError(
                f"kernel {self.kernel(p)} is not contained in {self.kernel(g)}"
            )
        return self._descend(p, g)

    def invert(self, f: Morphism) -> Morphism:
        if not self.is_isomorphism(f):
            raise NotIsomorphismError(
                f"kernel {self.kernel(f)}, image {self.image(f)}"
            )
        return self._invert(f)

    def factorize(self, f: Morphism) -> Factorization:
        """Canonical factorization through the kernel projection and image embedding."""
        try:
            e = self.projection(self.kernel(f))
            m = self.embedding(self.image(f))
        except PartialityError as exc:
            raise ModelCapabilityError(f"cannot factorize: {exc}") from exc
        u = self.lift(m, f)
        h = self.descend(e, u)
        return Factorization(e, h, m)

    def describe(self, X) -> str:
        return object_name(X)

    def order(self, X) -> int | None:
        """Number of elements, for element-level models."""
        return None


class DualModel(FormModel):
    """The dual reading of a model.

    Objects and subobjects are shared with the base; morphisms are reversed
    (see :func:`op`), every subobject order is inverted, direct and inverse
    images swap, and so do normal/conormal and embedding/projection.
    """

    element_level = False

    def __init__(self, base: FormModel):
        self.base = base
        self.name = f"dual({base.name})"

    def subobjects(self, X):
        return self.base.subobjects(X)

    def top(self, X):
        return self.base.bottom(X)

    def bottom(self, X):
        return self.base.top(X)

    def subobject(self, X, elements):
        return self.base.subobject(X, elements)

    def identity(self, X):
        return op(self.base.identity(X))

    def morphisms(self, X, Y):
        return [op(f) for f in self.base.morphisms(Y, X)]

    def _leq(self, A, B):
        return self.base.leq(B, A)

    def _meet(self, A, B):
        return self.base.join(A, B)

    def _join(self, A, B):
        return self.base.meet(A, B)

    def _direct_image(self, f, A):
        return self.base.inverse_image(op(f), A)

    def _inverse_image(self, f, B):
        return self.base.direct_image(op(f), B)

    def _compose(self, g, f):
        return op(self.base.compose(op(f), op(g)))

    def _is_normal(self, S):
        return self.base.is_conormal(S)

    def _is_conormal(self, S):
        return self.base.is_normal(S)

    def _embedding(self, S):
        return op(self.base.projection(S))

    def _projection(self, S):
        return op(self.base.embedding(S))

    def _lift(self, m, f):
        return op(self.base.descend(op(m), op(f)))

    def _descend(self, p, g):
        return op(self.base.lift(op(p), op(g)))

    def _invert(self, f):
        return op(self.base.invert(op(f)))

    def describe(self, X):
        return self.base.describe(X)


def dualize(model: FormModel) -> FormModel:
    return DualModel(model)
