"""Finite rings with identity.

Subobjects are additive subgroups.  A subobject is normal when it is a
two-sided ideal and conormal when it is a subring containing the identity,
so canonical embeddings and projections are genuinely partial here: the
zero subgroup of a nonzero ring has no embedding.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .concrete import ElementModel
from .core import SubObject, bits, format_elements, object_name
from .errors import (
    InvalidRingError,
    InvalidTableError,
    NotAdditiveSubgroupError,
    NotIdealError,
    ParentMismatchError,
)
from .groups import (
    GroupTable,
    check_elements,
    hom_maps,
    is_subgroup_mask,
    quotient_data,
    subgroup_masks,
)


class RingTable:
    """A validated finite ring with identity ``one``; ``add.table`` is the addition."""

    __slots__ = ("name", "add", "mul", "one", "order", "_hash")

    def __init__(self, name: str, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]],
                 one: int, *, validate: bool = True):
        try:
            group = GroupTable(name, add, validate=validate)
        except InvalidTableError as exc:
            raise InvalidRingError(f"addition is not a group: {exc.message}") from exc
        rows = tuple(tuple(int(x) for x in row) for row in mul)
        if validate:
            validate_ring(group, rows, one)
        self.name = name
        self.add = group
        self.mul = rows
        self.one = int(one)
        self.order = group.order
        self._hash = hash((name, group.table, rows, self.one))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, RingTable):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.name == other.name
            and self.one == other.one
            and self.add.table == other.add.table
            and self.mul == other.mul
        )

    def __repr__(self) -> str:
        return f"RingTable({self.name!r}, order={self.order})"


def validate_ring(group: GroupTable, mul: tuple[tuple[int, ...], ...], one: int) -> None:
    n = group.order
    if not group.is_abelian():
        raise InvalidRingError("addition is not commutative")
    if len(mul) != n or any(len(row) != n for row in mul):
        raise InvalidRingError(f"multiplication table is not {n}x{n}")
    if any(not 0 <= x < n for row in mul for x in row):
        raise InvalidRingError("multiplication entry out of range")
    if not 0 <= one < n:
        raise InvalidRingError(f"identity {one} out of range")
    add = group.table
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise InvalidRingError(f"associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise InvalidRingError(f"left distributivity fails at {a}*({b}+{c})")
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    raise InvalidRingError(f"right distributivity fails at ({a}+{b})*{c}")
    for a in range(n):
        if mul[one][a] != a or mul[a][one] != a:
            raise InvalidRingError(f"{one} is not a two-sided identity for {a}")


def ring_from_tables(add, mul, one: int, name: str = "R") -> RingTable:
    return RingTable(name, add, mul, one)


def zmod(k: int, name: str | None = None) -> RingTable:
    if k < 1:
        raise InvalidRingError("modulus must be positive")
    add = [[(a + b) % k for b in range(k)] for a in range(k)]
    mul = [[(a * b) % k for b in range(k)] for a in range(k)]
    return RingTable(name or f"Z{k}", add, mul, 1 % k, validate=False)


def zero_ring(name: str = "0") -> RingTable:
    return RingTable(name, [[0]], [[0]], 0, validate=False)


def ring_product(R: RingTable, S: RingTable, name: str | None = None) -> RingTable:
    """Element ``r*|S| + s`` stands for the pair ``(r, s)``."""
    m = S.order
    n = R.order * m
    add = [[R.add.table[a // m][b // m] * m + S.add.table[a % m][b % m] for b in range(n)]
           for a in range(n)]
    mul = [[R.mul[a // m][b // m] * m + S.mul[a % m][b % m] for b in range(n)] for a in range(n)]
    return RingTable(name or f"{R.name}x{S.name}", add, mul, R.one * m + S.one, validate=False)


# -- subobject classification -------------------------------------------------


@lru_cache(maxsize=None)
def is_ideal_mask(R: RingTable, mask: int) -> bool:
    members = list(bits(mask))
    for r in range(R.order):
        row = R.mul[r]
        for s in members:
            if not (mask >> row[s]) & 1 or not (mask >> R.mul[s][r]) & 1:
                return False
    return True


@lru_cache(maxsize=None)
def is_unital_subring_mask(R: RingTable, mask: int) -> bool:
    if not (mask >> R.one) & 1:
        return False
    members = list(bits(mask))
    return all((mask >> R.mul[a][b]) & 1 for a in members for b in members)


def classify_subobject(R: RingTable, S: SubObject) -> tuple[bool, bool]:
    """``(normal, conormal)``: whether ``S`` is an ideal and whether it is a unital subring."""
    if S.parent != R:
        raise ParentMismatchError(f"{S} is not a subobject of {R.name}")
    if not is_subgroup_mask(R.add, S.mask):
        raise NotAdditiveSubgroupError(f"{S} is not an additive subgroup of {R.name}")
    return is_ideal_mask(R, S.mask), is_unital_subring_mask(R, S.mask)


@lru_cache(maxsize=None)
def quotient_ring_data(R: RingTable, mask: int) -> tuple[RingTable, tuple[int, ...]]:
    Q, proj = quotient_data(R.add, mask)
    reps = [proj.index(k) for k in range(Q.order)]
    mul = [[proj[R.mul[a][b]] for b in reps] for a in reps]
    name = f"{R.name}/{format_elements(bits(mask))}"
    return RingTable(name, Q.table, mul, proj[R.one], validate=False), proj


@lru_cache(maxsize=None)
def subring_data(R: RingTable, mask: int) -> tuple[RingTable, tuple[int, ...]]:
    members = list(bits(mask))
    index = {e: i for i, e in enumerate(members)}
    add = [[index[R.add.table[a][b]] for b in members] for a in members]
    mul = [[index[R.mul[a][b]] for b in members] for a in members]
    name = f"{R.name}:{format_elements(members)}"
    return RingTable(name, add, mul, index[R.one], validate=False), tuple(members)


def quotient_ring(R: RingTable, I: SubObject):
    """Coset ring and projection; the identity morphism when ``I`` is zero."""
    normal, _ = classify_subobject(R, I)
    if not normal:
        raise NotIdealError(f"{I} is not an ideal of {R.name}")
    model = RingModel()
    return model.projection(I)


@lru_cache(maxsize=None)
def ring_hom_maps(R: RingTable, S: RingTable) -> tuple[tuple[int, ...], ...]:
    """Unital ring homomorphisms, found among the additive ones."""
    out = []
    for f in hom_maps(R.add, S.add):
        if f[R.one] != S.one:
            continue
        if all(f[R.mul[a][b]] == S.mul[f[a]][f[b]] for a in range(R.order) for b in range(R.order)):
            out.append(f)
    return tuple(out)


def is_ring_hom_map(R: RingTable, S: RingTable, f: Sequence[int]) -> bool:
    n = R.order
    if len(f) != n or any(not 0 <= x < S.order for x in f):
        return False
    if f[R.one] != S.one:
        return False
    return all(
        f[R.add.table[a][b]] == S.add.table[f[a]][f[b]] and f[R.mul[a][b]] == S.mul[f[a]][f[b]]
        for a in range(n)
        for b in range(n)
    )


class RingModel(ElementModel):
    """Rings with identity, additive subgroups as subobjects."""

    name = "Ring"

    def group_of(self, X) -> GroupTable:
        if not isinstance(X, RingTable):
            raise ParentMismatchError(f"{object_name(X)} is not a ring")
        return X.add

    def _is_normal(self, S):
        return is_ideal_mask(S.parent, S.mask)

    def _is_conormal(self, S):
        return is_unital_subring_mask(S.parent, S.mask)

    def _carrier(self, X, mask):
        return subring_data(X, mask)

    def _quotient(self, X, mask):
        return quotient_ring_data(X, mask)

    def _hom_maps(self, X, Y):
        return ring_hom_maps(X, Y)

    def _is_hom_map(self, X, Y, data):
        return is_ring_hom_map(X, Y, data)

    def additive_subgroups(self, R: RingTable) -> list[SubObject]:
        return [SubObject(R, m) for m in subgroup_masks(R.add)]

    def subobject(self, X, elements):
        G = self.group_of(X)
        mask = check_elements(G, elements)
        if not is_subgroup_mask(G, mask):
            raise NotAdditiveSubgroupError(
                f"{format_elements(bits(mask))} is not an additive subgroup of {X.name}"
            )
        return SubObject(X, mask)
