"""Finite groups given by Cayley tables.

Elements are the integers ``0..n-1`` with ``0`` the identity, and the
product of ``a`` and ``b`` is ``table[a][b]``.  Subgroups are stored as
bitmasks (bit ``i`` set iff element ``i`` belongs), which keeps lattice
operations cheap.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Sequence

from .core import bits, format_elements
from .errors import InvalidSubobjectError, InvalidTableError

DEFAULT_MAX_ORDER = 24


class GroupTable:
    """A validated finite group.

    Two tables are equal when both their names and their products agree; the
    name therefore distinguishes, say, ``Z2`` from the quotient ``Z4/{0,2}``.
    """

    __slots__ = ("name", "table", "order", "inverse", "_hash")

    def __init__(self, name: str, table: Sequence[Sequence[int]], *, validate: bool = True):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        if validate:
            validate_group_table(rows)
        self.name = name
        self.table = rows
        self.order = len(rows)
        self.inverse = tuple(row.index(0) for row in rows)
        self._hash = hash((name, rows))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self._hash == other._hash and self.name == other.name and self.table == other.table

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def rename(self, name: str) -> "GroupTable":
        return GroupTable(name, self.table, validate=False)


def validate_group_table(rows: tuple[tuple[int, ...], ...]) -> None:
    """Raise :class:`InvalidTableError` naming the first violated group law."""
    n = len(rows)
    if n == 0:
        raise InvalidTableError("empty table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidTableError(f"row {i} has {len(row)} entries, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise InvalidTableError(f"entry {x} in row {i} is out of range")
    for a in range(n):
        if rows[0][a] != a or rows[a][0] != a:
            raise InvalidTableError(f"identity law fails: 0 is not neutral for {a}")
    full = set(range(n))
    for a in range(n):
        if set(rows[a]) != full:
            raise InvalidTableError(f"permutation law fails: row {a} repeats an entry")
        if {rows[b][a] for b in range(n)} != full:
            raise InvalidTableError(f"permutation law fails: column {a} repeats an entry")
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise InvalidTableError(
                        f"associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})"
                    )
    for a in range(n):
        b = rows[a].index(0)
        if rows[b][a] != 0:
            raise InvalidTableError(f"inverse law fails for {a}")


# -- builders ----------------------------------------------------------------


def cyclic_table(k: int) -> list[list[int]]:
    return [[(a + b) % k for b in range(k)] for a in range(k)]


def dihedral_table(k: int) -> list[list[int]]:
    """Order ``2k``: element ``i`` is ``r^i`` and ``k + i`` is ``s r^i``."""

    def decode(x):
        return divmod(x, k)

    rows = []
    for x in range(2 * k):
        a, i = decode(x)
        row = []
        for y in range(2 * k):
            b, j = decode(y)
            # s^a r^i s^b r^j = s^(a+b) r^((-1)^b i + j)
            e = (-i if b else i) + j
            row.append(((a + b) % 2) * k + e % k)
        rows.append(row)
    return rows


def symmetric_permutations(k: int) -> list[tuple[int, ...]]:
    """Permutations of ``range(k)`` ordered by support size, then lexicographically.

    With this order the identity comes first, then transpositions, so the
    alternating group of degree 3 is ``{0,4,5}``.
    """
    perms = list(itertools.permutations(range(k)))
    return sorted(perms, key=lambda p: (sum(1 for i, x in enumerate(p) if i != x), p))


def symmetric_table(k: int) -> list[list[int]]:
    """Product ``p*q`` is the composite ``p . q`` (apply ``q`` first)."""
    perms = symmetric_permutations(k)
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]


def klein_table() -> list[list[int]]:
    return [[a ^ b for b in range(4)] for a in range(4)]


def make_group(kind: str, k: int | None = None, *, name: str | None = None,
               table: Sequence[Sequence[int]] | None = None,
               max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Build a group by kind: ``cyclic``, ``dihedral``, ``symmetric``, ``klein`` or ``table``."""
    if kind == "cyclic":
        _need_k(kind, k, 1)
        _bound(k, max_order)
        return GroupTable(name or f"Z{k}", cyclic_table(k), validate=False)
    if kind == "dihedral":
        _need_k(kind, k, 1)
        _bound(2 * k, max_order)
        return GroupTable(name or f"D{k}", dihedral_table(k), validate=False)
    if kind == "symmetric":
        _need_k(kind, k, 1)
        _bound(math.factorial(k), max_order)
        return GroupTable(name or f"S{k}", symmetric_table(k), validate=False)
    if kind == "klein":
        return GroupTable(name or "K4", klein_table(), validate=False)
    if kind == "table":
        if table is None:
            raise InvalidTableError("no table given")
        _bound(len(table), max_order)
        return GroupTable(name or "G", table)
    raise InvalidTableError(f"unknown group kind {kind!r}")


def _need_k(kind: str, k, low: int) -> None:
    if k is None or k < low:
        raise InvalidTableError(f"{kind} needs a parameter k >= {low}")


def _bound(order: int, max_order: int) -> None:
    if order > max_order:
        raise InvalidTableError(f"order {order} exceeds the bound {max_order}")


def direct_product(G: GroupTable, H: GroupTable, name: str | None = None) -> GroupTable:
    """Element ``g*|H| + h`` stands for the pair ``(g, h)``."""
    m = H.order
    rows = [
        [G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(G.order * m)]
        for a in range(G.order * m)
    ]
    return GroupTable(name or f"{G.name}x{H.name}", rows, validate=False)


# -- subgroups ---------------------------------------------------------------


def check_elements(G: GroupTable, elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if not 0 <= e < G.order:
            raise InvalidSubobjectError(f"element {e} out of range for {G.name}")
        m |= 1 << e
    return m


@lru_cache(maxsize=None)
def closure(G: GroupTable, mask: int) -> int:
    """Mask of the subgroup generated by the elements of ``mask``."""
    gens = [g for g in bits(mask) if g != 0]
    seen = 1
    elems = [0]
    i = 0
    t = G.table
    while i < len(elems):
        row = t[elems[i]]
        for g in gens:
            y = row[g]
            if not (seen >> y) & 1:
                seen |= 1 << y
                elems.append(y)
        i += 1
    return seen


def generated_subgroup(G: GroupTable, gens: Iterable[int]) -> int:
    return closure(G, check_elements(G, gens))


def join_masks(G: GroupTable, a: int, b: int) -> int:
    if a & b == a:
        return b
    if a & b == b:
        return a
    return closure(G, a | b)


@lru_cache(maxsize=None)
def is_subgroup_mask(G: GroupTable, mask: int) -> bool:
    return mask & 1 == 1 and closure(G, mask) == mask


@lru_cache(maxsize=None)
def subgroup_masks(G: GroupTable) -> tuple[int, ...]:
    """All subgroups, sorted by size and then by ascending element list."""
    cyclics = {closure(G, 1 << g) for g in range(G.order)}
    found = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for H in frontier:
            for C in cyclics:
                if C & H != C:
                    K = closure(G, H | C)
                    if K not in found:
                        found.add(K)
                        nxt.append(K)
        frontier = nxt
    return tuple(sorted(found, key=lambda m: (m.bit_count(), tuple(bits(m)))))


@lru_cache(maxsize=None)
def is_normal_mask(G: GroupTable, mask: int) -> bool:
    t, inv = G.table, G.inverse
    members = list(bits(mask))
    for g in range(G.order):
        row, gi = t[g], inv[g]
        for s in members:
            if not (mask >> t[row[s]][gi]) & 1:
                return False
    return True


@lru_cache(maxsize=None)
def quotient_data(G: GroupTable, mask: int) -> tuple[GroupTable, tuple[int, ...]]:
    """Coset group of a normal subgroup and the projection map.

    Cosets are numbered in order of their smallest member.
    """
    members = list(bits(mask))
    proj = [-1] * G.order
    reps = []
    for x in range(G.order):
        if proj[x] < 0:
            k = len(reps)
            reps.append(x)
            row = G.table[x]
            for n in members:
                proj[row[n]] = k
    t = G.table
    rows = [[proj[t[a][b]] for b in reps] for a in reps]
    Q = GroupTable(f"{G.name}/{format_elements(members)}", rows, validate=False)
    return Q, tuple(proj)


@lru_cache(maxsize=None)
def carrier_data(G: GroupTable, mask: int) -> tuple[GroupTable, tuple[int, ...]]:
    """A subgroup as a group in its own right, elements renumbered ascending."""
    members = list(bits(mask))
    index = {e: i for i, e in enumerate(members)}
    t = G.table
    rows = [[index[t[a][b]] for b in members] for a in members]
    S = GroupTable(f"{G.name}:{format_elements(members)}", rows, validate=False)
    return S, tuple(members)


# -- homomorphisms -------------------------------------------------------------


@lru_cache(maxsize=None)
def generating_set(G: GroupTable) -> tuple[int, ...]:
    """A small generating set, chosen greedily from elements of largest order."""
    order = sorted(range(1, G.order), key=lambda a: (-G.element_order(a), a))
    gens: list[int] = []
    H = 1
    for a in order:
        if H == G.full_mask:
            break
        if not (H >> a) & 1:
            gens.append(a)
            H = closure(G, H | (1 << a))
    return tuple(gens)


def _extend(G: GroupTable, H: GroupTable, gens, imgs) -> list[int] | None:
    """Map on the subgroup generated by ``gens`` sending gens to imgs, if consistent."""
    f = [-1] * G.order
    f[0] = 0
    queue = [0]
    tg, th = G.table, H.table
    i = 0
    while i < len(queue):
        x = queue[i]
        fx = f[x]
        rx, rfx = tg[x], th[fx]
        for g, h in zip(gens, imgs):
            y = rx[g]
            v = rfx[h]
            if f[y] < 0:
                f[y] = v
                queue.append(y)
            elif f[y] != v:
                return None
        i += 1
    return f


@lru_cache(maxsize=None)
def hom_maps(G: GroupTable, H: GroupTable) -> tuple[tuple[int, ...], ...]:
    """All homomorphisms ``G -> H`` as maps, sorted lexicographically."""
    gens = generating_set(G)
    if not gens:
        return ((0,),)
    h_orders = [H.element_order(b) for b in range(H.order)]
    cands = [
        [b for b in range(H.order) if G.element_order(g) % h_orders[b] == 0] for g in gens
    ]
    out: list[tuple[int, ...]] = []

    def search(k: int, imgs: list[int]) -> None:
        if k == len(gens):
            f = _extend(G, H, gens, imgs)
            if f is not None:
                out.append(tuple(f))
            return
        for b in cands[k]:
            imgs.append(b)
            if k + 1 == len(gens) or _extend(G, H, gens[: k + 1], imgs) is not None:
                search(k + 1, imgs)
            imgs.pop()

    search(0, [])
    out.sort()
    return tuple(out)


def is_hom_map(G: GroupTable, H: GroupTable, f: Sequence[int]) -> bool:
    if len(f) != G.order or any(not 0 <= x < H.order for x in f):
        return False
    tg, th = G.table, H.table
    return all(
        f[tg[a][b]] == th[f[a]][f[b]] for a in range(G.order) for b in range(G.order)
    )


def trivial_group(name: str = "Z1") -> GroupTable:
    return GroupTable(name, [[0]], validate=False)


__all__ = [
    "GroupTable",
    "make_group",
    "closure",
    "generated_subgroup",
    "subgroup_masks",
    "is_normal_mask",
    "quotient_data",
    "carrier_data",
    "hom_maps",
    "is_hom_map",
    "direct_product",
    "trivial_group",
]
