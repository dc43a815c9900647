"""Every group of order at most 16, plus S4, as named Cayley tables.

The list holds one representative per isomorphism class; the tests check
pairwise non-isomorphism and that the count per order matches the known
numbers of groups.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .groups import GroupTable, direct_product, make_group


def metacyclic(name: str, m: int, n: int, r: int, t: int = 0) -> GroupTable:
    """``<x, y | x^m = 1, y^n = x^t, y x y^-1 = x^r>``; element ``a + m*b`` is ``x^a y^b``."""
    order = m * n
    powers = [pow(r, b, m) for b in range(n)]
    rows = []
    for u in range(order):
        a, b = u % m, u // m
        row = []
        for v in range(order):
            c, d = v % m, v // m
            e = a + powers[b] * c
            f = b + d
            if f >= n:
                f -= n
                e += t
            row.append(e % m + m * f)
        rows.append(row)
    return GroupTable(name, rows)


def semidirect(name: str, N: GroupTable, action: Sequence[int], k: int) -> GroupTable:
    """``N`` extended by a cyclic group of order ``k`` acting through the automorphism ``action``.

    Element ``n + |N|*i`` is the pair ``(n, i)``, multiplied as
    ``(n, i)(n', j) = (n * action^i(n'), i + j)``.
    """
    size = N.order
    autos = [tuple(range(size))]
    for _ in range(1, k):
        autos.append(tuple(action[x] for x in autos[-1]))
    rows = []
    for u in range(size * k):
        a, i = u % size, u // size
        row = []
        for v in range(size * k):
            c, j = v % size, v // size
            row.append(N.table[a][autos[i][c]] + size * ((i + j) % k))
        rows.append(row)
    return GroupTable(name, rows)


def generated_by(name: str, identity: Hashable, gens: Sequence[Hashable],
                 mul: Callable[[Hashable, Hashable], Hashable]) -> GroupTable:
    """Table of the group generated by ``gens``, elements numbered in discovery order."""
    elems = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elems):
        for g in gens:
            y = mul(elems[i], g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
    rows = [[index[mul(a, b)] for b in elems] for a in elems]
    return GroupTable(name, rows)


def _matmul(a, b):
    (a0, a1, a2, a3), (b0, b1, b2, b3) = a, b
    return (a0 * b0 + a1 * b2, a0 * b1 + a1 * b3, a2 * b0 + a3 * b2, a2 * b1 + a3 * b3)


def pauli_group() -> GroupTable:
    """The group generated by the Pauli matrices X and Z and the scalar i."""
    one = (1, 0, 0, 1)
    X = (0, 1, 1, 0)
    Z = (1, 0, 0, -1)
    iI = (1j, 0, 0, 1j)
    return generated_by("Pauli", one, [X, Z, iI], _matmul)


def alternating4() -> GroupTable:
    def compose(p, q):
        return tuple(p[q[x]] for x in range(4))

    return generated_by("A4", (0, 1, 2, 3), [(1, 2, 0, 3), (1, 0, 3, 2)], compose)


def _Z(k: int) -> GroupTable:
    return make_group("cyclic", k)


@lru_cache(maxsize=None)
def all_groups() -> tuple[GroupTable, ...]:
    Z2, Z4 = _Z(2), _Z(4)
    K4 = make_group("klein")
    groups = [
        _Z(1), Z2, _Z(3), Z4, K4, _Z(5), _Z(6), make_group("symmetric", 3), _Z(7),
        _Z(8), direct_product(Z4, Z2, "Z4xZ2"), direct_product(K4, Z2, "Z2^3"),
        make_group("dihedral", 4), metacyclic("Q8", 4, 2, 3, 2),
        _Z(9), direct_product(_Z(3), _Z(3), "Z3xZ3"),
        _Z(10), make_group("dihedral", 5),
        _Z(11),
        _Z(12), direct_product(_Z(6), Z2, "Z6xZ2"), alternating4(),
        make_group("dihedral", 6), metacyclic("Dic3", 6, 2, 5, 3),
        _Z(13),
        _Z(14), make_group("dihedral", 7),
        _Z(15),
        _Z(16),
        direct_product(Z4, Z4, "Z4xZ4"),
        semidirect("Z2^2:Z4", K4, (0, 2, 1, 3), 4),
        metacyclic("Z4:Z4", 4, 4, 3),
        direct_product(_Z(8), Z2, "Z8xZ2"),
        metacyclic("M16", 8, 2, 5),
        make_group("dihedral", 8),
        metacyclic("SD16", 8, 2, 3),
        metacyclic("Q16", 8, 2, 7, 4),
        direct_product(Z4, K4, "Z4xZ2^2"),
        direct_product(make_group("dihedral", 4), Z2, "D4xZ2"),
        direct_product(metacyclic("Q8", 4, 2, 3, 2), Z2, "Q8xZ2"),
        pauli_group(),
        direct_product(direct_product(K4, Z2), Z2, "Z2^4"),
        make_group("symmetric", 4),
    ]
    return tuple(groups)


def groups_up_to(max_order: int) -> list[GroupTable]:
    """Catalog groups of order at most ``max_order`` (S4 only when 24 is allowed)."""
    return [G for G in all_groups() if G.order <= max_order]


def group_by_name(name: str) -> GroupTable:
    for G in all_groups():
        if G.name == name:
            return G
    raise KeyError(name)


def names() -> list[str]:
    return [G.name for G in all_groups()]
