"""Zigzags, subobject chasing, pyramids and homomorphism induction.

A zigzag is a chain of morphisms ``X0 - X1 - ... - Xn`` where each step
points forward (``X_{i-1} -> X_i``) or backward (``X_i -> X_{i-1}``).  The
pyramid over a zigzag has nodes ``(p, q)`` for ``0 <= p <= q <= n``; the
base nodes ``(i, i)`` are the zigzag nodes and ``(0, n)`` is the apex.
Every edge joins a lower node to an upper one and is either a projection
pointing toward the apex or an embedding pointing toward the base.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .concrete import ElementModel
from .core import FormModel, Morphism, SubObject, bits, format_elements, object_name
from .errors import (
    ConsistencyError,
    ModelCapabilityError,
    NormalityViolationError,
    NotInducibleError,
    ParentMismatchError,
    ZigzagError,
)

FWD = "fwd"
BWD = "bwd"

TOWARD_APEX = "toward-apex"
TOWARD_BASE = "toward-base"


@dataclass(frozen=True)
class Step:
    morphism: Morphism
    direction: str
    label: str | None = None

    def source(self):
        """The node this step leaves when the zigzag is read left to right."""
        return self.morphism.dom if self.direction == FWD else self.morphism.cod

    def target(self):
        return self.morphism.cod if self.direction == FWD else self.morphism.dom


@dataclass(frozen=True)
class Zigzag:
    steps: tuple[Step, ...]

    def __post_init__(self):
        if not self.steps:
            raise ZigzagError("a zigzag needs at least one step")
        for s in self.steps:
            if s.direction not in (FWD, BWD):
                raise ZigzagError(f"unknown direction {s.direction!r}")
        for i in range(1, len(self.steps)):
            prev, cur = self.steps[i - 1], self.steps[i]
            if prev.target() != cur.source():
                raise ZigzagError(
                    f"steps {i} and {i + 1} do not meet: "
                    f"{object_name(prev.target())} vs {object_name(cur.source())}"
                )

    @classmethod
    def of(cls, *pairs) -> "Zigzag":
        """Build from ``(morphism, direction)`` pairs."""
        return cls(tuple(Step(m, d) for m, d in pairs))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def nodes(self) -> list:
        return [self.steps[0].source()] + [s.target() for s in self.steps]

    def opposite(self) -> "Zigzag":
        """The horizontal reflection: steps reversed and directions flipped."""
        flip = {FWD: BWD, BWD: FWD}
        return Zigzag(tuple(Step(s.morphism, flip[s.direction], s.label)
                            for s in reversed(self.steps)))


def identity_zigzag(model: FormModel, X) -> Zigzag:
    return Zigzag((Step(model.identity(X), FWD),))


# -- chasing -------------------------------------------------------------------


@dataclass(frozen=True)
class ChaseTrace:
    direction: str
    subobjects: tuple[SubObject, ...]

    @property
    def result(self) -> SubObject:
        return self.subobjects[-1]

    def __str__(self) -> str:
        return " -> ".join(str(s) for s in self.subobjects)


def chase(model: FormModel, z: Zigzag, S: SubObject, direction: str = FWD) -> ChaseTrace:
    """Transport ``S`` along ``z``; the trace lists subobjects in visiting order."""
    if direction == FWD:
        start = z.nodes[0]
        if S.parent != start:
            raise ParentMismatchError(
                f"{S} is not a subobject of the initial node {object_name(start)}"
            )
        trace = [S]
        for s in z.steps:
            if s.direction == FWD:
                S = model.direct_image(s.morphism, S)
            else:
                S = model.inverse_image(s.morphism, S)
            trace.append(S)
    elif direction == BWD:
        end = z.nodes[-1]
        if S.parent != end:
            raise ParentMismatchError(
                f"{S} is not a subobject of the final node {object_name(end)}"
            )
        trace = [S]
        for s in reversed(z.steps):
            if s.direction == FWD:
                S = model.inverse_image(s.morphism, S)
            else:
                S = model.direct_image(s.morphism, S)
            trace.append(S)
    else:
        raise ZigzagError(f"unknown chase direction {direction!r}")
    return ChaseTrace(direction, tuple(trace))


def induces_homomorphism(model: FormModel, z: Zigzag) -> bool:
    """Chase criterion: 1 goes to 1 forward and the top goes to the top backward."""
    return _induction_failure(model, z) is None


def _induction_failure(model: FormModel, z: Zigzag) -> str | None:
    nodes = z.nodes
    fwd = chase(model, z, model.bottom(nodes[0]), FWD).result
    if fwd != model.bottom(nodes[-1]):
        return f"forward chase of 1 = {fwd}"
    bwd = chase(model, z, model.top(nodes[-1]), BWD).result
    if bwd != model.top(nodes[0]):
        return f"backward chase of top = {bwd}"
    return None


# -- pyramids ----------------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    """An edge between ``lower`` and ``upper``; projections go lower -> upper."""

    morphism: Morphism
    orientation: str


@dataclass
class Pyramid:
    zigzag: Zigzag
    nodes: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)
    kinds: dict = field(default_factory=dict)
    diamonds: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.zigzag)

    def edge(self, a, b) -> tuple[Edge, bool]:
        """The edge joining nodes ``a`` and ``b`` and whether ``a`` is the lower one."""
        if (a, b) in self.edges:
            return self.edges[(a, b)], True
        if (b, a) in self.edges:
            return self.edges[(b, a)], False
        raise ZigzagError(f"nodes {a} and {b} are not adjacent")

    def upper_neighbours(self, node) -> list:
        p, q = node
        out = []
        if p >= 1:
            out.append((p - 1, q))
        if q + 1 <= self.n:
            out.append((p, q + 1))
        return out

    def render(self, model: FormModel) -> list[str]:
        lines = []
        for level in range(self.n, -1, -1):
            cells = []
            for p in range(self.n - level + 1):
                node = (p, p + level)
                X = self.nodes[node]
                size = model.order(X)
                tail = f" |{size}|" if size is not None else ""
                cells.append(f"{node}={model.describe(X)}{tail}")
            lines.append("  ".join(cells))
        return lines


def _step_across(edge: Edge, going_up: bool) -> tuple[Morphism, str]:
    """The morphism of an edge and whether it is traversed forward."""
    if edge.orientation == TOWARD_APEX:
        return edge.morphism, (FWD if going_up else BWD)
    return edge.morphism, (BWD if going_up else FWD)


def _triangle(model: FormModel, f: Morphism) -> tuple[object, Morphism, Morphism]:
    fac = model.factorize(f)
    e = model.compose(fac.iso, fac.projection)
    return fac.embedding.dom, e, fac.embedding


def build_pyramid(model: FormModel, z: Zigzag) -> Pyramid:
    pyr = Pyramid(z)
    n = len(z)
    for i, X in enumerate(z.nodes):
        pyr.nodes[(i, i)] = X
    for i, s in enumerate(z.steps):
        top, e, m = _triangle(model, s.morphism)
        apex_side, base_side = ((i, i), (i + 1, i + 1)) if s.direction == FWD else ((i + 1, i + 1), (i, i))
        pyr.nodes[(i, i + 1)] = top
        pyr.edges[(apex_side, (i, i + 1))] = Edge(e, TOWARD_APEX)
        pyr.edges[(base_side, (i, i + 1))] = Edge(m, TOWARD_BASE)
        pyr.kinds[(i, i + 1)] = "triangle"
    for level in range(2, n + 1):
        for P in range(0, n - level + 1):
            _diamond(model, pyr, P, P + level)
    return pyr


def _diamond(model: FormModel, pyr: Pyramid, P: int, Q: int) -> None:
    T, L, R, B = (P, Q), (P, Q - 1), (P + 1, Q), (P + 1, Q - 1)
    eL, eR = pyr.edges[(B, L)], pyr.edges[(B, R)]
    if eL.orientation == TOWARD_APEX and eR.orientation == TOWARD_APEX:
        n, r = eL.morphism, eR.morphism
        K = model.join(model.kernel(n), model.kernel(r))
        p = model.projection(K)
        x = model.descend(n, p)
        y = model.descend(r, p)
        pyr.nodes[T] = p.cod
        pyr.edges[(L, T)] = Edge(x, TOWARD_APEX)
        pyr.edges[(R, T)] = Edge(y, TOWARD_APEX)
        pyr.kinds[T] = "projection"
        pyr.diamonds[T] = (n, r, x, y)
    elif eL.orientation == TOWARD_BASE and eR.orientation == TOWARD_BASE:
        mL, mR = eL.morphism, eR.morphism
        M = model.meet(model.image(mL), model.image(mR))
        i = model.embedding(M)
        a = model.lift(mL, i)
        b = model.lift(mR, i)
        pyr.nodes[T] = i.dom
        pyr.edges[(L, T)] = Edge(a, TOWARD_BASE)
        pyr.edges[(R, T)] = Edge(b, TOWARD_BASE)
        pyr.kinds[T] = "embedding"
        pyr.diamonds[T] = (mL, mR, a, b)
    elif eL.orientation == TOWARD_BASE:
        g = model.compose(eR.morphism, eL.morphism)  # L -> B -> R
        top, e, m = _triangle(model, g)
        pyr.nodes[T] = top
        pyr.edges[(L, T)] = Edge(e, TOWARD_APEX)
        pyr.edges[(R, T)] = Edge(m, TOWARD_BASE)
        pyr.kinds[T] = "mixed-right"
        pyr.diamonds[T] = (eL.morphism, eR.morphism, e, m)
    else:
        g = model.compose(eL.morphism, eR.morphism)  # R -> B -> L
        top, e, m = _triangle(model, g)
        pyr.nodes[T] = top
        pyr.edges[(R, T)] = Edge(e, TOWARD_APEX)
        pyr.edges[(L, T)] = Edge(m, TOWARD_BASE)
        pyr.kinds[T] = "mixed-left"
        pyr.diamonds[T] = (eL.morphism, eR.morphism, m, e)


def check_pyramid(model: FormModel, pyr: Pyramid) -> list[str]:
    """Structural invariants: edge kinds and commutativity of every cell."""
    bad = []
    for (lo, up), e in sorted(pyr.edges.items()):
        if e.orientation == TOWARD_APEX:
            if not model.is_projection(e.morphism):
                bad.append(f"edge {lo}->{up} should be a projection")
        elif not model.is_embedding(e.morphism):
            bad.append(f"edge {up}->{lo} should be an embedding")
    for i, s in enumerate(pyr.zigzag.steps):
        top = (i, i + 1)
        apex_side = (i, i) if s.direction == FWD else (i + 1, i + 1)
        base_side = (i + 1, i + 1) if s.direction == FWD else (i, i)
        e = pyr.edges[(apex_side, top)].morphism
        m = pyr.edges[(base_side, top)].morphism
        if model.compose(m, e) != s.morphism:
            bad.append(f"triangle {top} does not commute")
    for T, kind in sorted(pyr.kinds.items()):
        if kind == "triangle":
            continue
        a, b, c, d = pyr.diamonds[T]
        if kind == "projection":
            ok = model.compose(c, a) == model.compose(d, b)
        elif kind == "embedding":
            ok = model.compose(a, c) == model.compose(b, d)
        elif kind == "mixed-right":
            ok = model.compose(d, c) == model.compose(b, a)
        else:
            ok = model.compose(c, d) == model.compose(a, b)
        if not ok:
            bad.append(f"{kind} diamond {T} does not commute")
    return bad


def principal_zigzag(pyr: Pyramid) -> Zigzag:
    """Up the left flank from ``(0,0)`` to the apex, then down the right flank."""
    n = pyr.n
    steps = []
    for q in range(n):
        m, d = _step_across(pyr.edges[((0, q), (0, q + 1))], going_up=True)
        steps.append(Step(m, d))
    for p in range(n):
        m, d = _step_across(pyr.edges[((p + 1, n), (p, n))], going_up=False)
        steps.append(Step(m, d))
    return Zigzag(tuple(steps))


def is_collapsible(model: FormModel, z: Zigzag) -> bool:
    """Every backward step is an isomorphism."""
    return all(s.direction == FWD or model.is_isomorphism(s.morphism) for s in z.steps)


def collapse(model: FormModel, z: Zigzag) -> Morphism:
    result = None
    for s in z.steps:
        f = s.morphism if s.direction == FWD else model.invert(s.morphism)
        result = f if result is None else model.compose(f, result)
    return result


def induced_homomorphism(model: FormModel, z: Zigzag, pyr: Pyramid | None = None) -> Morphism:
    """The morphism induced by ``z``, read off the principal zigzag of its pyramid.

    The chase criterion and collapsibility of the principal zigzag are
    computed independently; disagreement raises :class:`ConsistencyError`.
    """
    failure = _induction_failure(model, z)
    if pyr is None:
        pyr = build_pyramid(model, z)
    principal = principal_zigzag(pyr)
    collapsible = is_collapsible(model, principal)
    if collapsible != (failure is None):
        raise ConsistencyError(
            f"chase criterion says {failure is None} but principal zigzag collapsible={collapsible}"
        )
    if failure is not None:
        raise NotInducibleError(failure)
    return collapse(model, principal)


# -- chasing inside a pyramid --------------------------------------------------------


def chase_path(model: FormModel, pyr: Pyramid, path: Sequence, S: SubObject) -> SubObject:
    for a, b in zip(path, path[1:]):
        edge, a_lower = pyr.edge(a, b)
        m, d = _step_across(edge, going_up=a_lower)
        S = model.direct_image(m, S) if d == FWD else model.inverse_image(m, S)
    return S


def _move(model, pyr, a, b, S):
    edge, a_lower = pyr.edge(a, b)
    m, d = _step_across(edge, going_up=a_lower)
    return model.direct_image(m, S) if d == FWD else model.inverse_image(m, S)


def path_independence_violations(model: FormModel, pyr: Pyramid) -> list[str]:
    """Chases along all horizontal zigzags between two nodes must agree (both directions)."""
    n = pyr.n
    nodes = sorted(pyr.nodes, key=lambda v: (v[0] + v[1], v))

    def right(v):
        p, q = v
        out = []
        if q + 1 <= n:
            out.append((p, q + 1))
        if p + 1 <= q:
            out.append((p + 1, q))
        return out

    def left(v):
        p, q = v
        out = []
        if q - 1 >= p:
            out.append((p, q - 1))
        if p - 1 >= 0:
            out.append((p - 1, q))
        return out

    bad = []
    for succ, order in ((right, nodes), (left, list(reversed(nodes)))):
        for start in nodes:
            for S in model.subobjects(pyr.nodes[start]):
                reach = {start: {S}}
                for v in order:
                    if v not in reach:
                        continue
                    if len(reach[v]) > 1:
                        shown = ", ".join(sorted(str(x) for x in reach[v]))
                        bad.append(f"from {start} with {S}: node {v} reached as {shown}")
                        continue
                    (T,) = reach[v]
                    for w in succ(v):
                        reach.setdefault(w, set()).add(_move(model, pyr, v, w, T))
    return bad


def vertical_paths(pyr: Pyramid) -> list[tuple]:
    """All upward paths of length at least one."""
    out = []

    def extend(path):
        for w in pyr.upper_neighbours(path[-1]):
            new = path + (w,)
            out.append(new)
            extend(new)

    for v in sorted(pyr.nodes):
        extend((v,))
    return out


def vertical_law_violations(model: FormModel, pyr: Pyramid) -> list[str]:
    """Upward chases keep 1 and top; down-then-up along the same path is the identity."""
    bad = []
    for path in vertical_paths(pyr):
        lo, hi = pyr.nodes[path[0]], pyr.nodes[path[-1]]
        if chase_path(model, pyr, path, model.bottom(lo)) != model.bottom(hi):
            bad.append(f"1 not preserved upward along {path}")
        if chase_path(model, pyr, path, model.top(lo)) != model.top(hi):
            bad.append(f"top not preserved upward along {path}")
        down = tuple(reversed(path))
        for S in model.subobjects(hi):
            back = chase_path(model, pyr, path, chase_path(model, pyr, down, S))
            if back != S:
                bad.append(f"{S} at {path[-1]} comes back as {back} along {path}")
    return bad


def vertical_subquotient_violations(model: FormModel, pyr: Pyramid) -> list[str]:
    """On every upward path, right-pointing arrows are projections and left-pointing embeddings."""
    bad = []
    for lo_up, e in pyr.edges.items():
        if e.orientation == TOWARD_APEX and not model.is_projection(e.morphism):
            bad.append(f"{lo_up}: upward arrow is not a projection")
        if e.orientation == TOWARD_BASE and not model.is_embedding(e.morphism):
            bad.append(f"{lo_up}: downward arrow is not an embedding")
    return bad


# -- element relations ---------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    source: object
    target: object
    rows: tuple[int, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, row in enumerate(self.rows) for b in bits(row)]

    def is_function(self) -> bool:
        return all(row & (row - 1) == 0 for row in self.rows)

    def is_total(self) -> bool:
        return all(row != 0 for row in self.rows)

    def as_map(self) -> tuple[int, ...] | None:
        if not (self.is_function() and self.is_total()):
            return None
        return tuple(row.bit_length() - 1 for row in self.rows)

    def describe(self) -> str:
        return "{" + ", ".join(f"{a}->{format_elements(bits(row))}" for a, row in enumerate(self.rows)) + "}"


@dataclass(frozen=True)
class OracleReport:
    relation: Relation
    is_function: bool
    is_total: bool
    is_hom: bool | None


def relation_oracle(model: FormModel, z: Zigzag) -> OracleReport:
    """Compose the element relations of the steps directly, without any pyramid."""
    if not isinstance(model, ElementModel):
        raise ModelCapabilityError(f"the relation oracle needs an element-level model, not {model.name}")
    X0 = z.nodes[0]
    rows = [1 << a for a in range(model.order(X0))]
    for s in z.steps:
        f = s.morphism
        if s.direction == FWD:
            d = f.data
            new = []
            for row in rows:
                m = 0
                for b in bits(row):
                    m |= 1 << d[b]
                new.append(m)
        else:
            pre = model.preimages(f)
            new = []
            for row in rows:
                m = 0
                for b in bits(row):
                    m |= pre[b]
                new.append(m)
        rows = new
    rel = Relation(X0, z.nodes[-1], tuple(rows))
    fn, tot = rel.is_function(), rel.is_total()
    is_hom = None
    if fn and tot:
        is_hom = model._is_hom_map(X0, z.nodes[-1], rel.as_map())
    return OracleReport(rel, fn, tot, is_hom)


# -- normality relation and subquotients -------------------------------------------------


def normality_relation(model: FormModel, B: SubObject, A: SubObject, mode: str = "normal_to") -> bool:
    """``normal_to``: B is normal to A.  ``conormal_to``: A is conormal to B."""
    model._same_parent(A, B)
    if not model.leq(B, A):
        return False
    if mode == "normal_to":
        if not model.is_conormal(A):
            return False
        return model.is_normal(model.inverse_image(model.embedding(A), B))
    if mode == "conormal_to":
        if not model.is_normal(B):
            return False
        return model.is_conormal(model.direct_image(model.projection(B), A))
    raise ValueError(f"unknown mode {mode!r}")


def subquotient_maps(model: FormModel, A: SubObject, B: SubObject) -> tuple[Morphism, Morphism]:
    """``(iota_A, pi)`` with ``pi`` the projection of ``A/1`` onto ``A/B``."""
    if not normality_relation(model, B, A, "normal_to"):
        raise NormalityViolationError(f"{B} is not normal to {A}")
    i = model.embedding(A)
    return i, model.projection(model.inverse_image(i, B))


def subquotient(model: FormModel, A: SubObject, B: SubObject):
    return subquotient_maps(model, A, B)[1].cod


def coquotient_maps(model: FormModel, B: SubObject, A: SubObject) -> tuple[Morphism, Morphism]:
    """``(pi_B, iota)`` with ``iota`` the embedding of the coquotient into ``G/B``."""
    if not normality_relation(model, B, A, "conormal_to"):
        raise NormalityViolationError(f"{A} is not conormal to {B}")
    p = model.projection(B)
    return p, model.embedding(model.direct_image(p, A))


def coquotient(model: FormModel, B: SubObject, A: SubObject):
    return coquotient_maps(model, B, A)[1].dom


# -- projection diamonds -------------------------------------------------------------------


def projection_diamond(model: FormModel, N: SubObject, R: SubObject):
    """``(n, r, x, y, p)`` for normal ``N`` and ``R`` with ``p = x n = y r``."""
    n = model.projection(N)
    r = model.projection(R)
    p = model.projection(model.join(N, R))
    return n, r, model.descend(n, p), model.descend(r, p), p


def projection_diamond_violations(model: FormModel, N: SubObject, R: SubObject) -> list[str]:
    """Check ``y^-1 x S == r n^-1 S`` for every subobject ``S`` of the left node."""
    n, r, x, y, p = projection_diamond(model, N, R)
    bad = []
    if model.compose(x, n) != p or model.compose(y, r) != p:
        bad.append(f"diamond for {N}, {R} does not commute")
    for S in model.subobjects(n.cod):
        lhs = model.inverse_image(y, model.direct_image(x, S))
        rhs = model.direct_image(r, model.inverse_image(n, S))
        if lhs != rhs:
            bad.append(f"N={N} R={R} S={S}: {lhs} != {rhs}")
    return bad
