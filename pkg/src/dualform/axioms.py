"""Finite-scope certification of the axioms and their consequences.

A :class:`Scope` lists base objects and, optionally, explicit morphism
lists.  Closing a scope adds the domains of canonical embeddings and the
codomains of canonical projections of every subobject of the base objects
(``closure_depth`` rounds).  Checks that quantify over morphisms use the
morphisms between base objects together with every canonical morphism
created by the closure; universal properties quantify over morphisms out of
or into the base objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .catalog import group_by_name
from .concrete import GroupModel
from .core import DualModel, FormModel, Morphism, SubObject, object_name, op
from .engine import normality_relation
from .errors import FormError, ModelCapabilityError
from .groups import GroupTable
from .rings import RingModel, RingTable, ring_product, zero_ring, zmod

AXIOMS = ("1.1", "1.2", "1.3", "1.4", "2", "3", "4", "5")


@dataclass
class Scope:
    objects: list
    homs: dict | None = None
    closure_depth: int = 1
    name: str = "scope"

    def morphisms(self, model: FormModel, X, Y) -> list[Morphism]:
        if self.homs is not None and (X, Y) in self.homs:
            return list(self.homs[(X, Y)])
        return model.morphisms(X, Y)

    def dual(self) -> "Scope":
        homs = None
        if self.homs is not None:
            homs = {(Y, X): [op(f) for f in fs] for (X, Y), fs in self.homs.items()}
        return Scope(list(self.objects), homs, self.closure_depth, f"dual({self.name})")


def grp_standard() -> Scope:
    names = ["Z1", "Z2", "Z3", "Z4", "K4", "Z6", "S3", "D4", "Q8"]
    return Scope([group_by_name(n) for n in names], name="grp-standard")


def ring_standard() -> Scope:
    Z2 = zmod(2)
    return Scope([zero_ring(), Z2, zmod(4), zmod(6), ring_product(Z2, Z2, "Z2xZ2")],
                 name="ring-standard")


def standard_model(scope_objects) -> FormModel:
    first = scope_objects[0]
    if isinstance(first, GroupTable):
        return GroupModel()
    if isinstance(first, RingTable):
        return RingModel()
    raise ModelCapabilityError(f"no model for {object_name(first)}")


@dataclass
class ClosedScope:
    base: list
    objects: list
    canonical: list  # canonical morphisms created while closing
    missing: list  # (kind, subobject, message) for canonical morphisms that could not be built


def close_scope(model: FormModel, scope: Scope) -> ClosedScope:
    objects = list(scope.objects)
    seen = set(objects)
    canonical: list[Morphism] = []
    missing: list = []
    frontier = list(scope.objects)
    for depth in range(scope.closure_depth):
        new = []
        for G in frontier:
            for S in model.subobjects(G):
                for kind in ("embedding", "projection"):
                    present = model.is_conormal(S) if kind == "embedding" else model.is_normal(S)
                    if not present:
                        continue
                    try:
                        m = getattr(model, kind)(S)
                    except FormError as exc:
                        if depth == 0:
                            missing.append((kind, S, str(exc)))
                        continue
                    canonical.append(m)
                    X = m.dom if kind == "embedding" else m.cod
                    if X not in seen:
                        seen.add(X)
                        objects.append(X)
                        new.append(X)
        frontier = new
    return ClosedScope(list(scope.objects), objects, canonical, missing)


@dataclass
class AxiomReport:
    model: str
    scope: str
    violations: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)

    def passed(self, axiom: str | None = None) -> bool:
        if axiom is not None:
            return not self.violations.get(axiom)
        return not any(self.violations.values())

    def verdicts(self) -> dict:
        return {a: self.passed(a) for a in self.violations}

    def total(self) -> int:
        return sum(len(v) for v in self.violations.values())

    def lines(self) -> list[str]:
        out = []
        for a in self.violations:
            v = self.violations[a]
            status = "ok" if not v else f"{len(v)} violation(s)"
            out.append(f"axiom {a}: {status} ({self.counts.get(a, 0)} instances)")
            out += [f"  {w}" for w in v[:5]]
        return out


def _subs(model, X):
    return model.subobjects(X)


def _name(X) -> str:
    return object_name(X)


def check_axioms(model: FormModel, scope: Scope, which=AXIOMS) -> AxiomReport:
    which = [a for a in AXIOMS if a in set(which)] if which is not None else list(AXIOMS)
    closed = close_scope(model, scope)
    report = AxiomReport(model.name, scope.name)
    base = closed.base
    base_homs: dict = {(X, Y): scope.morphisms(model, X, Y) for X in base for Y in base}
    homs = [f for fs in base_homs.values() for f in fs] + closed.canonical
    for a in which:
        bad: list[str] = []
        count = 0
        if a == "1.1":
            count = _check_category(model, base, base_homs, bad)
        elif a == "1.2":
            count = _check_order(model, closed.objects, bad)
        elif a == "1.3":
            count = _check_galois(model, homs, bad)
        elif a == "1.4":
            count = _check_functorial(model, closed.objects, base, base_homs, bad)
        elif a == "2":
            count = _check_lattice(model, closed.objects, homs, bad)
        elif a == "3":
            count = _check_universal(model, scope, closed, bad)
        elif a == "4":
            count = _check_factorization(model, homs, bad)
        elif a == "5":
            count = _check_closure(model, closed.objects, bad)
        report.violations[a] = sorted(set(bad))
        report.counts[a] = count
    return report


def _check_category(model, base, base_homs, bad) -> int:
    count = 0
    for X in base:
        one = model.identity(X)
        for Y in base:
            for f in base_homs[(X, Y)]:
                count += 1
                if model.compose(f, one) != f or model.compose(model.identity(Y), f) != f:
                    bad.append(f"identity law fails for {f} : {_name(X)} -> {_name(Y)}")
    for X, Y, Z, W in itertools.product(base, repeat=4):
        for f in base_homs[(X, Y)]:
            for g in base_homs[(Y, Z)]:
                gf = model.compose(g, f)
                for h in base_homs[(Z, W)]:
                    count += 1
                    if model.compose(h, gf) != model.compose(model.compose(h, g), f):
                        bad.append(f"associativity fails for {f}, {g}, {h}")
    return count


def _check_order(model, objects, bad) -> int:
    count = 0
    for X in objects:
        subs = _subs(model, X)
        for A in subs:
            count += 1
            if not model.leq(A, A):
                bad.append(f"{_name(X)}: {A} not <= itself")
            for B in subs:
                if A != B and model.leq(A, B) and model.leq(B, A):
                    bad.append(f"{_name(X)}: antisymmetry fails for {A}, {B}")
                if not model.leq(A, B):
                    continue
                for C in subs:
                    if model.leq(B, C) and not model.leq(A, C):
                        bad.append(f"{_name(X)}: transitivity fails for {A}, {B}, {C}")
    return count


def _check_galois(model, homs, bad) -> int:
    count = 0
    for f in homs:
        dsubs, csubs = _subs(model, f.dom), _subs(model, f.cod)
        for A in dsubs:
            fA = model.direct_image(f, A)
            for B in csubs:
                count += 1
                if model.leq(fA, B) != model.leq(A, model.inverse_image(f, B)):
                    bad.append(f"Galois law fails for {f} at {A}, {B}")
    return count


def _check_functorial(model, objects, base, base_homs, bad) -> int:
    count = 0
    for X in objects:
        one = model.identity(X)
        for A in _subs(model, X):
            count += 1
            if model.direct_image(one, A) != A or model.inverse_image(one, A) != A:
                bad.append(f"identity of {_name(X)} moves {A}")
    for X, Y, Z in itertools.product(base, repeat=3):
        for f in base_homs[(X, Y)]:
            for g in base_homs[(Y, Z)]:
                gf = model.compose(g, f)
                for A in _subs(model, X):
                    count += 1
                    if model.direct_image(gf, A) != model.direct_image(g, model.direct_image(f, A)):
                        bad.append(f"direct image of composite {g} . {f} at {A}")
                for C in _subs(model, Z):
                    count += 1
                    if model.inverse_image(gf, C) != model.inverse_image(f, model.inverse_image(g, C)):
                        bad.append(f"inverse image of composite {g} . {f} at {C}")
    return count


def _check_lattice(model, objects, homs, bad) -> int:
    count = 0
    for X in objects:
        subs = _subs(model, X)
        top, bottom = model.top(X), model.bottom(X)
        for A in subs:
            if not (model.leq(bottom, A) and model.leq(A, top)):
                bad.append(f"{_name(X)}: {A} outside [bottom, top]")
            for B in subs:
                count += 1
                m, j = model.meet(A, B), model.join(A, B)
                if not (model.leq(m, A) and model.leq(m, B)):
                    bad.append(f"{_name(X)}: meet of {A}, {B} is not below both")
                if not (model.leq(A, j) and model.leq(B, j)):
                    bad.append(f"{_name(X)}: join of {A}, {B} is not above both")
                for C in subs:
                    if model.leq(C, A) and model.leq(C, B) and not model.leq(C, m):
                        bad.append(f"{_name(X)}: meet of {A}, {B} is not greatest")
                    if model.leq(A, C) and model.leq(B, C) and not model.leq(j, C):
                        bad.append(f"{_name(X)}: join of {A}, {B} is not least")
    for f in homs:
        im, ker = model.image(f), model.kernel(f)
        for B in _subs(model, f.cod):
            count += 1
            if model.direct_image(f, model.inverse_image(f, B)) != model.meet(B, im):
                bad.append(f"f f^-1 B != B ^ Im f for {f} at {B}")
        for A in _subs(model, f.dom):
            count += 1
            if model.inverse_image(f, model.direct_image(f, A)) != model.join(A, ker):
                bad.append(f"f^-1 f A != A v Ker f for {f} at {A}")
    return count


def _check_universal(model, scope, closed, bad) -> int:
    count = 0
    concrete = model.element_level
    for kind, S, msg in closed.missing:
        bad.append(f"({_name(S.parent)}, {S}): {kind} missing: {msg}")
    for G in closed.base:
        top, bottom = model.top(G), model.bottom(G)
        for S in _subs(model, G):
            if model.is_conormal(S):
                count += 1
                try:
                    i = model.embedding(S)
                except FormError:
                    continue
                if S == top and i != model.identity(G):
                    bad.append(f"({_name(G)}, {S}): embedding of top is not the identity")
                if model.image(i) != S or not model.is_embedding(i):
                    bad.append(f"({_name(G)}, {S}): embedding has image {model.image(i)}")
                for U in closed.base:
                    for f in scope.morphisms(model, U, G):
                        count += 1
                        inside = model.leq(model.image(f), S)
                        _universal_case(model, G, S, i, f, inside, concrete, "embedding", bad)
            if model.is_normal(S):
                count += 1
                try:
                    p = model.projection(S)
                except FormError:
                    continue
                if S == bottom and p != model.identity(G):
                    bad.append(f"({_name(G)}, {S}): projection of bottom is not the identity")
                if model.kernel(p) != S or not model.is_projection(p):
                    bad.append(f"({_name(G)}, {S}): projection has kernel {model.kernel(p)}")
                for V in closed.base:
                    for g in scope.morphisms(model, G, V):
                        count += 1
                        inside = model.leq(S, model.kernel(g))
                        _universal_case(model, G, S, p, g, inside, concrete, "projection", bad)
    return count


def _universal_case(model, G, S, c, f, inside, concrete, kind, bad) -> None:
    """Exactly one factorization of ``f`` through ``c`` when ``inside``, none otherwise."""
    where = f"({_name(G)}, {S}) with {f}"
    if kind == "embedding":
        candidates_dom, candidates_cod = f.dom, c.dom

        def composite(u):
            return model.compose(c, u)
    else:
        candidates_dom, candidates_cod = c.cod, f.cod

        def composite(u):
            return model.compose(u, c)
    if concrete:
        if not inside:
            return
        try:
            u = model.lift(c, f) if kind == "embedding" else model.descend(c, f)
        except FormError as exc:
            bad.append(f"{where}: no factorization ({exc})")
            return
        if composite(u) != f:
            bad.append(f"{where}: constructed factorization does not commute")
        # uniqueness: an embedding is injective, a projection surjective
        ok = model.is_embedding(c) if kind == "embedding" else model.is_projection(c)
        if not ok:
            bad.append(f"{where}: factorization not unique")
        return
    hits = sum(1 for u in model.morphisms(candidates_dom, candidates_cod) if composite(u) == f)
    if inside and hits != 1:
        bad.append(f"{where}: {hits} factorizations")
    if not inside and hits:
        bad.append(f"{where}: factors although it should not")


def _check_factorization(model, homs, bad) -> int:
    count = 0
    for f in homs:
        count += 1
        try:
            fac = model.factorize(f)
        except FormError as exc:
            bad.append(f"{f} : {_name(f.dom)} -> {_name(f.cod)}: {exc.message}")
            continue
        if model.kernel(fac.projection) != model.kernel(f) or not model.is_projection(fac.projection):
            bad.append(f"{f}: bad projection part")
        if model.image(fac.embedding) != model.image(f) or not model.is_embedding(fac.embedding):
            bad.append(f"{f}: bad embedding part")
        if not model.is_isomorphism(fac.iso):
            bad.append(f"{f}: middle part is not an isomorphism")
        if model.compose_all(fac.embedding, fac.iso, fac.projection) != f:
            bad.append(f"{f}: factorization does not compose back")
    return count


def _check_closure(model, objects, bad) -> int:
    count = 0
    for X in objects:
        subs = _subs(model, X)
        normal = [S for S in subs if model.is_normal(S)]
        conormal = [S for S in subs if model.is_conormal(S)]
        for A, B in itertools.combinations_with_replacement(normal, 2):
            count += 1
            if not model.is_normal(model.join(A, B)):
                bad.append(f"{_name(X)}: join of normal {A}, {B} is not normal")
        for A, B in itertools.combinations_with_replacement(conormal, 2):
            count += 1
            if not model.is_conormal(model.meet(A, B)):
                bad.append(f"{_name(X)}: meet of conormal {A}, {B} is not conormal")
    return count


# -- observations -----------------------------------------------------------------


def _find_inverse(model, f):
    one_dom, one_cod = model.identity(f.dom), model.identity(f.cod)
    for g in model.morphisms(f.cod, f.dom):
        if model.compose(g, f) == one_dom and model.compose(f, g) == one_cod:
            return g
    return None


def check_observations(model: FormModel, scope: Scope) -> dict:
    """Consequences of the axioms, each checked over the scope."""
    closed = close_scope(model, scope)
    base = closed.base
    base_homs = {(X, Y): scope.morphisms(model, X, Y) for X in base for Y in base}
    homs = [f for fs in base_homs.values() for f in fs] + closed.canonical
    obs: dict[str, list[str]] = {k: [] for k in (
        "S", "idempotent", "monotone", "preservation", "B", "Y", "E", "AC", "D", "R",
        "F", "AB", "W", "T", "U", "Z", "V", "A", "AA", "AF", "kernels", "images",
    )}
    for f in homs:
        dsubs, csubs = _subs(model, f.dom), _subs(model, f.cod)
        emb, proj = model.is_embedding(f), model.is_projection(f)
        ker, im = model.kernel(f), model.image(f)
        direct = {A: model.direct_image(f, A) for A in dsubs}
        inverse = {B: model.inverse_image(f, B) for B in csubs}
        for A in dsubs:
            back = inverse[direct[A]]
            if not model.leq(A, back):
                obs["S"].append(f"{A} not <= f^-1 f {A} for {f}")
            if direct[back] != direct[A]:
                obs["idempotent"].append(f"f f^-1 f {A} != f {A} for {f}")
            if (back == A) != model.leq(ker, A):
                obs["Y"].append(f"A = f^-1 f A iff Ker f <= A fails at {A} for {f}")
            for A2 in dsubs:
                if model.leq(A, A2) and not model.leq(direct[A], direct[A2]):
                    obs["monotone"].append(f"direct image not monotone at {A}, {A2} for {f}")
                if direct[model.join(A, A2)] != model.join(direct[A], direct[A2]):
                    obs["preservation"].append(f"direct image does not preserve {A} v {A2} for {f}")
        for B in csubs:
            fwd = direct[inverse[B]]
            if not model.leq(fwd, B):
                obs["S"].append(f"f f^-1 {B} not <= {B} for {f}")
            if inverse[fwd] != inverse[B]:
                obs["idempotent"].append(f"f^-1 f f^-1 {B} != f^-1 {B} for {f}")
            if (fwd == B) != model.leq(B, im):
                obs["Y"].append(f"B = f f^-1 B iff B <= Im f fails at {B} for {f}")
            for B2 in csubs:
                if model.leq(B, B2) and not model.leq(inverse[B], inverse[B2]):
                    obs["monotone"].append(f"inverse image not monotone at {B}, {B2} for {f}")
                if inverse[model.meet(B, B2)] != model.meet(inverse[B], inverse[B2]):
                    obs["preservation"].append(f"inverse image does not preserve {B} ^ {B2} for {f}")
        if direct[model.bottom(f.dom)] != model.bottom(f.cod):
            obs["preservation"].append(f"direct image of 1 is not 1 for {f}")
        if inverse[model.top(f.cod)] != model.top(f.dom):
            obs["preservation"].append(f"inverse image of top is not top for {f}")
        # embeddings and projections
        direct_injective = len(set(direct.values())) == len(dsubs)
        inverse_surjective = set(inverse.values()) == set(dsubs)
        inverse_injective = len(set(inverse.values())) == len(csubs)
        direct_surjective = set(direct.values()) == set(csubs)
        if not (emb == direct_injective == inverse_surjective):
            obs["F"].append(f"embedding criteria disagree for {f}")
        if not (proj == inverse_injective == direct_surjective):
            obs["F"].append(f"projection criteria disagree for {f}")
        if emb != all(inverse[direct[A]] == A for A in dsubs):
            obs["AB"].append(f"embedding iff f^-1 f = id fails for {f}")
        if proj != all(direct[inverse[B]] == B for B in csubs):
            obs["AB"].append(f"projection iff f f^-1 = id fails for {f}")
        if model.element_level:
            injective = len(set(f.data)) == len(f.data)
            surjective = len(set(f.data)) == model.order(f.cod)
            if emb != injective:
                obs["AC"].append(f"trivial kernel iff injective fails for {f}")
            if proj != surjective:
                obs["D"].append(f"full image iff surjective fails for {f}")
        inv = _find_inverse(model, f)
        if (inv is not None) != (emb and proj):
            obs["R"].append(f"isomorphism iff embedding and projection fails for {f}")
        if inv is not None:
            for A in dsubs:
                if model.inverse_image(inv, A) != direct[A]:
                    obs["B"].append(f"inverse image of the inverse differs at {A} for {f}")
            for B in csubs:
                if model.direct_image(inv, B) != inverse[B]:
                    obs["B"].append(f"direct image of the inverse differs at {B} for {f}")
        for S in dsubs:
            if model.is_conormal(S) and not model.is_conormal(direct[S]):
                obs["V"].append(f"conormal {S} has non-conormal image under {f}")
            if proj and model.is_normal(S) and not model.is_normal(direct[S]):
                obs["A"].append(f"normal {S} has non-normal image under projection {f}")
        for S in csubs:
            if model.is_normal(S) and not model.is_normal(inverse[S]):
                obs["V"].append(f"normal {S} has non-normal preimage under {f}")
            if emb and model.is_conormal(S) and not model.is_conormal(inverse[S]):
                obs["A"].append(f"conormal {S} has non-conormal preimage under embedding {f}")
        for A in csubs:
            for B in csubs:
                if not model.leq(B, A) or not normality_relation(model, B, A):
                    continue
                if model.is_conormal(inverse[A]) and not normality_relation(model, inverse[B], inverse[A]):
                    obs["Z"].append(f"f^-1 {B} not normal to f^-1 {A} for {f}")
        if proj:
            for A in dsubs:
                for B in dsubs:
                    if model.leq(B, A) and normality_relation(model, B, A):
                        if not normality_relation(model, direct[B], direct[A]):
                            obs["AA"].append(f"f {B} not normal to f {A} for projection {f}")
        if not model.is_normal(ker):
            obs["kernels"].append(f"kernel {ker} of {f} is not normal")
        if not model.is_conormal(im):
            obs["images"].append(f"image {im} of {f} is not conormal")
    for X, Y, Z in itertools.product(base, repeat=3):
        for f in base_homs[(X, Y)]:
            for g in base_homs[(Y, Z)]:
                gf = model.compose(g, f)
                ge, fe, gfe = model.is_embedding(g), model.is_embedding(f), model.is_embedding(gf)
                gp, fp, gfp = model.is_projection(g), model.is_projection(f), model.is_projection(gf)
                if (ge and fe and not gfe) or (gp and fp and not gfp):
                    obs["W"].append(f"composite of {g} . {f} loses embedding/projection")
                if (gfe and not fe) or (gfp and not gp):
                    obs["T"].append(f"cancellation fails for {g} . {f}")
    kernels = {(f.dom, model.kernel(f)) for f in homs}
    images = {(f.cod, model.image(f)) for f in homs}
    for G in base:
        if model.embedding(model.top(G)) != model.identity(G):
            obs["AF"].append(f"embedding of the top of {_name(G)} is not the identity")
        if model.projection(model.bottom(G)) != model.identity(G):
            obs["AF"].append(f"projection of the bottom of {_name(G)} is not the identity")
        for S in _subs(model, G):
            if model.is_normal(S) and (G, S) not in kernels:
                obs["kernels"].append(f"normal {S} of {_name(G)} is not a kernel in scope")
            if model.is_conormal(S) and (G, S) not in images:
                obs["images"].append(f"conormal {S} of {_name(G)} is not an image in scope")
            if not model.is_conormal(S):
                continue
            try:
                i = model.embedding(S)
            except FormError:
                continue
            if not model.is_embedding(i) or model.kernel(i) != model.bottom(i.dom):
                obs["E"].append(f"embedding of {S} in {_name(G)} has kernel {model.kernel(i)}")
            below = [A for A in _subs(model, G) if model.leq(A, S)]
            for A, B in itertools.combinations_with_replacement(below, 2):
                lhs = model.inverse_image(i, model.join(A, B))
                rhs = model.join(model.inverse_image(i, A), model.inverse_image(i, B))
                if lhs != rhs:
                    obs["U"].append(f"embedding of {S} in {_name(G)} does not preserve {A} v {B}")
        for S in _subs(model, G):
            if model.is_normal(S):
                try:
                    p = model.projection(S)
                except FormError:
                    continue
                if model.image(p) != model.top(p.cod):
                    obs["E"].append(f"projection of {S} in {_name(G)} is not onto")
    return {k: sorted(set(v)) for k, v in obs.items()}


# -- duality -----------------------------------------------------------------------


@dataclass
class DualityReport:
    primal: AxiomReport
    dual: AxiomReport

    @property
    def matches(self) -> bool:
        return self.primal.verdicts() == self.dual.verdicts()


def duality_selftest(model: FormModel, scope: Scope, which=AXIOMS) -> DualityReport:
    primal = check_axioms(model, scope, which)
    dual = check_axioms(DualModel(model), scope.dual(), which)
    return DualityReport(primal, dual)


def involution_violations(model: FormModel, scope: Scope) -> list[str]:
    """Compare every contract query on ``model`` and on its double dual."""
    dd = DualModel(DualModel(model))
    bad: list[str] = []

    def same(label, a, b):
        if a != b:
            bad.append(f"{label}: {a!r} != {b!r}")

    closed = close_scope(model, scope)
    for X in closed.objects:
        subs = model.subobjects(X)
        same(f"subobjects of {_name(X)}", subs, dd.subobjects(X))
        same(f"top of {_name(X)}", model.top(X), dd.top(X))
        same(f"bottom of {_name(X)}", model.bottom(X), dd.bottom(X))
        same(f"identity of {_name(X)}", model.identity(X), dd.identity(X))
        for A in subs:
            same(f"normal {A}", model.is_normal(A), dd.is_normal(A))
            same(f"conormal {A}", model.is_conormal(A), dd.is_conormal(A))
            for kind in ("embedding", "projection"):
                try:
                    expected = getattr(model, kind)(A)
                except FormError as exc:
                    expected = type(exc)
                try:
                    got = getattr(dd, kind)(A)
                except FormError as exc:
                    got = type(exc)
                same(f"{kind} of {A} in {_name(X)}", expected, got)
            for B in subs:
                same(f"{A} <= {B}", model.leq(A, B), dd.leq(A, B))
                same(f"{A} ^ {B}", model.meet(A, B), dd.meet(A, B))
                same(f"{A} v {B}", model.join(A, B), dd.join(A, B))
    for X in closed.base:
        for Y in closed.base:
            fs = scope.morphisms(model, X, Y)
            same(f"morphisms {_name(X)} -> {_name(Y)}", model.morphisms(X, Y), dd.morphisms(X, Y))
            for f in fs:
                same(f"kernel of {f}", model.kernel(f), dd.kernel(f))
                same(f"image of {f}", model.image(f), dd.image(f))
                for A in model.subobjects(X):
                    same(f"{f} {A}", model.direct_image(f, A), dd.direct_image(f, A))
                for B in model.subobjects(Y):
                    same(f"{f}^-1 {B}", model.inverse_image(f, B), dd.inverse_image(f, B))
                for Z in closed.base:
                    for g in scope.morphisms(model, Y, Z):
                        same(f"{g} . {f}", model.compose(g, f), dd.compose(g, f))
    return bad


# -- deliberately broken model used to test the checker ----------------------------------


class WithheldProjectionModel(GroupModel):
    """A group model whose projection provider refuses the listed subobjects."""

    def __init__(self, withheld):
        super().__init__()
        self.withheld = {(S.parent, S.mask) for S in withheld}
        self.name = "Grp-faulted"

    def _projection(self, S):
        if (S.parent, S.mask) in self.withheld:
            raise ModelCapabilityError(f"no projection provided for {S} of {_name(S.parent)}")
        return super()._projection(S)
