"""Isomorphism theorems as executable constructions.

Each theorem checks its hypotheses, builds the zigzag used in its proof,
and certifies every claimed isomorphism with independent witnesses:

* ``engine``: the pyramid induces a morphism and it is an isomorphism;
* ``inverse``: the opposite zigzag induces the inverse morphism;
* ``oracle``: the composed element relation is the graph of the induced map
  (element-level models only);
* ``cardinality``: the end objects have the same number of elements
  (element-level models only).

A report passes only if every clause holds and each isomorphism has at
least two witnesses, all of them true.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FormModel, Morphism, SubObject, object_name
from .engine import (
    BWD,
    FWD,
    Zigzag,
    build_pyramid,
    check_pyramid,
    coquotient,
    induced_homomorphism,
    normality_relation,
    relation_oracle,
)
from .errors import FormError, HypothesisError, ParentMismatchError


@dataclass
class TheoremReport:
    theorem: str
    hypotheses: dict = field(default_factory=dict)
    clauses: dict = field(default_factory=dict)
    zigzags: dict = field(default_factory=dict)
    isomorphisms: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    trace: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if not all(self.hypotheses.values()) or not all(self.clauses.values()):
            return False
        for name in self.zigzags:
            w = self.witnesses.get(name, {})
            if len(w) < 2 or not all(w.values()):
                return False
        return True

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list[str]:
        out = [f"hypothesis {k}" for k, v in self.hypotheses.items() if not v]
        out += [f"clause {k}" for k, v in self.clauses.items() if not v]
        for name, w in self.witnesses.items():
            out += [f"{name}: witness {k}" for k, v in w.items() if not v]
            if len(w) < 2:
                out.append(f"{name}: fewer than two witnesses")
        return out


def _require(report: TheoremReport, name: str, value: bool) -> None:
    report.hypotheses[name] = value
    if not value:
        raise HypothesisError(f"{report.theorem}: hypothesis {name} fails")


def certify_isomorphism(model: FormModel, report: TheoremReport, name: str, z: Zigzag) -> Morphism | None:
    """Induce along ``z`` and record the witnesses for the claimed isomorphism."""
    report.zigzags[name] = z
    w: dict[str, bool] = {}
    report.witnesses[name] = w
    X0, Xn = z.nodes[0], z.nodes[-1]
    h = None
    try:
        pyr = build_pyramid(model, z)
        problems = check_pyramid(model, pyr)
        h = induced_homomorphism(model, z, pyr)
        w["engine"] = not problems and model.is_isomorphism(h)
        report.trace.append(f"{name}: induced {h}")
        for p in problems:
            report.trace.append(f"{name}: {p}")
    except FormError as exc:
        w["engine"] = False
        report.trace.append(f"{name}: {exc}")
    try:
        k = induced_homomorphism(model, z.opposite())
        w["inverse"] = h is not None and (
            model.compose(k, h) == model.identity(X0) and model.compose(h, k) == model.identity(Xn)
        )
    except FormError as exc:
        w["inverse"] = False
        report.trace.append(f"{name} (opposite): {exc}")
    if model.element_level:
        oracle = relation_oracle(model, z)
        w["oracle"] = h is not None and oracle.relation.as_map() == h.data
        w["cardinality"] = model.order(X0) == model.order(Xn)
    if h is not None:
        report.isomorphisms[name] = h
    return h


# -- normality lemmas ------------------------------------------------------------


def lemma_meet_normality(model: FormModel, A: SubObject, B: SubObject, C: SubObject) -> bool:
    """If ``A <| B`` and ``C`` is conormal then ``A^C <| B^C``."""
    report = TheoremReport("meet-normality")
    _require(report, "A <| B", normality_relation(model, A, B))
    _require(report, "C conormal", model.is_conormal(C))
    return normality_relation(model, model.meet(A, C), model.meet(B, C))


def lemma_join_normality(model: FormModel, A: SubObject, B: SubObject, C: SubObject) -> bool:
    """If ``A <| B`` and ``C <| BvC`` then ``AvC <| BvC``."""
    report = TheoremReport("join-normality")
    _require(report, "A <| B", normality_relation(model, A, B))
    BC = model.join(B, C)
    _require(report, "C <| BvC", normality_relation(model, C, BC))
    return normality_relation(model, model.join(A, C), BC)


# -- isomorphism theorems ------------------------------------------------------------


def diamond_iso(model: FormModel, A: SubObject, B: SubObject) -> TheoremReport:
    """``B/(A^B) ~ (AvB)/A`` when ``B`` is conormal and ``A <| AvB``."""
    report = TheoremReport("diamond")
    model._same_parent(A, B)
    AB = model.join(A, B)
    _require(report, "B conormal", model.is_conormal(B))
    _require(report, "A <| AvB", normality_relation(model, A, AB))
    meet = model.meet(A, B)
    report.clauses["A^B <| B"] = normality_relation(model, meet, B)
    iB = model.embedding(B)
    iAB = model.embedding(AB)
    z = Zigzag.of(
        (model.projection(model.inverse_image(iB, meet)), BWD),
        (iB, FWD),
        (iAB, BWD),
        (model.projection(model.inverse_image(iAB, A)), FWD),
    )
    certify_isomorphism(model, report, "B/(A^B) ~ (AvB)/A", z)
    return report


def double_quotient(model: FormModel, N: SubObject, S: SubObject) -> TheoremReport:
    """Correspondence between subobjects of ``G/N`` and subobjects above ``N``."""
    report = TheoremReport("double-quotient")
    _require(report, "N normal", model.is_normal(N))
    pN = model.projection(N)
    if S.parent != pN.cod:
        raise ParentMismatchError(f"{S} is not a subobject of {object_name(pN.cod)}")
    R = model.inverse_image(pN, S)
    report.trace.append(f"R = {R}")
    report.clauses["(i) N <= R and pi_N R = S"] = model.leq(N, R) and model.direct_image(pN, R) == S
    if model.is_conormal(S):
        report.notes.append("(ii) applies: S conormal")
        report.clauses["(ii) N\\R = S/1"] = coquotient(model, N, R) == model.embedding(S).dom
        if model.element_level and normality_relation(model, N, R):
            # In the concrete models the quotient R/N and the coquotient N\R are
            # canonically isomorphic; this is checked, not assumed to be equality.
            iR = model.embedding(R)
            z = Zigzag.of(
                (model.projection(model.inverse_image(iR, N)), BWD),
                (iR, FWD),
                (pN, FWD),
                (model.embedding(S), BWD),
            )
            certify_isomorphism(model, report, "R/N ~ N\\R", z)
    if model.is_normal(S):
        report.notes.append("(iii) applies: S normal")
        report.clauses["(iii) R normal"] = model.is_normal(R)
        z = Zigzag.of(
            (model.projection(R), BWD),
            (pN, FWD),
            (model.projection(S), FWD),
        )
        certify_isomorphism(model, report, "G/R ~ (G/N)/S", z)
    return report


def image_theorem(model: FormModel, f: Morphism, W: SubObject, X: SubObject) -> TheoremReport:
    """``W <| X`` iff ``fW <| fX``, and then ``X/W ~ fX/fW``."""
    report = TheoremReport("image")
    model._same_parent(W, X)
    if W.parent != f.dom:
        raise ParentMismatchError(f"{W} is not a subobject of {object_name(f.dom)}")
    _require(report, "Ker f <= W", model.leq(model.kernel(f), W))
    _require(report, "W <= X", model.leq(W, X))
    _require(report, "X conormal", model.is_conormal(X))
    fW, fX = model.direct_image(f, W), model.direct_image(f, X)
    left = normality_relation(model, W, X)
    right = normality_relation(model, fW, fX)
    report.trace.append(f"W <| X: {left}; fW <| fX: {right}")
    report.clauses["W <| X iff fW <| fX"] = left == right
    if left and right:
        iX = model.embedding(X)
        ifX = model.embedding(fX)
        z = Zigzag.of(
            (model.projection(model.inverse_image(iX, W)), BWD),
            (iX, FWD),
            (f, FWD),
            (ifX, BWD),
            (model.projection(model.inverse_image(ifX, fW)), FWD),
        )
        certify_isomorphism(model, report, "X/W ~ fX/fW", z)
    return report


def butterfly(model: FormModel, S1: SubObject, S: SubObject, T1: SubObject, T: SubObject) -> TheoremReport:
    """Zassenhaus: ``(S'v(S^T))/(S'v(S^T')) ~ ((S^T)vT')/((S'^T)vT')`` via the middle object."""
    report = TheoremReport("butterfly")
    for X in (S, T1, T):
        model._same_parent(S1, X)
    for label, X in (("S'", S1), ("S", S), ("T'", T1), ("T", T)):
        _require(report, f"{label} conormal", model.is_conormal(X))
    _require(report, "S' <| S", normality_relation(model, S1, S))
    _require(report, "T' <| T", normality_relation(model, T1, T))
    P = model.meet(S, T)
    U = model.join(S1, P)
    V = model.join(P, T1)
    _require(report, "S'v(S^T) conormal", model.is_conormal(U))
    _require(report, "(S^T)vT' conormal", model.is_conormal(V))
    U1 = model.join(S1, model.meet(S, T1))
    V1 = model.join(model.meet(S1, T), T1)
    D = model.join(model.meet(S1, T), model.meet(S, T1))
    report.clauses["S'v(S^T') <| S'v(S^T)"] = normality_relation(model, U1, U)
    report.clauses["(S'^T)vT' <| (S^T)vT'"] = normality_relation(model, V1, V)
    report.clauses["(S'^T)v(S^T') <| S^T"] = normality_relation(model, D, P)
    if not all(report.clauses.values()):
        return report

    iP, iS, iT = model.embedding(P), model.embedding(S), model.embedding(T)
    pS = model.projection(model.inverse_image(iS, S1))
    pT = model.projection(model.inverse_image(iT, T1))
    f = model.compose(pS, model.lift(iS, iP))
    g = model.compose(pT, model.lift(iT, iP))
    Kf, Kg = model.kernel(f), model.kernel(g)
    report.clauses["Ker f = S'^T"] = Kf == model.inverse_image(iP, model.meet(S1, T))
    report.clauses["Ker g = S^T'"] = Kg == model.inverse_image(iP, model.meet(S, T1))
    ef, eg = model.projection(Kf), model.projection(Kg)
    mf, mg = model.descend(ef, f), model.descend(eg, g)
    K = model.join(Kf, Kg)
    report.clauses["Ker f v Ker g = (S'^T)v(S^T')"] = K == model.inverse_image(iP, D)
    pK = model.projection(K)
    xf, xg = model.descend(ef, pK), model.descend(eg, pK)

    iU, iV = model.embedding(U), model.embedding(V)
    left = Zigzag.of(
        (model.projection(model.inverse_image(iU, U1)), BWD),
        (iU, FWD),
        (iS, BWD),
        (pS, FWD),
        (mf, BWD),
        (xf, FWD),
    )
    right = Zigzag.of(
        (model.projection(model.inverse_image(iV, V1)), BWD),
        (iV, FWD),
        (iT, BWD),
        (pT, FWD),
        (mg, BWD),
        (xg, FWD),
    )
    hL = certify_isomorphism(model, report, "left wing ~ middle", left)
    hR = certify_isomorphism(model, report, "right wing ~ middle", right)
    if hL is not None and hR is not None and model.is_isomorphism(hR):
        report.isomorphisms["left wing ~ right wing"] = model.compose(model.invert(hR), hL)
    if model.element_level:
        sizes = {model.order(left.nodes[0]), model.order(pK.cod), model.order(right.nodes[0])}
        report.clauses["equal cardinalities"] = len(sizes) == 1
    return report


def restricted_modular_law(model: FormModel, X: SubObject, Y: SubObject, Z: SubObject) -> TheoremReport:
    """``Xv(Y^Z) = (XvY)^Z`` for ``X <= Z`` under either normality hypothesis."""
    report = TheoremReport("modular-law")
    model._same_parent(X, Y)
    model._same_parent(X, Z)
    _require(report, "X <= Z", model.leq(X, Z))
    first = model.is_normal(Y) and model.is_conormal(Z)
    second = model.is_conormal(Y) and model.is_normal(X)
    _require(report, "(Y normal, Z conormal) or (Y conormal, X normal)", first or second)
    report.notes.append("branch: Y normal, Z conormal" if first else "branch: Y conormal, X normal")
    lhs = model.join(X, model.meet(Y, Z))
    rhs = model.meet(model.join(X, Y), Z)
    report.trace.append(f"Xv(Y^Z) = {lhs}; (XvY)^Z = {rhs}")
    report.clauses["Xv(Y^Z) = (XvY)^Z"] = lhs == rhs
    return report


@dataclass(frozen=True)
class ModularCounterexample:
    group: object
    X: SubObject
    Y: SubObject
    Z: SubObject
    lhs: SubObject
    rhs: SubObject


def modular_counterexample(model: FormModel, objects) -> ModularCounterexample | None:
    """First triple ``X <= Z`` (in the given object order) where the unrestricted law fails."""
    for G in objects:
        subs = model.subobjects(G)
        for Z in subs:
            for X in subs:
                if not model.leq(X, Z):
                    continue
                for Y in subs:
                    lhs = model.join(X, model.meet(Y, Z))
                    rhs = model.meet(model.join(X, Y), Z)
                    if lhs != rhs:
                        return ModularCounterexample(G, X, Y, Z, lhs, rhs)
    return None
