"""The acceptance suite, shared by ``dualform selftest`` and the test-suite.

Every criterion returns a :class:`CriterionResult`.  Results never contain
timings, so the rendered output is byte-for-byte reproducible for a fixed
seed and group bound.

``Settings.max_order`` caps every group range used below; each criterion
also has its own bound (8, 12, 16, or S4 at 24) and the smaller one wins.
"""

from __future__ import annotations

import json
import random
import subprocess
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .axioms import (
    Scope,
    check_axioms,
    duality_selftest,
    grp_standard,
    involution_violations,
    ring_standard,
)
from .catalog import group_by_name, groups_up_to
from .concrete import GroupModel
from .core import FormModel, Morphism, SubObject, bits
from .engine import (
    BWD,
    FWD,
    Zigzag,
    build_pyramid,
    induced_homomorphism,
    induces_homomorphism,
    path_independence_violations,
    projection_diamond_violations,
    relation_oracle,
    vertical_law_violations,
)
from .errors import FormError, NotConormalError
from .groups import GroupTable, subgroup_masks
from .rings import RingModel, RingTable, classify_subobject, zmod
from .theorems import (
    butterfly,
    diamond_iso,
    double_quotient,
    image_theorem,
    modular_counterexample,
    restricted_modular_law,
)

CRITERIA = tuple(range(1, 13))
MAX_FAILURES_SHOWN = 5


@dataclass(frozen=True)
class Settings:
    max_order: int = 24
    seed: int = 1
    zigzags: int = 5000
    s4_tuples: int = 1000


@dataclass
class CriterionResult:
    number: int
    title: str
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f", {k}={v}" for k, v in sorted(self.details.items()))
        return (f"criterion {self.number:2d} {status}: {self.title} "
                f"({self.checked} checks, {len(self.failures)} failures{extra})")

    def as_dict(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "checked": self.checked,
            "failure_count": len(self.failures),
            "failures": self.failures[:MAX_FAILURES_SHOWN],
            "details": self.details,
        }


GRP = GroupModel()
RING = RingModel()


def _groups(bound: int, settings: Settings) -> list[GroupTable]:
    return groups_up_to(min(bound, settings.max_order))


def _capped(scope: Scope, settings: Settings) -> Scope:
    objects = [X for X in scope.objects if X.order <= settings.max_order]
    return Scope(objects, scope.homs, scope.closure_depth, scope.name)


# -- independent brute-force helpers (element arithmetic only) --------------------------


def _size(mask: int) -> int:
    return bin(mask).count("1")


@lru_cache(maxsize=None)
def _normal_in(G: GroupTable, inner: int, outer: int) -> bool:
    """``inner`` is a subgroup of ``outer`` closed under conjugation by ``outer``."""
    if inner & ~outer:
        return False
    t, inv = G.table, G.inverse
    for g in bits(outer):
        for h in bits(inner):
            if not (inner >> t[t[g][h]][inv[g]]) & 1:
                return False
    return True


@lru_cache(maxsize=None)
def _span(G: GroupTable, mask: int) -> int:
    """The subgroup generated by ``mask``, by repeated multiplication."""
    members = set(bits(mask)) | {0}
    while True:
        new = {G.table[a][b] for a in members for b in members} - members
        if not new:
            return sum(1 << x for x in members)
        members |= new


def _image_mask(f: Morphism, mask: int) -> int:
    out = 0
    for x in bits(mask):
        out |= 1 << f.data[x]
    return out


# -- criteria ------------------------------------------------------------------------------


def criterion_1(settings: Settings) -> CriterionResult:
    res = CriterionResult(1, "axiom certification on the group and ring scopes")
    for model, scope in ((GRP, grp_standard()), (RING, ring_standard())):
        report = check_axioms(model, _capped(scope, settings))
        res.checked += sum(report.counts.values())
        for axiom, bad in report.violations.items():
            for w in bad:
                res.fail(f"{model.name} axiom {axiom}: {w}")
    return res


def criterion_2(settings: Settings) -> CriterionResult:
    res = CriterionResult(2, "duality: dual verdicts match and double dual answers identically")
    for model, scope in ((GRP, grp_standard()), (RING, ring_standard())):
        scope = _capped(scope, settings)
        report = duality_selftest(model, scope)
        res.checked += sum(report.dual.counts.values())
        for axiom, ok in report.primal.verdicts().items():
            if report.dual.verdicts().get(axiom) != ok:
                res.fail(f"{model.name} axiom {axiom}: primal {ok}, dual {report.dual.verdicts().get(axiom)}")
        bad = involution_violations(model, scope)
        res.checked += 1
        res.failures += [f"{model.name} double dual: {w}" for w in bad]
    return res


def random_zigzags(settings: Settings) -> list[Zigzag]:
    """Seeded zigzags of length 1..5 over homs between groups of order at most 8."""
    rng = random.Random(settings.seed)
    groups = _groups(8, settings)
    out = []
    for _ in range(settings.zigzags):
        length = rng.randint(1, 5)
        X = rng.choice(groups)
        steps = []
        for _ in range(length):
            Y = X if rng.random() < 0.5 else rng.choice(groups)
            direction = rng.choice((FWD, BWD))
            homs = GRP.morphisms(X, Y) if direction == FWD else GRP.morphisms(Y, X)
            steps.append((rng.choice(homs), direction))
            X = Y
        out.append(Zigzag.of(*steps))
    return out


@lru_cache(maxsize=4)
def _zigzag_runs(settings: Settings) -> tuple:
    """For each random zigzag: (zigzag, induces, oracle, induced map or None, error)."""
    runs = []
    for z in random_zigzags(settings):
        try:
            induces = induces_homomorphism(GRP, z)
            oracle = relation_oracle(GRP, z)
            h = induced_homomorphism(GRP, z) if induces else None
            runs.append((z, induces, oracle, h, None))
        except FormError as exc:
            runs.append((z, None, None, None, str(exc)))
    return tuple(runs)


def criterion_3(settings: Settings) -> CriterionResult:
    res = CriterionResult(3, "chase criterion agrees with the relation oracle on random zigzags")
    inducing = 0
    for i, (z, induces, oracle, h, err) in enumerate(_zigzag_runs(settings)):
        res.checked += 1
        if err is not None:
            res.fail(f"zigzag {i}: {err}")
            continue
        total_function = oracle.is_function and oracle.is_total
        if induces != total_function:
            res.fail(f"zigzag {i}: chase criterion {induces}, oracle total function {total_function}")
        if induces:
            inducing += 1
            if h.data != oracle.relation.as_map():
                res.fail(f"zigzag {i}: induced {h} but oracle {oracle.relation.describe()}")
    res.details["inducing"] = inducing
    return res


def criterion_4(settings: Settings) -> CriterionResult:
    res = CriterionResult(4, "zigzags inducing in both directions give inverse isomorphisms")
    for i, (z, induces, _, h, err) in enumerate(_zigzag_runs(settings)):
        if err is not None or not induces:
            continue
        back = z.opposite()
        try:
            if not induces_homomorphism(GRP, back):
                continue
            k = induced_homomorphism(GRP, back)
        except FormError as exc:
            res.fail(f"zigzag {i} opposite: {exc}")
            continue
        res.checked += 1
        X0, Xn = z.nodes[0], z.nodes[-1]
        if GRP.compose(k, h) != GRP.identity(X0) or GRP.compose(h, k) != GRP.identity(Xn):
            res.fail(f"zigzag {i}: {h} and {k} are not mutually inverse")
    return res


def criterion_5(settings: Settings) -> CriterionResult:
    res = CriterionResult(5, "projection diamond identity for all normal pairs")
    for G in _groups(12, settings):
        normal = [S for S in GRP.subobjects(G) if GRP.is_normal(S)]
        for N in normal:
            for R in normal:
                res.checked += len(GRP.subobjects(GRP.projection(N).cod))
                res.failures += [f"{G.name}: {w}" for w in projection_diamond_violations(GRP, N, R)]
    return res


def criterion_6(settings: Settings) -> CriterionResult:
    res = CriterionResult(6, "pyramid path independence and vertical laws")
    pyramids = 0
    for i, (z, *_rest) in enumerate(_zigzag_runs(settings)):
        if len(z) > 3:
            continue
        try:
            pyr = build_pyramid(GRP, z)
        except FormError as exc:
            res.fail(f"zigzag {i}: {exc}")
            continue
        pyramids += 1
        res.checked += sum(len(GRP.subobjects(X)) for X in pyr.nodes.values())
        res.failures += [f"zigzag {i}: {w}" for w in path_independence_violations(GRP, pyr)]
        res.failures += [f"zigzag {i}: {w}" for w in vertical_law_violations(GRP, pyr)]
    res.details["pyramids"] = pyramids
    return res


def _theorem_check(res: CriterionResult, label: str, report, need=("engine", "oracle")) -> None:
    res.checked += 1
    if not report.passed:
        res.fail(f"{label}: {'; '.join(report.failures())}")
        return
    for name, w in report.witnesses.items():
        missing = [k for k in need if k not in w]
        if missing:
            res.fail(f"{label}: {name} lacks witness {', '.join(missing)}")


def criterion_7(settings: Settings) -> CriterionResult:
    res = CriterionResult(7, "diamond isomorphism theorem, exhaustive")
    for G in _groups(16, settings):
        subs = GRP.subobjects(G)
        for A in subs:
            for B in subs:
                AvB = _span(G, A.mask | B.mask)
                if not _normal_in(G, A.mask, AvB):
                    continue
                label = f"{G.name} A={A} B={B}"
                try:
                    _theorem_check(res, label, diamond_iso(GRP, A, B))
                except FormError as exc:
                    res.fail(f"{label}: {exc}")
                if _size(B.mask) * _size(A.mask) != _size(AvB) * _size(A.mask & B.mask):
                    res.fail(f"{label}: |B/(A^B)| != |(AvB)/A|")
    return res


def _double_quotient_cases(res: CriterionResult, model: FormModel, objects, ideals_only: bool) -> None:
    for G in objects:
        for N in model.subobjects(G):
            if not model.is_normal(N):
                continue
            Q = model.projection(N).cod
            for S in model.subobjects(Q):
                if ideals_only and not model.is_normal(S):
                    continue
                label = f"{G.name} N={N} S={S}"
                try:
                    _theorem_check(res, label, double_quotient(model, N, S), need=())
                except FormError as exc:
                    res.fail(f"{label}: {exc}")


def _image_theorem_all_homs(res: CriterionResult, groups) -> int:
    """The equivalence and the quotient sizes for every hom and every valid pair.

    Uses element arithmetic only; :func:`_image_theorem_reports` runs the
    theorem's own construction.
    """
    triples = 0
    pairs = {}
    for A in groups:
        masks = subgroup_masks(A)
        pairs[A] = [(w, x, _normal_in(A, w, x)) for x in masks for w in masks if not w & ~x]
    for A in groups:
        masks = subgroup_masks(A)
        for B in groups:
            for f in GRP.morphisms(A, B):
                img = {m: _image_mask(f, m) for m in masks}
                ker = sum(1 << x for x, y in enumerate(f.data) if y == 0)
                for w, x, left in pairs[A]:
                    if ker & ~w:
                        continue
                    triples += 1
                    fw, fx = img[w], img[x]
                    right = _normal_in(B, fw, fx)
                    if left != right:
                        res.fail(f"{A.name}->{B.name} {f}: W <| X is {left} but fW <| fX is {right}")
                    elif left and _size(x) * _size(fw) != _size(fx) * _size(w):
                        res.fail(f"{A.name}->{B.name} {f}: |X/W| != |fX/fW|")
    return triples


def _image_theorem_reports(res: CriterionResult, model: FormModel, objects, targets,
                           one_per_class: bool, ideals_only: bool = False) -> int:
    """Run the theorem's construction; optionally one hom per (kernel, image) pair."""
    reports = 0
    for A in objects:
        subs = model.subobjects(A)
        for B in targets:
            seen = set()
            for f in model.morphisms(A, B):
                K, I = model.kernel(f), model.image(f)
                if one_per_class:
                    if (K, I) in seen:
                        continue
                    seen.add((K, I))
                for W in subs:
                    if not model.leq(K, W) or (ideals_only and not model.is_normal(W)):
                        continue
                    for X in subs:
                        if not model.leq(W, X) or not model.is_conormal(X):
                            continue
                        label = f"{A.name}->{B.name} {f} W={W} X={X}"
                        reports += 1
                        try:
                            _theorem_check(res, label, image_theorem(model, f, W, X), need=())
                        except FormError as exc:
                            res.fail(f"{label}: {exc}")
    return reports


def criterion_8(settings: Settings) -> CriterionResult:
    res = CriterionResult(8, "double quotient and image theorems, exhaustive, plus ring spot suite")
    groups = _groups(16, settings)
    _double_quotient_cases(res, GRP, groups, ideals_only=False)
    res.details["image_triples_all_homs"] = _image_theorem_all_homs(res, groups)
    res.details["image_reports"] = _image_theorem_reports(res, GRP, groups, groups, one_per_class=True)
    rings = [R for R in (zmod(6), ring_standard().objects[-1]) if R.order <= settings.max_order]
    _double_quotient_cases(res, RING, rings, ideals_only=True)
    targets = [R for R in ring_standard().objects if R.order <= settings.max_order]
    res.details["ring_image_reports"] = _image_theorem_reports(
        res, RING, rings, targets, one_per_class=False, ideals_only=True)
    return res


def _butterfly_sizes_agree(G: GroupTable, s1: int, s: int, t1: int, t: int) -> bool:
    p = s & t
    u, u1 = _span(G, s1 | p), _span(G, s1 | (s & t1))
    v, v1 = _span(G, p | t1), _span(G, (s1 & t) | t1)
    d = _span(G, (s1 & t) | (s & t1))
    a, b, c = _size(u) * _size(d), _size(p) * _size(u1), _size(v) * _size(d)
    return a == b and c == _size(p) * _size(v1)


def _butterfly_case(res: CriterionResult, G, S1, S, T1, T) -> None:
    label = f"{G.name} S'={S1} S={S} T'={T1} T={T}"
    try:
        _theorem_check(res, label, butterfly(GRP, S1, S, T1, T))
    except FormError as exc:
        res.fail(f"{label}: {exc}")
    if not _butterfly_sizes_agree(G, S1.mask, S.mask, T1.mask, T.mask):
        res.fail(f"{label}: butterfly objects have different sizes")


def criterion_9(settings: Settings) -> CriterionResult:
    res = CriterionResult(9, "butterfly lemma, exhaustive to order 12 and sampled in S4")
    for G in _groups(12, settings):
        subs = GRP.subobjects(G)
        pairs = [(N, S) for S in subs for N in subs if _normal_in(G, N.mask, S.mask)]
        for S1, S in pairs:
            for T1, T in pairs:
                _butterfly_case(res, G, S1, S, T1, T)
    if settings.max_order >= 24:
        rng = random.Random(settings.seed)
        G = group_by_name("S4")
        subs = GRP.subobjects(G)
        pairs = [(N, S) for S in subs for N in subs if _normal_in(G, N.mask, S.mask)]
        for _ in range(settings.s4_tuples):
            (S1, S), (T1, T) = rng.choice(pairs), rng.choice(pairs)
            _butterfly_case(res, G, S1, S, T1, T)
        res.details["s4_tuples"] = settings.s4_tuples
    return res


def _first_nonmodular(groups) -> tuple | None:
    """Brute force over subgroup triples with X <= Z, joins by repeated multiplication."""
    for G in groups:
        masks = subgroup_masks(G)
        for z in masks:
            for x in masks:
                if x & ~z:
                    continue
                for y in masks:
                    if _span(G, x | (y & z)) != _span(G, x | y) & z:
                        return G, x, y, z
    return None


def criterion_10(settings: Settings) -> CriterionResult:
    res = CriterionResult(10, "restricted modular law, exhaustive, and an unrestricted counterexample")
    groups = _groups(16, settings)
    for G in groups:
        subs = GRP.subobjects(G)
        for Z in subs:
            for X in subs:
                if not GRP.leq(X, Z):
                    continue
                for Y in subs:
                    first = GRP.is_normal(Y) and GRP.is_conormal(Z)
                    second = GRP.is_conormal(Y) and GRP.is_normal(X)
                    if not (first or second):
                        continue
                    res.checked += 1
                    report = restricted_modular_law(GRP, X, Y, Z)
                    if not report.passed:
                        res.fail(f"{G.name} X={X} Y={Y} Z={Z}: {'; '.join(report.failures())}")
    found = modular_counterexample(GRP, groups)
    brute = _first_nonmodular(groups)
    res.checked += 1
    if brute is None:
        if found is not None:
            res.fail(f"search reports {found.group.name} but brute force finds no violation")
        else:
            res.fail("no unrestricted modular-law violation in scope")
        return res
    if found is None:
        res.fail(f"search finds nothing, brute force finds {brute[0].name}")
        return res
    G, x, y, z = brute
    if found.group != G:
        res.fail(f"search reports {found.group.name}, brute force {G.name}")
    lhs = _span(found.group, found.X.mask | (found.Y.mask & found.Z.mask))
    rhs = _span(found.group, found.X.mask | found.Y.mask) & found.Z.mask
    if found.X.mask & ~found.Z.mask or lhs == rhs:
        res.fail(f"reported witness in {found.group.name} is not a violation")
    res.details["counterexample"] = f"{found.group.name} X={found.X} Y={found.Y} Z={found.Z}"
    return res


class AuditRingModel(RingModel):
    """Ring model that records every request for a canonical embedding or projection."""

    def __init__(self):
        super().__init__()
        self.requests: list[tuple[str, SubObject, bool]] = []

    def embedding(self, S):
        self.requests.append(("embedding", S, self._is_conormal(S)))
        return super().embedding(S)

    def projection(self, S):
        self.requests.append(("projection", S, self._is_normal(S)))
        return super().projection(S)


def criterion_11(settings: Settings) -> CriterionResult:
    res = CriterionResult(11, "ring partiality: classification and checked canonical maps")
    Z6 = zmod(6)
    kinds = [classify_subobject(Z6, S) for S in RING.subobjects(Z6)]
    normal, conormal = sum(k[0] for k in kinds), sum(k[1] for k in kinds)
    res.checked += 1
    if (normal, conormal) != (4, 1):
        res.fail(f"Z6 has {normal} normal and {conormal} conormal subobjects, expected 4 and 1")
    res.checked += 1
    try:
        RING.embedding(RING.subobject(Z6, [0, 3]))
        res.fail("embedding of {0,3} in Z6 did not fail")
    except NotConormalError as exc:
        if exc.code != "not-conormal":
            res.fail(f"embedding of {{0,3}} failed with {exc.code}")
    audit = AuditRingModel()
    objects = [R for R in ring_standard().objects if R.order <= settings.max_order]
    rng = random.Random(settings.seed)
    for _ in range(200):
        X = rng.choice(objects)
        steps = []
        for _ in range(rng.randint(1, 4)):
            Y = rng.choice(objects)
            direction = rng.choice((FWD, BWD))
            homs = audit.morphisms(X, Y) if direction == FWD else audit.morphisms(Y, X)
            if not homs:
                break
            steps.append((rng.choice(homs), direction))
            X = Y
        if not steps:
            continue
        z = Zigzag.of(*steps)
        try:
            build_pyramid(audit, z)
            if induces_homomorphism(audit, z):
                induced_homomorphism(audit, z)
        except FormError as exc:
            res.fail(f"ring zigzag: {exc}")
    spot = CriterionResult(0, "")
    _double_quotient_cases(spot, audit, objects, ideals_only=True)
    _image_theorem_reports(spot, audit, objects, objects, one_per_class=False, ideals_only=True)
    res.failures += spot.failures
    res.checked += len(audit.requests)
    unchecked = [(k, S) for k, S, ok in audit.requests if not ok]
    res.failures += [f"{k} requested for {S} of {S.parent.name} without existing" for k, S in unchecked]
    res.details["canonical_requests"] = len(audit.requests)
    return res


def _docs_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "docs" / "examples"


def criterion_12(settings: Settings) -> CriterionResult:
    res = CriterionResult(12, "CLI determinism and documented example scripts")
    cmd = [sys.executable, "-m", "dualform.cli", "selftest", "--format", "json",
           "--max-order", "8", "--seed", str(settings.seed), "--criteria", "1-11"]
    outputs = [subprocess.run(cmd, capture_output=True, text=True).stdout for _ in range(2)]
    res.checked += 1
    if not outputs[0] or outputs[0] != outputs[1]:
        res.fail("selftest --format json differs between two runs")
    examples = sorted(_docs_dir().glob("*.ds"))
    if not examples:
        res.fail(f"no example scripts under {_docs_dir()}")
    for script in examples:
        expected = script.with_suffix(".out")
        res.checked += 1
        run = subprocess.run([sys.executable, "-m", "dualform.cli", "run", str(script)],
                             capture_output=True, text=True, cwd=script.parent)
        if not expected.exists():
            res.fail(f"{script.name}: no expected output")
        elif run.stdout != expected.read_text():
            res.fail(f"{script.name}: output differs from {expected.name}")
    res.details["examples"] = len(examples)
    return res


RUNNERS = {n: globals()[f"criterion_{n}"] for n in CRITERIA}


def run_criteria(settings: Settings, which=CRITERIA, fail_fast: bool = False):
    for n in which:
        result = RUNNERS[n](settings)
        yield result
        if fail_fast and not result.passed:
            return


def render(result: CriterionResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.as_dict(), sort_keys=True)
    lines = [result.line()]
    lines += [f"  {w}" for w in result.failures[:MAX_FAILURES_SHOWN]]
    return "\n".join(lines)
