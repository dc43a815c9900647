"""A line-oriented script language for declaring objects and running checks.

Declarations::

    group N cyclic k | dihedral k | symmetric k | klein | catalog NAME | table n
    ring N zmod k | zero | table n one=i        (table rows follow; rings put
                                                 a line ``mul`` between the two tables)
    hom f : A -> B map i0 i1 ...
    hom f = embed S | proj S | compose g h | inverse g
    sub S of G = {i,j,...} | top | bot
    sub S = ker f | im f | pre f T | img f T   (inverse or direct image of T)
    zigzag Z = f fwd, g bwd, ...
    scope SC = A, B, ... [homs f, g, ...]

Commands::

    chase Z fwd|bwd S     induce Z     oracle Z     pyramid Z
    verify axioms SCOPE
    verify diamond G A B
    verify doublequotient G N S      (S is read in the quotient G/N)
    verify imagetheorem f W X
    verify butterfly G S' S T' T
    verify modularlaw G X Y Z
    dualize on|off

Wherever a subobject is expected, a declared name, a literal ``{0,2}``,
``top`` or ``bot`` may be given.

After ``dualize on`` every statement is read in the dual model.  A map
declared as ``hom f : A -> B`` is then the reversed arrow ``B -> A``, the
order on subobjects is reversed (so ``top`` names the trivial subgroup and
``bot`` the whole group), kernels and images swap, and so do embeddings
and projections.  Literal element sets still name the same subgroups.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .axioms import Scope, check_axioms, grp_standard, ring_standard
from .catalog import group_by_name
from .concrete import GroupModel
from .core import DualModel, FormModel, Morphism, SubObject, object_name, op
from .engine import (
    BWD,
    FWD,
    Zigzag,
    build_pyramid,
    chase,
    check_pyramid,
    induced_homomorphism,
    relation_oracle,
)
from .errors import (
    ArityError,
    FormError,
    ModelCapabilityError,
    ParentMismatchError,
    ScriptError,
    UndefinedNameError,
)
from .groups import GroupTable, make_group
from .rings import RingModel, RingTable, zero_ring, zmod
from .theorems import (
    TheoremReport,
    butterfly,
    diamond_iso,
    double_quotient,
    image_theorem,
    restricted_modular_law,
)

BUILTIN_SCOPES = {"grp-standard": grp_standard, "ring-standard": ring_standard}
GROUP_KINDS = ("cyclic", "dihedral", "symmetric", "klein", "catalog", "table")
VERIFY_ARITY = {
    "axioms": 1,
    "diamond": 3,
    "doublequotient": 3,
    "imagetheorem": 3,
    "butterfly": 5,
    "modularlaw": 4,
}
COMMANDS = ("chase", "induce", "oracle", "pyramid", "verify", "dualize")

_TOKEN = re.compile(r"\{[^{}]*\}?|->|[:,=]|[^\s:,={}]+|\S")


@dataclass(frozen=True)
class Token:
    text: str
    column: int


@dataclass(frozen=True)
class Statement:
    kind: str
    args: tuple
    rows: tuple = ()
    line: int = field(default=0, compare=False)
    source: str = field(default="", compare=False)

    @property
    def is_command(self) -> bool:
        return self.kind in COMMANDS

    def text(self) -> str:
        return format_statement(self)


@dataclass(frozen=True)
class Script:
    statements: tuple

    def pretty(self) -> str:
        lines = []
        for st in self.statements:
            lines.append(st.text())
            lines += [" ".join(str(x) for x in row) if row != ("mul",) else "mul" for row in st.rows]
        return "\n".join(lines) + ("\n" if lines else "")


# -- parsing ---------------------------------------------------------------------------


def tokenize(text: str, line: int) -> list[Token]:
    out = []
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        if tok.startswith("{") and not tok.endswith("}"):
            raise ScriptError("unterminated subobject literal", line, m.start() + 1)
        if tok in ("{", "}") or (len(tok) == 1 and tok not in ":,=" and not re.match(r"[\w'.^+-]", tok)):
            raise ScriptError(f"unexpected character {tok!r}", line, m.start() + 1)
        out.append(Token(tok, m.start() + 1))
    return out


def parse_literal(tok: Token, line: int) -> tuple[int, ...]:
    body = tok.text[1:-1].strip()
    if not body:
        return ()
    items = []
    for part in body.split(","):
        part = part.strip()
        if not re.fullmatch(r"\d+", part):
            raise ScriptError(f"bad element {part!r} in subobject literal", line, tok.column)
        items.append(int(part))
    return tuple(sorted(set(items)))


def _literal_text(elements: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in elements) + "}"


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.index = 0
        self.declared: dict[str, set] = {k: set() for k in ("object", "hom", "sub", "zigzag", "scope")}
        self.statements: list[Statement] = []

    def run(self) -> Script:
        while self.index < len(self.lines):
            lineno = self.index + 1
            raw = self.lines[self.index].split("#", 1)[0]
            self.index += 1
            toks = tokenize(raw, lineno)
            if not toks:
                continue
            st = self.statement(toks, lineno, raw.strip())
            self.statements.append(st)
        return Script(tuple(self.statements))

    # helpers
    def _end(self, toks, lineno) -> int:
        return toks[-1].column + len(toks[-1].text) if toks else 1

    def _need(self, toks, i, lineno, what) -> Token:
        if i >= len(toks):
            raise ArityError(f"missing {what}", lineno, self._end(toks, lineno))
        return toks[i]

    def _expect(self, toks, i, lineno, text):
        tok = self._need(toks, i, lineno, repr(text))
        if tok.text != text:
            raise ScriptError(f"expected {text!r}, found {tok.text!r}", lineno, tok.column)

    def _no_more(self, toks, i, lineno):
        if i < len(toks):
            raise ArityError(f"unexpected {toks[i].text!r}", lineno, toks[i].column)

    def _name(self, tok: Token, lineno) -> str:
        if not re.fullmatch(r"[A-Za-z_][\w'.^+-]*", tok.text):
            raise ScriptError(f"bad name {tok.text!r}", lineno, tok.column)
        return tok.text

    def _declare(self, kind, tok, lineno) -> str:
        name = self._name(tok, lineno)
        if name in self.declared[kind] or (kind == "scope" and name in BUILTIN_SCOPES):
            raise ScriptError(f"{kind} {name!r} is already declared", lineno, tok.column)
        self.declared[kind].add(name)
        return name

    def _ref(self, kind, tok, lineno) -> str:
        if tok.text not in self.declared[kind] and not (kind == "scope" and tok.text in BUILTIN_SCOPES):
            raise UndefinedNameError(f"{kind} {tok.text!r} is not declared", lineno, tok.column)
        return tok.text

    def _int(self, tok, lineno) -> int:
        if not re.fullmatch(r"\d+", tok.text):
            raise ScriptError(f"expected a number, found {tok.text!r}", lineno, tok.column)
        return int(tok.text)

    def _subarg(self, tok, lineno) -> str:
        if tok.text.startswith("{"):
            return _literal_text(parse_literal(tok, lineno))
        if tok.text in ("top", "bot"):
            return tok.text
        return self._ref("sub", tok, lineno)

    def _rows(self, n, lineno, what) -> list[tuple[int, ...]]:
        rows = []
        while len(rows) < n:
            if self.index >= len(self.lines):
                raise ArityError(f"{what}: expected {n} rows, found {len(rows)}", lineno, 1)
            rl = self.index + 1
            raw = self.lines[self.index].split("#", 1)[0]
            self.index += 1
            toks = tokenize(raw, rl)
            if not toks:
                continue
            row = tuple(self._int(t, rl) for t in toks)
            if len(row) != n:
                raise ArityError(f"{what}: row has {len(row)} entries, expected {n}", rl, toks[0].column)
            rows.append(row)
        return rows

    def _comma_list(self, toks, i, lineno, stop=None):
        items = []
        while i < len(toks) and toks[i].text != stop:
            items.append(toks[i])
            i += 1
            if i < len(toks) and toks[i].text == ",":
                i += 1
                self._need(toks, i, lineno, "list item")
            elif i < len(toks) and toks[i].text != stop:
                raise ScriptError(f"expected ',', found {toks[i].text!r}", lineno, toks[i].column)
        return items, i

    # statements
    def statement(self, toks, lineno, source) -> Statement:
        head = toks[0].text
        handler = getattr(self, "_st_" + head, None)
        if handler is None:
            raise ScriptError(f"unknown statement {head!r}", lineno, toks[0].column)
        kind, args, rows = handler(toks, lineno)
        return Statement(kind, tuple(args), tuple(rows), lineno, source)

    def _st_group(self, toks, lineno):
        name_tok = self._need(toks, 1, lineno, "group name")
        kind_tok = self._need(toks, 2, lineno, "group kind")
        kind = kind_tok.text
        if kind not in GROUP_KINDS:
            raise ScriptError(f"unknown group kind {kind!r}", lineno, kind_tok.column)
        rows: list = []
        if kind == "klein":
            args = [kind]
            self._no_more(toks, 3, lineno)
        elif kind == "catalog":
            args = [kind, self._need(toks, 3, lineno, "catalog name").text]
            self._no_more(toks, 4, lineno)
        else:
            n = self._int(self._need(toks, 3, lineno, "size"), lineno)
            self._no_more(toks, 4, lineno)
            args = [kind, n]
            if kind == "table":
                rows = self._rows(n, lineno, "group table")
        name = self._declare("object", name_tok, lineno)
        return "group", [name, *args], rows

    def _st_ring(self, toks, lineno):
        name_tok = self._need(toks, 1, lineno, "ring name")
        kind_tok = self._need(toks, 2, lineno, "ring kind")
        kind = kind_tok.text
        rows: list = []
        if kind == "zmod":
            args = [kind, self._int(self._need(toks, 3, lineno, "modulus"), lineno)]
            self._no_more(toks, 4, lineno)
        elif kind == "zero":
            args = [kind]
            self._no_more(toks, 3, lineno)
        elif kind == "table":
            n = self._int(self._need(toks, 3, lineno, "size"), lineno)
            one_tok = self._need(toks, 4, lineno, "one=i")
            if one_tok.text != "one":
                raise ScriptError(f"expected 'one', found {one_tok.text!r}", lineno, one_tok.column)
            self._expect(toks, 5, lineno, "=")
            one = self._int(self._need(toks, 6, lineno, "identity element"), lineno)
            self._no_more(toks, 7, lineno)
            args = [kind, n, one]
            rows = self._rows(n, lineno, "addition table")
            while self.index < len(self.lines) and not self.lines[self.index].split("#", 1)[0].strip():
                self.index += 1
            sep_line = self.index + 1
            sep = self.lines[self.index].split("#", 1)[0].strip() if self.index < len(self.lines) else ""
            if sep != "mul":
                raise ScriptError("expected 'mul' after the addition table", sep_line, 1)
            self.index += 1
            rows += [("mul",)] + self._rows(n, lineno, "multiplication table")
        else:
            raise ScriptError(f"unknown ring kind {kind!r}", lineno, kind_tok.column)
        name = self._declare("object", name_tok, lineno)
        return "ring", [name, *args], rows

    def _st_hom(self, toks, lineno):
        name_tok = self._need(toks, 1, lineno, "hom name")
        sep = self._need(toks, 2, lineno, "':' or '='")
        if sep.text == ":":
            A = self._ref("object", self._need(toks, 3, lineno, "domain"), lineno)
            self._expect(toks, 4, lineno, "->")
            B = self._ref("object", self._need(toks, 5, lineno, "codomain"), lineno)
            self._expect(toks, 6, lineno, "map")
            data = [self._int(t, lineno) for t in toks[7:]]
            name = self._declare("hom", name_tok, lineno)
            return "hom", [name, A, B, *data], []
        if sep.text != "=":
            raise ScriptError(f"expected ':' or '=', found {sep.text!r}", lineno, sep.column)
        how = self._need(toks, 3, lineno, "embed, proj, compose or inverse")
        if how.text in ("embed", "proj"):
            args = [how.text, self._ref("sub", self._need(toks, 4, lineno, "subobject"), lineno)]
            self._no_more(toks, 5, lineno)
        elif how.text == "compose":
            g = self._ref("hom", self._need(toks, 4, lineno, "hom"), lineno)
            h = self._ref("hom", self._need(toks, 5, lineno, "hom"), lineno)
            self._no_more(toks, 6, lineno)
            args = [how.text, g, h]
        elif how.text == "inverse":
            args = [how.text, self._ref("hom", self._need(toks, 4, lineno, "hom"), lineno)]
            self._no_more(toks, 5, lineno)
        else:
            raise ScriptError(f"unknown hom construction {how.text!r}", lineno, how.column)
        name = self._declare("hom", name_tok, lineno)
        return "homdef", [name, *args], []

    def _st_sub(self, toks, lineno):
        name_tok = self._need(toks, 1, lineno, "subobject name")
        sep = self._need(toks, 2, lineno, "'of' or '='")
        if sep.text == "of":
            G = self._ref("object", self._need(toks, 3, lineno, "object"), lineno)
            self._expect(toks, 4, lineno, "=")
            spec = self._need(toks, 5, lineno, "subobject")
            if not (spec.text.startswith("{") or spec.text in ("top", "bot")):
                raise ScriptError(f"expected a subobject, found {spec.text!r}", lineno, spec.column)
            self._no_more(toks, 6, lineno)
            name = self._declare("sub", name_tok, lineno)
            return "sub", [name, G, self._subarg(spec, lineno)], []
        if sep.text != "=":
            raise ScriptError(f"expected 'of' or '=', found {sep.text!r}", lineno, sep.column)
        how = self._need(toks, 3, lineno, "ker, im, pre or img")
        f = self._ref("hom", self._need(toks, 4, lineno, "hom"), lineno)
        if how.text in ("ker", "im"):
            self._no_more(toks, 5, lineno)
            args = [how.text, f]
        elif how.text in ("pre", "img"):
            args = [how.text, f, self._subarg(self._need(toks, 5, lineno, "subobject"), lineno)]
            self._no_more(toks, 6, lineno)
        else:
            raise ScriptError(f"unknown subobject construction {how.text!r}", lineno, how.column)
        name = self._declare("sub", name_tok, lineno)
        return "subdef", [name, *args], []

    def _st_zigzag(self, toks, lineno):
        name_tok = self._need(toks, 1, lineno, "zigzag name")
        self._expect(toks, 2, lineno, "=")
        args = []
        i = 3
        self._need(toks, i, lineno, "step")
        while i < len(toks):
            h = self._ref("hom", toks[i], lineno)
            d = self._need(toks, i + 1, lineno, "direction")
            if d.text not in (FWD, BWD):
                raise ScriptError(f"expected fwd or bwd, found {d.text!r}", lineno, d.column)
            args += [h, d.text]
            i += 2
            if i < len(toks):
                self._expect(toks, i, lineno, ",")
                i += 1
                self._need(toks, i, lineno, "step")
        name = self._declare("zigzag", name_tok, lineno)
        return "zigzag", [name, *args], []

    def _st_scope(self, toks, lineno):
        name_tok = self._need(toks, 1, lineno, "scope name")
        self._expect(toks, 2, lineno, "=")
        self._need(toks, 3, lineno, "object")
        objs, i = self._comma_list(toks, 3, lineno, stop="homs")
        objects = [self._ref("object", t, lineno) for t in objs]
        homs: list[str] = []
        if i < len(toks):
            self._need(toks, i + 1, lineno, "hom")
            items, j = self._comma_list(toks, i + 1, lineno)
            homs = [self._ref("hom", t, lineno) for t in items]
        name = self._declare("scope", name_tok, lineno)
        return "scope", [name, *objects, *(["homs", *homs] if homs else [])], []

    def _st_chase(self, toks, lineno):
        Z = self._ref("zigzag", self._need(toks, 1, lineno, "zigzag"), lineno)
        d = self._need(toks, 2, lineno, "direction")
        if d.text not in (FWD, BWD):
            raise ScriptError(f"expected fwd or bwd, found {d.text!r}", lineno, d.column)
        S = self._subarg(self._need(toks, 3, lineno, "subobject"), lineno)
        self._no_more(toks, 4, lineno)
        return "chase", [Z, d.text, S], []

    def _single_zigzag(self, kind, toks, lineno):
        Z = self._ref("zigzag", self._need(toks, 1, lineno, "zigzag"), lineno)
        self._no_more(toks, 2, lineno)
        return kind, [Z], []

    def _st_induce(self, toks, lineno):
        return self._single_zigzag("induce", toks, lineno)

    def _st_oracle(self, toks, lineno):
        return self._single_zigzag("oracle", toks, lineno)

    def _st_pyramid(self, toks, lineno):
        return self._single_zigzag("pyramid", toks, lineno)

    def _st_dualize(self, toks, lineno):
        flag = self._need(toks, 1, lineno, "on or off")
        if flag.text not in ("on", "off"):
            raise ScriptError(f"expected on or off, found {flag.text!r}", lineno, flag.column)
        self._no_more(toks, 2, lineno)
        return "dualize", [flag.text], []

    def _st_verify(self, toks, lineno):
        what = self._need(toks, 1, lineno, "what to verify")
        if what.text not in VERIFY_ARITY:
            raise ScriptError(f"unknown verification {what.text!r}", lineno, what.column)
        n = VERIFY_ARITY[what.text]
        rest = toks[2:]
        if len(rest) != n:
            col = rest[n].column if len(rest) > n else self._end(toks, lineno)
            raise ArityError(f"verify {what.text} takes {n} argument(s), got {len(rest)}", lineno, col)
        if what.text == "axioms":
            args = [self._ref("scope", rest[0], lineno)]
        elif what.text == "imagetheorem":
            args = [self._ref("hom", rest[0], lineno)] + [self._subarg(t, lineno) for t in rest[1:]]
        else:
            args = [self._ref("object", rest[0], lineno)] + [self._subarg(t, lineno) for t in rest[1:]]
        return "verify", [what.text, *args], []


def parse_script(text: str) -> Script:
    return _Parser(text).run()


def format_statement(st: Statement) -> str:
    a = [str(x) for x in st.args]
    k = st.kind
    if k == "group":
        return "group " + " ".join(a)
    if k == "ring":
        if a[1] == "table":
            return f"ring {a[0]} table {a[2]} one={a[3]}"
        return "ring " + " ".join(a)
    if k == "hom":
        return f"hom {a[0]} : {a[1]} -> {a[2]} map " + " ".join(a[3:])
    if k == "homdef":
        return f"hom {a[0]} = " + " ".join(a[1:])
    if k == "sub":
        return f"sub {a[0]} of {a[1]} = {a[2]}"
    if k == "subdef":
        return f"sub {a[0]} = " + " ".join(a[1:])
    if k == "zigzag":
        steps = [f"{a[i]} {a[i + 1]}" for i in range(1, len(a), 2)]
        return f"zigzag {a[0]} = " + ", ".join(steps)
    if k == "scope":
        if "homs" in a:
            cut = a.index("homs")
            return f"scope {a[0]} = " + ", ".join(a[1:cut]) + " homs " + ", ".join(a[cut + 1:])
        return f"scope {a[0]} = " + ", ".join(a[1:])
    return " ".join([k, *a])


# -- execution --------------------------------------------------------------------------


@dataclass
class Record:
    line: int
    statement: str
    ok: bool
    output: list = field(default_factory=list)
    code: str = ""
    message: str = ""

    def verdict(self) -> str:
        return "OK" if self.ok else f"FAIL {self.code}: {self.message}"

    def text(self) -> str:
        lines = [f"[{self.line}] {self.statement}"]
        lines += ["  " + x for x in self.output]
        lines.append(self.verdict())
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "line": self.line,
            "statement": self.statement,
            "status": "ok" if self.ok else "fail",
            "code": self.code,
            "message": self.message,
            "output": list(self.output),
        }


class _Failed(Exception):
    def __init__(self, code: str, message: str, output=()):
        super().__init__(message)
        self.code = code
        self.message = message
        self.output = list(output)


class Runner:
    """Executes statements in order, keeping declared names and the dual flag."""

    def __init__(self):
        self.dual = False
        self.objects: dict[str, object] = {}
        self.homs: dict[str, tuple[Morphism, bool]] = {}
        self.subs: dict[str, SubObject] = {}
        self.zigzags: dict[str, tuple] = {}
        self.scopes: dict[str, tuple] = {}
        self._models = {"group": GroupModel(), "ring": RingModel()}

    # resolution
    def base_model(self, X) -> FormModel:
        if isinstance(X, GroupTable):
            return self._models["group"]
        if isinstance(X, RingTable):
            return self._models["ring"]
        raise ModelCapabilityError(f"no model for {object_name(X)}")

    def model(self, X) -> FormModel:
        base = self.base_model(X)
        return DualModel(base) if self.dual else base

    def hom(self, name: str) -> Morphism:
        m, dual = self.homs[name]
        return m if dual == self.dual else op(m)

    def sub(self, spec: str, X) -> SubObject:
        model = self.model(X)
        if spec == "top":
            return model.top(X)
        if spec == "bot":
            return model.bottom(X)
        if spec.startswith("{"):
            elements = [int(x) for x in spec[1:-1].split(",") if x]
            return self.base_model(X).subobject(X, elements)
        S = self.subs[spec]
        if S.parent != X:
            raise ParentMismatchError(f"{spec} is a subobject of {object_name(S.parent)}, not {object_name(X)}")
        return S

    def zigzag(self, name: str) -> Zigzag:
        steps = self.zigzags[name]
        return Zigzag.of(*[(self.hom(h), d) for h, d in steps])

    # statements
    def execute(self, st: Statement) -> Record | None:
        try:
            output = getattr(self, "_x_" + st.kind)(*st.args, rows=st.rows) or []
        except _Failed as exc:
            return Record(st.line, st.text(), False, exc.output, exc.code, exc.message)
        except FormError as exc:
            return Record(st.line, st.text(), False, [], exc.code, exc.message)
        except KeyError as exc:
            # the name was declared, but its declaration failed earlier
            msg = f"{exc.args[0]} has no value because its declaration failed"
            return Record(st.line, st.text(), False, [], "undefined-name", msg)
        if st.is_command:
            return Record(st.line, st.text(), True, output)
        return None

    def _x_group(self, name, kind, *params, rows=()):
        if kind == "catalog":
            try:
                G = group_by_name(params[0])
            except KeyError:
                raise _Failed("undefined-name", f"no catalog group {params[0]!r}") from None
        elif kind == "table":
            G = GroupTable(name, rows)
        else:
            G = make_group(kind, params[0] if params else None, name=name)
        self.objects[name] = G

    def _x_ring(self, name, kind, *params, rows=()):
        if kind == "zmod":
            R = zmod(params[0], name)
        elif kind == "zero":
            R = zero_ring(name)
        else:
            n, one = params
            R = RingTable(name, rows[:n], rows[n + 1:], one)
        self.objects[name] = R

    def _x_hom(self, name, A, B, *data, rows=()):
        X, Y = self.objects[A], self.objects[B]
        model = self.base_model(X)
        if model is not self.base_model(Y):
            raise _Failed("invalid-morphism", f"{A} and {B} live in different models")
        self.homs[name] = (model.morphism(X, Y, data), False)

    def _x_homdef(self, name, how, *args, rows=()):
        if how in ("embed", "proj"):
            S = self.subs[args[0]]
            model = self.model(S.parent)
            m = model.embedding(S) if how == "embed" else model.projection(S)
        elif how == "compose":
            g, h = self.hom(args[0]), self.hom(args[1])
            m = self.model(h.cod).compose(g, h)
        else:
            f = self.hom(args[0])
            m = self.model(f.dom).invert(f)
        self.homs[name] = (m, self.dual)

    def _x_sub(self, name, G, spec, rows=()):
        self.subs[name] = self.sub(spec, self.objects[G])

    def _x_subdef(self, name, how, f, *spec, rows=()):
        m = self.hom(f)
        model = self.model(m.dom)
        if how == "ker":
            S = model.kernel(m)
        elif how == "im":
            S = model.image(m)
        elif how == "pre":
            S = model.inverse_image(m, self.sub(spec[0], m.cod))
        else:
            S = model.direct_image(m, self.sub(spec[0], m.dom))
        self.subs[name] = S

    def _x_zigzag(self, name, *flat, rows=()):
        steps = tuple((flat[i], flat[i + 1]) for i in range(0, len(flat), 2))
        self.zigzags[name] = steps
        self.zigzag(name)

    def _x_scope(self, name, *items, rows=()):
        if "homs" in items:
            cut = items.index("homs")
            self.scopes[name] = (items[:cut], items[cut + 1:])
        else:
            self.scopes[name] = (items, ())

    def _x_dualize(self, flag, rows=()):
        self.dual = flag == "on"
        return [f"reading: {'dual' if self.dual else 'primal'}"]

    def _x_chase(self, Z, direction, spec, rows=()):
        z = self.zigzag(Z)
        nodes = z.nodes
        start = nodes[0] if direction == FWD else nodes[-1]
        model = self.model(start)
        trace = chase(model, z, self.sub(spec, start), direction)
        order = range(len(nodes)) if direction == FWD else range(len(nodes) - 1, -1, -1)
        return [f"X{i} {object_name(nodes[i])}: {S}" for i, S in zip(order, trace.subobjects)]

    def _x_induce(self, Z, rows=()):
        z = self.zigzag(Z)
        model = self.model(z.nodes[0])
        pyr = build_pyramid(model, z)
        h = induced_homomorphism(model, z, pyr)
        out = [f"pyramid: {len(pyr.nodes)} nodes"]
        out.append(f"induced: {h} : {object_name(h.dom)} -> {object_name(h.cod)}")
        out.append(f"isomorphism: {'yes' if model.is_isomorphism(h) else 'no'}")
        return out

    def _x_oracle(self, Z, rows=()):
        z = self.zigzag(Z)
        report = relation_oracle(self.model(z.nodes[0]), z)
        hom = "n/a" if report.is_hom is None else _yes(report.is_hom)
        return [
            f"relation: {report.relation.describe()}",
            f"function: {_yes(report.is_function)}",
            f"total: {_yes(report.is_total)}",
            f"homomorphism: {hom}",
        ]

    def _x_pyramid(self, Z, rows=()):
        z = self.zigzag(Z)
        model = self.model(z.nodes[0])
        pyr = build_pyramid(model, z)
        out = pyr.render(model)
        problems = check_pyramid(model, pyr)
        if problems:
            raise _Failed("internal-consistency", f"{len(problems)} pyramid defect(s)", out + problems)
        return out

    def _x_verify(self, what, *args, rows=()):
        if what == "axioms":
            return self._verify_axioms(args[0])
        if what == "imagetheorem":
            f = self.hom(args[0])
            model = self.model(f.dom)
            report = image_theorem(model, f, self.sub(args[1], f.dom), self.sub(args[2], f.dom))
        else:
            G = self.objects[args[0]]
            model = self.model(G)
            if what == "doublequotient":
                N = self.sub(args[1], G)
                Q = model.projection(N).cod
                report = double_quotient(model, N, self.sub(args[2], Q))
            else:
                subs = [self.sub(a, G) for a in args[1:]]
                fn = {"diamond": diamond_iso, "butterfly": butterfly, "modularlaw": restricted_modular_law}[what]
                report = fn(model, *subs)
        out = report_lines(report)
        if not report.passed:
            raise _Failed("verification-failed", "; ".join(report.failures()), out)
        return out

    def _verify_axioms(self, name):
        if name in BUILTIN_SCOPES:
            scope = BUILTIN_SCOPES[name]()
        else:
            objs, homs = self.scopes[name]
            objects = [self.objects[o] for o in objs]
            table: dict = {}
            for h in homs:
                f = self.hom(h)
                table.setdefault((f.dom, f.cod), []).append(f)
            scope = Scope(objects, table or None, name=name)
        base = self.base_model(scope.objects[0])
        if any(self.base_model(X) is not base for X in scope.objects):
            raise _Failed("model-capability", "scope mixes groups and rings")
        model = DualModel(base) if self.dual else base
        report = check_axioms(model, scope)
        out = [f"model: {model.name}", *report.lines()]
        if not report.passed():
            raise _Failed("axiom-violation", f"{report.total()} violation(s)", out)
        return out


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def report_lines(report: TheoremReport) -> list[str]:
    out = [f"theorem: {report.theorem}"]
    out += [f"hypothesis {k}: {'holds' if v else 'fails'}" for k, v in report.hypotheses.items()]
    out += [f"clause {k}: {'holds' if v else 'fails'}" for k, v in report.clauses.items()]
    for name in report.zigzags:
        h = report.isomorphisms.get(name)
        if h is not None:
            out.append(f"iso {name}: {h} : {object_name(h.dom)} -> {object_name(h.cod)}")
        else:
            out.append(f"iso {name}: not induced")
        w = report.witnesses.get(name, {})
        out.append(f"witnesses {name}: " + " ".join(f"{k}={_yes(v)}" for k, v in w.items()))
    out += [f"note: {n}" for n in report.notes]
    out.append(f"verdict: {report.verdict}")
    return out


def execute_script(script: Script, *, fail_fast: bool = False) -> tuple[int, list[Record]]:
    runner = Runner()
    records: list[Record] = []
    for st in script.statements:
        rec = runner.execute(st)
        if rec is None:
            continue
        records.append(rec)
        if fail_fast and not rec.ok:
            break
    return (0 if all(r.ok for r in records) else 1), records


def render_records(records: list[Record], fmt: str = "text") -> str:
    if fmt == "json":
        return "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in records)
    return "".join(r.text() + "\n" for r in records)


def run_text(text: str, *, fmt: str = "text", fail_fast: bool = False) -> tuple[int, str]:
    """Parse and execute; a parse error is reported as a single failed record."""
    try:
        script = parse_script(text)
    except ScriptError as exc:
        rec = Record(exc.line, "", False, [], exc.code, f"line {exc.line}, column {exc.column}: {exc.message}")
        return 2, render_records([rec], fmt)
    code, records = execute_script(script, fail_fast=fail_fast)
    return code, render_records(records, fmt)
