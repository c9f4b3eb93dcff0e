"""Rulepack DSL: decision trees for regulatory qualification, kept as data.

A rulepack is a plain-text file declaring one regulatory regime's
qualification procedure as an acyclic tree of yes/no question nodes and
verdict leaves. The first node in the file is the root. Grammar::

    rulebook  = "rulebook" STRING "version" STRING node+
    node      = qnode | vnode
    qnode     = "node" IDENT "{" "ask" STRING "kind" kind "cite" STRING
                branch branch "}"
    kind      = "boolean" | "derived" "(" IDENT ")"
    branch    = ("yes" | "no") "->" IDENT
    vnode     = "verdict" IDENT "{" "outcome" OUTCOME "reason" STRING
                "cite" STRING "}"
    OUTCOME   = "MD" | "ACCESSORY" | "NOT_MD" | "NOT_SOFTWARE"
    IDENT     = [a-z][a-z0-9_]*

Whitespace is insignificant; `#` starts a comment running to end of line.
Comments are non-semantic and dropped by the parser. Duplicate branch
labels on one node are a parse error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator, Mapping

from .issues import ValidationIssue, error, warning


class Outcome(Enum):
    """Closed set of qualification verdicts a rulepack leaf may carry."""

    MD = "MD"
    ACCESSORY = "ACCESSORY"
    NOT_MD = "NOT_MD"
    NOT_SOFTWARE = "NOT_SOFTWARE"


@dataclass(frozen=True)
class QuestionKind:
    """How a question node gets its answer: asked, or computed by a
    registered derived function (with optional manual override)."""

    name: str  # "boolean" | "derived"
    function: str | None = None

    @classmethod
    def boolean(cls) -> "QuestionKind":
        return cls("boolean")

    @classmethod
    def derived(cls, function: str) -> "QuestionKind":
        return cls("derived", function)

    @property
    def is_derived(self) -> bool:
        return self.name == "derived"

    def render(self) -> str:
        if self.is_derived:
            return f"derived({self.function})"
        return self.name


@dataclass(frozen=True)
class Node:
    """One rulepack node: a question (kind + branches) or a verdict leaf
    (outcome + reason). `pos` is the source location, ignored by equality."""

    id: str
    kind: QuestionKind | None = None
    prompt: str = ""
    citation: str = ""
    branches: Mapping[str, str] = field(default_factory=dict)
    outcome: Outcome | None = None
    reason: str = ""
    pos: tuple[int, int] | None = field(default=None, compare=False)

    @property
    def is_verdict(self) -> bool:
        return self.outcome is not None


@dataclass(frozen=True)
class Rulebook:
    id: str
    version: str
    root: str
    nodes: tuple[Node, ...]

    @cached_property
    def node_map(self) -> dict[str, Node]:
        # first declaration wins; duplicates are reported by the validator
        out: dict[str, Node] = {}
        for node in self.nodes:
            out.setdefault(node.id, node)
        return out

    def node(self, node_id: str) -> Node:
        return self.node_map[node_id]

    @property
    def question_ids(self) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes if not n.is_verdict)


class ParseError(ValueError):
    """Malformed rulepack source. Carries a 1-based line/column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, col {col})")
        self.message = message
        self.line = line
        self.col = col


_PUNCT = {"{", "}", "(", ")"}
_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r"}
_UNESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\t": "\\t", "\r": "\\r"}


@dataclass(frozen=True)
class _Token:
    kind: str  # "word" | "string" | "punct" | "arrow" | "eof"
    value: str
    line: int
    col: int


def _tokenize(source: str) -> Iterator[_Token]:
    line, col, i, n = 1, 1, 0, len(source)

    def advance(ch: str) -> None:
        nonlocal line, col
        if ch == "\n":
            line += 1
            col = 1
        else:
            col += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            advance(ch)
            i += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                advance(source[i])
                i += 1
            continue
        start_line, start_col = line, col
        if ch in _PUNCT:
            advance(ch)
            i += 1
            yield _Token("punct", ch, start_line, start_col)
            continue
        if ch == "-":
            if i + 1 < n and source[i + 1] == ">":
                advance("-")
                advance(">")
                i += 2
                yield _Token("arrow", "->", start_line, start_col)
                continue
            raise ParseError("unexpected character '-' (expected '->')",
                             start_line, start_col)
        if ch == '"':
            advance(ch)
            i += 1
            chars: list[str] = []
            while True:
                if i >= n:
                    raise ParseError("unterminated string", start_line, start_col)
                ch = source[i]
                if ch == "\n":
                    raise ParseError("unterminated string", start_line, start_col)
                if ch == '"':
                    advance(ch)
                    i += 1
                    break
                if ch == "\\":
                    if i + 1 >= n:
                        raise ParseError("unterminated string", start_line, start_col)
                    esc = source[i + 1]
                    if esc not in _ESCAPES:
                        raise ParseError(f"unknown escape '\\{esc}'", line, col)
                    chars.append(_ESCAPES[esc])
                    advance(ch)
                    advance(esc)
                    i += 2
                    continue
                chars.append(ch)
                advance(ch)
                i += 1
            yield _Token("string", "".join(chars), start_line, start_col)
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                advance(source[j])
                j += 1
            yield _Token("word", source[i:j], start_line, start_col)
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", start_line, start_col)

    # EOF position clamped inside the source bounds
    src_lines = source.split("\n")
    if len(src_lines) > 1 and src_lines[-1] == "":
        src_lines.pop()
    eof_line = max(1, len(src_lines))
    eof_col = len(src_lines[-1]) + 1 if src_lines else 1
    yield _Token("eof", "", eof_line, eof_col)


class _Parser:
    def __init__(self, source: str):
        self._tokens = list(_tokenize(source))
        self._i = 0

    @property
    def _cur(self) -> _Token:
        return self._tokens[self._i]

    def _fail(self, expected: str) -> ParseError:
        tok = self._cur
        found = "end of input" if tok.kind == "eof" else repr(tok.value)
        return ParseError(f"expected {expected}, found {found}", tok.line, tok.col)

    def _take(self, kind: str, value: str | None = None, expected: str | None = None) -> _Token:
        tok = self._cur
        if tok.kind != kind or (value is not None and tok.value != value):
            raise self._fail(expected or (f"'{value}'" if value else kind))
        self._i += 1
        return tok

    def _keyword(self, word: str) -> _Token:
        return self._take("word", word, f"keyword '{word}'")

    def _string(self, what: str) -> str:
        return self._take("string", expected=f"{what} string").value

    def _ident(self, what: str) -> _Token:
        tok = self._take("word", expected=what)
        if not _is_ident(tok.value):
            raise ParseError(
                f"invalid identifier {tok.value!r} (want [a-z][a-z0-9_]*)",
                tok.line, tok.col)
        return tok

    def rulebook(self) -> Rulebook:
        self._keyword("rulebook")
        rb_id = self._string("rulebook id")
        self._keyword("version")
        version = self._string("version")
        nodes: list[Node] = []
        while self._cur.kind != "eof":
            nodes.append(self._node())
        if not nodes:
            raise self._fail("at least one node")
        return Rulebook(id=rb_id, version=version, root=nodes[0].id,
                        nodes=tuple(nodes))

    def _node(self) -> Node:
        tok = self._cur
        if tok.kind == "word" and tok.value == "node":
            return self._question()
        if tok.kind == "word" and tok.value == "verdict":
            return self._verdict()
        raise self._fail("'node' or 'verdict'")

    def _question(self) -> Node:
        self._keyword("node")
        ident = self._ident("node identifier")
        self._take("punct", "{")
        self._keyword("ask")
        prompt = self._string("question")
        self._keyword("kind")
        kind = self._kind()
        self._keyword("cite")
        citation = self._string("citation")
        branches: dict[str, str] = {}
        for _ in range(2):
            label_tok = self._take("word", expected="branch label 'yes' or 'no'")
            if label_tok.value not in ("yes", "no"):
                raise ParseError(
                    f"expected branch label 'yes' or 'no', found {label_tok.value!r}",
                    label_tok.line, label_tok.col)
            if label_tok.value in branches:
                raise ParseError(
                    f"duplicate branch label {label_tok.value!r} on node '{ident.value}'",
                    label_tok.line, label_tok.col)
            self._take("arrow", expected="'->'")
            target = self._ident("branch target")
            branches[label_tok.value] = target.value
        self._take("punct", "}")
        return Node(id=ident.value, kind=kind, prompt=prompt, citation=citation,
                    branches=branches, pos=(ident.line, ident.col))

    def _kind(self) -> QuestionKind:
        tok = self._take("word", expected="'boolean' or 'derived'")
        if tok.value == "boolean":
            return QuestionKind.boolean()
        if tok.value == "derived":
            self._take("punct", "(")
            fn = self._ident("derived function name")
            self._take("punct", ")")
            return QuestionKind.derived(fn.value)
        raise ParseError(f"expected 'boolean' or 'derived', found {tok.value!r}",
                         tok.line, tok.col)

    def _verdict(self) -> Node:
        self._keyword("verdict")
        ident = self._ident("verdict identifier")
        self._take("punct", "{")
        self._keyword("outcome")
        out_tok = self._take("word", expected="outcome")
        try:
            outcome = Outcome(out_tok.value)
        except ValueError:
            raise ParseError(
                f"expected one of MD, ACCESSORY, NOT_MD, NOT_SOFTWARE, "
                f"found {out_tok.value!r}", out_tok.line, out_tok.col) from None
        self._keyword("reason")
        reason = self._string("reason")
        self._keyword("cite")
        citation = self._string("citation")
        self._take("punct", "}")
        return Node(id=ident.value, outcome=outcome, reason=reason,
                    citation=citation, pos=(ident.line, ident.col))


def _is_ident(word: str) -> bool:
    return (word[:1].islower() and word[:1].isalpha()
            and all(c.islower() or c.isdigit() or c == "_" for c in word)
            and word.isascii())


def parse_rulebook(source: str) -> Rulebook:
    """Parse rulepack text into a Rulebook, preserving node order.

    The first node in the file becomes the root. Raises ParseError with a
    line/column on malformed input; structural problems (cycles, dangling
    targets, ...) are left to validate_rulebook.
    """
    return _Parser(source).rulebook()


def _quote(text: str) -> str:
    return '"' + "".join(_UNESCAPES.get(c, c) for c in text) + '"'


def serialize_rulebook(rb: Rulebook) -> str:
    """Render a rulebook as canonical rulepack text.

    Canonical form: two-space indent, yes branch before no, one blank line
    between nodes. parse(serialize(rb)) is structurally equal to rb for any
    rulebook free of validation errors; comments from an original source do
    not survive (they are dropped at parse time).
    """
    if rb.nodes and rb.nodes[0].id != rb.root:
        raise ValueError(f"root node '{rb.root}' must be first in the rulebook")
    lines = [f"rulebook {_quote(rb.id)} version {_quote(rb.version)}"]
    for node in rb.nodes:
        lines.append("")
        if node.is_verdict:
            if node.branches:
                raise ValueError(f"verdict node '{node.id}' must not have branches")
            lines.append(f"verdict {node.id} {{")
            lines.append(f"  outcome {node.outcome.value}")
            lines.append(f"  reason {_quote(node.reason)}")
            lines.append(f"  cite {_quote(node.citation)}")
        else:
            if node.kind is None:
                raise ValueError(f"question node '{node.id}' has no kind")
            if set(node.branches) != {"yes", "no"}:
                raise ValueError(f"question node '{node.id}' needs yes and no branches")
            lines.append(f"node {node.id} {{")
            lines.append(f"  ask {_quote(node.prompt)}")
            lines.append(f"  kind {node.kind.render()}")
            lines.append(f"  cite {_quote(node.citation)}")
            lines.append(f"  yes -> {node.branches['yes']}")
            lines.append(f"  no -> {node.branches['no']}")
        lines.append("}")
    return "\n".join(lines) + "\n"


def validate_rulebook(rb: Rulebook) -> list[ValidationIssue]:
    """Check a rulebook for evaluability. Issues are data, not exceptions.

    Error codes: duplicate-id, unknown-root, root-not-first, malformed-node,
    non-exhaustive, missing-derived-function, dangling-target, cycle.
    Warning codes: unreachable-node.
    """
    issues: list[ValidationIssue] = []

    seen: set[str] = set()
    for node in rb.nodes:
        if node.id in seen:
            issues.append(error("duplicate-id",
                                f"node id '{node.id}' is declared more than once",
                                node=node.id, line=_line(node), col=_col(node)))
        seen.add(node.id)
    node_map = rb.node_map

    if rb.root not in node_map:
        issues.append(error("unknown-root", f"root node '{rb.root}' is not declared"))
    elif rb.nodes and rb.nodes[0].id != rb.root:
        issues.append(error("root-not-first",
                            f"root node '{rb.root}' must be the first node",
                            node=rb.root))

    for node in rb.nodes:
        if node.is_verdict:
            if node.branches:
                issues.append(error("malformed-node",
                                    f"verdict node '{node.id}' must not have branches",
                                    node=node.id, line=_line(node), col=_col(node)))
            continue
        if node.kind is None:
            issues.append(error("malformed-node",
                                f"question node '{node.id}' has no kind",
                                node=node.id, line=_line(node), col=_col(node)))
        elif node.kind.is_derived and not node.kind.function:
            issues.append(error("missing-derived-function",
                                f"derived node '{node.id}' names no function",
                                node=node.id, line=_line(node), col=_col(node)))
        if set(node.branches) != {"yes", "no"}:
            issues.append(error("non-exhaustive",
                                f"question node '{node.id}' must have exactly "
                                f"a yes and a no branch",
                                node=node.id, line=_line(node), col=_col(node)))
        for label in ("yes", "no"):
            target = node.branches.get(label)
            if target is not None and target not in node_map:
                issues.append(error("dangling-target",
                                    f"node '{node.id}' branch '{label}' targets "
                                    f"undeclared node '{target}'",
                                    node=node.id, line=_line(node), col=_col(node)))

    issues.extend(_cycle_issues(rb))

    if rb.root in node_map:
        reachable = _reachable_from(rb, rb.root)
        for node in rb.nodes:
            if node.id not in reachable:
                issues.append(warning("unreachable-node",
                                      f"node '{node.id}' is not reachable from "
                                      f"the root",
                                      node=node.id, line=_line(node), col=_col(node)))
    return issues


def _line(node: Node) -> int | None:
    return node.pos[0] if node.pos else None


def _col(node: Node) -> int | None:
    return node.pos[1] if node.pos else None


def _reachable_from(rb: Rulebook, start: str) -> set[str]:
    node_map = rb.node_map
    seen: set[str] = set()
    stack = [start]
    while stack:
        nid = stack.pop()
        if nid in seen or nid not in node_map:
            continue
        seen.add(nid)
        stack.extend(node_map[nid].branches.values())
    return seen


def _cycle_issues(rb: Rulebook) -> list[ValidationIssue]:
    # iterative DFS with colouring over every node, so cycles are reported
    # even in unreachable parts of the graph
    node_map = rb.node_map
    colour: dict[str, int] = {}  # 1 = on stack, 2 = done
    issues: list[ValidationIssue] = []
    reported: set[frozenset[str]] = set()

    def visit(start: str) -> None:
        stack: list[tuple[str, Iterator[str]]] = []
        colour[start] = 1
        stack.append((start, iter(node_map[start].branches.values())))
        trail = [start]
        while stack:
            nid, it = stack[-1]
            advanced = False
            for target in it:
                if target not in node_map:
                    continue
                state = colour.get(target)
                if state == 1:
                    cycle = trail[trail.index(target):] + [target]
                    key = frozenset(cycle)
                    if key not in reported:
                        reported.add(key)
                        issues.append(error(
                            "cycle",
                            "cycle detected: " + " -> ".join(cycle),
                            node=target))
                    continue
                if state is None:
                    colour[target] = 1
                    stack.append((target, iter(node_map[target].branches.values())))
                    trail.append(target)
                    advanced = True
                    break
            if not advanced:
                colour[nid] = 2
                stack.pop()
                trail.pop()

    for node in rb.nodes:
        if colour.get(node.id) is None:
            visit(node.id)
    return issues
