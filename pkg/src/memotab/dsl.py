"""Text format for grammars, compiled to memoised recognisers.

One rule per ``name = expr ;``.  Juxtaposition is sequencing, ``|`` is
alternation (binds looser), ``eps`` is the empty string, terminals are
double-quoted with backslash escapes, parentheses group, and ``#`` starts a
comment that runs to the end of the line.  The first rule is the start
symbol::

    S = S S "a" | eps ;

Every nonterminal gets its own memo table, so left and mutual recursion are
safe without any analysis of the grammar.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from .combinators import Recognizer, alt, epsilon, seq, session_for, term
from .grammars import Grammar
from .memo import memo_rec_group
from .nondet import Session


class GrammarError(ValueError):
    """Problem in a grammar text; ``line`` and ``col`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + message)


class GrammarSyntaxError(GrammarError):
    pass


class UndefinedNonterminalError(GrammarError):
    pass


class DuplicateRuleError(GrammarError):
    pass


@dataclass(frozen=True)
class Terminal:
    text: str


@dataclass(frozen=True)
class NonTerm:
    name: str


@dataclass(frozen=True)
class Seq:
    items: tuple


@dataclass(frozen=True)
class Alt:
    items: tuple


@dataclass(frozen=True)
class Eps:
    pass


Expr = Union[Terminal, NonTerm, Seq, Alt, Eps]


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[tuple[str, Expr], ...]

    @property
    def start(self) -> str:
        return self.rules[0][0]

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.rules]

    def __getitem__(self, name: str) -> Expr:
        for n, e in self.rules:
            if n == name:
                return e
        raise KeyError(name)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<punct>[=|;()])
    """,
    re.VERBOSE,
)

_ESCAPE_RE = re.compile(r"\\(.)")


@dataclass
class _Tok:
    kind: str
    value: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            col = pos - line_start + 1
            if text[pos] == '"':
                raise GrammarSyntaxError("unterminated string", line, col)
            raise GrammarSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "string":
            toks.append(_Tok(kind, _ESCAPE_RE.sub(r"\1", value[1:-1]), line, pos - line_start + 1))
        elif kind == "ident":
            toks.append(_Tok("eps" if value == "eps" else kind, value, line, pos - line_start + 1))
        elif kind == "punct":
            toks.append(_Tok(value, value, line, pos - line_start + 1))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def expect(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.value)
            raise GrammarSyntaxError(f"expected {kind!r}, found {found}", tok.line, tok.col)
        self.i += 1
        return tok

    def rules(self) -> list[tuple[_Tok, Expr]]:
        out = []
        while self.peek().kind != "eof":
            name = self.expect("ident")
            self.expect("=")
            out.append((name, self.expr()))
            self.expect(";")
        if not out:
            tok = self.peek()
            raise GrammarSyntaxError("grammar has no rules", tok.line, tok.col)
        return out

    def expr(self) -> Expr:
        items = [self.sequence()]
        while self.peek().kind == "|":
            self.i += 1
            items.append(self.sequence())
        return items[0] if len(items) == 1 else Alt(tuple(items))

    def sequence(self) -> Expr:
        items = []
        while self.peek().kind in ("ident", "string", "eps", "("):
            items.append(self.atom())
        if not items:
            tok = self.peek()
            found = "end of input" if tok.kind == "eof" else repr(tok.value)
            raise GrammarSyntaxError(f"expected an expression, found {found}", tok.line, tok.col)
        return items[0] if len(items) == 1 else Seq(tuple(items))

    def atom(self) -> Expr:
        tok = self.peek()
        self.i += 1
        if tok.kind == "string":
            return Terminal(tok.value)
        if tok.kind == "eps":
            return Eps()
        if tok.kind == "(":
            e = self.expr()
            self.expect(")")
            return e
        return _Ref(tok.value, tok.line, tok.col)


@dataclass(frozen=True)
class _Ref(NonTerm):
    # NonTerm carrying its source location until names are checked
    line: int = 0
    col: int = 0


def _strip_refs(e: Expr, defined: set[str]) -> Expr:
    if isinstance(e, _Ref):
        if e.name not in defined:
            raise UndefinedNonterminalError(f"undefined nonterminal {e.name!r}", e.line, e.col)
        return NonTerm(e.name)
    if isinstance(e, (Seq, Alt)):
        return type(e)(tuple(_strip_refs(x, defined) for x in e.items))
    return e


def parse_grammar(text: str) -> RuleSet:
    """Parse grammar text and check that every rule is defined exactly once."""
    raw = _Parser(text).rules()
    defined: set[str] = set()
    for name, _ in raw:
        if name.value in defined:
            raise DuplicateRuleError(f"rule {name.value!r} defined twice", name.line, name.col)
        defined.add(name.value)
    return RuleSet(tuple((name.value, _strip_refs(e, defined)) for name, e in raw))


def load_grammar(path: str | Path) -> RuleSet:
    return parse_grammar(Path(path).read_text(encoding="utf-8"))


def read_tokens(path: str | Path) -> list[str]:
    """Whitespace-separated tokens from a sentence file."""
    return Path(path).read_text(encoding="utf-8").split()


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_expr(e: Expr) -> str:
    if isinstance(e, Terminal):
        return _quote(e.text)
    if isinstance(e, NonTerm):
        return e.name
    if isinstance(e, Eps):
        return "eps"
    if isinstance(e, Seq):
        return " ".join(f"({render_expr(x)})" if isinstance(x, (Seq, Alt)) else render_expr(x) for x in e.items)
    return " | ".join(f"({render_expr(x)})" if isinstance(x, Alt) else render_expr(x) for x in e.items)


def render(rs: RuleSet) -> str:
    """Print a rule set back in the text format; ``parse_grammar`` inverts it."""
    return "".join(f"{name} = {render_expr(e)} ;\n" for name, e in rs.rules)


def validate(rs: RuleSet) -> None:
    """Check the invariants of a rule set built directly rather than parsed."""
    if not rs.rules:
        raise GrammarError("grammar has no rules")
    defined: set[str] = set()
    for name, _ in rs.rules:
        if name in defined:
            raise DuplicateRuleError(f"rule {name!r} defined twice")
        defined.add(name)

    def check(e: Expr) -> None:
        if isinstance(e, NonTerm) and e.name not in defined:
            raise UndefinedNonterminalError(f"undefined nonterminal {e.name!r}")
        if isinstance(e, (Seq, Alt)):
            if not e.items:
                raise GrammarError(f"empty {type(e).__name__}")
            for x in e.items:
                check(x)

    for _, e in rs.rules:
        check(e)


def _recognizer(e: Expr, rules: dict[str, Recognizer]) -> Recognizer:
    if isinstance(e, Terminal):
        return term(e.text)
    if isinstance(e, NonTerm):
        return rules[e.name]
    if isinstance(e, Eps):
        return epsilon()
    parts = [_recognizer(x, rules) for x in e.items]
    if len(parts) == 1:
        return parts[0]
    return seq(*parts) if isinstance(e, Seq) else alt(*parts)


def compile_grammar(rs: RuleSet, input: Session | Sequence[Any] = (), **session_kwargs: Any) -> Grammar:
    """Build memoised recognisers for every rule, sharing one session."""
    validate(rs)
    session = session_for(input, **session_kwargs)

    def make_body(expr: Expr):
        compiled: list[Recognizer] = []

        def body(rules, pos):
            if not compiled:
                compiled.append(_recognizer(expr, rules))
            return compiled[0](pos)

        return body

    handles = memo_rec_group({name: make_body(e) for name, e in rs.rules}, session)
    return Grammar(handles[rs.start], handles, session, rs.start)


def builtin_text(name: str) -> str:
    """DSL source of one of the built-in grammars (``johnson``, ``sm``, ...)."""
    path = Path(__file__).with_name("data") / f"{name}.g"
    if not path.is_file():
        raise ValueError(f"no bundled grammar named {name!r}")
    return path.read_text(encoding="utf-8")
