"""Built-in example computations and grammars.

* ``fib_body`` and ``path_body``: open-recursive Fibonacci and transitive
  closure, for use with :func:`~memotab.memo.memo_rec`.
* ``johnson``: small English fragment with a left-recursive possessive
  noun phrase ("Sandy 's professor").
* ``sm``, ``sml``, ``smml``: highly ambiguous grammars for ``a*``; right
  recursive, left recursive, and mutually recursive respectively.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from .combinators import Recognizer, accepts, alt, chart_as_remainders, epsilon, seq, session_for, term
from .memo import Chart, MemoHandle, memo_rec, memo_rec2
from .nondet import Comp, Session, choice, fail, pure, sum_, then

GRAMMAR_IDS = ("johnson", "sm", "sml", "smml")

DEFAULT_EDGES = (("a", "b"), ("b", "c"))

JOHNSON_SENTENCE = ("Sandy", "'s", "professor", "knows", "Kim")


def fib_body(fib, n: int) -> Comp:
    if n < 0:
        return fail()
    if n < 2:
        return pure(n)
    return then(fib(n - 1), lambda a: then(fib(n - 2), lambda b: pure(a + b)))


def make_path_body(edges: Iterable[tuple[Any, Any]]):
    """Open-recursive reachability over ``edges``: ``path x = edge x | path x >>= path``."""
    succ: dict[Any, list] = {}
    for a, b in edges:
        succ.setdefault(a, []).append(b)

    def edge(x):
        return sum_(pure(y) for y in succ.get(x, ()))

    def path_body(path, x) -> Comp:
        return choice(edge(x), then(path(x), path))

    return path_body


path_body = make_path_body(DEFAULT_EDGES)


def sentence(n: int) -> tuple[str, ...]:
    if n < 0:
        raise ValueError("sentence length must be non-negative")
    return ("a",) * n


@dataclass
class Grammar:
    """A grammar instantiated for one session: start rule plus chart readers."""

    start: Recognizer
    handles: Mapping[str, MemoHandle]
    session: Session
    name: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def tokens(self) -> tuple:
        return self.session.tokens

    def accepts(self) -> bool:
        return accepts(self.start, self.session)

    def charts(self) -> dict[str, Chart]:
        return {name: h.chart() for name, h in self.handles.items()}

    def remainder_charts(self) -> dict[str, list]:
        return {name: chart_as_remainders(c, self.tokens) for name, c in self.charts().items()}


def _johnson(session: Session) -> Grammar:
    v = alt(term("likes"), term("knows"))
    pn = alt(term("Kim"), term("Sandy"))
    det = alt(term("every"), term("no"))
    n = alt(term("student"), term("professor"))

    def np_body(np, pos):
        return alt(pn, seq(det, n), seq(np, term("'s"), n))(pos)

    np = memo_rec(np_body, session)

    def vp_body(rules, pos):
        _vp, s = rules
        return alt(seq(v, np), seq(v, s))(pos)

    def s_body(rules, pos):
        vp, _s = rules
        return seq(np, vp)(pos)

    vp, s = memo_rec2(vp_body, s_body, session)
    return Grammar(s, {"s": s, "np": np, "vp": vp}, session, "johnson")


def _sm(session: Session) -> Grammar:
    a = term("a")

    def body(sm, pos):
        return alt(seq(a, sm, sm), epsilon())(pos)

    h = memo_rec(body, session)
    return Grammar(h, {"sm": h}, session, "sm")


def _sml(session: Session) -> Grammar:
    a = term("a")

    def body(sml, pos):
        return alt(seq(sml, sml, a), epsilon())(pos)

    h = memo_rec(body, session)
    return Grammar(h, {"sml": h}, session, "sml")


def _smml(session: Session) -> Grammar:
    a = term("a")

    def smml_body(rules, pos):
        smml, aux = rules
        return alt(seq(smml, aux), epsilon())(pos)

    def aux_body(rules, pos):
        smml, _aux = rules
        return seq(smml, a)(pos)

    smml, aux = memo_rec2(smml_body, aux_body, session)
    return Grammar(smml, {"smml": smml, "aux": aux}, session, "smml")


_BUILDERS = {"johnson": _johnson, "sm": _sm, "sml": _sml, "smml": _smml}


def build(g: str, input: Session | Sequence[Any] = (), **session_kwargs: Any) -> Grammar:
    """Instantiate a built-in grammar with fresh tables for ``input``.

    ``input`` is a token sequence or an existing session; extra keyword
    arguments (``policy``, ``seed``) go to the new session.
    """
    try:
        builder = _BUILDERS[g]
    except KeyError:
        raise ValueError(f"unknown grammar {g!r}; expected one of {GRAMMAR_IDS}") from None
    return builder(session_for(input, **session_kwargs))
