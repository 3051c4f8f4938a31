"""Recognisers over a token sequence fixed by the session.

A recogniser maps a start position to a computation delivering every end
position it can reach.  Positions are plain integers; :func:`remainder`
turns them back into the token suffixes used when presenting charts.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Any

from ._backend import engine
from .memo import Chart
from .nondet import Comp, Session

Recognizer = Callable[[int], Comp]

_EPSILON = engine.Epsilon()


def term(tok: Any) -> Recognizer:
    """Match one token equal to ``tok``."""
    return engine.Term(tok)


def epsilon() -> Recognizer:
    """Match the empty sequence."""
    return _EPSILON


def seq(f: Recognizer, g: Recognizer, *more: Recognizer) -> Recognizer:
    """Run ``f`` then ``g`` from each position ``f`` reaches (left-nested for more)."""
    r = engine.SeqR(f, g)
    for h in more:
        r = engine.SeqR(r, h)
    return r


def alt(f: Recognizer, g: Recognizer, *more: Recognizer) -> Recognizer:
    r = engine.AltR(f, g)
    for h in more:
        r = engine.AltR(r, h)
    return r


def session_for(input: Session | Sequence[Any], **kwargs: Any) -> Session:
    if isinstance(input, Session):
        return input
    return Session(tokens=tuple(input), **kwargs)


def recognize(r: Recognizer, input: Session | Sequence[Any], start: int = 0) -> set[int]:
    """Set of end positions ``r`` reaches from ``start``."""
    session = session_for(input)
    return set(session.run(r(start)))


def accepts(r: Recognizer, input: Session | Sequence[Any]) -> bool:
    """True when some parse by ``r`` consumes the whole input.

    ``input`` is either a token sequence (a fresh session is made) or the
    session a memoised grammar was built for.
    """
    session = session_for(input)
    return len(session.tokens) in session.run(r(0))


def remainder(tokens: Sequence[Any], pos: int) -> list:
    return list(tokens[pos:])


def chart_as_remainders(chart: Chart, tokens: Sequence[Any]) -> list[tuple[tuple, list[tuple]]]:
    """Rewrite a position chart in terms of unconsumed token suffixes."""
    tokens = tuple(tokens)
    return [(tokens[key:], [tokens[p:] for p in results]) for key, results in chart]
