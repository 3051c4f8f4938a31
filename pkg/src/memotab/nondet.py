"""Continuation-based nondeterministic computations.

A :class:`Comp` is a description; nothing happens until it is run on a
:class:`Session`, which owns the agenda of pending resumptions.  ``choice``
never removes duplicates; only memoised functions do.

>>> run(then(choice(pure(1), pure(2)), lambda x: pure(x + 10)))
[11, 12]
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from typing import Any

from ._backend import engine

Comp = engine.Comp
Session = engine.Session
POLICIES: tuple[str, ...] = engine.POLICIES

_FAIL = engine.Fail()


def pure(x: Any) -> Comp:
    """Deliver ``x`` exactly once."""
    return engine.Pure(x)


def fail() -> Comp:
    """Deliver nothing."""
    return _FAIL


def then(c: Comp, f: Callable[[Any], Comp]) -> Comp:
    """Feed every value of ``c`` to ``f`` and deliver all values of the results."""
    return engine.Then(c, f)


def choice(a: Comp, b: Comp) -> Comp:
    return engine.Choice(a, b)


def sum_(cs: Iterable[Comp]) -> Comp:
    """Fold of :func:`choice` over ``cs`` with :func:`fail` as the unit."""
    cs = tuple(cs)
    if not cs:
        return _FAIL
    if len(cs) == 1:
        return cs[0]
    return engine.Sum(cs)


def fmap(f: Callable[[Any], Any], c: Comp) -> Comp:
    return engine.Then(c, lambda x: engine.Pure(f(x)))


def lift2(f: Callable[[Any, Any], Any], a: Comp, b: Comp) -> Comp:
    return engine.Then(a, lambda x: engine.Then(b, lambda y: engine.Pure(f(x, y))))


def run(
    c: Comp,
    session: Session | None = None,
    *,
    policy: str = "fifo",
    seed: int | None = None,
) -> list:
    """Run ``c`` until the agenda is empty and return the delivered values.

    Without ``session`` a fresh one is created with the given ``policy`` and
    ``seed``.  Delivery order is discovery order under FIFO but carries no
    meaning; compare results as multisets.
    """
    if session is None:
        session = Session(policy=policy, seed=seed)
    return session.run(c)


# ``sum`` shadows the builtin, so it is only offered as a module attribute
sum = sum_  # noqa: A001
