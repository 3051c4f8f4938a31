"""Tabling for open-recursive nondeterministic functions.

An open-recursive function takes a *bundle* holding the fixed points of its
recursive group, then its argument, and returns a :class:`~memotab.nondet.Comp`.
Memoising it allocates a private table.  The first call on a key registers
the caller as a consumer *before* the body runs, so a left-recursive call on
the same key just waits for answers instead of looping.  Each new answer is
recorded once and fanned out to every registered consumer; later callers get
the stored answers replayed.

Tables bind to the first :class:`~memotab.nondet.Session` that runs them and
stay filled for the life of that session.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from typing import Any

from ._backend import engine
from .nondet import Comp, Session

OpenRecFn = Callable[[Any, Any], Comp]
Chart = list[tuple[Any, list]]


class MemoHandle:
    """A memoised function together with a reader for its table.

    ``fn`` is either the closed function ``key -> Comp`` (from
    :func:`memo_rec` and friends) or the still-open ``(bundle, key) -> Comp``
    (from :func:`memoize`).  Calling the handle calls ``fn``.
    """

    __slots__ = ("fn", "table")

    def __init__(self, fn: Callable[..., Comp], table: Any) -> None:
        self.fn = fn
        self.table = table

    def __call__(self, *args: Any) -> Comp:
        return self.fn(*args)

    def chart(self) -> Chart:
        """Consumer-free snapshot of the table as ``[(key, results), ...]``."""
        return self.table.chart()

    @property
    def calls(self) -> int:
        """How many times the underlying body has been invoked."""
        return self.table.calls

    def __repr__(self) -> str:
        return f"<MemoHandle entries={len(self.table.entries)} calls={self.table.calls}>"


def _table(session: Session | None) -> Any:
    return engine.MemoTable(session)


def memoize(f: OpenRecFn, session: Session | None = None) -> MemoHandle:
    """Memoise ``f`` without closing its recursion.

    The handle's function still takes ``(bundle, key)``; whatever bundle the
    caller passes is handed to ``f`` unchanged.
    """
    table = _table(session)
    return MemoHandle(lambda bundle, key: engine.Call(table, f, bundle, key), table)


def memo_rec(f: OpenRecFn, session: Session | None = None) -> MemoHandle:
    """Memoise ``f`` and tie the knot: inside ``f`` the bundle is the memoised function."""
    table = _table(session)
    fp = engine.MemoFn(table, f)
    fp.bundle = fp
    return MemoHandle(fp, table)


def memo_rec2(
    f: OpenRecFn, g: OpenRecFn, session: Session | None = None
) -> tuple[MemoHandle, MemoHandle]:
    """Memoise two mutually recursive functions; both see the pair ``(fp, gp)``."""
    fp = engine.MemoFn(_table(session), f)
    gp = engine.MemoFn(_table(session), g)
    fp.bundle = gp.bundle = (fp, gp)
    return MemoHandle(fp, fp.table), MemoHandle(gp, gp.table)


def memo_rec_group(
    fs: Mapping[str, OpenRecFn] | Sequence[OpenRecFn], session: Session | None = None
):
    """n-ary :func:`memo_rec2`.

    Given a mapping of names to open functions, every body receives a dict of
    the memoised fixed points and a dict of handles is returned.  A sequence
    works the same way with tuples.
    """
    if isinstance(fs, Mapping):
        fixed = {name: engine.MemoFn(_table(session), f) for name, f in fs.items()}
        for fp in fixed.values():
            fp.bundle = fixed
        return {name: MemoHandle(fp, fp.table) for name, fp in fixed.items()}
    fixed_t = tuple(engine.MemoFn(_table(session), f) for f in fs)
    for fp in fixed_t:
        fp.bundle = fixed_t
    return tuple(MemoHandle(fp, fp.table) for fp in fixed_t)


def mem(f: Callable[[Any], Comp], session: Session | None = None) -> MemoHandle:
    """Memoise a non-recursive function."""
    table = _table(session)
    return MemoHandle(engine.MemoFn(table, lambda _unit, x: f(x)), table)


def read_chart(h: MemoHandle) -> Chart:
    return h.chart()
