"""Pure-Python engine kernel.

This is the fallback used when the compiled ``_engine_ext`` module is not
available.  Both kernels export the same names with the same semantics; the
compiled one is a line-for-line port of this file.

Every delivery of a value to a consumer goes through the session agenda, so
no consumer ever runs nested inside another one and deep (left) recursion
never grows the Python stack.
"""

from collections import deque
from random import Random

POLICIES = ("fifo", "lifo", "random")


class Comp:
    """A suspended nondeterministic computation.

    ``run(session, k)`` schedules zero or more deliveries ``k(value)`` on the
    session agenda.  Subclasses only have to implement :meth:`run`.
    """

    __slots__ = ()

    def run(self, session, k):
        raise NotImplementedError


class Pure(Comp):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def run(self, session, k):
        session.push(k, self.value)

    def __repr__(self):
        return f"Pure({self.value!r})"


class Fail(Comp):
    __slots__ = ()

    def run(self, session, k):
        pass

    def __repr__(self):
        return "Fail()"


class Choice(Comp):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def run(self, session, k):
        # explicit stack: long choice chains in either direction stay flat
        stack = [self.right, self.left]
        while stack:
            c = stack.pop()
            if type(c) is Choice:
                stack.append(c.right)
                stack.append(c.left)
            else:
                c.run(session, k)


class Sum(Comp):
    __slots__ = ("comps",)

    def __init__(self, comps):
        self.comps = tuple(comps)

    def run(self, session, k):
        for c in self.comps:
            c.run(session, k)


class Then(Comp):
    __slots__ = ("comp", "fn")

    def __init__(self, comp, fn):
        self.comp = comp
        self.fn = fn

    def run(self, session, k):
        # unwind a left-nested bind spine without recursion
        c = self
        while type(c) is Then:
            k = _Bind(session, c.fn, k)
            c = c.comp
        c.run(session, k)


class _Bind:
    __slots__ = ("session", "fn", "k")

    def __init__(self, session, fn, k):
        self.session = session
        self.fn = fn
        self.k = k

    def __call__(self, x):
        self.fn(x).run(self.session, self.k)


class Session:
    """Agenda, scheduling policy and input tokens for one thread of control.

    Memo tables bind to the first session that runs them and persist for as
    long as that session is used.
    """

    def __init__(self, tokens=(), policy="fifo", seed=None):
        if policy not in POLICIES:
            raise ValueError(f"unknown agenda policy {policy!r}; expected one of {POLICIES}")
        self.tokens = tuple(tokens)
        self.policy = policy
        self.seed = seed
        self._rng = Random(seed)
        self._queue = [] if policy == "random" else deque()
        self._running = False
        self.steps = 0

    def push(self, k, value):
        self._queue.append((k, value))

    def drain(self):
        queue = self._queue
        steps = 0
        if self.policy == "fifo":
            pop = queue.popleft
            while queue:
                k, v = pop()
                k(v)
                steps += 1
        elif self.policy == "lifo":
            pop = queue.pop
            while queue:
                k, v = pop()
                k(v)
                steps += 1
        else:
            randrange = self._rng.randrange
            while queue:
                i = randrange(len(queue))
                queue[i], queue[-1] = queue[-1], queue[i]
                k, v = queue.pop()
                k(v)
                steps += 1
        self.steps += steps

    def run(self, comp):
        """Run ``comp`` to completion and return every delivered value."""
        if self._running:
            raise RuntimeError("a run is already active on this session")
        self._running = True
        results = []
        try:
            comp.run(self, results.append)
            self.drain()
        finally:
            self._queue.clear()
            self._running = False
        return results


class Entry:
    __slots__ = ("results", "consumers")

    def __init__(self):
        # dict keys give an insertion-ordered set
        self.results = {}
        self.consumers = []


class MemoTable:
    """Per-function table mapping keys to :class:`Entry` records."""

    __slots__ = ("entries", "calls", "session")

    def __init__(self, session=None):
        self.entries = {}
        self.calls = 0
        self.session = session

    def bind(self, session):
        if self.session is None:
            self.session = session
        elif self.session is not session:
            raise RuntimeError("memo table belongs to a different session")

    def chart(self):
        return [(key, list(e.results)) for key, e in self.entries.items()]


class Call(Comp):
    """Application of a memoised open-recursive function to one key."""

    __slots__ = ("table", "body", "bundle", "key")

    def __init__(self, table, body, bundle, key):
        self.table = table
        self.body = body
        self.bundle = bundle
        self.key = key

    def run(self, session, k):
        table = self.table
        if table.session is not session:
            table.bind(session)
        entry = table.entries.get(self.key)
        if entry is None:
            # register before the body runs so a left-recursive call finds it
            entry = Entry()
            entry.consumers.append(k)
            table.entries[self.key] = entry
            session.push(_Start(session, self, entry), None)
        else:
            entry.consumers.append(k)
            for r in entry.results:
                session.push(k, r)


class _Start:
    __slots__ = ("session", "call", "entry")

    def __init__(self, session, call, entry):
        self.session = session
        self.call = call
        self.entry = entry

    def __call__(self, _):
        call = self.call
        call.table.calls += 1
        call.body(call.bundle, call.key).run(self.session, _Produce(self.session, self.entry))


class _Produce:
    __slots__ = ("session", "entry")

    def __init__(self, session, entry):
        self.session = session
        self.entry = entry

    def __call__(self, y):
        entry = self.entry
        results = entry.results
        if y in results:
            return
        results[y] = None
        push = self.session.push
        for c in entry.consumers:
            push(c, y)


class MemoFn:
    """Callable ``key -> Comp`` for one memoised function and a fixed bundle."""

    __slots__ = ("table", "body", "bundle")

    def __init__(self, table, body, bundle=None):
        self.table = table
        self.body = body
        self.bundle = bundle

    def __call__(self, key):
        return Call(self.table, self.body, self.bundle, key)


class TermAt(Comp):
    __slots__ = ("token", "pos")

    def __init__(self, token, pos):
        self.token = token
        self.pos = pos

    def run(self, session, k):
        tokens = session.tokens
        pos = self.pos
        if pos < len(tokens) and tokens[pos] == self.token:
            session.push(k, pos + 1)


class Term:
    __slots__ = ("token",)

    def __init__(self, token):
        self.token = token

    def __call__(self, pos):
        return TermAt(self.token, pos)

    def __repr__(self):
        return f"Term({self.token!r})"


class Epsilon:
    __slots__ = ()

    def __call__(self, pos):
        return Pure(pos)

    def __repr__(self):
        return "Epsilon()"


class SeqR:
    __slots__ = ("first", "second")

    def __init__(self, first, second):
        self.first = first
        self.second = second

    def __call__(self, pos):
        return Then(self.first(pos), self.second)


class AltR:
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __call__(self, pos):
        return Choice(self.left(pos), self.right(pos))
