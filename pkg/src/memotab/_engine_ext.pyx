# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled engine kernel.

Same names and semantics as ``_engine_py``; see that module for the
reference version.  The agenda keeps consumers and values in two parallel
lists and FIFO pops advance a head index instead of shifting the list.
"""

from random import Random

POLICIES = ("fifo", "lifo", "random")

cdef enum:
    FIFO = 0
    LIFO = 1
    RANDOM = 2
    COMPACT_AT = 4096
    # nested cpdef calls bypass CPython's recursion check
    MAX_DEPTH = 8000


cdef class Session


cdef class Comp:
    cpdef run(self, Session session, object k):
        raise NotImplementedError


cdef class Pure(Comp):
    cdef readonly object value

    def __init__(self, value):
        self.value = value

    cpdef run(self, Session session, object k):
        session.push(k, self.value)

    def __repr__(self):
        return f"Pure({self.value!r})"


cdef class Fail(Comp):
    cpdef run(self, Session session, object k):
        pass

    def __repr__(self):
        return "Fail()"


cdef class Choice(Comp):
    cdef readonly Comp left
    cdef readonly Comp right

    def __init__(self, Comp left, Comp right):
        self.left = left
        self.right = right

    cpdef run(self, Session session, object k):
        # explicit stack: long choice chains in either direction stay flat
        cdef list stack = [self.right, self.left]
        cdef Comp c
        session._enter()
        try:
            while stack:
                c = stack.pop()
                if type(c) is Choice:
                    stack.append((<Choice>c).right)
                    stack.append((<Choice>c).left)
                else:
                    c.run(session, k)
        finally:
            session._depth -= 1


cdef class Sum(Comp):
    cdef readonly tuple comps

    def __init__(self, comps):
        self.comps = tuple(comps)

    cpdef run(self, Session session, object k):
        cdef Comp c
        for c in self.comps:
            c.run(session, k)


cdef class Then(Comp):
    cdef readonly Comp comp
    cdef readonly object fn

    def __init__(self, Comp comp, fn):
        self.comp = comp
        self.fn = fn

    cpdef run(self, Session session, object k):
        # unwind a left-nested bind spine without recursion
        cdef Comp c = self
        while type(c) is Then:
            k = _Bind(session, (<Then>c).fn, k)
            c = (<Then>c).comp
        session._enter()
        try:
            c.run(session, k)
        finally:
            session._depth -= 1


cdef class _Bind:
    cdef Session session
    cdef object fn
    cdef object k

    def __init__(self, Session session, fn, k):
        self.session = session
        self.fn = fn
        self.k = k

    def __call__(self, x):
        cdef Comp c = self.fn(x)
        c.run(self.session, self.k)


cdef class Session:
    """Agenda, scheduling policy and input tokens for one thread of control.

    Memo tables bind to the first session that runs them and persist for as
    long as that session is used.
    """

    cdef readonly tuple tokens
    cdef readonly str policy
    cdef readonly object seed
    cdef readonly long steps
    cdef int _policy
    cdef object _rng
    cdef list _ks
    cdef list _vs
    cdef Py_ssize_t _head
    cdef bint _running
    cdef int _depth

    def __init__(self, tokens=(), policy="fifo", seed=None):
        if policy not in POLICIES:
            raise ValueError(f"unknown agenda policy {policy!r}; expected one of {POLICIES}")
        self.tokens = tuple(tokens)
        self.policy = policy
        self._policy = POLICIES.index(policy)
        self.seed = seed
        self._rng = Random(seed)
        self._ks = []
        self._vs = []
        self._head = 0
        self._running = False
        self._depth = 0
        self.steps = 0

    cdef inline void _enter(self) except *:
        self._depth += 1
        if self._depth > MAX_DEPTH:
            self._depth -= 1
            raise RecursionError("computation nested too deeply")

    cpdef push(self, object k, object value):
        self._ks.append(k)
        self._vs.append(value)

    cdef void _clear(self):
        self._ks = []
        self._vs = []
        self._head = 0

    cpdef drain(self):
        cdef list ks = self._ks
        cdef list vs = self._vs
        cdef Py_ssize_t i, last
        cdef long steps = 0
        cdef object k, v
        if self._policy == FIFO:
            while self._head < len(ks):
                i = self._head
                k = ks[i]
                v = vs[i]
                ks[i] = None
                vs[i] = None
                self._head = i + 1
                if self._head >= COMPACT_AT and self._head * 2 >= len(ks):
                    del ks[:self._head]
                    del vs[:self._head]
                    self._head = 0
                k(v)
                steps += 1
        elif self._policy == LIFO:
            while ks:
                k = ks.pop()
                v = vs.pop()
                k(v)
                steps += 1
        else:
            randrange = self._rng.randrange
            while ks:
                last = len(ks) - 1
                i = randrange(last + 1)
                if i != last:
                    ks[i], ks[last] = ks[last], ks[i]
                    vs[i], vs[last] = vs[last], vs[i]
                k = ks.pop()
                v = vs.pop()
                k(v)
                steps += 1
        self.steps += steps
        self._clear()

    def run(self, Comp comp):
        """Run ``comp`` to completion and return every delivered value."""
        cdef list results = []
        if self._running:
            raise RuntimeError("a run is already active on this session")
        self._running = True
        try:
            comp.run(self, results.append)
            self.drain()
        finally:
            self._clear()
            self._depth = 0
            self._running = False
        return results


cdef class Entry:
    cdef readonly dict results
    cdef readonly list consumers

    def __init__(self):
        self.results = {}
        self.consumers = []


cdef class MemoTable:
    """Per-function table mapping keys to :class:`Entry` records."""

    cdef readonly dict entries
    cdef public long calls
    cdef public object session

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
        cdef Entry e
        return [(key, list(e.results)) for key, e in self.entries.items()]


cdef class Call(Comp):
    cdef readonly MemoTable table
    cdef readonly object body
    cdef readonly object bundle
    cdef readonly object key

    def __init__(self, MemoTable table, body, bundle, key):
        self.table = table
        self.body = body
        self.bundle = bundle
        self.key = key

    cpdef run(self, Session session, object k):
        cdef MemoTable table = self.table
        cdef Entry entry
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


cdef class _Start:
    cdef Session session
    cdef Call call
    cdef Entry entry

    def __init__(self, Session session, Call call, Entry entry):
        self.session = session
        self.call = call
        self.entry = entry

    def __call__(self, _):
        cdef Call call = self.call
        cdef Comp body
        call.table.calls += 1
        body = call.body(call.bundle, call.key)
        body.run(self.session, _Produce(self.session, self.entry))


cdef class _Produce:
    cdef Session session
    cdef Entry entry

    def __init__(self, Session session, Entry entry):
        self.session = session
        self.entry = entry

    def __call__(self, y):
        cdef Entry entry = self.entry
        cdef dict results = entry.results
        cdef Session session = self.session
        if y in results:
            return
        results[y] = None
        for c in entry.consumers:
            session.push(c, y)


cdef class MemoFn:
    """Callable ``key -> Comp`` for one memoised function and a fixed bundle."""

    cdef readonly MemoTable table
    cdef readonly object body
    cdef public object bundle

    def __init__(self, MemoTable table, body, bundle=None):
        self.table = table
        self.body = body
        self.bundle = bundle

    def __call__(self, key):
        return Call(self.table, self.body, self.bundle, key)


cdef class TermAt(Comp):
    cdef readonly object token
    cdef readonly Py_ssize_t pos

    def __init__(self, token, Py_ssize_t pos):
        self.token = token
        self.pos = pos

    cpdef run(self, Session session, object k):
        cdef tuple tokens = session.tokens
        if self.pos < len(tokens) and tokens[self.pos] == self.token:
            session.push(k, self.pos + 1)


cdef class Term:
    cdef readonly object token

    def __init__(self, token):
        self.token = token

    def __call__(self, pos):
        return TermAt(self.token, pos)

    def __repr__(self):
        return f"Term({self.token!r})"


cdef class Epsilon:
    def __call__(self, pos):
        return Pure(pos)

    def __repr__(self):
        return "Epsilon()"


cdef class SeqR:
    cdef readonly object first
    cdef readonly object second

    def __init__(self, first, second):
        self.first = first
        self.second = second

    def __call__(self, pos):
        return Then(self.first(pos), self.second)


cdef class AltR:
    cdef readonly object left
    cdef readonly object right

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __call__(self, pos):
        return Choice(self.left(pos), self.right(pos))
