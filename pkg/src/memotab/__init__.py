"""Tabled nondeterministic computations that terminate on left recursion.

Memoised functions capture their callers' continuations, so a repeated call
on the same argument waits for answers instead of recursing again.  Used
with the recogniser combinators this gives Earley-style chart parsing for
arbitrary context-free grammars, left-recursive ones included.
"""

from ._backend import BACKEND
from .combinators import accepts, alt, chart_as_remainders, epsilon, recognize, seq, term
from .dsl import GrammarError, compile_grammar, parse_grammar, render
from .grammars import Grammar, build, fib_body, make_path_body, path_body, sentence
from .memo import MemoHandle, mem, memo_rec, memo_rec2, memo_rec_group, memoize, read_chart
from .nondet import Comp, Session, choice, fail, pure, run, sum_, then

__all__ = [
    "BACKEND",
    "Comp",
    "Grammar",
    "GrammarError",
    "MemoHandle",
    "Session",
    "accepts",
    "alt",
    "build",
    "chart_as_remainders",
    "choice",
    "compile_grammar",
    "epsilon",
    "fail",
    "fib_body",
    "make_path_body",
    "mem",
    "memo_rec",
    "memo_rec2",
    "memo_rec_group",
    "memoize",
    "parse_grammar",
    "path_body",
    "pure",
    "read_chart",
    "recognize",
    "render",
    "run",
    "sentence",
    "seq",
    "sum_",
    "term",
    "then",
]
