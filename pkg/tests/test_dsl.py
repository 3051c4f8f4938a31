import random

import pytest

from memotab.dsl import (
    Alt, DuplicateRuleError, Eps, GrammarSyntaxError, NonTerm, RuleSet, Seq, Terminal,
    UndefinedNonterminalError, builtin_text, compile_grammar, parse_grammar, render, validate,
)
from memotab.grammars import JOHNSON_SENTENCE, build, sentence
from oracles import chart_sets, random_ruleset, random_tokens


def test_parse_sm():
    rs = parse_grammar('S = "a" S S | eps ;')
    assert rs.rules == (("S", Alt((Seq((Terminal("a"), NonTerm("S"), NonTerm("S"))), Eps()))),)
    assert rs.start == "S"


def test_parse_sml():
    rs = parse_grammar('S = S S "a" | eps ;')
    assert rs["S"] == Alt((Seq((NonTerm("S"), NonTerm("S"), Terminal("a"))), Eps()))


def test_comments_escapes_and_groups():
    rs = parse_grammar('# c\nA = ("x" | B) "q\\"t" ; # trailing\nB = eps ;\n')
    assert rs["A"] == Seq((Alt((Terminal("x"), NonTerm("B"))), Terminal('q"t')))


def test_undefined_nonterminal():
    with pytest.raises(UndefinedNonterminalError) as e:
        parse_grammar("S = X ; ")
    assert (e.value.line, e.value.col) == (1, 5)


def test_duplicate_rule():
    with pytest.raises(DuplicateRuleError) as e:
        parse_grammar('S = "a" ;\nS = "b" ;')
    assert e.value.line == 2


@pytest.mark.parametrize("text, where", [
    ('S = "a"', (1, 8)),
    ('S = ;', (1, 5)),
    ('S "a" ;', (1, 3)),
    ('', (1, 1)),
    ('S = "a\n', (1, 5)),
    ('S = "a" ;\nT = @ ;', (2, 5)),
    ('S = ( "a" ;', (1, 11)),
])
def test_syntax_errors(text, where):
    with pytest.raises(GrammarSyntaxError) as e:
        parse_grammar(text)
    assert (e.value.line, e.value.col) == where


def test_validate_rejects_bad_rulesets():
    with pytest.raises(UndefinedNonterminalError):
        validate(RuleSet((("S", NonTerm("T")),)))
    with pytest.raises(DuplicateRuleError):
        validate(RuleSet((("S", Eps()), ("S", Eps()))))


def test_compile_sm_accepts():
    g = compile_grammar(parse_grammar('S = "a" S S | eps ;'), sentence(5))
    assert g.accepts()


def test_compile_sml_matches_hand_built():
    dsl = compile_grammar(parse_grammar(builtin_text("sml")), sentence(4))
    hand = build("sml", sentence(4))
    assert dsl.accepts() and hand.accepts()
    assert chart_sets(dsl.charts()) == chart_sets(hand.charts())


def test_compile_johnson():
    g = compile_grammar(parse_grammar(builtin_text("johnson")), JOHNSON_SENTENCE)
    assert g.accepts()


def _random_expr(rng, names, depth):
    if depth == 0 or rng.random() < 0.35:
        r = rng.random()
        if r < 0.4:
            return NonTerm(rng.choice(names))
        if r < 0.8:
            return Terminal(rng.choice(["a", "b", 'q"', "\\"]))
        return Eps()
    items = tuple(_random_expr(rng, names, depth - 1) for _ in range(rng.randint(1, 3)))
    return Seq(items) if rng.random() < 0.5 else Alt(items)


def test_render_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        names = [f"R{i}" for i in range(rng.randint(1, 4))]
        rs = RuleSet(tuple((n, _random_expr(rng, names, 3)) for n in names))
        again = parse_grammar(render(rs))
        assert render(again) == render(parse_grammar(render(again)))
        tokens = random_tokens(rng, 6, ("a", "b", 'q"', "\\"))
        assert chart_sets(compile_grammar(rs, tokens).charts()) == chart_sets(compile_grammar(again, tokens).charts())


def test_random_rulesets_render_exactly():
    rng = random.Random(4)
    for _ in range(50):
        rs = random_ruleset(rng)
        assert parse_grammar(render(rs)) == rs
