"""Flat keyword query language over a loaded model.

Grammar (``E`` is an event name or a literal ``{label,...}``; ``V`` is a
value set ``{v,...}``)::

    prob E
    cond E given E
    bayes E given E          # bayes B given A  ->  P(B | A)
    total E over E,E,...
    union E E
    complement E
    independent E E
    dist X in V
    joint X in V Y in V
    cdist X in V given Y in V
    expect X
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import inference, integral, randvar
from .errors import ParseError, UnknownName
from .measure import is_independent
from .modelfile import Model

__all__ = ["QueryResult", "run_query", "tokenize"]

_TOKEN = re.compile(r"\{[^{}]*\}|[^\s,{}]+|,|\S")


@dataclass
class QueryResult:
    query: str
    value: str
    flags: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"> {self.query}", f"value: {self.value}"]
        out += [f"{k}: {v}" for k, v in self.flags.items()]
        out += self.diagnostics
        return out


def tokenize(text: str) -> list[str]:
    tokens = _TOKEN.findall(text)
    for t in tokens:
        if t in "{}":
            raise ParseError(f"unbalanced brace in query {text!r}")
    return tokens


def _split_literal(token: str) -> list[str]:
    inner = token[1:-1].strip()
    return [p.strip() for p in inner.split(",")] if inner else []


class _Parser:
    def __init__(self, model: Model, text: str):
        self.model = model
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def fail(self, message):
        raise ParseError(f"{message} in query {self.text!r}")

    def next(self, what="token"):
        if self.pos >= len(self.tokens):
            self.fail(f"expected {what}")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def keyword(self, word):
        tok = self.next(repr(word))
        if tok != word:
            self.fail(f"expected {word!r}, got {tok!r}")

    def done(self):
        if self.pos != len(self.tokens):
            self.fail(f"unexpected {self.tokens[self.pos]!r}")

    def event(self):
        tok = self.next("event")
        space = self.model.space
        if tok.startswith("{"):
            try:
                return space.event(_split_literal(tok))
            except KeyError as exc:
                raise UnknownName(str(exc.args[0])) from None
        if tok in self.model.events:
            return self.model.events[tok]
        raise UnknownName(f"unknown event {tok!r}")

    def event_list(self):
        cells = [self.event()]
        while self.pos < len(self.tokens) and self.tokens[self.pos] == ",":
            self.pos += 1
            cells.append(self.event())
        return cells

    def variable(self):
        tok = self.next("variable")
        try:
            return self.model.variables[tok]
        except KeyError:
            raise UnknownName(f"unknown variable {tok!r}") from None

    def value_set(self):
        tok = self.next("value set")
        if not tok.startswith("{"):
            self.fail(f"expected a value set, got {tok!r}")
        s = self.model.structure
        try:
            return [s.parse(v) for v in _split_literal(tok)]
        except (ValueError, ZeroDivisionError):
            self.fail(f"bad value in {tok}")

    def variable_in(self):
        X = self.variable()
        self.keyword("in")
        return X, self.value_set()


def _conditioning(result: QueryResult, cond, fmt, label="conditioning"):
    if cond.kind == inference.UNCONDITIONABLE:
        result.value = "undefined"
    else:
        result.value = fmt(cond.value)
    result.flags[label] = cond.describe()


def run_query(model: Model, text: str) -> QueryResult:
    """Evaluate one query; domain errors propagate as library exceptions."""
    p = _Parser(model, text.strip())
    P, s = model.measure, model.structure
    fmt = s.format
    cmd = p.next("command")
    result = QueryResult(" ".join(p.tokens).replace(" , ", ","), "")

    if cmd == "prob":
        A = p.event()
        p.done()
        result.value = fmt(P.prob(A))
    elif cmd in ("cond", "bayes"):
        first = p.event()
        p.keyword("given")
        second = p.event()
        p.done()
        if cmd == "cond":
            cond = inference.conditional(P, first, second)
        else:
            cond = inference.bayes(P, second, first)
        _conditioning(result, cond, fmt)
    elif cmd == "total":
        A = p.event()
        p.keyword("over")
        cells = p.event_list()
        p.done()
        result.value = fmt(inference.total_probability(P, A, cells))
        result.flags["direct"] = fmt(P.prob(A))
    elif cmd == "union":
        A, B = p.event(), p.event()
        p.done()
        result.value = fmt(inference.union_prob(P, A, B))
    elif cmd == "complement":
        A = p.event()
        p.done()
        result.value = fmt(inference.complement_prob(P, A))
    elif cmd == "independent":
        A, B = p.event(), p.event()
        p.done()
        result.value = "true" if is_independent(P, A, B) else "false"
    elif cmd == "dist":
        X, A = p.variable_in()
        p.done()
        result.value = fmt(randvar.pushforward(P, X, A))
    elif cmd == "joint":
        X, A = p.variable_in()
        Y, B = p.variable_in()
        p.done()
        result.value = fmt(randvar.joint(P, X, Y, A, B))
    elif cmd == "cdist":
        X, A = p.variable_in()
        p.keyword("given")
        Y, B = p.variable_in()
        p.done()
        _conditioning(result, randvar.conditional_distribution(P, X, A, Y, B), fmt)
        literal = randvar.conditional_distribution_literal(P, X, A, Y, B)
        shown = "undefined" if literal.kind == inference.UNCONDITIONABLE else fmt(literal.value)
        result.diagnostics.append(f"literal (over marginal of X): {shown} ({literal.describe()})")
    elif cmd == "expect":
        X = p.variable()
        p.done()
        result.value = fmt(integral.expected_value(P, X))
    else:
        p.fail(f"unknown command {cmd!r}")
    return result
