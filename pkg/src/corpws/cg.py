"""Constraint-grammar disambiguation over lexicon candidates.

Rules are SELECT/REMOVE statements with positional context tests, read from
a plain-text file and applied in file order, repeatedly, until a full pass
changes nothing. A rule application that would leave a token with no
candidates is skipped, so every token keeps at least one reading and the
highest-frequency candidate acts as the final tie-break.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import RuleError
from .lexicon import Analysis, Lexicon, MutationKind
from .segmenter import Token, tokenize
from .tagset import BasicCat

UNKNOWN_RICH = "Gwann"

_PUNCT_RICH = {
    ".": "Atdt", "!": "Atdt", "?": "Atdt", "…": "Atdt",
    ",": "Atdcan", ";": "Atdcan", ":": "Atdcan",
    "(": "Atdchw", "[": "Atdchw", "{": "Atdchw",
    ")": "Atdde", "]": "Atdde", "}": "Atdde",
    '"': "Atddyf", "'": "Atddyf", "«": "Atddyf", "»": "Atddyf",
    "“": "Atddyf", "”": "Atddyf",
}


@dataclass
class TaggedToken:
    """A token plus its surviving analyses, best first."""

    token: Token
    candidates: list[Analysis]

    @property
    def resolved(self) -> Analysis:
        return self.candidates[0]


@dataclass(frozen=True)
class TagPattern:
    """Rule target: a rich code, BASIC=x or MUT=x."""

    kind: str  # rich | basic | mut
    value: str

    def matches(self, analysis: Analysis) -> bool:
        if self.kind == "rich":
            return analysis.rich == self.value
        if self.kind == "basic":
            return analysis.basic.value == self.value
        return analysis.mutation.value == self.value


@dataclass(frozen=True)
class ContextTest:
    offset: int
    kind: str  # TOKEN LEMMA BASIC RICH MUT UNKNOWN BOS EOS
    arg: str | None = None
    negate: bool = False


@dataclass(frozen=True)
class Rule:
    action: str  # SELECT | REMOVE
    target: TagPattern
    contexts: tuple[ContextTest, ...] = ()
    line: int = 0


_TOKEN_RE = re.compile(r'"[^"]*"|[()]|;|[^\s()";]+')

_CONTEXT_KINDS_WITH_STRING = {"TOKEN", "LEMMA"}
_CONTEXT_KINDS_WITH_ATOM = {"BASIC", "RICH", "MUT"}
_CONTEXT_KINDS_BARE = {"UNKNOWN", "BOS", "EOS"}


def _lex(text: str) -> list[tuple[str, int]]:
    items: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for match in _TOKEN_RE.finditer(body):
            items.append((match.group(0), lineno))
    return items


def _parse_target(value: str, lineno: int) -> TagPattern:
    if "=" in value:
        key, _, val = value.partition("=")
        if key == "BASIC":
            try:
                BasicCat(val)
            except ValueError:
                raise RuleError(f"line {lineno}: unknown basic category {val!r}")
            return TagPattern("basic", val)
        if key == "MUT":
            MutationKind.parse(val)
            return TagPattern("mut", val)
        raise RuleError(f"line {lineno}: bad target key {key!r}")
    return TagPattern("rich", value)


def parse_rules(text: str) -> list[Rule]:
    """Parse rule text. See the bundled rules file for the format."""
    items = _lex(text)
    rules: list[Rule] = []
    pos = 0

    def peek() -> str | None:
        return items[pos][0] if pos < len(items) else None

    def take(expected: str | None = None) -> tuple[str, int]:
        nonlocal pos
        if pos >= len(items):
            raise RuleError("unexpected end of rules")
        tok, lineno = items[pos]
        if expected is not None and tok != expected:
            raise RuleError(f"line {lineno}: expected {expected!r}, got {tok!r}")
        pos += 1
        return tok, lineno

    def parse_context() -> ContextTest:
        _, lineno = take("(")
        tok, _ = take()
        negate = False
        if tok == "NOT":
            negate = True
            tok, _ = take()
        try:
            offset = int(tok)
        except ValueError:
            raise RuleError(f"line {lineno}: expected offset, got {tok!r}")
        kind, _ = take()
        arg: str | None = None
        if kind in _CONTEXT_KINDS_WITH_STRING:
            raw, _ = take()
            if not (raw.startswith('"') and raw.endswith('"') and len(raw) >= 2):
                raise RuleError(f"line {lineno}: {kind} needs a quoted string")
            arg = raw[1:-1]
        elif kind in _CONTEXT_KINDS_WITH_ATOM:
            arg, _ = take()
            if kind == "MUT":
                MutationKind.parse(arg)
            elif kind == "BASIC":
                try:
                    BasicCat(arg)
                except ValueError:
                    raise RuleError(
                        f"line {lineno}: unknown basic category {arg!r}"
                    )
        elif kind not in _CONTEXT_KINDS_BARE:
            raise RuleError(f"line {lineno}: unknown context test {kind!r}")
        take(")")
        return ContextTest(offset=offset, kind=kind, arg=arg, negate=negate)

    while pos < len(items):
        action, lineno = take()
        if action not in ("SELECT", "REMOVE"):
            raise RuleError(f"line {lineno}: expected SELECT or REMOVE")
        take("(")
        value, vline = take()
        target = _parse_target(value, vline)
        take(")")
        contexts: list[ContextTest] = []
        if peek() == "IF":
            take("IF")
            while peek() == "(":
                contexts.append(parse_context())
            if not contexts:
                raise RuleError(f"line {lineno}: IF with no context tests")
        take(";")
        rules.append(Rule(action, target, tuple(contexts), lineno))
    return rules


def load_rules(path: str | Path) -> list[Rule]:
    with open(path, encoding="utf-8") as fh:
        return parse_rules(fh.read())


def candidates_for(token: Token, lexicon: Lexicon) -> list[Analysis]:
    """Initial candidate set: lexicon readings, or punctuation, or unknown."""
    text = token.text
    if not any(ch.isalpha() or ch.isdigit() for ch in text):
        rich = _PUNCT_RICH.get(text, "Atdcan")
        return [Analysis(text, BasicCat.Atd, rich, MutationKind.NONE)]
    found = lexicon.lookup(text)
    if found:
        return found
    return [Analysis(text, BasicCat.Gw, UNKNOWN_RICH, MutationKind.NONE)]


def _context_holds(sentence: list[TaggedToken], idx: int,
                   test: ContextTest) -> bool:
    pos = idx + test.offset
    if test.kind == "BOS":
        result = pos < 0
    elif test.kind == "EOS":
        result = pos >= len(sentence)
    elif pos < 0 or pos >= len(sentence):
        result = False
    else:
        target = sentence[pos]
        # careful mode: one matching candidate is enough
        if test.kind == "TOKEN":
            result = target.token.text == test.arg
        elif test.kind == "LEMMA":
            result = any(c.lemma == test.arg for c in target.candidates)
        elif test.kind == "BASIC":
            result = any(c.basic.value == test.arg for c in target.candidates)
        elif test.kind == "RICH":
            result = any(c.rich == test.arg for c in target.candidates)
        elif test.kind == "MUT":
            result = any(c.mutation.value == test.arg
                         for c in target.candidates)
        else:  # UNKNOWN
            result = any(c.rich == UNKNOWN_RICH for c in target.candidates)
    return not result if test.negate else result


def _apply_rule(sentence: list[TaggedToken], idx: int, rule: Rule) -> bool:
    tagged = sentence[idx]
    if rule.action == "SELECT":
        keep = [c for c in tagged.candidates if rule.target.matches(c)]
    else:
        keep = [c for c in tagged.candidates if not rule.target.matches(c)]
    # safety: never empty a token, never fire without effect
    if not keep or len(keep) == len(tagged.candidates):
        return False
    if all(_context_holds(sentence, idx, t) for t in rule.contexts):
        tagged.candidates = keep
        return True
    return False


def apply_constraints(sentence: list[TaggedToken],
                      rules: list[Rule]) -> list[TaggedToken]:
    """Run all rules over one sentence until a full pass changes nothing.

    Each effective application strictly shrinks some candidate set, so the
    number of passes is bounded by the total candidate count.
    """
    changed = True
    while changed:
        changed = False
        for rule in rules:
            for idx in range(len(sentence)):
                if _apply_rule(sentence, idx, rule):
                    changed = True
    return sentence


def tag(text: str, lexicon: Lexicon, rules: list[Rule],
        abbreviations: list[str] | None = None) -> list[list[TaggedToken]]:
    """Tokenize, look up and disambiguate: the full tagging pipeline."""
    sentences = tokenize(text, abbreviations or [])
    out: list[list[TaggedToken]] = []
    for sentence in sentences:
        tagged = [TaggedToken(tok, candidates_for(tok, lexicon))
                  for tok in sentence]
        out.append(apply_constraints(tagged, rules))
    return out
