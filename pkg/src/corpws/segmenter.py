"""Normalization, tokenization and sentence splitting.

Tokens are the unit every later stage works with. The tokenizer is
whitespace- and punctuation-driven, with two Welsh-specific twists: dotted
abbreviations from a protected list survive as single tokens, and the
post-vocalic clitics ('n, 'r, 'i and friends) are split off as tokens of
their own, apostrophe included, so that "Cymru'n" becomes Cymru + 'n.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

# Clitic forms, longest first so 'ch wins over 'c + h.
CLITICS = ("'ch", "'th", "'n", "'r", "'m", "'i", "'u", "'w")

_TERMINALS = {".", "!", "?"}


@dataclass(frozen=True)
class Token:
    """A token with its 1-based sentence/position coordinates.

    span is a half-open (start, end) character range into the normalized
    text, not into the raw input.
    """

    text: str
    sentence: int
    position: int
    span: tuple[int, int]


@dataclass(frozen=True)
class UnitCounts:
    tokens: int
    words: int


def normalize(text: str) -> str:
    """NFC-normalize and map the typographic apostrophe to U+0027."""
    return unicodedata.normalize("NFC", text).replace("’", "'")


def is_word(text: str) -> bool:
    """A token counts as a word when its first character is a letter."""
    return bool(text) and text[0].isalpha()


def _is_word_char(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit()


def _split_clitics(run: str) -> list[str]:
    parts: list[str] = []
    while True:
        lowered = run.lower()
        for clitic in CLITICS:
            if (
                len(run) > len(clitic)
                and lowered.endswith(clitic)
                and _is_word_char(run[-len(clitic) - 1])
            ):
                parts.append(run[-len(clitic):])
                run = run[: -len(clitic)]
                break
        else:
            break
    parts.append(run)
    parts.reverse()
    return parts


def _scan(norm: str, abbreviations: list[str]) -> Iterator[tuple[str, int, int]]:
    """Yield (text, start, end) over the normalized string."""
    n = len(norm)
    i = 0
    while i < n:
        ch = norm[i]
        if ch.isspace():
            i += 1
            continue
        abbr = next(
            (
                ab
                for ab in abbreviations
                if norm.startswith(ab, i)
                and (i + len(ab) >= n or not _is_word_char(norm[i + len(ab)]))
            ),
            None,
        )
        if abbr is not None:
            yield abbr, i, i + len(abbr)
            i += len(abbr)
            continue
        if ch == "'":
            clitic = next(
                (
                    cl
                    for cl in CLITICS
                    if norm.startswith(cl, i)
                    and (i + len(cl) >= n or not _is_word_char(norm[i + len(cl)]))
                ),
                None,
            )
            if clitic is not None:
                yield clitic, i, i + len(clitic)
                i += len(clitic)
                continue
        if _is_word_char(ch):
            j = i + 1
            while j < n:
                if _is_word_char(norm[j]):
                    j += 1
                elif norm[j] in "'-" and j + 1 < n and _is_word_char(norm[j + 1]):
                    j += 1
                else:
                    break
            run = norm[i:j]
            offset = i
            for part in _split_clitics(run):
                yield part, offset, offset + len(part)
                offset += len(part)
            i = j
            continue
        yield ch, i, i + 1
        i += 1


def tokenize(text: str, abbreviations: Iterable[str] = ()) -> list[list[Token]]:
    """Split text into sentences of Tokens.

    A sentence ends after a . ! or ? token whose next character in the
    normalized text is whitespace or end of input. Dots inside protected
    abbreviations are part of the abbreviation token and never split.
    """
    norm = normalize(text)
    abbrevs = sorted(abbreviations, key=len, reverse=True)
    sentences: list[list[Token]] = []
    current: list[Token] = []
    for raw, start, end in _scan(norm, abbrevs):
        current.append(
            Token(
                text=raw,
                sentence=len(sentences) + 1,
                position=len(current) + 1,
                span=(start, end),
            )
        )
        if raw in _TERMINALS and (end >= len(norm) or norm[end].isspace()):
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def count_units(tokens: Iterable[Token]) -> UnitCounts:
    """Token and word totals for a flat token sequence.

    Words are the tokens whose text starts with a letter, so punctuation
    and clitics like 'n count as tokens but not as words.
    """
    total = 0
    words = 0
    for token in tokens:
        total += 1
        if is_word(token.text):
            words += 1
    return UnitCounts(tokens=total, words=words)


def flatten(sentences: Iterable[Iterable[Token]]) -> list[Token]:
    return [token for sentence in sentences for token in sentence]


def load_abbreviations(path: str | Path) -> list[str]:
    """One abbreviation per line; '#' starts a comment."""
    out: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                out.append(line)
    return out
