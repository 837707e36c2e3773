"""Semantic field tagging over disambiguated lemmas.

Coverage comes from three resources: a single-word lexicon keyed by lemma
(optionally constrained to a basic POS category), a multi-word-expression
table matched leftmost-longest over lemma sequences, and an inflection table
mapping stray surface forms to lemmas for a second lookup attempt. Whatever
remains unmatched gets the catch-all field Z99.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .cg import TaggedToken
from .errors import LexiconError
from .tagset import BasicCat

FALLBACK_FIELD = "Z99"
WILDCARD = "*"


@dataclass(frozen=True)
class SemEntry:
    lemma: str
    basic: BasicCat | None  # None = lemma-only entry
    fields: tuple[str, ...]  # first listed field wins


@dataclass(frozen=True)
class MweEntry:
    pattern: tuple[str, ...]  # lemma sequence; * matches any single lemma
    fields: tuple[str, ...]


def mwe_match(lemmas: list[str],
              entries: list[MweEntry]) -> list[tuple[int, int, MweEntry]]:
    """Leftmost-longest, non-overlapping matches over a lemma sequence.

    Returns (start, length, entry) triples. At each position the longest
    matching pattern wins; matched spans are skipped entirely.
    """
    folded = [lemma.casefold() for lemma in lemmas]
    ordered = sorted(entries, key=lambda e: len(e.pattern), reverse=True)
    out: list[tuple[int, int, MweEntry]] = []
    i = 0
    while i < len(folded):
        hit = None
        for entry in ordered:
            size = len(entry.pattern)
            if i + size > len(folded):
                continue
            if all(
                p == WILDCARD or p == folded[i + k]
                for k, p in enumerate(entry.pattern)
            ):
                hit = entry
                break
        if hit is None:
            i += 1
        else:
            out.append((i, len(hit.pattern), hit))
            i += len(hit.pattern)
    return out


class SemTagger:
    def __init__(self, entries: list[SemEntry], mwes: list[MweEntry],
                 inflections: dict[str, str]):
        self.entries = list(entries)
        self.mwes = list(mwes)
        self.inflections = {
            k.casefold(): v for k, v in inflections.items()
        }
        self._exact: dict[tuple[str, BasicCat], SemEntry] = {}
        self._lemma_only: dict[str, SemEntry] = {}
        self._any: dict[str, SemEntry] = {}
        for entry in self.entries:
            key = entry.lemma.casefold()
            if entry.basic is None:
                self._lemma_only.setdefault(key, entry)
            else:
                self._exact.setdefault((key, entry.basic), entry)
            self._any.setdefault(key, entry)

    def field_for(self, lemma: str, basic: BasicCat,
                  surface: str | None = None) -> str:
        """Field for one token: (lemma, basic), lemma-only, then inflection."""
        entry = self._find(lemma, basic)
        if entry is None and surface is not None:
            mapped = self.inflections.get(surface.casefold())
            if mapped is not None:
                entry = self._find(mapped, basic) or self._any.get(
                    mapped.casefold())
        return entry.fields[0] if entry else FALLBACK_FIELD

    def _find(self, lemma: str, basic: BasicCat) -> SemEntry | None:
        key = lemma.casefold()
        return self._exact.get((key, basic)) or self._lemma_only.get(key)

    def tag_sentence(self, tagged: list[TaggedToken]) -> list[str]:
        """One semantic field per token, MWE spans first."""
        lemmas = [tt.resolved.lemma for tt in tagged]
        fields = [
            self.field_for(tt.resolved.lemma, tt.resolved.basic,
                           tt.token.text)
            for tt in tagged
        ]
        for start, length, entry in mwe_match(lemmas, self.mwes):
            for k in range(start, start + length):
                fields[k] = entry.fields[0]
        return fields


def _parse_fields(text: str, where: str) -> tuple[str, ...]:
    fields = tuple(f.strip() for f in text.split(",") if f.strip())
    if not fields:
        raise LexiconError(f"{where}: entry with no semantic fields")
    return fields


def load_sem_lexicon(path: str | Path) -> list[SemEntry]:
    """lemma TAB basic-or-dash TAB field[,field...]"""
    entries: list[SemEntry] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise LexiconError(f"{path}:{lineno}: expected 3 columns")
            lemma, basic_text, fields_text = parts
            basic: BasicCat | None = None
            if basic_text != "-":
                try:
                    basic = BasicCat(basic_text)
                except ValueError:
                    raise LexiconError(
                        f"{path}:{lineno}: unknown basic {basic_text!r}"
                    ) from None
            entries.append(SemEntry(lemma, basic,
                                    _parse_fields(fields_text,
                                                  f"{path}:{lineno}")))
    return entries


def load_mwe_lexicon(path: str | Path) -> list[MweEntry]:
    """space-separated lemma pattern TAB field[,field...]"""
    entries: list[MweEntry] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconError(f"{path}:{lineno}: expected 2 columns")
            pattern = tuple(p.casefold() for p in parts[0].split())
            if len(pattern) < 2:
                raise LexiconError(
                    f"{path}:{lineno}: pattern needs at least two lemmas")
            entries.append(MweEntry(pattern,
                                    _parse_fields(parts[1],
                                                  f"{path}:{lineno}")))
    return entries


def load_inflections(path: str | Path) -> dict[str, str]:
    """surface TAB lemma"""
    table: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconError(f"{path}:{lineno}: expected 2 columns")
            table[parts[0]] = parts[1]
    return table


def load_semtagger(lex_path: str | Path, mwe_path: str | Path,
                   infl_path: str | Path) -> SemTagger:
    return SemTagger(
        load_sem_lexicon(lex_path),
        load_mwe_lexicon(mwe_path),
        load_inflections(infl_path),
    )
