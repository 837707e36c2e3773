"""Lexicon lookup with initial-consonant mutation handling.

Welsh initial consonants change under three mutation series (soft, nasal,
aspirate), so a surface form like 'wlad' must be traced back to its citation
form 'gwlad' before the lexicon can say anything about it. Demutation here is
purely string-level: it enumerates every (base, kind) candidate that could
have produced the surface, and leaves it to lookup to discard candidates the
lexicon does not know.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path

from .errors import LexiconError
from .tagset import BasicCat, Tagset


class MutationKind(enum.Enum):
    NONE = "-"
    SOFT = "sm"
    NASAL = "nm"
    ASPIRATE = "am"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "MutationKind":
        for kind in cls:
            if kind.value == text:
                return kind
        raise ValueError(f"unknown mutation marker {text!r}")


# src -> dst, per series. g maps to the empty string under soft mutation
# (g-deletion). Sources ll/rh are digraphs and must be tried before l/r.
SOFT = {
    "ll": "l", "rh": "r",
    "p": "b", "t": "d", "c": "g", "b": "f", "d": "dd", "g": "", "m": "f",
}
NASAL = {"p": "mh", "t": "nh", "c": "ngh", "b": "m", "d": "n", "g": "ng"}
ASPIRATE = {"p": "ph", "t": "th", "c": "ch"}

_TABLES = {
    MutationKind.SOFT: SOFT,
    MutationKind.NASAL: NASAL,
    MutationKind.ASPIRATE: ASPIRATE,
}

# Initial clusters recognised during demutation, longest first, so that
# e.g. 'nghath' parses as ngh+ath, never n+ghath.
_CLUSTERS = ["ngh", "ll", "rh", "ng", "ch", "dd", "ph", "th", "mh", "nh"]

# Letters that can follow g in a Welsh onset; g-restoration is only offered
# for surfaces starting with one of these.
_AFTER_G = set("aeiouwylr" + "âêîôûŵŷáéíóúàèìòù")


def _match_source(word: str, table: dict[str, str]) -> str | None:
    # Parse the initial cluster first: a word starting with ch/th/ng etc.
    # has an immutable initial, its first letter only looks like c or t.
    folded = word.lower()
    cluster = next((c for c in _CLUSTERS if folded.startswith(c)), folded[:1])
    if cluster in table:
        return cluster
    return None


def apply_mutation(base: str, kind: MutationKind) -> str:
    """Mutate the initial consonant of base, or return base unchanged.

    The case of the initial letter carries over to the replacement, so
    Cymru + soft gives Gymru and Gwlad + soft gives Wlad.
    """
    if kind is MutationKind.NONE or not base:
        return base
    table = _TABLES[kind]
    key = _match_source(base, table)
    if key is None:
        return base
    replacement = table[key]
    upper = base[0].isupper()
    rest = base[len(key):]
    if not replacement:
        # g-deletion: the following letter inherits the capital
        if upper and rest:
            rest = rest[0].upper() + rest[1:]
        return rest
    if upper:
        replacement = replacement[0].upper() + replacement[1:]
    return replacement + rest


def demutate(surface: str) -> list[tuple[str, MutationKind]]:
    """Every (base, kind) candidate that could have produced this surface.

    The list always starts with (surface, NONE). Candidates are string-level
    only; whether a base exists is the lexicon's business. For each kind that
    cannot touch the surface's initial at all, (surface, kind) itself is a
    candidate, since applying that mutation is a no-op. No pair appears twice.
    """
    out: list[tuple[str, MutationKind]] = [(surface, MutationKind.NONE)]
    if not surface:
        return out
    folded = surface.lower()
    cluster = next((c for c in _CLUSTERS if folded.startswith(c)), folded[0])
    upper = surface[0].isupper()
    rest = surface[len(cluster):]

    def add(base: str, kind: MutationKind) -> None:
        pair = (base, kind)
        if pair not in out:
            out.append(pair)

    for kind, table in _TABLES.items():
        for src, dst in table.items():
            if dst == cluster:
                restored = src[0].upper() + src[1:] if upper else src
                add(restored + rest, kind)
    if folded[0] in _AFTER_G:
        if upper:
            add("G" + surface[0].lower() + surface[1:], MutationKind.SOFT)
        else:
            add("g" + surface, MutationKind.SOFT)
    for kind in _TABLES:
        if apply_mutation(surface, kind) == surface:
            add(surface, kind)
    return out


@dataclass(frozen=True)
class LexEntry:
    surface: str
    lemma: str
    rich: str
    frequency: int
    order: int  # position in the lexicon file, for tie-breaking


@dataclass(frozen=True)
class Analysis:
    """One reading of a token: lemma, tags and the mutation that explains it."""

    lemma: str
    basic: BasicCat
    rich: str
    mutation: MutationKind


class Lexicon:
    """Surface-form lexicon plus the non-Welsh word list."""

    def __init__(self, entries: list[LexEntry], tagset: Tagset,
                 english: set[str] | None = None):
        self.tagset = tagset
        self.entries = list(entries)
        self.english = set(english or ())
        self._by_surface: dict[str, list[LexEntry]] = {}
        for entry in self.entries:
            if entry.rich not in tagset:
                raise LexiconError(
                    f"entry {entry.surface!r} uses rich tag {entry.rich!r} "
                    "not present in the tagset"
                )
            self._by_surface.setdefault(entry.surface, []).append(entry)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def bases(self) -> list[str]:
        """Distinct entry surfaces, in file order."""
        seen: dict[str, None] = {}
        for entry in self.entries:
            seen.setdefault(entry.surface)
        return list(seen)

    def lookup(self, surface: str) -> list[Analysis]:
        """All analyses for a surface form.

        Words on the non-Welsh list get a single Gwest analysis and are never
        demutated. Otherwise each demutation candidate is probed against the
        lexicon, first at the original casing, then (if nothing matched) with
        the surface case-folded. Analyses are ordered by descending entry
        frequency, ties broken by lexicon file order. The same entry is never
        reported twice: the earliest demutation candidate wins, and since
        (surface, NONE) is first, an unmutated reading is preferred over a
        vacuous mutation of the same entry.
        """
        if surface.casefold() in self.english:
            return [Analysis(surface.casefold(), BasicCat.Gw, "Gwest",
                             MutationKind.NONE)]
        hits = self._probe(surface)
        if not hits and surface != surface.casefold():
            hits = self._probe(surface.casefold())
        hits.sort(key=lambda pair: (-pair[0].frequency, pair[0].order))
        return [
            Analysis(entry.lemma, self.tagset.basic_of(entry.rich),
                     entry.rich, kind)
            for entry, kind in hits
        ]

    def _probe(self, surface: str) -> list[tuple[LexEntry, MutationKind]]:
        hits: list[tuple[LexEntry, MutationKind]] = []
        seen: set[int] = set()
        for base, kind in demutate(surface):
            for entry in self._by_surface.get(base, ()):
                if entry.order not in seen:
                    seen.add(entry.order)
                    hits.append((entry, kind))
        return hits


def load_lexicon(path: str | Path, tagset: Tagset,
                 english_path: str | Path | None = None) -> Lexicon:
    """Read a lexicon file: surface TAB lemma TAB rich_tag TAB frequency."""
    entries: list[LexEntry] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise LexiconError(f"{path}:{lineno}: expected 4 columns")
            surface, lemma, rich, freq_text = parts
            if not surface or not lemma:
                raise LexiconError(f"{path}:{lineno}: empty surface or lemma")
            try:
                frequency = int(freq_text)
            except ValueError:
                raise LexiconError(
                    f"{path}:{lineno}: bad frequency {freq_text!r}"
                ) from None
            if frequency < 0:
                raise LexiconError(f"{path}:{lineno}: negative frequency")
            entries.append(LexEntry(surface, lemma, rich, frequency,
                                    order=len(entries)))
    english = load_wordlist(english_path) if english_path else set()
    return Lexicon(entries, tagset, english)


def load_wordlist(path: str | Path) -> set[str]:
    """One word per line, case-folded; '#' starts a comment."""
    words: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            word = raw.strip()
            if word and not word.startswith("#"):
                words.add(word.casefold())
    return words
