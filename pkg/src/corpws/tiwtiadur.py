"""Data-driven learning exercises: bands, profile, cloze, identify, word task.

Frequency bands follow the K-scheme: K1 covers ranks 1 to 1000, each next
band the next thousand, and K6plus everything from rank 5001 up as well as
words absent from the corpus. Band statistics always reference the whole
corpus; the exercise extracts never come from sensitive-flagged documents.
All generators are pure functions of (snapshot, parameters, seed).
"""

from __future__ import annotations

import hashlib
import json
import random
import unicodedata
from dataclasses import dataclass
from typing import Mapping

from .errors import NoMaterial
from .query import CorpusSnapshot, dense_ranks, frequency_list
from .segmenter import is_word, tokenize
from .tagset import BasicCat

BANDS = ("K1", "K2", "K3", "K4", "K5", "K6plus")
CLOZE_LENGTHS = (100, 200, 300, 400, 500)


def make_task_id(kind: str, params: dict) -> str:
    """Stable id for a task: same kind + params + seed, same id."""
    payload = json.dumps({"kind": kind, **params}, sort_keys=True,
                         ensure_ascii=False)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


# ---------------------------------------------------------------- bands


@dataclass(frozen=True)
class BandTable:
    """Dense frequency ranks (case-folded words) and their K-bands."""

    ranks: Mapping[str, int]

    @staticmethod
    def band_for_rank(rank: int) -> str:
        if rank < 1:
            raise ValueError(f"ranks are 1-based, got {rank}")
        if rank > 5000:
            return "K6plus"
        return f"K{(rank - 1) // 1000 + 1}"

    def __contains__(self, word: str) -> bool:
        return word.casefold() in self.ranks

    def rank_of(self, word: str) -> int | None:
        return self.ranks.get(word.casefold())

    def band_of(self, word: str) -> str:
        rank = self.ranks.get(word.casefold())
        return "K6plus" if rank is None else self.band_for_rank(rank)


def build_bands(snapshot: CorpusSnapshot,
                exclude_sensitive_from_stats: bool = False) -> BandTable:
    """Band table over the whole corpus (sensitive texts included).

    The flag exists for callers that genuinely need sanitized statistics;
    it is off by default because frequency levels are meant to reference
    everything the corpus contains, however the extracts are filtered.
    """
    if exclude_sensitive_from_stats:
        snapshot = CorpusSnapshot(snapshot.corpus.without_sensitive())
    rows = frequency_list(snapshot, unit="token_lower")
    if not rows:
        raise NoMaterial("corpus contains no words to rank")
    return BandTable(dense_ranks(rows))


# -------------------------------------------------------------- profile


@dataclass(frozen=True)
class ProfileEntry:
    word: str
    band: str
    highlight: bool


@dataclass(frozen=True)
class Profile:
    entries: tuple[ProfileEntry, ...]
    counts: dict[str, int]
    percentages: dict[str, float]
    total_words: int


def profile(text: str, bands: BandTable,
            highlight_non_level: bool = False) -> Profile:
    """Label every word of a text with its frequency band.

    By default the highlight flag marks words found in the corpus ranking;
    highlight_non_level inverts it to mark the words the ranking lacks.
    """
    entries: list[ProfileEntry] = []
    counts = {band: 0 for band in BANDS}
    for sentence in tokenize(text):
        for tok in sentence:
            if not is_word(tok.text):
                continue
            band = bands.band_of(tok.text)
            present = tok.text in bands
            highlight = (not present) if highlight_non_level else present
            entries.append(ProfileEntry(tok.text, band, highlight))
            counts[band] += 1
    total = len(entries)
    percentages = {
        band: (100.0 * n / total if total else 0.0)
        for band, n in counts.items()
    }
    return Profile(tuple(entries), counts, percentages, total)


# ---------------------------------------------------------------- cloze


@dataclass(frozen=True)
class ClozeTask:
    task_id: str
    doc_id: str
    display: tuple[dict, ...]  # {"word": text} or {"gap": answer index}
    answers: tuple[str, ...]
    bank: tuple[str, ...]
    params: dict


def _eligible_docs(snapshot: CorpusSnapshot, genre: str | None):
    out = []
    for di, doc in enumerate(snapshot.documents):
        if doc.meta.sensitive:
            continue
        if genre is not None and doc.meta.genre != genre:
            continue
        if doc.n_words == 0:
            continue
        out.append((di, doc))
    return out


def cloze_create(snapshot: CorpusSnapshot, genre: str | None,
                 gap_frequency: int, text_length: int,
                 seed: int) -> ClozeTask:
    """Gap every n-th word of a random window from a non-sensitive text."""
    if gap_frequency < 2:
        raise ValueError("gap_frequency must be at least 2")
    if text_length not in CLOZE_LENGTHS:
        raise ValueError(
            f"text_length must be one of {CLOZE_LENGTHS}, got {text_length}")
    eligible = _eligible_docs(snapshot, genre)
    if not eligible:
        raise NoMaterial(
            "no non-sensitive document available"
            + (f" for genre {genre!r}" if genre else ""))

    rng = random.Random(seed)
    _, doc = eligible[rng.randrange(len(eligible))]
    word_positions = [i for i, t in enumerate(doc.tokens)
                      if is_word(t.text)]
    span = min(text_length, len(word_positions))
    start = rng.randrange(len(word_positions) - span + 1)
    first = word_positions[start]
    last = word_positions[start + span - 1]
    window = doc.tokens[first:last + 1]

    display: list[dict] = []
    answers: list[str] = []
    word_no = 0
    for tok in window:
        if is_word(tok.text):
            word_no += 1
            if word_no % gap_frequency == 0:
                display.append({"gap": len(answers)})
                answers.append(tok.text)
                continue
        display.append({"word": tok.text})

    bank = list(answers)
    rng.shuffle(bank)
    params = {"genre": genre, "gap_frequency": gap_frequency,
              "text_length": text_length, "seed": seed}
    return ClozeTask(
        task_id=make_task_id("cloze", params),
        doc_id=doc.meta.id,
        display=tuple(display),
        answers=tuple(answers),
        bank=tuple(bank),
        params=params,
    )


def _fold(text: str) -> str:
    return unicodedata.normalize("NFC", text).casefold()


def check_answers(answers, fills) -> list[bool]:
    """Per-gap marking after NFC normalization and case folding."""
    answers = list(answers)
    fills = list(fills)
    if len(fills) != len(answers):
        raise ValueError(
            f"expected {len(answers)} answers, got {len(fills)}")
    return [_fold(f) == _fold(a) for f, a in zip(fills, answers)]


def cloze_check(task: ClozeTask, fills) -> list[bool]:
    return check_answers(task.answers, fills)


# -------------------------------------------------------------- identify


@dataclass(frozen=True)
class TaskLine:
    doc_id: str
    sentence: int
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class IdentifyTask:
    task_id: str
    band: str
    word_type: str
    lines: tuple[TaskLine, ...]
    answer: str
    params: dict


def _blanked_line(snapshot: CorpusSnapshot, di: int, sentence: int,
                  word: str) -> TaskLine:
    sent = snapshot.sentences_of(di)[sentence - 1]
    tokens = tuple(
        "___" if t.text.casefold() == word else t.text for t in sent)
    return TaskLine(snapshot.doc_ids[di], sentence, tokens)


def identify_task(snapshot: CorpusSnapshot, bands: BandTable, band: str,
                  word_type: BasicCat, max_sentences: int,
                  seed: int) -> IdentifyTask:
    """Blank a seeded-random word of the given band and category."""
    if band not in ("K1", "K2", "K3"):
        raise ValueError(f"band must be K1, K2 or K3, got {band!r}")
    if max_sentences < 1:
        raise ValueError("max_sentences must be at least 1")

    candidates: dict[str, set[tuple[int, int]]] = {}
    for di, doc in enumerate(snapshot.documents):
        if doc.meta.sensitive:
            continue
        for tok in doc.tokens:
            if not is_word(tok.text) or tok.basic != word_type:
                continue
            w = tok.text.casefold()
            if bands.band_of(w) != band:
                continue
            candidates.setdefault(w, set()).add((di, tok.sentence))
    if not candidates:
        raise NoMaterial(
            f"no {band} word of type {word_type.value} in any "
            f"non-sensitive document")

    rng = random.Random(seed)
    word = rng.choice(sorted(candidates))
    locations = sorted(candidates[word])
    if len(locations) > max_sentences:
        locations = sorted(rng.sample(locations, max_sentences))
    lines = tuple(_blanked_line(snapshot, di, s, word)
                  for di, s in locations)
    params = {"band": band, "word_type": word_type.value,
              "max_sentences": max_sentences, "seed": seed}
    return IdentifyTask(
        task_id=make_task_id("identify", params),
        band=band,
        word_type=word_type.value,
        lines=lines,
        answer=word,
        params=params,
    )


# -------------------------------------------------------------- wordtask


@dataclass(frozen=True)
class WordTask:
    task_id: str
    word: str
    pos: str | None
    lines: tuple[TaskLine, ...]
    reveal: str
    params: dict


def word_task(snapshot: CorpusSnapshot, word: str,
              pos: BasicCat | None = None, max_lines: int = 10,
              seed: int = 0) -> WordTask:
    """Blanked concordance extracts for a chosen word, reveal included."""
    if not 1 <= max_lines <= 20:
        raise ValueError("max_lines must be between 1 and 20")
    w = word.casefold()

    occurrences: list[tuple[int, int, int]] = []
    for di, doc in enumerate(snapshot.documents):
        if doc.meta.sensitive:
            continue
        for tok in doc.tokens:
            if tok.text.casefold() != w:
                continue
            if pos is not None and tok.basic != pos:
                continue
            occurrences.append((di, tok.sentence, tok.position))
    if not occurrences:
        raise NoMaterial(
            f"{word!r} does not occur"
            + (f" as {pos.value}" if pos else "")
            + " in any non-sensitive document")

    rng = random.Random(seed)
    if len(occurrences) > max_lines:
        occurrences = sorted(rng.sample(occurrences, max_lines))
    lines = tuple(_blanked_line(snapshot, di, s, w)
                  for di, s, _ in occurrences)
    params = {"word": word, "pos": pos.value if pos else None,
              "max_lines": max_lines, "seed": seed}
    return WordTask(
        task_id=make_task_id("wordtask", params),
        word=word,
        pos=pos.value if pos else None,
        lines=lines,
        reveal=word,
        params=params,
    )
