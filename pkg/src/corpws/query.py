"""Corpus query engine: index, frequency, KWIC, collocation, n-grams, keywords.

A CorpusSnapshot is an immutable view over a corpus with an inverted index
from (attribute, value) to sorted (doc, sentence, position) postings. All
statistics treat "words" per the letter rule: a token counts as a word iff
its text starts with an alphabetic character. Log-likelihood is the
standard UCREL formula; mutual information is base 2.
"""

from __future__ import annotations

import math
import re
from collections import Counter, defaultdict
from dataclasses import dataclass

from .corpus import AnnotatedToken, Corpus, Document
from .errors import QueryError
from .segmenter import is_word

INDEX_ATTRS = ("token_lower", "lemma", "basic", "rich", "sem")
EXPR_ATTRS = ("token", "lemma", "basic", "rich", "sem")
UNITS = ("token_lower", "lemma")


def _unit(name: str) -> str:
    if name == "token":
        return "token_lower"
    if name in UNITS:
        return name
    raise QueryError(f"unknown unit {name!r}; expected token_lower or lemma")


def _word_value(tok: AnnotatedToken, unit: str) -> str:
    return tok.text.casefold() if unit == "token_lower" else tok.lemma


class CorpusSnapshot:
    """Indexed, immutable view of a corpus."""

    def __init__(self, corpus: Corpus):
        self.corpus = corpus
        self.documents: list[Document] = corpus.documents
        self.doc_ids = [d.meta.id for d in self.documents]

        self.index: dict[str, dict[str, list[tuple[int, int, int]]]] = {
            attr: defaultdict(list) for attr in INDEX_ATTRS}
        self.frequency: dict[str, Counter] = {
            attr: Counter() for attr in INDEX_ATTRS}
        self._at: dict[tuple[int, int, int], AnnotatedToken] = {}
        self._sents: list[list[list[AnnotatedToken]]] = []
        self.word_freq: dict[str, Counter] = {u: Counter() for u in UNITS}
        self.doc_word_counts: list[Counter] = []
        self.n_words = 0

        for di, doc in enumerate(self.documents):
            self._sents.append(doc.sentences())
            doc_counter: Counter = Counter()
            for tok in doc.tokens:
                coord = (di, tok.sentence, tok.position)
                self._at[coord] = tok
                values = {
                    "token_lower": tok.text.casefold(),
                    "lemma": tok.lemma,
                    "basic": tok.basic.value,
                    "rich": tok.rich,
                    "sem": tok.sem,
                }
                for attr, value in values.items():
                    self.index[attr][value].append(coord)
                if is_word(tok.text):
                    self.n_words += 1
                    for u in UNITS:
                        self.word_freq[u][_word_value(tok, u)] += 1
                    doc_counter[tok.text.casefold()] += 1
            self.doc_word_counts.append(doc_counter)

        for attr in INDEX_ATTRS:
            self.index[attr] = dict(self.index[attr])
            for value, postings in self.index[attr].items():
                self.frequency[attr][value] = len(postings)

    def token_at(self, doc: int, sentence: int,
                 position: int) -> AnnotatedToken | None:
        return self._at.get((doc, sentence, position))

    def sentences_of(self, doc: int) -> list[list[AnnotatedToken]]:
        return self._sents[doc]

    def word_sentences(self, unit: str | None = None):
        """Yield (doc index, word tokens) per sentence, corpus order."""
        for di in range(len(self.documents)):
            for sent in self._sents[di]:
                yield di, [t for t in sent if is_word(t.text)]

    def doc_indices(self, where: dict | None) -> list[int]:
        if not where:
            return list(range(len(self.documents)))
        chosen = {id(d) for d in self.corpus.select(**where)}
        return [i for i, d in enumerate(self.documents) if id(d) in chosen]


# ------------------------------------------------------------ query expr


_TEST_RE = re.compile(r'^(token|lemma|basic|rich|sem)\s*=\s*"([^"]*)"$')


@dataclass(frozen=True)
class QueryExpr:
    """Sequence of per-token constraints, each a conjunction of equalities."""

    constraints: tuple[tuple[tuple[str, str], ...], ...]

    def __post_init__(self):
        if not self.constraints:
            raise QueryError("query needs at least one token constraint")
        for group in self.constraints:
            if not group:
                raise QueryError("empty token constraint")
            for attr, _ in group:
                if attr not in EXPR_ATTRS:
                    raise QueryError(f"unknown attribute {attr!r}")

    def __len__(self) -> int:
        return len(self.constraints)

    @classmethod
    def parse(cls, text: str) -> "QueryExpr":
        """Parse `[lemma="bod"] [basic="E" & sem="Z5"]` style expressions."""
        rest = text.strip()
        groups: list[tuple[tuple[str, str], ...]] = []
        while rest:
            if not rest.startswith("["):
                raise QueryError(f"expected '[' at {rest[:20]!r}")
            end = rest.find("]")
            if end < 0:
                raise QueryError("unclosed '[' in query")
            inner = rest[1:end].strip()
            if not inner:
                raise QueryError("empty token constraint")
            tests = []
            for part in inner.split("&"):
                m = _TEST_RE.match(part.strip())
                if not m:
                    raise QueryError(f"bad constraint {part.strip()!r}")
                tests.append((m.group(1), m.group(2)))
            groups.append(tuple(tests))
            rest = rest[end + 1:].strip()
        return cls(tuple(groups))


def _token_matches(tok: AnnotatedToken,
                   group: tuple[tuple[str, str], ...]) -> bool:
    for attr, value in group:
        if attr == "token":
            if tok.text.casefold() != value.casefold():
                return False
        elif attr == "lemma":
            if tok.lemma != value:
                return False
        elif attr == "basic":
            if tok.basic.value != value:
                return False
        elif attr == "rich":
            if tok.rich != value:
                return False
        elif tok.sem != value:
            return False
    return True


def _candidates(snapshot: CorpusSnapshot,
                group: tuple[tuple[str, str], ...]):
    """Sorted postings satisfying one constraint group, via the index."""
    chosen: list[tuple[int, int, int]] | None = None
    for attr, value in group:
        key = "token_lower" if attr == "token" else attr
        needle = value.casefold() if attr == "token" else value
        postings = snapshot.index[key].get(needle, [])
        if chosen is None:
            chosen = postings
        else:
            here = set(postings)
            chosen = [c for c in chosen if c in here]
        if not chosen:
            return []
    return chosen or []


# ----------------------------------------------------------- frequency


def frequency_list(snapshot: CorpusSnapshot, unit: str = "token_lower",
                   limit: int | None = None) -> list[tuple[str, int]]:
    """Word frequency list: count desc, ties in code-point order."""
    counts = snapshot.word_freq[_unit(unit)]
    rows = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return rows if limit is None else rows[:limit]


def dense_ranks(rows: list[tuple[str, int]]) -> dict[str, int]:
    """1-based dense ranks over a sorted frequency list; ties share a rank."""
    ranks: dict[str, int] = {}
    rank = 0
    last: int | None = None
    for value, count in rows:
        if count != last:
            rank += 1
            last = count
        ranks[value] = rank
    return ranks


# ---------------------------------------------------------- concordance


@dataclass(frozen=True)
class KwicLine:
    doc_id: str
    sentence: int
    position: int
    left: tuple[str, ...]
    node: tuple[str, ...]
    right: tuple[str, ...]


def _context_slice(sent: list[AnnotatedToken], start: int, stop: int,
                   budget: int, step: int) -> list[str]:
    """Walk outward collecting tokens until `budget` words are taken."""
    out: list[str] = []
    words = 0
    i = start
    while 0 <= i < len(sent) and i != stop and words < budget:
        out.append(sent[i].text)
        if is_word(sent[i].text):
            words += 1
        i += step
    if step < 0:
        out.reverse()
    return out


def concordance(snapshot: CorpusSnapshot, expr: QueryExpr,
                context_words: int = 5, limit: int | None = None,
                where: dict | None = None) -> list[KwicLine]:
    if context_words < 0:
        raise QueryError("context_words must be >= 0")
    if limit is not None and limit <= 0:
        return []
    allowed = set(snapshot.doc_indices(where))
    k = len(expr)
    hits: list[KwicLine] = []
    for di, sentence, position in _candidates(snapshot, expr.constraints[0]):
        if di not in allowed:
            continue
        sent = snapshot.sentences_of(di)[sentence - 1]
        start = position - 1
        if start + k > len(sent):
            continue
        if not all(_token_matches(sent[start + j], expr.constraints[j])
                   for j in range(1, k)):
            continue
        hits.append(KwicLine(
            doc_id=snapshot.doc_ids[di],
            sentence=sentence,
            position=position,
            left=tuple(_context_slice(sent, start - 1, -1,
                                      context_words, -1)),
            node=tuple(t.text for t in sent[start:start + k]),
            right=tuple(_context_slice(sent, start + k, len(sent),
                                       context_words, 1)),
        ))
        if limit is not None and len(hits) >= limit:
            break
    return hits


# ---------------------------------------------------------- statistics


def log_likelihood(a: int, b: int, c: int, d: int) -> float:
    """UCREL log-likelihood for counts a/c vs b/d, with 0*ln(0) = 0."""
    if c + d == 0:
        return 0.0
    total = a + b
    e1 = c * total / (c + d)
    e2 = d * total / (c + d)

    def term(count: int, expected: float) -> float:
        if count <= 0 or expected <= 0:
            return 0.0
        return count * math.log(count / expected)

    return 2.0 * (term(a, e1) + term(b, e2))


def collocations(snapshot: CorpusSnapshot, node: str, span: int = 3,
                 stat: str = "MI", min_count: int = 1,
                 unit: str = "token_lower",
                 ) -> list[tuple[str, int, float, float]]:
    """Collocates of `node` within ±span word positions inside sentences.

    Windows are over word tokens only; punctuation neither fills a slot
    nor blocks one. Expected count E = f(node)*f(coll)*2*span/N. MI is
    log2(O/E); LL applies the keyword formula to window-vs-rest counts.
    Overlapping windows can double-count, so the rest count is clamped
    at zero.
    """
    if span < 1:
        raise QueryError("span must be >= 1")
    if stat not in ("MI", "LL"):
        raise QueryError(f"unknown statistic {stat!r}")
    u = _unit(unit)
    node_value = node.casefold() if u == "token_lower" else node
    freq = snapshot.word_freq[u]
    f_node = freq.get(node_value, 0)
    if f_node == 0:
        return []

    observed: Counter = Counter()
    window_total = 0
    for _, words in snapshot.word_sentences():
        for i, tok in enumerate(words):
            if _word_value(tok, u) != node_value:
                continue
            lo = max(0, i - span)
            hi = min(len(words), i + span + 1)
            for j in range(lo, hi):
                if j == i:
                    continue
                observed[_word_value(words[j], u)] += 1
                window_total += 1

    n = snapshot.n_words
    rows: list[tuple[str, int, float, float]] = []
    for coll, obs in observed.items():
        if obs < min_count:
            continue
        expected = f_node * freq[coll] * 2 * span / n
        if stat == "MI":
            score = math.log2(obs / expected)
        else:
            rest = max(freq[coll] - obs, 0)
            score = log_likelihood(obs, rest, window_total,
                                   max(n - window_total, 0))
        rows.append((coll, obs, expected, score))
    rows.sort(key=lambda r: (-r[3], r[0]))
    return rows


def ngrams(snapshot: CorpusSnapshot, n: int, limit: int | None = None,
           unit: str = "token_lower",
           ) -> list[tuple[tuple[str, ...], int]]:
    """Word n-grams within sentences, ranked count desc then gram order."""
    if n < 1:
        raise QueryError("n must be >= 1")
    u = _unit(unit)
    counts: Counter = Counter()
    for _, words in snapshot.word_sentences():
        values = [_word_value(t, u) for t in words]
        for i in range(len(values) - n + 1):
            counts[tuple(values[i:i + n])] += 1
    rows = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return rows if limit is None else rows[:limit]


def keywords(snapshot: CorpusSnapshot, target: dict,
             reference: dict | str = "rest",
             limit: int | None = None,
             ) -> list[tuple[str, int, int, float, str]]:
    """Words over/under-represented in the target slice of the corpus.

    Rows are (word, target count, reference count, LL, direction) with
    direction judged on relative frequency; sorted LL desc, ties in
    code-point order.
    """
    target_idx = snapshot.doc_indices(target)
    if not target_idx:
        raise QueryError("target selection matches no documents")
    if reference == "rest":
        chosen = set(target_idx)
        ref_idx = [i for i in range(len(snapshot.documents))
                   if i not in chosen]
    elif isinstance(reference, dict):
        ref_idx = snapshot.doc_indices(reference)
    else:
        raise QueryError("reference must be a metadata filter or 'rest'")
    if not ref_idx:
        raise QueryError("reference selection matches no documents")

    t_counts: Counter = Counter()
    for i in target_idx:
        t_counts.update(snapshot.doc_word_counts[i])
    r_counts: Counter = Counter()
    for i in ref_idx:
        r_counts.update(snapshot.doc_word_counts[i])
    c = sum(t_counts.values())
    d = sum(r_counts.values())

    rows: list[tuple[str, int, int, float, str]] = []
    for word in set(t_counts) | set(r_counts):
        a = t_counts.get(word, 0)
        b = r_counts.get(word, 0)
        ll = log_likelihood(a, b, c, d)
        direction = "over" if a * d >= b * c else "under"
        rows.append((word, a, b, ll, direction))
    rows.sort(key=lambda r: (-r[3], r[0]))
    return rows if limit is None else rows[:limit]
