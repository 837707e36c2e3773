"""Corpus store: annotated documents, metadata, and the vertical file format.

A document is a flat list of annotated tokens plus metadata. On disk it is
a vertical text file: `# key: value` header lines, a blank line, then one
tab-separated row per token with sentences separated by blank lines. The
writer is canonical, so writing a document read from a well-formed file
reproduces it byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .cg import tag
from .errors import MetadataError
from .lexicon import MutationKind
from .segmenter import is_word
from .tagset import BasicCat

LANGUAGE_TYPES = ("spoken", "written", "elanguage")

GENRES: dict[str, frozenset[str]] = {
    "spoken": frozenset({
        "broadcast",
        "educational",
        "private",
        "professional",
        "public_or_institutional",
        "social",
        "transactional",
    }),
    "written": frozenset({
        "academic_journal",
        "book",
        "essays_coursework_and_exams",
        "leaflet_document_announcement",
        "letter",
        "magazine",
        "miscellaneous",
        "newsletter",
        "papur_bro",
        "thesis",
    }),
    "elanguage": frozenset({
        "blog",
        "email",
        "SMS",
        "website",
    }),
}

META_KEYS = ("id", "language_type", "genre", "sensitive", "region", "source")


@dataclass(frozen=True)
class DocMeta:
    id: str
    language_type: str
    genre: str
    sensitive: bool = False
    region: str | None = None
    source: str | None = None

    def __post_init__(self):
        if not self.id or any(ch.isspace() for ch in self.id):
            raise MetadataError(f"bad document id {self.id!r}")
        if self.language_type not in LANGUAGE_TYPES:
            raise MetadataError(
                f"unknown language_type {self.language_type!r}; "
                f"expected one of {', '.join(LANGUAGE_TYPES)}")
        if self.genre not in GENRES[self.language_type]:
            raise MetadataError(
                f"genre {self.genre!r} is not valid for "
                f"{self.language_type!r}")

    def value(self, key: str):
        if key not in META_KEYS:
            raise MetadataError(f"unknown metadata key {key!r}")
        return getattr(self, key)


@dataclass(frozen=True)
class AnnotatedToken:
    text: str
    sentence: int
    position: int
    lemma: str
    basic: BasicCat
    rich: str
    mutation: MutationKind
    sem: str


@dataclass
class Document:
    meta: DocMeta
    tokens: list[AnnotatedToken] = field(default_factory=list)

    def sentences(self) -> list[list[AnnotatedToken]]:
        out: list[list[AnnotatedToken]] = []
        for tok in self.tokens:
            if tok.position == 1:
                out.append([])
            out[-1].append(tok)
        return out

    @property
    def n_tokens(self) -> int:
        return len(self.tokens)

    @property
    def n_words(self) -> int:
        return sum(1 for tok in self.tokens if is_word(tok.text))


def ingest(text: str, meta: DocMeta, lexicon=None, rules=None,
           abbreviations=None, semtagger=None) -> Document:
    """Run the full annotation pipeline over raw text."""
    from . import resources

    lexicon = lexicon or resources.default_lexicon()
    rules = rules if rules is not None else resources.default_rules()
    if abbreviations is None:
        abbreviations = resources.default_abbreviations()
    semtagger = semtagger or resources.default_semtagger()

    tokens: list[AnnotatedToken] = []
    for sentence in tag(text, lexicon, rules, abbreviations):
        fields = semtagger.tag_sentence(sentence)
        for tt, sem in zip(sentence, fields):
            ana = tt.resolved
            tokens.append(AnnotatedToken(
                text=tt.token.text,
                sentence=tt.token.sentence,
                position=tt.token.position,
                lemma=ana.lemma,
                basic=ana.basic,
                rich=ana.rich,
                mutation=ana.mutation,
                sem=sem,
            ))
    return Document(meta, tokens)


# ------------------------------------------------------------- vertical


def _check_field(value: str, what: str) -> str:
    if "\t" in value or "\n" in value or "\r" in value:
        raise MetadataError(f"{what} contains tab or newline: {value!r}")
    return value


def write_vertical(doc: Document) -> str:
    """Canonical vertical serialization of one document."""
    meta = doc.meta
    lines = [
        f"# id: {_check_field(meta.id, 'id')}",
        f"# language_type: {meta.language_type}",
        f"# genre: {meta.genre}",
        f"# sensitive: {'true' if meta.sensitive else 'false'}",
    ]
    if meta.region is not None:
        lines.append(f"# region: {_check_field(meta.region, 'region')}")
    if meta.source is not None:
        lines.append(f"# source: {_check_field(meta.source, 'source')}")
    lines.append("")

    index = 0
    last_sentence = None
    for tok in doc.tokens:
        index += 1
        if last_sentence is not None and tok.sentence != last_sentence:
            lines.append("")
        last_sentence = tok.sentence
        row = "\t".join((
            str(index),
            _check_field(tok.text, "token"),
            f"{tok.sentence},{tok.position}",
            _check_field(tok.lemma, "lemma"),
            tok.basic.value,
            _check_field(tok.rich, "rich tag"),
            tok.mutation.value,
            _check_field(tok.sem, "semantic field"),
        ))
        lines.append(row)
    return "\n".join(lines) + "\n"


def _parse_header(lines: list[str], where: str) -> DocMeta:
    values: dict[str, str] = {}
    for line in lines:
        if not line.startswith("# ") or ": " not in line:
            raise MetadataError(f"{where}: bad header line {line!r}")
        key, _, value = line[2:].partition(": ")
        if key in values:
            raise MetadataError(f"{where}: duplicate header key {key!r}")
        if key not in META_KEYS:
            raise MetadataError(f"{where}: unknown header key {key!r}")
        values[key] = value
    for required in ("id", "language_type", "genre", "sensitive"):
        if required not in values:
            raise MetadataError(f"{where}: missing header {required!r}")
    if values["sensitive"] not in ("true", "false"):
        raise MetadataError(
            f"{where}: sensitive must be true or false, "
            f"got {values['sensitive']!r}")
    return DocMeta(
        id=values["id"],
        language_type=values["language_type"],
        genre=values["genre"],
        sensitive=values["sensitive"] == "true",
        region=values.get("region"),
        source=values.get("source"),
    )


def read_vertical(text: str, where: str = "<string>") -> Document:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    header: list[str] = []
    i = 0
    while i < len(lines) and lines[i].startswith("#"):
        header.append(lines[i])
        i += 1
    meta = _parse_header(header, where)
    if i < len(lines) and lines[i] == "":
        i += 1

    tokens: list[AnnotatedToken] = []
    expected_index = 0
    sentence = 1
    position = 0
    saw_row_in_sentence = False
    for lineno in range(i, len(lines)):
        line = lines[lineno]
        if line == "":
            if saw_row_in_sentence:
                sentence += 1
                position = 0
                saw_row_in_sentence = False
            continue
        parts = line.split("\t")
        if len(parts) != 8:
            raise MetadataError(
                f"{where}:{lineno + 1}: expected 8 columns, "
                f"got {len(parts)}")
        expected_index += 1
        position += 1
        saw_row_in_sentence = True
        idx_text, tok_text, coord, lemma, basic_text, rich, mut_text, sem \
            = parts
        if idx_text != str(expected_index):
            raise MetadataError(
                f"{where}:{lineno + 1}: index {idx_text!r}, "
                f"expected {expected_index}")
        if coord != f"{sentence},{position}":
            raise MetadataError(
                f"{where}:{lineno + 1}: coordinate {coord!r}, "
                f"expected {sentence},{position}")
        try:
            basic = BasicCat(basic_text)
        except ValueError:
            raise MetadataError(
                f"{where}:{lineno + 1}: unknown basic tag "
                f"{basic_text!r}") from None
        try:
            mutation = MutationKind.parse(mut_text)
        except ValueError:
            raise MetadataError(
                f"{where}:{lineno + 1}: unknown mutation "
                f"{mut_text!r}") from None
        if not rich.startswith(basic.value):
            raise MetadataError(
                f"{where}:{lineno + 1}: rich tag {rich!r} does not "
                f"extend basic {basic_text!r}")
        tokens.append(AnnotatedToken(tok_text, sentence, position, lemma,
                                     basic, rich, mutation, sem))
    return Document(meta, tokens)


def save_vertical(doc: Document, path: str | Path) -> None:
    Path(path).write_text(write_vertical(doc), encoding="utf-8")


def load_vertical(path: str | Path) -> Document:
    text = Path(path).read_text(encoding="utf-8")
    return read_vertical(text, where=str(path))


# --------------------------------------------------------------- corpus


class Corpus:
    def __init__(self, documents: list[Document]):
        self.documents = list(documents)
        seen: set[str] = set()
        for doc in self.documents:
            if doc.meta.id in seen:
                raise MetadataError(f"duplicate document id {doc.meta.id!r}")
            seen.add(doc.meta.id)

    def __len__(self) -> int:
        return len(self.documents)

    def get(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.meta.id == doc_id:
                return doc
        raise MetadataError(f"no document with id {doc_id!r}")

    def select(self, **criteria) -> list[Document]:
        """Documents whose metadata matches every given equality.

        Filtering on a key that is not a metadata field matches nothing.
        """
        if any(key not in META_KEYS for key in criteria):
            return []
        return [
            doc for doc in self.documents
            if all(doc.meta.value(k) == v for k, v in criteria.items())
        ]

    def stats(self) -> dict:
        return {
            "documents": len(self.documents),
            "tokens": sum(d.n_tokens for d in self.documents),
            "words": sum(d.n_words for d in self.documents),
        }

    def stats_by(self, key: str) -> dict[str, dict]:
        if key not in META_KEYS:
            raise MetadataError(f"unknown metadata key {key!r}")
        out: dict[str, dict] = {}
        for doc in self.documents:
            value = doc.meta.value(key)
            if isinstance(value, bool):
                label = "true" if value else "false"
            elif value is None:
                label = "-"
            else:
                label = str(value)
            bucket = out.setdefault(
                label, {"documents": 0, "tokens": 0, "words": 0})
            bucket["documents"] += 1
            bucket["tokens"] += doc.n_tokens
            bucket["words"] += doc.n_words
        return out

    def without_sensitive(self) -> "Corpus":
        return Corpus([d for d in self.documents if not d.meta.sensitive])


def parse_meta_filters(pairs) -> dict:
    """Turn key=value filter strings into a metadata criteria dict.

    The sensitive key becomes a real bool; everything else stays a string.
    """
    out: dict = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise MetadataError(
                f"filter must look like key=value: {pair!r}")
        key, value = pair.split("=", 1)
        if key == "sensitive":
            if value not in ("true", "false"):
                raise MetadataError("sensitive filter takes true or false")
            out[key] = value == "true"
        else:
            out[key] = value
    return out


def load_corpus(manifest_path: str | Path) -> Corpus:
    """Read a corpus from a manifest of `id TAB relative-path` lines."""
    manifest_path = Path(manifest_path)
    base = manifest_path.parent
    documents: list[Document] = []
    with open(manifest_path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise MetadataError(
                    f"{manifest_path}:{lineno}: expected id TAB path")
            doc_id, relpath = parts
            doc = load_vertical(base / relpath)
            if doc.meta.id != doc_id:
                raise MetadataError(
                    f"{manifest_path}:{lineno}: manifest id {doc_id!r} "
                    f"but file says {doc.meta.id!r}")
            documents.append(doc)
    return Corpus(documents)
