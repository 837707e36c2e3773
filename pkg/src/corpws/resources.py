"""Access to the bundled fixture data (lexicon, tagset, rules, corpus)."""

from __future__ import annotations

from functools import lru_cache
from importlib.resources import files
from pathlib import Path


def data_path(*parts: str) -> Path:
    """Path of a bundled data file, e.g. data_path('lexicon.tsv')."""
    return Path(str(files(__package__).joinpath("data", *parts)))


DEFAULT_PATHS = {
    "tagset": "tagset.tsv",
    "lexicon": "lexicon.tsv",
    "english": "english_words.txt",
    "abbreviations": "abbreviations.txt",
    "rules": "rules.cg",
    "semlex": "semlex.tsv",
    "semmwe": "semmwe.tsv",
    "seminfl": "seminfl.tsv",
    "corpus": "corpus/manifest.txt",
    "gold": "gold/gold.vrt",
}


@lru_cache(maxsize=1)
def default_tagset():
    from .tagset import load_tagset

    return load_tagset(data_path(DEFAULT_PATHS["tagset"]))


@lru_cache(maxsize=1)
def default_lexicon():
    from .lexicon import load_lexicon

    return load_lexicon(
        data_path(DEFAULT_PATHS["lexicon"]),
        default_tagset(),
        data_path(DEFAULT_PATHS["english"]),
    )


@lru_cache(maxsize=1)
def default_rules():
    from .cg import load_rules

    return load_rules(data_path(DEFAULT_PATHS["rules"]))


@lru_cache(maxsize=1)
def default_abbreviations():
    from .segmenter import load_abbreviations

    return load_abbreviations(data_path(DEFAULT_PATHS["abbreviations"]))


@lru_cache(maxsize=1)
def default_corpus():
    from .corpus import load_corpus

    return load_corpus(data_path(DEFAULT_PATHS["corpus"]))


@lru_cache(maxsize=1)
def default_semtagger():
    from .semtag import load_semtagger

    return load_semtagger(
        data_path(DEFAULT_PATHS["semlex"]),
        data_path(DEFAULT_PATHS["semmwe"]),
        data_path(DEFAULT_PATHS["seminfl"]),
    )
