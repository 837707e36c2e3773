"""corpws: Welsh POS tagging, corpus querying and learning exercises."""

__version__ = "0.1.0"

from .errors import (
    AlignmentError,
    CorpwsError,
    LexiconError,
    MetadataError,
    NoMaterial,
    QueryError,
    RuleError,
    UnknownTag,
)
from .lexicon import Analysis, Lexicon, MutationKind, apply_mutation, demutate
from .segmenter import Token, UnitCounts, count_units, is_word, tokenize
from .tagset import BasicCat, RichTag, Tagset, load_tagset

__all__ = [
    "AlignmentError",
    "Analysis",
    "BasicCat",
    "CorpwsError",
    "Lexicon",
    "LexiconError",
    "MetadataError",
    "MutationKind",
    "NoMaterial",
    "QueryError",
    "RichTag",
    "RuleError",
    "Tagset",
    "Token",
    "UnitCounts",
    "UnknownTag",
    "apply_mutation",
    "count_units",
    "demutate",
    "is_word",
    "load_tagset",
    "tokenize",
]
