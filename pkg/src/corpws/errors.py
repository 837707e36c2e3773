"""Exception types shared across the package."""


class CorpwsError(Exception):
    """Base class for all package-specific errors."""


class UnknownTag(CorpwsError):
    """A rich tag code is not present in the loaded tagset."""


class LexiconError(CorpwsError):
    """A lexicon or word-list file is malformed."""


class RuleError(CorpwsError):
    """A constraint-grammar rule file cannot be parsed."""


class MetadataError(CorpwsError):
    """Document metadata violates the controlled vocabularies."""


class QueryError(CorpwsError):
    """A query expression or query parameter is invalid."""


class NoMaterial(CorpwsError):
    """The corpus holds no usable material for a requested exercise."""


class AlignmentError(CorpwsError):
    """Two token tables being compared disagree on token text."""
