"""Part-of-speech tagset: thirteen basic categories and the rich tags over them.

The tagset is data, not code: rich tags are loaded from a tab-separated file
so the inventory can grow without touching the tagger. Each rich tag code
must begin with the code of its basic category, which makes the mapping from
rich to basic recoverable by eye in tagged output.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from .errors import UnknownTag


class BasicCat(enum.Enum):
    """The thirteen coarse part-of-speech categories."""

    E = "E"          # noun
    Ans = "Ans"      # adjective
    B = "B"          # verb
    Adf = "Adf"      # adverb
    Ar = "Ar"        # preposition
    Cys = "Cys"      # conjunction
    Ban = "Ban"      # article
    Rha = "Rha"      # pronoun
    Rhi = "Rhi"      # numeral
    Ebych = "Ebych"  # interjection
    U = "U"          # particle
    Gw = "Gw"        # other: non-Welsh, unknown, symbols
    Atd = "Atd"      # punctuation

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RichTag:
    """One fine-grained tag: its code, basic category and morphological features."""

    code: str
    basic: BasicCat
    features: dict[str, str] = field(default_factory=dict, compare=False)


class Tagset:
    """The loaded rich-tag inventory, keyed by code."""

    def __init__(self, tags: list[RichTag]):
        self._by_code: dict[str, RichTag] = {}
        for tag in tags:
            if not tag.code.startswith(tag.basic.value):
                raise UnknownTag(
                    f"rich code {tag.code!r} does not extend its basic code "
                    f"{tag.basic.value!r}"
                )
            if tag.code in self._by_code:
                raise UnknownTag(f"duplicate rich code {tag.code!r}")
            self._by_code[tag.code] = tag

    def __len__(self) -> int:
        return len(self._by_code)

    def __contains__(self, code: str) -> bool:
        return code in self._by_code

    def __iter__(self):
        return iter(self._by_code.values())

    def parse_tag(self, code: str) -> RichTag:
        """Return the RichTag for a code, raising UnknownTag if absent."""
        try:
            return self._by_code[code]
        except KeyError:
            raise UnknownTag(f"unknown rich tag {code!r}") from None

    def basic_of(self, code: str) -> BasicCat:
        return self.parse_tag(code).basic


def load_tagset(path: str | Path) -> Tagset:
    """Read a tagset file.

    Format, one tag per line, '#' starts a comment:
        rich_code <TAB> basic_code <TAB> key=value,key=value
    The third column may be empty for tags with no features.
    """
    tags: list[RichTag] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) not in (2, 3):
                raise UnknownTag(f"{path}:{lineno}: expected 2 or 3 columns")
            code, basic_code = parts[0], parts[1]
            try:
                basic = BasicCat(basic_code)
            except ValueError:
                raise UnknownTag(
                    f"{path}:{lineno}: unknown basic category {basic_code!r}"
                ) from None
            features: dict[str, str] = {}
            if len(parts) == 3 and parts[2]:
                for pair in parts[2].split(","):
                    key, _, value = pair.partition("=")
                    if not key or not value:
                        raise UnknownTag(f"{path}:{lineno}: bad feature {pair!r}")
                    features[key] = value
            tags.append(RichTag(code=code, basic=basic, features=features))
    return Tagset(tags)
