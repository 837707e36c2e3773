"""Gold-standard comparison for tagger output.

Both inputs are vertical files that share one tokenization; comparison is
strictly positional and aborts on the first token-text mismatch.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

from .corpus import Document, load_vertical
from .errors import AlignmentError


@dataclass(frozen=True)
class EvalReport:
    tokens_compared: int
    rich_accuracy: float
    basic_accuracy: float
    lemma_accuracy: float
    confusion: tuple[tuple[str, str, int], ...]  # (gold rich, system rich, n)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["confusion"] = [
            {"gold": g, "system": s, "count": n}
            for g, s, n in self.confusion
        ]
        return d


def compare_documents(system: Document, gold: Document) -> EvalReport:
    sys_tokens = system.tokens
    gold_tokens = gold.tokens
    if len(sys_tokens) != len(gold_tokens):
        raise AlignmentError(
            f"token counts differ: system has {len(sys_tokens)}, "
            f"gold has {len(gold_tokens)}")

    total = len(gold_tokens)
    rich_ok = basic_ok = lemma_ok = 0
    confusion: Counter = Counter()
    for i, (s, g) in enumerate(zip(sys_tokens, gold_tokens)):
        if s.text != g.text:
            raise AlignmentError(
                f"token {i + 1} differs: system {s.text!r} vs "
                f"gold {g.text!r}")
        if s.rich == g.rich:
            rich_ok += 1
        else:
            confusion[(g.rich, s.rich)] += 1
        if s.basic == g.basic:
            basic_ok += 1
        if s.lemma == g.lemma:
            lemma_ok += 1

    def ratio(n: int) -> float:
        return n / total if total else 1.0

    ordered = sorted(confusion.items(), key=lambda kv: (-kv[1], kv[0]))
    return EvalReport(
        tokens_compared=total,
        rich_accuracy=ratio(rich_ok),
        basic_accuracy=ratio(basic_ok),
        lemma_accuracy=ratio(lemma_ok),
        confusion=tuple((g, s, n) for (g, s), n in ordered),
    )


def evaluate(system: str | Path, gold: str | Path) -> EvalReport:
    return compare_documents(load_vertical(system), load_vertical(gold))


def format_report(report: EvalReport) -> str:
    lines = [
        f"tokens compared   {report.tokens_compared}",
        f"rich accuracy     {report.rich_accuracy:.4f}",
        f"basic accuracy    {report.basic_accuracy:.4f}",
        f"lemma accuracy    {report.lemma_accuracy:.4f}",
    ]
    if report.confusion:
        lines.append("confusion (gold -> system)")
        for g, s, n in report.confusion:
            lines.append(f"  {g:<12} {s:<12} {n}")
    return "\n".join(lines)
