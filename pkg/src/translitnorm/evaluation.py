"""Scoring of the ranking models against a gold set of noisy/normal pairs.

Measures follow standard single-gold retrieval practice: reciprocal rank
of the gold term plus success-at-k for k in {1, 5, 10}, averaged over the
gold set. Reciprocal ranks are accumulated as exact rationals so the
averages are independent of gold-set order.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import EmptyGoldSetError, FormatError, GoldTermMissingError
from .rules import MODEL_IDS, Candidate, ModelConfig, model_config, normalize
from .vocabulary import Vocabulary

__all__ = [
    "EVAL_TOP_K",
    "EvalReport",
    "GoldPair",
    "ModelScores",
    "compare_models",
    "evaluate_model",
    "load_gold_set",
    "reciprocal_rank",
    "render_report",
    "success_at_k",
]

EVAL_TOP_K = 10

_MEASURES = (
    ("Avg_MRR", "avg_mrr"),
    ("Avg_P@1", "avg_p1"),
    ("Avg_P@5", "avg_p5"),
    ("Avg_P@10", "avg_p10"),
)


@dataclass(frozen=True)
class GoldPair:
    noisy: str
    gold: str


@dataclass(frozen=True)
class ModelScores:
    avg_mrr: float
    avg_p1: float
    avg_p5: float
    avg_p10: float
    sample_count: int


@dataclass(frozen=True)
class EvalReport:
    """Per-model averages, keyed by model id in presentation order."""

    scores: Mapping[str, ModelScores]
    sample_count: int


def reciprocal_rank(ranked: Sequence[Candidate], gold: str) -> float:
    """1/position of ``gold`` in the ranking, 0.0 when absent."""
    for position, candidate in enumerate(ranked, 1):
        if candidate.term == gold:
            return 1.0 / position
    return 0.0


def success_at_k(ranked: Sequence[Candidate], gold: str, k: int) -> int:
    """1 when ``gold`` appears among the first k entries, else 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return int(any(candidate.term == gold for candidate in ranked[:k]))


def _gold_rank(ranked: Sequence[Candidate], gold: str) -> int:
    for position, candidate in enumerate(ranked, 1):
        if candidate.term == gold:
            return position
    return 0


def _check_gold_set(gold_set: Sequence[GoldPair], vocab: Vocabulary) -> None:
    if not gold_set:
        raise EmptyGoldSetError("gold set has no pairs")
    missing = sorted({pair.gold for pair in gold_set if pair.gold not in vocab})
    if missing:
        raise GoldTermMissingError(missing)


def evaluate_model(
    gold_set: Sequence[GoldPair], vocab: Vocabulary, config: ModelConfig
) -> ModelScores:
    """Average reciprocal rank and success@{1,5,10} over the gold set.

    Every noisy term is normalized with a rank cut-off of EVAL_TOP_K.
    Raises EmptyGoldSetError or GoldTermMissingError before any scoring.
    """
    pairs = list(gold_set)
    _check_gold_set(pairs, vocab)
    rr_total = Fraction(0)
    hits1 = hits5 = hits10 = 0
    for pair in pairs:
        ranked = normalize(pair.noisy, vocab, config, EVAL_TOP_K)
        rank = _gold_rank(ranked, vocab.fold(pair.gold))
        if rank:
            rr_total += Fraction(1, rank)
            hits1 += rank == 1
            hits5 += rank <= 5
            hits10 += 1
    n = len(pairs)
    return ModelScores(
        avg_mrr=float(rr_total / n),
        avg_p1=hits1 / n,
        avg_p5=hits5 / n,
        avg_p10=hits10 / n,
        sample_count=n,
    )


def compare_models(gold_set: Sequence[GoldPair], vocab: Vocabulary) -> EvalReport:
    """Evaluate the four default models and assemble the comparison report."""
    pairs = list(gold_set)
    _check_gold_set(pairs, vocab)
    scores = {
        model_id: evaluate_model(pairs, vocab, model_config(model_id))
        for model_id in MODEL_IDS
    }
    return EvalReport(scores=scores, sample_count=len(pairs))


def render_report(report: EvalReport) -> str:
    """Tab-separated table: measures down, models across, 6 decimals."""
    model_ids = list(report.scores)
    lines = ["Measure\t" + "\t".join(model_id.upper() for model_id in model_ids)]
    for label, attr in _MEASURES:
        cells = (f"{getattr(report.scores[m], attr):.6f}" for m in model_ids)
        lines.append(label + "\t" + "\t".join(cells))
    return "\n".join(lines) + "\n"


def load_gold_set(
    source: str | Path, vocab: Vocabulary | None = None
) -> list[GoldPair]:
    """Read noisy TAB gold pairs; #-comment and blank lines are skipped.

    When a vocabulary is given, every gold term must resolve in it.
    """
    text = Path(source).read_text(encoding="utf-8")
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise FormatError(f"gold line {lineno}: expected noisy<TAB>gold")
        noisy, gold = parts
        if len(noisy) < 2 or len(gold) < 2:
            raise FormatError(f"gold line {lineno}: terms need at least 2 characters")
        pairs.append(GoldPair(noisy, gold))
    if vocab is not None and pairs:
        missing = sorted({pair.gold for pair in pairs if pair.gold not in vocab})
        if missing:
            raise GoldTermMissingError(missing)
    return pairs
