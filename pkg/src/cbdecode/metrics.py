"""Alignment over token units and the derived biased-word statistics.

The alignment is a minimal edit-distance path over tokenized units (unit
substitution, insertion and deletion each cost 1). Biased-word precision is
M/R and recall is M/L, where M counts biased-word units matched at aligned
positions, L counts them in the reference and R in the hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import EmptyReferenceError
from .lexicon import TokenUnit, nfc


class EditOp(Enum):
    MATCH = "match"
    SUBSTITUTE = "substitute"
    DELETE = "delete"
    INSERT = "insert"


@dataclass(frozen=True)
class AlignStep:
    op: EditOp
    ref: Optional[TokenUnit] = None
    hyp: Optional[TokenUnit] = None


@dataclass
class Alignment:
    steps: list[AlignStep]
    cost: int

    def ref_units(self) -> list[TokenUnit]:
        return [s.ref for s in self.steps if s.ref is not None]

    def hyp_units(self) -> list[TokenUnit]:
        return [s.hyp for s in self.steps if s.hyp is not None]


def units_equal(
    a: TokenUnit, b: TokenUnit, synonym_classes: Optional[dict[int, int]] = None
) -> bool:
    """Unit equality: same character, same biased word, or same synonym class."""
    if a.is_biased and b.is_biased:
        if a.word_index == b.word_index:
            return True
        if synonym_classes:
            ca = synonym_classes.get(a.word_index)
            cb = synonym_classes.get(b.word_index)
            return ca is not None and ca == cb
        return False
    if a.is_biased or b.is_biased:
        return False
    return a.surface == b.surface


def align(
    ref: Sequence[TokenUnit],
    hyp: Sequence[TokenUnit],
    synonym_classes: Optional[dict[int, int]] = None,
) -> Alignment:
    """Minimal edit-distance alignment between two unit sequences.

    Ties between co-optimal paths are broken during backtrace with the fixed
    preference match > substitute > delete > insert, which makes the matched
    counts deterministic.
    """
    n, m = len(ref), len(hyp)
    # cost[i][j] = distance between ref[:i] and hyp[:j]
    cost = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        cost[i][0] = i
    for j in range(1, m + 1):
        cost[0][j] = j
    for i in range(1, n + 1):
        ri = ref[i - 1]
        for j in range(1, m + 1):
            diag = cost[i - 1][j - 1]
            if units_equal(ri, hyp[j - 1], synonym_classes):
                best = diag
            else:
                best = diag + 1
            up = cost[i - 1][j] + 1
            if up < best:
                best = up
            left = cost[i][j - 1] + 1
            if left < best:
                best = left
            cost[i][j] = best

    steps: list[AlignStep] = []
    i, j = n, m
    while i > 0 or j > 0:
        here = cost[i][j]
        if i > 0 and j > 0:
            equal = units_equal(ref[i - 1], hyp[j - 1], synonym_classes)
            if equal and cost[i - 1][j - 1] == here:
                steps.append(AlignStep(EditOp.MATCH, ref[i - 1], hyp[j - 1]))
                i, j = i - 1, j - 1
                continue
            if not equal and cost[i - 1][j - 1] + 1 == here:
                steps.append(AlignStep(EditOp.SUBSTITUTE, ref[i - 1], hyp[j - 1]))
                i, j = i - 1, j - 1
                continue
        if i > 0 and cost[i - 1][j] + 1 == here:
            steps.append(AlignStep(EditOp.DELETE, ref=ref[i - 1]))
            i -= 1
            continue
        steps.append(AlignStep(EditOp.INSERT, hyp=hyp[j - 1]))
        j -= 1
    steps.reverse()
    return Alignment(steps=steps, cost=cost[n][m])


@dataclass
class WordCounts:
    matched: int = 0  # M_k
    ref_count: int = 0  # L_k
    hyp_count: int = 0  # R_k

    @property
    def precision(self) -> Optional[float]:
        return self.matched / self.hyp_count if self.hyp_count else None

    @property
    def recall(self) -> Optional[float]:
        return self.matched / self.ref_count if self.ref_count else None


@dataclass
class BiasStats:
    """Per-word and aggregate biased-word counts for one or more alignments."""

    per_word: dict[int, WordCounts] = field(default_factory=dict)

    def _counts(self, idx: int) -> WordCounts:
        if idx not in self.per_word:
            self.per_word[idx] = WordCounts()
        return self.per_word[idx]

    @property
    def matched(self) -> int:
        return sum(c.matched for c in self.per_word.values())

    @property
    def ref_count(self) -> int:
        return sum(c.ref_count for c in self.per_word.values())

    @property
    def hyp_count(self) -> int:
        return sum(c.hyp_count for c in self.per_word.values())

    @property
    def precision(self) -> Optional[float]:
        return self.matched / self.hyp_count if self.hyp_count else None

    @property
    def recall(self) -> Optional[float]:
        return self.matched / self.ref_count if self.ref_count else None

    def update(self, alignment: Alignment) -> None:
        for step in alignment.steps:
            if step.ref is not None and step.ref.is_biased:
                self._counts(step.ref.word_index).ref_count += 1
            if step.hyp is not None and step.hyp.is_biased:
                self._counts(step.hyp.word_index).hyp_count += 1
            if step.op is EditOp.MATCH and step.ref.is_biased:
                # synonym-class matches credit the reference word's index
                self._counts(step.ref.word_index).matched += 1


def bias_stats(alignment: Alignment) -> BiasStats:
    """Count biased-word occurrences and aligned matches in one alignment."""
    stats = BiasStats()
    stats.update(alignment)
    return stats


def levenshtein(a: Sequence, b: Sequence) -> int:
    """Classic two-row edit distance under plain equality."""
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, start=1):
        cur = [i]
        for j, y in enumerate(b, start=1):
            if x == y:
                cur.append(prev[j - 1])
            else:
                cur.append(1 + min(prev[j - 1], prev[j], cur[-1]))
        prev = cur
    return prev[-1]


def cer(ref_text: str, hyp_text: str) -> float:
    """Character error rate: edit distance over reference length (NFC chars)."""
    ref = list(nfc(ref_text))
    if not ref:
        raise EmptyReferenceError("reference text must be non-empty")
    return levenshtein(ref, list(nfc(hyp_text))) / len(ref)


def f1(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


@dataclass
class CorpusScore:
    """Aggregate scoring of (reference, hypothesis) text pairs."""

    stats: BiasStats
    edit_distance: int
    ref_length: int

    @property
    def cer(self) -> float:
        return self.edit_distance / self.ref_length if self.ref_length else 0.0

    @property
    def f1(self) -> float:
        p, r = self.stats.precision, self.stats.recall
        if p is None or r is None:
            return 0.0
        return f1(p, r)


def evaluate_corpus(pairs: Iterable[tuple[str, str]], lexicon) -> CorpusScore:
    """Tokenize, align and score a corpus of (ref_text, hyp_text) pairs."""
    from .lexicon import tokenize

    stats = BiasStats()
    total_dist = 0
    total_len = 0
    for ref_text, hyp_text in pairs:
        ref_units = tokenize(ref_text, lexicon)
        hyp_units = tokenize(hyp_text, lexicon)
        stats.update(align(ref_units, hyp_units, lexicon.synonym_classes))
        total_dist += levenshtein(list(nfc(ref_text)), list(nfc(hyp_text)))
        total_len += len(nfc(ref_text))
    return CorpusScore(stats=stats, edit_distance=total_dist, ref_length=total_len)
