"""Graph-based word ranking, keyphrase collection, and sentence scoring.

Layer 1 builds an undirected co-occurrence graph over content lemmas and runs
a damped voting iteration; layer 2 merges adjacent top-ranked words into
keyphrases; layer 3 scores each sentence by its Jaccard overlap with the
keyphrase lemma set.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sklearn.base import BaseEstimator, TransformerMixin

from civic_digest.text_model import Sentence, Token


@dataclass
class RankParams:
    """Knobs for the ranking layers.

    damping: weight of neighbor votes vs the uniform baseline (1 - damping).
    tolerance: stop when no score moves more than this between iterations.
    window: max distance, in content-token positions, for a co-occurrence edge.
    top_phrase_fraction: fraction of graph nodes marked as phrase material.
    """

    damping: float = 0.85
    tolerance: float = 1e-6
    max_iterations: int = 100
    window: int = 2
    top_phrase_fraction: float = 0.25


@dataclass
class WordGraph:
    nodes: set[str] = field(default_factory=set)
    edges: dict[str, dict[str, int]] = field(default_factory=dict)
    scores: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class KeyPhrase:
    lemmas: tuple[str, ...]
    surface: str
    score: float
    count: int


@dataclass(frozen=True)
class SentenceScore:
    sentence_index: int
    rank_score: float


@dataclass(frozen=True)
class RankResult:
    scores: dict[str, float]
    iterations: int
    converged: bool


def build_graph(sentences: Sequence[Sentence], window: int = 2) -> WordGraph:
    """Connect content lemmas co-occurring within `window` content positions.

    Edges are undirected, self-loops are skipped, and weights count
    co-occurrences across the whole document.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    graph = WordGraph()
    for sentence in sentences:
        content = [t.lemma for t in sentence.tokens if t.is_content]
        graph.nodes.update(content)
        for i, a in enumerate(content):
            for j in range(i + 1, min(i + window, len(content) - 1) + 1):
                b = content[j]
                if a == b:
                    continue
                row_a = graph.edges.setdefault(a, {})
                row_b = graph.edges.setdefault(b, {})
                row_a[b] = row_a.get(b, 0) + 1
                row_b[a] = row_b.get(a, 0) + 1
    return graph


def rank(graph: WordGraph, params: RankParams | None = None) -> RankResult:
    """Damped iterative voting over the word graph.

    Each node's score is (1 - d) plus d times the weight-normalized scores of
    its neighbors, updated simultaneously from uniform initial scores 1.0.
    Hitting max_iterations is not an error; the result is just flagged as not
    converged. The final scores are also recorded on the graph.
    """
    if params is None:
        params = RankParams()
    order = sorted(graph.nodes)
    incident = {
        u: float(sum(graph.edges.get(u, {}).values())) for u in order
    }
    scores = {u: 1.0 for u in order}
    base = 1.0 - params.damping
    iterations = 0
    converged = False
    for iterations in range(1, params.max_iterations + 1):
        updated: dict[str, float] = {}
        for v in order:
            vote = 0.0
            for u, weight in sorted(graph.edges.get(v, {}).items()):
                vote += weight / incident[u] * scores[u]
            updated[v] = base + params.damping * vote
        delta = max((abs(updated[v] - scores[v]) for v in order), default=0.0)
        scores = updated
        if delta < params.tolerance:
            converged = True
            break
    if not order:
        iterations = 0
        converged = True
    graph.scores = dict(scores)
    return RankResult(scores=scores, iterations=iterations, converged=converged)


def _phrase_runs(sentence: Sentence, marked: set[str]) -> Iterable[list[Token]]:
    """Maximal runs of adjacent marked content tokens.

    A run only extends while its space-joined surface still occurs verbatim in
    the sentence, so punctuation between tokens breaks the phrase.
    """
    run: list[Token] = []
    for token in sentence.tokens:
        if token.is_content and token.lemma in marked:
            if run:
                joined = " ".join(t.surface for t in [*run, token])
                if joined in sentence.text:
                    run.append(token)
                    continue
                yield run
                run = [token]
            else:
                run = [token]
        elif run:
            yield run
            run = []
    if run:
        yield run


def collect_keyphrases(
    sentences: Sequence[Sentence],
    scores: dict[str, float],
    params: RankParams | None = None,
) -> list[KeyPhrase]:
    """Merge adjacent top-ranked words into deduplicated, scored phrases."""
    if params is None:
        params = RankParams()
    if not scores:
        return []
    keep = math.ceil(params.top_phrase_fraction * len(scores))
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    marked = {lemma for lemma, _ in ranked[:keep]}

    counts: Counter[tuple[str, ...]] = Counter()
    surfaces: dict[tuple[str, ...], Counter[str]] = {}
    for sentence in sentences:
        for run in _phrase_runs(sentence, marked):
            lemmas = tuple(t.lemma for t in run)
            counts[lemmas] += 1
            surfaces.setdefault(lemmas, Counter())[" ".join(t.surface for t in run)] += 1

    phrases = []
    for lemmas, count in counts.items():
        surface = min(surfaces[lemmas].items(), key=lambda kv: (-kv[1], kv[0]))[0]
        phrases.append(
            KeyPhrase(
                lemmas=lemmas,
                surface=surface,
                score=sum(scores[lemma] for lemma in lemmas),
                count=count,
            )
        )
    phrases.sort(key=lambda p: (-p.score, p.lemmas))
    return phrases


def jaccard_distance(a: set, b: set) -> float:
    """1 - |a n b| / |a u b|, with two empty sets at distance 0."""
    if not a and not b:
        return 0.0
    return 1.0 - len(a & b) / len(a | b)


def score_sentences(
    sentences: Sequence[Sentence], keyphrases: Sequence[KeyPhrase]
) -> list[SentenceScore]:
    """Score each sentence by overlap with the pooled keyphrase lemmas."""
    pool: set[str] = set()
    for phrase in keyphrases:
        pool.update(phrase.lemmas)
    return [
        SentenceScore(
            sentence_index=s.index,
            rank_score=1.0 - jaccard_distance(s.content_lemmas(), pool),
        )
        for s in sentences
    ]


def extract(
    sentences: Sequence[Sentence], params: RankParams | None = None
) -> tuple[list[KeyPhrase], list[SentenceScore]]:
    """Run all three layers over one document's sentences."""
    if params is None:
        params = RankParams()
    graph = build_graph(sentences, params.window)
    result = rank(graph, params)
    phrases = collect_keyphrases(sentences, result.scores, params)
    return phrases, score_sentences(sentences, phrases)


class KeyphraseExtractor(TransformerMixin, BaseEstimator):
    """Stateless transformer from documents to ranked keyphrase lists.

    transform accepts any iterable of objects with a ``sentences`` attribute
    (or bare sentence sequences) and returns one list of KeyPhrase per input.
    """

    def __init__(
        self,
        damping: float = 0.85,
        tolerance: float = 1e-6,
        max_iterations: int = 100,
        window: int = 2,
        top_phrase_fraction: float = 0.25,
    ):
        self.damping = damping
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self.window = window
        self.top_phrase_fraction = top_phrase_fraction

    def fit(self, X=None, y=None):
        return self

    def transform(self, X) -> list[list[KeyPhrase]]:
        params = RankParams(
            damping=self.damping,
            tolerance=self.tolerance,
            max_iterations=self.max_iterations,
            window=self.window,
            top_phrase_fraction=self.top_phrase_fraction,
        )
        out = []
        for item in X:
            sentences = getattr(item, "sentences", item)
            phrases, _ = extract(sentences, params)
            out.append(phrases)
        return out
