"""Labeled sentences, the top-K word vocabulary, and feature vectors."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TypeVar

import numpy as np

from civic_digest.errors import EmptyCorpus, InsufficientData
from civic_digest.text_model import content_lemmas_of, lemmas_of

POSITIVE = "positive"
NEGATIVE = "negative"

T = TypeVar("T")


@dataclass(frozen=True)
class LabeledSentence:
    text: str
    label: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("labeled sentence text must be non-empty")
        if self.label not in (POSITIVE, NEGATIVE):
            raise ValueError(f"label must be positive or negative, got {self.label!r}")


@dataclass(frozen=True)
class FeatureVocabulary:
    words: tuple[str, ...]
    k: int

    @property
    def index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)


def load_labeled_corpus(
    positive_path: str | Path, negative_path: str | Path
) -> list[LabeledSentence]:
    """Read one-sentence-per-line polarity files."""
    corpus = []
    for path, label in ((positive_path, POSITIVE), (negative_path, NEGATIVE)):
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line:
                corpus.append(LabeledSentence(text=line, label=label))
    return corpus


def build_vocabulary(
    corpus: Sequence[LabeledSentence],
    k: int = 5000,
    stoplist: frozenset[str] | None = None,
) -> FeatureVocabulary:
    """Top-k content lemmas by frequency over both labels pooled.

    Ties break toward the lexicographically smaller lemma.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    counts: Counter[str] = Counter()
    for sentence in corpus:
        counts.update(content_lemmas_of(sentence.text, stoplist))
    if not counts:
        raise EmptyCorpus("no lemmas found in the labeled corpus")
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return FeatureVocabulary(words=tuple(w for w, _ in ordered[:k]), k=k)


def featurize(
    text: str,
    vocab: FeatureVocabulary,
    counts: bool = False,
    stoplist: frozenset[str] | None = None,
) -> np.ndarray:
    """Binary presence vector over the vocabulary (or term counts)."""
    vector = np.zeros(len(vocab), dtype=np.float64)
    index = vocab.index
    for lemma in lemmas_of(text, stoplist):
        i = index.get(lemma)
        if i is None:
            continue
        if counts:
            vector[i] += 1.0
        else:
            vector[i] = 1.0
    return vector


def present_words(
    text: str, vocab: FeatureVocabulary, stoplist: frozenset[str] | None = None
) -> frozenset[str]:
    """The set-of-words view of a text: vocabulary words it contains."""
    members = set(vocab.words)
    return frozenset(lemma for lemma in lemmas_of(text, stoplist) if lemma in members)


def split_train_test(
    features: Sequence[T], train_n: int, test_n: int, shuffle_seed: int = 0
) -> tuple[list[T], list[T]]:
    """Seeded shuffle, then take the last test_n as test and the train_n
    records right before them as train."""
    if train_n < 1 or test_n < 1:
        raise InsufficientData("train_n and test_n must both be >= 1")
    if train_n + test_n > len(features):
        raise InsufficientData(
            f"need {train_n + test_n} records, corpus has {len(features)}"
        )
    shuffled = list(features)
    random.Random(shuffle_seed).shuffle(shuffled)
    test = shuffled[-test_n:]
    train = shuffled[-(test_n + train_n):-test_n]
    return train, test
