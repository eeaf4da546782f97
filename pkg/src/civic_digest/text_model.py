"""Sentence segmentation, tokenization, and lemma normalization.

Every downstream stage (word-graph ranking, sentiment features, entity
detection) works over the ``Sentence``/``Token`` records produced here, so the
rules are deliberately small and deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path

# Split after ./!/? only when followed by whitespace or end of text, keeping
# the terminator with its sentence.
_SENTENCE_BOUNDARY = re.compile(r"(?<=[.!?])(?=\s|$)")
_HAS_LETTER = re.compile(r"[^\W\d_]")
_EDGE_PUNCT = ".,;:'?!\"()[]{}<>`~*&^%$#@+=|\\/-"


@dataclass(frozen=True)
class Token:
    """One whitespace-delimited word with its normalized form."""

    surface: str
    lemma: str
    is_content: bool
    position: int


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    tokens: tuple[Token, ...]

    def content_lemmas(self) -> set[str]:
        return {t.lemma for t in self.tokens if t.is_content}


def strip_suffix(word: str) -> str:
    """Reduce a lowercase word with five fixed suffix rules (first match wins)."""
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-2]
    if word.endswith("s") and len(word) > 3:
        return word[:-1]
    if word.endswith("ing") and len(word) > 5:
        return word[:-3]
    if word.endswith("ed") and len(word) > 4:
        return word[:-2]
    return word


def load_stoplist(path: str | Path) -> frozenset[str]:
    """Read a one-word-per-line stoplist.

    Entries pass through the same suffix rules as document tokens so that the
    file can hold natural forms ("this", "during") and still match the
    stripped lemmas ("thi", "dur").
    """
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word:
            words.add(strip_suffix(word))
    return frozenset(words)


@lru_cache(maxsize=1)
def default_stoplist() -> frozenset[str]:
    """The bundled stoplist of English function words."""
    ref = resources.files("civic_digest.data").joinpath("stopwords.txt")
    words = set()
    for line in ref.read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word:
            words.add(strip_suffix(word))
    return frozenset(words)


def tokenize(sentence_text: str) -> list[Token]:
    """Split on whitespace, dropping leading/trailing punctuation.

    Surfaces keep their original casing; the provisional lemma is the
    lowercased surface (see ``normalize`` for suffix stripping and stopword
    marking).
    """
    tokens: list[Token] = []
    for raw in sentence_text.split():
        core = raw.strip(_EDGE_PUNCT)
        if not core:
            continue
        lemma = core.lower()
        tokens.append(
            Token(
                surface=core,
                lemma=lemma,
                is_content=bool(_HAS_LETTER.search(lemma)),
                position=len(tokens),
            )
        )
    return tokens


def normalize(token: Token, stoplist: frozenset[str]) -> Token:
    """Fill in the final lemma and content flag for a token.

    The lemma is recomputed from the surface, which makes repeated
    normalization a no-op.
    """
    lemma = strip_suffix(token.surface.lower())
    is_content = lemma not in stoplist and bool(_HAS_LETTER.search(lemma))
    return replace(token, lemma=lemma, is_content=is_content)


def segment_sentences(text: str, stoplist: frozenset[str] | None = None) -> list[Sentence]:
    """Split cleaned text into sentences with normalized tokens.

    Empty fragments are dropped; terminators stay attached to their sentence.
    """
    if stoplist is None:
        stoplist = default_stoplist()
    sentences: list[Sentence] = []
    for fragment in _SENTENCE_BOUNDARY.split(text):
        frag = fragment.strip()
        if not frag:
            continue
        tokens = tuple(normalize(t, stoplist) for t in tokenize(frag))
        sentences.append(Sentence(index=len(sentences), text=frag, tokens=tokens))
    return sentences


def lemmas_of(text: str, stoplist: frozenset[str] | None = None) -> list[str]:
    """All normalized lemmas of a text, in order (content and function words)."""
    if stoplist is None:
        stoplist = default_stoplist()
    return [normalize(t, stoplist).lemma for t in tokenize(text)]


def content_lemmas_of(text: str, stoplist: frozenset[str] | None = None) -> list[str]:
    """Normalized content lemmas of a text, in order."""
    if stoplist is None:
        stoplist = default_stoplist()
    normalized = (normalize(t, stoplist) for t in tokenize(text))
    return [t.lemma for t in normalized if t.is_content]
