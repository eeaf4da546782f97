"""Transcript parsing, text cleaning, canonical JSON documents, corpus stats.

Raw transcripts are plain-text files. In tagged format a turn opens with a
line starting ``R:`` (interviewee, kept) or ``Q:`` (interviewer, discarded)
and runs until the next tag line; untagged files are treated as response text
throughout.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from civic_digest.errors import EmptyResponse, MalformedTag, SchemaError
from civic_digest.text_model import Sentence, segment_sentences

TAGGED = "tagged"
UNTAGGED = "untagged"

# Tag at line start, case-insensitive, optional single space after the colon.
_TAG = re.compile(r"^(?P<kind>[QqRr]):\s?")
# Keep letters, digits, space, and . , ; : ' ? ! - (underscore is in \w but
# not in the allowed set).
_DISALLOWED = re.compile(r"[^\w .,;:'?!-]|_")
_MULTISPACE = re.compile(r" {2,}")
_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class RawTranscript:
    source_name: str
    lines: tuple[str, ...]
    format_hint: str = TAGGED


@dataclass(frozen=True)
class Document:
    source_name: str
    response_text: str
    sentences: tuple[Sentence, ...]
    word_count: int


@dataclass(frozen=True)
class CorpusStats:
    document_count: int
    mean_words: Fraction
    min_words: int
    max_words: int
    empty: bool = False


def clean_text(text: str) -> str:
    """Drop characters outside the allowed set and collapse whitespace.

    Idempotent: cleaning already-clean text returns it unchanged.
    """
    text = _WHITESPACE.sub(" ", text)
    text = _DISALLOWED.sub("", text)
    return _MULTISPACE.sub(" ", text).strip()


def make_document(
    source_name: str, text: str, stoplist: frozenset[str] | None = None
) -> Document:
    """Build a Document from cleaned response text."""
    sentences = tuple(segment_sentences(text, stoplist))
    return Document(
        source_name=source_name,
        response_text=text,
        sentences=sentences,
        word_count=len(text.split()),
    )


def parse_transcript(
    raw: RawTranscript, stoplist: frozenset[str] | None = None
) -> Document:
    """Extract the interviewee response from a transcript.

    Raises EmptyResponse when nothing remains after extraction and cleaning,
    and MalformedTag when the final tag line opens a turn with no content.
    """
    if raw.format_hint == UNTAGGED:
        text = clean_text(" ".join(raw.lines))
        if not text:
            raise EmptyResponse(f"{raw.source_name}: no response text")
        return make_document(raw.source_name, text, stoplist)

    turns: list[tuple[str, list[str]]] = []
    for line in raw.lines:
        match = _TAG.match(line)
        if match:
            turns.append((match.group("kind").lower(), [line[match.end():]]))
        elif turns:
            turns[-1][1].append(line)
        # lines before the first tag belong to no turn and are dropped

    if turns:
        last_kind, last_parts = turns[-1]
        if not " ".join(last_parts).strip():
            raise MalformedTag(
                f"{raw.source_name}: dangling '{last_kind.upper()}:' tag with no content"
            )

    response = " ".join(" ".join(parts) for kind, parts in turns if kind == "r")
    text = clean_text(response)
    if not text:
        raise EmptyResponse(f"{raw.source_name}: no interviewee response found")
    return make_document(raw.source_name, text, stoplist)


def to_canonical_json(doc: Document) -> bytes:
    """Serialize a document to its canonical JSON object."""
    return json.dumps(
        {"id": doc.source_name, "text": doc.response_text}, ensure_ascii=False
    ).encode("utf-8")


def from_canonical_json(
    data: bytes | str, stoplist: frozenset[str] | None = None
) -> Document:
    """Inverse of to_canonical_json; sentences are re-segmented."""
    try:
        obj = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SchemaError("document record must be a JSON object")
    for key in ("id", "text"):
        if key not in obj:
            raise SchemaError(f"missing field {key!r}")
        if not isinstance(obj[key], str):
            raise SchemaError(f"field {key!r} must be a string")
    return make_document(obj["id"], obj["text"], stoplist)


def corpus_stats(docs: list[Document]) -> CorpusStats:
    """Count, mean, and extremes of per-document word counts."""
    if not docs:
        return CorpusStats(0, Fraction(0), 0, 0, empty=True)
    counts = [d.word_count for d in docs]
    return CorpusStats(
        document_count=len(counts),
        mean_words=Fraction(sum(counts), len(counts)),
        min_words=min(counts),
        max_words=max(counts),
    )


def read_transcript_file(path: str | Path, format_hint: str = TAGGED) -> RawTranscript:
    path = Path(path)
    lines = tuple(path.read_text(encoding="utf-8").splitlines())
    return RawTranscript(source_name=path.stem, lines=lines, format_hint=format_hint)


@dataclass
class IngestReport:
    documents: list[Document]
    failures: list[tuple[str, str]]


def ingest_directory(
    input_dir: str | Path,
    output_dir: str | Path | None,
    format_hint: str = TAGGED,
    stoplist: frozenset[str] | None = None,
) -> IngestReport:
    """Parse every .txt transcript in a directory.

    When output_dir is given, each parsed document is written there as
    ``<source_name>.json``. Per-file failures are collected, not fatal.
    """
    input_dir = Path(input_dir)
    if output_dir is not None:
        output_dir = Path(output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
    report = IngestReport(documents=[], failures=[])
    for path in sorted(input_dir.glob("*.txt")):
        try:
            doc = parse_transcript(read_transcript_file(path, format_hint), stoplist)
        except (EmptyResponse, MalformedTag) as exc:
            report.failures.append((path.stem, str(exc)))
            continue
        report.documents.append(doc)
        if output_dir is not None:
            (output_dir / f"{doc.source_name}.json").write_bytes(
                to_canonical_json(doc) + b"\n"
            )
    return report


def load_documents(
    input_dir: str | Path, stoplist: frozenset[str] | None = None
) -> list[Document]:
    """Load canonical ``.json`` documents from a directory, sorted by name."""
    docs = []
    for path in sorted(Path(input_dir).glob("*.json")):
        if path.name.endswith(".summary.json"):
            continue
        docs.append(from_canonical_json(path.read_bytes(), stoplist))
    return docs
