"""Exception types raised across the toolkit."""


class CivicDigestError(Exception):
    """Base class for all toolkit errors."""


class EmptyResponse(CivicDigestError):
    """A transcript yielded no interviewee response text."""


class MalformedTag(CivicDigestError):
    """A speaker tag opened a turn that never received any content."""


class SchemaError(CivicDigestError):
    """A canonical document record is missing fields or has wrong types."""


class EmptyCorpus(CivicDigestError):
    """A labeled corpus contains no usable sentences."""


class InsufficientData(CivicDigestError):
    """Not enough records for the requested train/test split."""


class SingleClassCorpus(CivicDigestError):
    """Training data contains only one label."""


class FormatVersionMismatch(CivicDigestError):
    """A model file declares an unsupported format version."""


class CorruptModelFile(CivicDigestError):
    """A model file cannot be parsed into a usable model."""


class EmptyDocument(CivicDigestError):
    """A document has no sentences to summarize."""


class DestinationUnwritable(CivicDigestError):
    """A publish destination does not accept writes."""


class FileExists(CivicDigestError):
    """A publish destination already holds the target file."""


class ConfigParseError(CivicDigestError):
    """A configuration file line or key is invalid."""
