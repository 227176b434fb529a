"""Exception hierarchy shared across the toolkit.

Everything derives from :class:`CbDecodeError` so the CLI can distinguish
domain errors (exit 1 with a diagnostic) from genuine bugs.
"""


class CbDecodeError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(CbDecodeError):
    """A configuration value is out of its documented range."""


# lexicon
class LexiconError(CbDecodeError):
    pass


class EmptyWordError(LexiconError):
    pass


class DuplicateWordError(LexiconError):
    pass


class UnknownSynonymWordError(LexiconError):
    pass


# metrics
class EmptyReferenceError(CbDecodeError):
    pass


# n-gram LM / ARPA
class LmError(CbDecodeError):
    pass


class InvalidOrderError(LmError):
    pass


class ArpaError(LmError):
    pass


class MalformedHeaderError(ArpaError):
    pass


class CountMismatchError(ArpaError):
    pass


class BadLogProbError(ArpaError):
    pass


# decoding
class DecodeError(CbDecodeError):
    pass


class ShapeMismatchError(DecodeError):
    pass


class InvalidBeamError(DecodeError):
    pass


class DecodeFailureError(DecodeError):
    """Decoding one utterance failed; the message names the utt_id."""


# adaptation
class AdaptError(CbDecodeError):
    pass


class NonPositiveRateError(AdaptError):
    pass


class InvalidEtaError(AdaptError):
    pass


class EmptyCorpusError(CbDecodeError):
    pass


# biasing-attention math
class DimensionMismatchError(CbDecodeError):
    pass


# synthetic emissions
class OovCharacterError(CbDecodeError):
    pass
