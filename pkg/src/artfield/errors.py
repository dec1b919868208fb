"""Shared exception hierarchy so the CLI can map failures to exit codes."""


class ArtfieldError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ConfigError(ArtfieldError):
    """Run configuration failed validation."""

    exit_code = 3

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(f"{v.code}: {v.message}" for v in self.violations)
        super().__init__(lines or "invalid configuration")


class ProviderError(ArtfieldError):
    """A generative capability call failed."""

    exit_code = 4


class EndpointError(ProviderError):
    """Remote endpoint kept failing after the retry budget was spent."""

    def __init__(self, message: str, retry_count: int = 0):
        super().__init__(message)
        self.retry_count = retry_count


class EmptyPrompt(ProviderError):
    """A provider was called with an empty prompt."""


class EmptyCompletion(ProviderError):
    """A text endpoint returned an empty completion."""


class ImageDecodeError(ProviderError):
    """An image endpoint returned bytes that do not decode as an image."""


class CorruptLog(ArtfieldError):
    """Run log is unreadable or has no completed step to resume from."""

    exit_code = 5


class SchemaMismatch(ArtfieldError):
    """Run log was written under a different schema version."""

    exit_code = 6


class IncompleteRun(ArtfieldError):
    """Analysis was requested on a run directory that never finished."""

    exit_code = 5
