class OpinionMineError(Exception):
    """Base class for errors raised by this package."""


class InputError(OpinionMineError):
    """Malformed or inconsistent input file."""


class ConfigError(OpinionMineError):
    """Invalid run configuration."""
