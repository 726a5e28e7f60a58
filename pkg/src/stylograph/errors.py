"""Error types shared across the package."""


class StylographError(Exception):
    """Base class for package errors."""


class ConfigError(StylographError):
    """Invalid run configuration (bad flag, unknown scenario, ...)."""


class DataError(StylographError):
    """Broken input data (manifest, book file, corpus constraints, ...)."""
