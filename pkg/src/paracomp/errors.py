"""Exception hierarchy.

Everything the CLI should report as a usage/input problem (exit status 2)
derives from :class:`InputError`.
"""


class ParacompError(Exception):
    pass


class InputError(ParacompError):
    """Bad user-supplied data or configuration."""


class IngestionError(InputError):
    """Raw bytes could not be decoded as UTF-8."""


class InputFormatError(InputError):
    """A TSV or lemma file row does not follow the expected layout."""


class ConfigError(InputError):
    pass


class ConsistencyError(ParacompError):
    """Pipeline stages disagree with each other (a bug, not bad input)."""
