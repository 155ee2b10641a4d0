"""Exception hierarchy shared by every module."""


class ProxinerveError(Exception):
    """Base class for all library errors."""


class InvalidPolygon(ProxinerveError, ValueError):
    pass


class DuplicateSite(ProxinerveError, ValueError):
    pass


class SiteOutsideBox(ProxinerveError, ValueError):
    pass


class CellNotInTessellation(ProxinerveError, KeyError):
    pass


class ArityMismatch(ProxinerveError, ValueError):
    pass


class MissingDescription(ProxinerveError, ValueError):
    pass


class DescriptiveClusterHasNoSpokes(ProxinerveError, ValueError):
    pass


class ClusterTooLarge(ProxinerveError, ValueError):
    pass


class UnknownAxiom(ProxinerveError, KeyError):
    pass


class SchemaVersionMismatch(ProxinerveError, ValueError):
    pass


class ReportParseError(ProxinerveError, ValueError):
    """Malformed report text; ``position`` is the character offset."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class SitesParseError(ProxinerveError, ValueError):
    """Unreadable sites file; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class ConfigError(ProxinerveError, ValueError):
    pass
