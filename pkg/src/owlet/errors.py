"""Exception hierarchy."""


class OwletError(Exception):
    """Base class for all errors raised by owlet."""


class IriError(OwletError, ValueError):
    pass


class OntologyError(OwletError):
    """An axiom or merge would break a structural invariant of the ontology."""


class RoleConflictError(OntologyError):
    pass


class PropertyKindError(OntologyError):
    pass


class UnknownEntityError(OntologyError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class RdfError(OwletError):
    """Structurally ill-formed triple patterns."""


class RdfSyntaxError(RdfError):
    """Malformed or unsupported serialized input; carries a source position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 0}: {message}"
        super().__init__(message)


class BoundsError(OwletError, ValueError):
    """Model enumeration requested beyond its exhaustive-search limits."""
