"""Exception hierarchy with stable error codes.

Every error raised by the kernel carries a ``code`` string that never changes
between releases; the CLI echoes it in reports and maps the error class to a
process exit status.
"""


class LinkageError(Exception):
    code = "E_INTERNAL"
    exit_status = 2

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class ContextError(LinkageError):
    """Operands live in different rings."""

    code = "E_CONTEXT"


class DimensionError(LinkageError):
    code = "E_DIMENSION"


class UndefinedLeadingTermError(LinkageError):
    code = "E_ZERO_POLYNOMIAL"


class DomainError(LinkageError):
    """Input outside the mathematical domain of an operation."""

    code = "E_DOMAIN"


class PreconditionError(LinkageError):
    """A mathematical precondition failed (not contained, improper, ...)."""

    code = "E_PRECONDITION"


class ConfigError(LinkageError):
    code = "E_CONFIG"
    exit_status = 1


class ParseError(LinkageError):
    code = "E_PARSE"
    exit_status = 1

    def __init__(self, message, line=None, column=None, code=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message, code)
        self.line = line
        self.column = column


# Stable codes, documented in the README.
ERROR_CODES = {
    "E_INTERNAL": "unexpected kernel failure",
    "E_CONTEXT": "operands belong to different ring contexts",
    "E_DIMENSION": "exponent vectors of different lengths",
    "E_ZERO_POLYNOMIAL": "leading term / S-polynomial of the zero polynomial",
    "E_DOMAIN": "input outside the operation's domain (unit ideal, non-monomial, ...)",
    "E_PRECONDITION": "generic precondition failure",
    "E_NOT_CONTAINED": "linking ideal is not contained in the ideals to link",
    "E_IMPROPER": "an ideal to link is the unit ideal of the ring",
    "E_NOT_REGULAR": "linking ideal is not generated by a regular sequence",
    "E_STRICT_CONTAINMENT": "S-set membership needs the linking ideal strictly inside",
    "E_NOT_MAXIMAL_INPUT": "sequence is not regular or not inside the ideal",
    "E_CONFIG": "invalid suite configuration or CLI option",
    "E_PARSE": "lexical or syntax error",
    "E_NO_RING": "statement before any ring declaration",
    "E_RING_REDECLARED": "second ring declaration in one script",
    "E_UNBOUND": "reference to an unbound ideal name",
    "E_FIELD_LITERAL": "rational literal in a prime-field ring",
    "E_TIMEOUT": "computation exceeded --timeout-seconds",
}


class TimeoutExceeded(LinkageError):
    code = "E_TIMEOUT"
    exit_status = 1
