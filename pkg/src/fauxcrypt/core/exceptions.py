"""This module defines exceptions thrown by fauxcrypt."""

from jsonschema.exceptions import ValidationError


class FauxcryptException(Exception):
    """All custom fauxcrypt exceptions should subclass this one."""


class InvalidObfuscationConfig(ValidationError, FauxcryptException):
    """Thrown when an obfuscation config cannot be validated against the schema."""


class InvalidCorpusReport(ValidationError, FauxcryptException):
    """Thrown when a corpus report cannot be validated against the schema."""


class DictionaryParseError(FauxcryptException):
    """Thrown when a line of a substitution dictionary is malformed."""

    def __init__(self, line_number: int, reason: str) -> None:
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"Invalid dictionary entry on line {line_number}: {reason}")


class DictionaryDecodeError(FauxcryptException):
    """Thrown when a substitution dictionary is not valid UTF-8."""


class AlignmentError(FauxcryptException):
    """Thrown when a plain and an obfuscated text do not have the same words."""

    def __init__(self, plain_count: int, obfuscated_count: int, position: int) -> None:
        self.plain_count = plain_count
        self.obfuscated_count = obfuscated_count
        self.position = position
        super().__init__(
            f"Plain text has {plain_count} words but obfuscated text has "
            f"{obfuscated_count}; first divergent word at position {position}",
        )
