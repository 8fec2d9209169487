"""
Substitution dictionary: words listed in it are replaced by an equivalent and then left alone
by every later obfuscation step.

Dictionary files are UTF-8, one `<key>\t<replacement>` entry per line. Empty lines and lines
starting with `#` are ignored. Keys are matched case-insensitively.
"""
import io
import logging
import pkgutil
import types
import typing as t
from dataclasses import dataclass, field
from pathlib import Path

from fsspec import open as fs_open

from fauxcrypt.core.exceptions import DictionaryDecodeError, DictionaryParseError

logger = logging.getLogger(__name__)

SAMPLE_DICTIONARY = "data/sample_dictionary.tsv"


@dataclass(frozen=True)
class SubstitutionDictionary:
    """
    Immutable word to replacement mapping.

    Args:
        entries: mapping from lowercase word to its replacement
        source: the file the dictionary was loaded from, if any
        warnings: non-fatal problems found while loading, e.g. duplicate keys
    """

    entries: t.Mapping[str, str] = field(default_factory=dict)
    source: t.Optional[str] = None
    warnings: t.Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", types.MappingProxyType(dict(self.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and word.lower() in self.entries

    @classmethod
    def from_file(cls, path: t.Union[str, Path]) -> "SubstitutionDictionary":
        """Load the dictionary from the file specified by the provided path."""
        with fs_open(path, "rb") as file_:
            return load_dictionary(file_, source_name=str(path))


def _parse_line(line: str, line_number: int) -> t.Optional[t.Tuple[str, str]]:
    line = line.rstrip("\r\n")
    if not line or line.startswith("#"):
        return None

    if "\t" not in line:
        raise DictionaryParseError(line_number, "missing tab separator")

    key, replacement = line.split("\t", 1)
    if not key:
        raise DictionaryParseError(line_number, "empty key")
    if not replacement:
        raise DictionaryParseError(line_number, "empty replacement")
    if any(char.isspace() for char in key):
        raise DictionaryParseError(line_number, f"whitespace in key {key!r}")
    if any(char.isspace() for char in replacement):
        raise DictionaryParseError(
            line_number,
            f"whitespace in replacement {replacement!r}",
        )

    return key.lower(), replacement


def load_dictionary(
    source: t.BinaryIO,
    *,
    source_name: t.Optional[str] = None,
) -> SubstitutionDictionary:
    """
    Parse a substitution dictionary from a byte stream.

    When a key occurs more than once the last entry wins and a warning is recorded on the
    returned dictionary.

    Args:
        source: binary stream containing the UTF-8 dictionary
        source_name: name of the stream, used in messages and stored on the dictionary

    Raises:
        DictionaryDecodeError: the stream is not valid UTF-8.
        DictionaryParseError: a line is malformed.
    """
    name = source_name or "<stream>"
    try:
        content = source.read().decode("utf-8")
    except UnicodeDecodeError as e:
        msg = f"Dictionary {name} is not valid UTF-8: {e}"
        raise DictionaryDecodeError(msg) from e

    entries: t.Dict[str, str] = {}
    warnings: t.List[str] = []

    for line_number, line in enumerate(content.split("\n"), start=1):
        entry = _parse_line(line, line_number)
        if entry is None:
            continue

        key, replacement = entry
        if key in entries:
            warning = (
                f"Duplicate key {key!r} on line {line_number}, replacing "
                f"{entries[key]!r} with {replacement!r}"
            )
            logger.warning(warning)
            warnings.append(warning)
        entries[key] = replacement

    logger.info(f"Loaded {len(entries)} dictionary entries from {name}")
    return SubstitutionDictionary(
        entries=entries,
        source=source_name,
        warnings=tuple(warnings),
    )


def load_sample_dictionary() -> SubstitutionDictionary:
    """Load the sample dictionary shipped with the package."""
    data = pkgutil.get_data("fauxcrypt", SAMPLE_DICTIONARY)

    if data is None:
        msg = f"{SAMPLE_DICTIONARY} not found in fauxcrypt package"
        raise FileNotFoundError(msg)

    return load_dictionary(io.BytesIO(data), source_name=SAMPLE_DICTIONARY)


def substitute(word: str, dictionary: SubstitutionDictionary) -> t.Optional[str]:
    """Return the replacement of a word, or None when it is not in the dictionary."""
    return dictionary.entries.get(word.lower())
