"""
Per-character working buffer of the scrambler.

Each cell holds a character, its class and a pinned flag. Pinned cells are never modified or
moved by a later step; the scrambling steps only ever permute the characters of free cells.
"""
import string
import typing as t
from enum import Enum

VOWELS = frozenset("aeiou")
RISERS = frozenset("bdfhklt")
DANGLERS = frozenset("gjpqy")


class CharClass(Enum):
    VOWEL = "vowel"
    RISER_CONSONANT = "riser"
    DANGLER_CONSONANT = "dangler"
    PLAIN_CONSONANT = "plain"
    NON_LETTER = "non_letter"

    @property
    def is_letter(self) -> bool:
        return self is not CharClass.NON_LETTER

    @property
    def is_consonant(self) -> bool:
        return self in CONSONANT_CLASSES


CONSONANT_CLASSES = frozenset(
    {CharClass.RISER_CONSONANT, CharClass.DANGLER_CONSONANT, CharClass.PLAIN_CONSONANT},
)


def _char_class(letter: str) -> CharClass:
    if letter in VOWELS:
        return CharClass.VOWEL
    if letter in RISERS:
        return CharClass.RISER_CONSONANT
    if letter in DANGLERS:
        return CharClass.DANGLER_CONSONANT
    return CharClass.PLAIN_CONSONANT


_CLASSES = {
    **{letter: _char_class(letter) for letter in string.ascii_lowercase},
    **{letter.upper(): _char_class(letter) for letter in string.ascii_lowercase},
}


def classify_char(char: str) -> CharClass:
    """Classify a character by the shape of its lowercase form."""
    return _CLASSES.get(char, CharClass.NON_LETTER)


_ASCII_LOWER = str.maketrans(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ",
    "abcdefghijklmnopqrstuvwxyz",
)


def lowercase_word(word: str) -> str:
    """Lower ASCII letters, leaving every other character unchanged."""
    return word.translate(_ASCII_LOWER)


class WordCells:
    """
    Mutable buffer of a single word.

    Args:
        chars: the characters of the word
        classes: the class of every character, computed when omitted
        pinned: the pinned flag of every character, all free when omitted
    """

    __slots__ = ("chars", "classes", "pinned")

    def __init__(
        self,
        chars: t.Iterable[str],
        classes: t.Optional[t.Iterable[CharClass]] = None,
        pinned: t.Optional[t.Iterable[bool]] = None,
    ) -> None:
        self.chars: t.List[str] = list(chars)
        self.classes: t.List[CharClass] = (
            [classify_char(char) for char in self.chars]
            if classes is None
            else list(classes)
        )
        self.pinned: t.List[bool] = (
            [False] * len(self.chars) if pinned is None else list(pinned)
        )

        if not len(self.chars) == len(self.classes) == len(self.pinned):
            msg = "chars, classes and pinned must have the same length"
            raise ValueError(msg)

    @classmethod
    def from_word(cls, word: str) -> "WordCells":
        return cls(word)

    def to_word(self) -> str:
        return "".join(self.chars)

    def copy(self) -> "WordCells":
        clone = WordCells.__new__(WordCells)
        clone.chars = self.chars[:]
        clone.classes = self.classes[:]
        clone.pinned = self.pinned[:]
        return clone

    @property
    def letter_count(self) -> int:
        return len(self.classes) - self.classes.count(CharClass.NON_LETTER)

    def is_free(self, index: int) -> bool:
        return not self.pinned[index]

    def free_indices(self) -> t.List[int]:
        return [index for index, pinned in enumerate(self.pinned) if not pinned]

    def pin(self, *indices: int) -> None:
        for index in indices:
            self.pinned[index] = True

    def swap(self, i: int, j: int) -> None:
        """Exchange the characters of two free cells; pins stay where they are."""
        if self.pinned[i] or self.pinned[j]:
            msg = f"Cannot swap pinned cells {i} and {j} of {self.to_word()!r}"
            raise ValueError(msg)
        self.chars[i], self.chars[j] = self.chars[j], self.chars[i]
        self.classes[i], self.classes[j] = self.classes[j], self.classes[i]

    def __len__(self) -> int:
        return len(self.chars)

    def __repr__(self) -> str:
        marks = "".join("^" if pinned else "." for pinned in self.pinned)
        return f"WordCells({self.to_word()!r}, pinned={marks!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordCells):
            return (self.chars, self.pinned) == (other.chars, other.pinned)
        return False
