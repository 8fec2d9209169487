"""
Lossless segmentation of text into word and separator tokens.

A word is a maximal run of ASCII letters, optionally joined by single hyphens or apostrophes
that are flanked by letters on both sides ("door-nail", "don't", "scrooge's"). Everything else,
including digits and non-ASCII characters, is separator content. Concatenating the token texts
always reproduces the input.
"""
import re
import typing as t
from dataclasses import dataclass
from enum import Enum

WORD_PATTERN = re.compile(r"[A-Za-z]+(?:['-][A-Za-z]+)*")


class TokenKind(Enum):
    WORD = "word"
    SEPARATOR = "separator"


@dataclass(frozen=True)
class Token:
    """
    A span of the input text.

    Args:
        kind: whether the span is a word or separator content
        text: the original characters of the span
        index: ordinal position of the token in the token stream
    """

    kind: TokenKind
    text: str
    index: int

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


def tokenize(text: str) -> t.List[Token]:
    """Split text into alternating word and separator tokens."""
    tokens: t.List[Token] = []
    position = 0

    def append(kind: TokenKind, span: str) -> None:
        tokens.append(Token(kind=kind, text=span, index=len(tokens)))

    for match in WORD_PATTERN.finditer(text):
        start, end = match.span()
        if start > position:
            append(TokenKind.SEPARATOR, text[position:start])
        append(TokenKind.WORD, match.group())
        position = end

    if position < len(text):
        append(TokenKind.SEPARATOR, text[position:])

    return tokens


def detokenize(tokens: t.Iterable[Token]) -> str:
    return "".join(token.text for token in tokens)


def words(text: str) -> t.List[Token]:
    """Return only the word tokens of a text, keeping their stream indices."""
    return [token for token in tokenize(text) if token.is_word]
