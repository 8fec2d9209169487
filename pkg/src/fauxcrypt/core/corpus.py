"""Helpers to prepare corpora, such as Project Gutenberg e-texts, for obfuscation."""
import logging
import re
import typing as t

from fauxcrypt.core.tokenizer import words

logger = logging.getLogger(__name__)

GUTENBERG_START = re.compile(
    r"^\*{3}\s*START OF (?:THE|THIS) PROJECT GUTENBERG E-?BOOK.*?\*{3}[ \t]*\r?\n?",
    re.IGNORECASE | re.MULTILINE,
)
GUTENBERG_END = re.compile(
    r"^\*{3}\s*END OF (?:THE|THIS) PROJECT GUTENBERG E-?BOOK",
    re.IGNORECASE | re.MULTILINE,
)


def gutenberg_body_span(text: str) -> t.Tuple[int, int]:
    """
    Character offsets of the body of a Project Gutenberg e-text.

    The body is the text between the `*** START OF ... PROJECT GUTENBERG EBOOK ... ***` and
    `*** END OF ... PROJECT GUTENBERG EBOOK ... ***` marker lines. A missing marker leaves the
    corresponding side of the text in the body.
    """
    start = GUTENBERG_START.search(text)
    if start is None:
        logger.warning("No Project Gutenberg start marker found, keeping the header")
        begin = 0
    else:
        begin = start.end()

    end = GUTENBERG_END.search(text, begin)
    if end is None:
        logger.warning("No Project Gutenberg end marker found, keeping the footer")
        finish = len(text)
    else:
        finish = end.start()

    return begin, finish


def strip_gutenberg_boilerplate(text: str) -> str:
    """Keep only the body of a Project Gutenberg e-text."""
    begin, finish = gutenberg_body_span(text)
    logger.info(
        f"Stripped Project Gutenberg boilerplate, keeping characters {begin}-{finish}",
    )
    return text[begin:finish]


def gutenberg_body_words(text: str) -> slice:
    """
    Word positions of the body of a Project Gutenberg e-text.

    Obfuscation scrambles the marker lines but keeps every word in its position, so this slice
    also selects the body from the words of an obfuscated copy of the full e-text.
    """
    begin, finish = gutenberg_body_span(text)
    skipped = len(words(text[:begin]))
    return slice(skipped, skipped + len(words(text[begin:finish])))
