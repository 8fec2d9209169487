import typing as t

from fauxcrypt.core.exceptions import AlignmentError
from fauxcrypt.core.lexicon import SubstitutionDictionary, substitute
from fauxcrypt.core.tokenizer import Token, TokenKind, words

# Words a plain word is expected to turn into: None for a scrambled word, the replacement and
# its words for a substituted one.
_Expected = t.Optional[t.Tuple[str, t.List[str]]]


def _expected(word: str, dictionary: t.Optional[SubstitutionDictionary]) -> _Expected:
    if dictionary is None:
        return None
    replacement = substitute(word, dictionary)
    if replacement is None:
        return None
    return replacement, [token.text.lower() for token in words(replacement)]


def _width(expected: _Expected) -> int:
    return 1 if expected is None else len(expected[1])


def _first_divergence(
    plain_words: t.List[Token],
    obfuscated_words: t.List[Token],
    expected: t.List[_Expected],
) -> int:
    cursor = 0
    for position, (token, replacement) in enumerate(zip(plain_words, expected)):
        width = _width(replacement)
        group = obfuscated_words[cursor : cursor + width]
        if len(group) < width:
            return position
        if replacement is None:
            if len(group[0].text) != len(token.text):
                return position
        elif [o.text.lower() for o in group] != replacement[1]:
            return position
        cursor += width
    return len(plain_words)


def align_words(
    plain: str,
    obfuscated: str,
    *,
    dictionary: t.Optional[SubstitutionDictionary] = None,
) -> t.List[t.Tuple[Token, Token]]:
    """
    Pair the words of a plain text with those of its obfuscated form by position.

    Substituted words may tokenize into several words (`pr0n` is `pr` and `n`). When the
    dictionary used for obfuscation is given, the obfuscated words making up a replacement are
    paired with their plain word as a single token holding the replacement.

    Raises:
        AlignmentError: the texts do not have the same number of words. The reported position
            is the first plain word whose obfuscated form differs in length, or the end of the
            shorter text.
    """
    plain_words = words(plain)
    obfuscated_words = words(obfuscated)
    expected = [_expected(token.text, dictionary) for token in plain_words]

    if sum(_width(replacement) for replacement in expected) != len(obfuscated_words):
        raise AlignmentError(
            len(plain_words),
            len(obfuscated_words),
            _first_divergence(plain_words, obfuscated_words, expected),
        )

    pairs: t.List[t.Tuple[Token, Token]] = []
    cursor = 0
    for token, replacement in zip(plain_words, expected):
        if replacement is None:
            pairs.append((token, obfuscated_words[cursor]))
            cursor += 1
            continue

        group = obfuscated_words[cursor : cursor + len(replacement[1])]
        cursor += len(group)
        if [o.text.lower() for o in group] == replacement[1]:
            text = replacement[0]
        else:
            text = "".join(o.text for o in group)
        index = group[0].index if group else token.index
        pairs.append((token, Token(kind=TokenKind.WORD, text=text, index=index)))

    return pairs
