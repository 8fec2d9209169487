"""
Document level obfuscation.

Words are lowercased, looked up in the substitution dictionary and, when not substituted,
scrambled by the steps in `fauxcrypt.scrambler.steps`. Separators pass through untouched.
"""
import concurrent.futures
import logging
import random
import typing as t

from fauxcrypt.core.config import ObfuscationConfig
from fauxcrypt.core.lexicon import SubstitutionDictionary, substitute
from fauxcrypt.core.tokenizer import Token, tokenize
from fauxcrypt.scrambler.cells import WordCells, lowercase_word
from fauxcrypt.scrambler.steps import (
    MAX_PINNED_LENGTH,
    extreme_move,
    pin_boundaries,
    shift_vowels,
    swap_consonant_pair,
    swap_vowel_digraphs,
)
from fauxcrypt.scrambler.streams import WordStreams

logger = logging.getLogger(__name__)


def scramble_word(word: str, rng: random.Random, config: ObfuscationConfig) -> str:
    """
    Scramble the letters of a lowercased word.

    The output is a permutation of the word that keeps the first and last letter and every
    hyphen or apostrophe in place. Words of up to three characters are returned as they are.
    """
    if len(word) <= MAX_PINNED_LENGTH:
        return word

    cells = pin_boundaries(WordCells.from_word(word))
    cells = swap_vowel_digraphs(cells)
    cells = shift_vowels(cells, rng, config)
    cells = swap_consonant_pair(cells, rng, config)
    if config.extreme:
        cells = extreme_move(cells, rng, config)

    return cells.to_word()


def obfuscate_word(
    word: str,
    dictionary: SubstitutionDictionary,
    rng: random.Random,
    config: ObfuscationConfig,
) -> str:
    """
    Obfuscate a single word.

    The word is lowercased and replaced when it is in the dictionary, otherwise scrambled.
    """
    word = lowercase_word(word)

    replacement = substitute(word, dictionary)
    if replacement is not None:
        return replacement

    return scramble_word(word, rng, config)


class Scrambler:
    """
    Obfuscates whole documents with a fixed dictionary and config.

    Args:
        dictionary: substitution dictionary applied before scrambling
        config: obfuscation settings, including the seed and the number of workers
    """

    def __init__(
        self,
        *,
        dictionary: t.Optional[SubstitutionDictionary] = None,
        config: t.Optional[ObfuscationConfig] = None,
    ) -> None:
        self.dictionary = dictionary or SubstitutionDictionary()
        self.config = config or ObfuscationConfig()
        self.streams = WordStreams(self.config.seed)

    def obfuscate_token(self, token: Token) -> str:
        if not token.is_word:
            return token.text

        word = lowercase_word(token.text)
        replacement = substitute(word, self.dictionary)
        if replacement is not None:
            return replacement
        # Short words draw nothing from their stream.
        if len(word) <= MAX_PINNED_LENGTH:
            return word

        return scramble_word(word, self.streams.stream(token.index), self.config)

    def obfuscate(self, text: str) -> str:
        tokens = tokenize(text)

        if self.config.workers > 1:
            logger.info(
                f"Obfuscating {len(tokens)} tokens with {self.config.workers} workers",
            )
            with concurrent.futures.ThreadPoolExecutor(
                max_workers=self.config.workers,
            ) as executor:
                texts = list(executor.map(self.obfuscate_token, tokens))
        else:
            texts = [self.obfuscate_token(token) for token in tokens]

        return "".join(texts)


def obfuscate_text(
    text: str,
    dictionary: t.Optional[SubstitutionDictionary] = None,
    config: t.Optional[ObfuscationConfig] = None,
) -> str:
    """Obfuscate every word of a text; deterministic for a fixed text, dictionary and config."""
    return Scrambler(dictionary=dictionary, config=config).obfuscate(text)
