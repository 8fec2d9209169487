from .cells import CharClass, WordCells, classify_char, lowercase_word  # noqa
from .scrambler import Scrambler, obfuscate_text, obfuscate_word, scramble_word  # noqa
from .steps import (  # noqa
    extreme_move,
    pin_boundaries,
    shift_vowels,
    swap_consonant_pair,
    swap_vowel_digraphs,
)
