"""
The scrambling steps applied to a single word, in pipeline order.

Every step takes the cells produced by the previous one and returns new cells; the input is
never modified. Pins only accumulate: once a cell is pinned no later step touches it.
"""
import logging
import random
import typing as t

from fauxcrypt.core.config import ObfuscationConfig
from fauxcrypt.scrambler.cells import CONSONANT_CLASSES, CharClass, WordCells

logger = logging.getLogger(__name__)

# Words of this length or shorter are left as they are.
MAX_PINNED_LENGTH = 3

_RISER_DANGLER = frozenset({CharClass.RISER_CONSONANT, CharClass.DANGLER_CONSONANT})


def pin_boundaries(cells: WordCells) -> WordCells:
    """Pin the first and last cell, every non-letter cell, and all cells of short words."""
    cells = cells.copy()
    if len(cells) <= MAX_PINNED_LENGTH:
        cells.pin(*range(len(cells)))
        return cells

    cells.pin(0, len(cells) - 1)
    cells.pin(
        *(
            index
            for index, char_class in enumerate(cells.classes)
            if char_class is CharClass.NON_LETTER
        ),
    )
    return cells


def _free_vowel(cells: WordCells, index: int) -> bool:
    return cells.is_free(index) and cells.classes[index] is CharClass.VOWEL


def _free_consonant(cells: WordCells, index: int) -> bool:
    return cells.is_free(index) and cells.classes[index] in CONSONANT_CLASSES


def swap_vowel_digraphs(cells: WordCells) -> WordCells:
    """Swap every non-overlapping pair of adjacent free vowels, left to right, and pin both."""
    cells = cells.copy()
    index = 0
    while index < len(cells) - 1:
        if _free_vowel(cells, index) and _free_vowel(cells, index + 1):
            cells.swap(index, index + 1)
            cells.pin(index, index + 1)
            index += 2
        else:
            index += 1
    return cells


def shift_vowels(
    cells: WordCells,
    rng: random.Random,
    config: ObfuscationConfig,
) -> WordCells:
    """
    Shift some free vowels one position forwards or backwards.

    Each free vowel is, with probability `config.vowel_shift_prob`, exchanged with a free
    consonant next to it. When both neighbours qualify the direction is chosen uniformly.
    Vowels only ever pass consonants, so the order of the vowels among themselves and of the
    consonants among themselves is unchanged.
    """
    cells = cells.copy()
    vowels = [index for index in range(len(cells)) if _free_vowel(cells, index)]

    for index in vowels:
        neighbours = [
            neighbour
            for neighbour in (index - 1, index + 1)
            if 0 <= neighbour < len(cells) and _free_consonant(cells, neighbour)
        ]
        if not neighbours or rng.random() >= config.vowel_shift_prob:
            continue

        target = neighbours[0] if len(neighbours) == 1 else rng.choice(neighbours)
        cells.swap(index, target)

    return cells


def consonant_pairs(cells: WordCells) -> t.List[t.Tuple[int, int]]:
    """Adjacent pairs of free consonants holding different letters."""
    return [
        (index, index + 1)
        for index in range(len(cells) - 1)
        if _free_consonant(cells, index)
        and _free_consonant(cells, index + 1)
        and cells.chars[index] != cells.chars[index + 1]
    ]


def swap_consonant_pair(
    cells: WordCells,
    rng: random.Random,
    config: ObfuscationConfig,
) -> WordCells:
    """
    Swap a single pair of adjacent consonants in words longer than
    `config.consonant_swap_min_len` letters.

    A riser next to a dangler is preferred over any other pair of consonants. Among the
    candidates of the preferred kind one pair is picked uniformly.
    """
    cells = cells.copy()
    if cells.letter_count <= config.consonant_swap_min_len:
        return cells

    pairs = consonant_pairs(cells)
    preferred = [
        (i, j)
        for i, j in pairs
        if {cells.classes[i], cells.classes[j]} == _RISER_DANGLER
    ]
    candidates = preferred or pairs
    if not candidates:
        return cells

    i, j = candidates[0] if len(candidates) == 1 else rng.choice(candidates)
    cells.swap(i, j)
    return cells


def extreme_move(
    cells: WordCells,
    rng: random.Random,
    config: ObfuscationConfig,
) -> WordCells:
    """
    Move one free letter up to `config.extreme_max_move` free positions left or right.

    The free letters in between shift over by one; pinned cells stay in place. Nothing happens
    when extreme mode is disabled or fewer than three free letters are left.
    """
    cells = cells.copy()
    if not config.extreme:
        return cells

    slots = [
        index
        for index in range(len(cells))
        if cells.is_free(index) and cells.classes[index].is_letter
    ]
    if len(slots) < 3:  # noqa: PLR2004
        return cells

    source = rng.randrange(len(slots))
    low = max(0, source - config.extreme_max_move)
    high = min(len(slots) - 1, source + config.extreme_max_move)
    target = rng.choice([slot for slot in range(low, high + 1) if slot != source])

    chars = [cells.chars[index] for index in slots]
    classes = [cells.classes[index] for index in slots]
    chars.insert(target, chars.pop(source))
    classes.insert(target, classes.pop(source))

    for slot, index in enumerate(slots):
        cells.chars[index] = chars[slot]
        cells.classes[index] = classes[slot]

    return cells
