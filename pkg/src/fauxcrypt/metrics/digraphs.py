"""
Survival of common English digraphs after obfuscation.

The survival rate is the share of digraph occurrences in the plain words that are still found
at the same position in the aligned obfuscated words. Only digraphs inside a word count.
"""
import types
import typing as t
from dataclasses import dataclass, field

from fauxcrypt.core.lexicon import SubstitutionDictionary
from fauxcrypt.metrics.alignment import align_words

# Frequencies in percent.
COMMON_DIGRAPHS: t.Mapping[str, float] = types.MappingProxyType(
    {
        "nt": 0.56,
        "ha": 0.56,
        "es": 0.56,
        "st": 0.55,
        "en": 0.55,
        "ed": 0.53,
        "to": 0.52,
        "it": 0.50,
        "ou": 0.50,
        "ea": 0.47,
        "hi": 0.46,
        "is": 0.46,
        "or": 0.43,
        "ti": 0.34,
        "as": 0.33,
        "te": 0.27,
        "et": 0.19,
        "ng": 0.18,
        "of": 0.16,
        "al": 0.09,
        "de": 0.09,
        "se": 0.08,
        "le": 0.08,
        "sa": 0.06,
        "si": 0.05,
        "ar": 0.04,
        "ve": 0.04,
        "ra": 0.04,
        "ld": 0.02,
        "ur": 0.02,
    },
)


@dataclass(frozen=True)
class DigraphTable:
    """Mapping from a two letter digraph to its frequency in percent."""

    entries: t.Mapping[str, float] = field(default_factory=lambda: COMMON_DIGRAPHS)

    def __contains__(self, digraph: object) -> bool:
        return digraph in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def frequency(self, digraph: str) -> float:
        return self.entries[digraph]


@dataclass
class DigraphCount:
    """Running tally of digraph occurrences and of the ones that survived."""

    occurrences: int = 0
    survived: int = 0
    weight: float = 0.0
    survived_weight: float = 0.0

    def add(self, plain: str, obfuscated: str, table: DigraphTable) -> None:
        """Count the digraphs of one aligned, lowercased word pair."""
        for start in range(len(plain) - 1):
            digraph = plain[start : start + 2]
            if digraph not in table:
                continue
            frequency = table.frequency(digraph)
            self.occurrences += 1
            self.weight += frequency
            if obfuscated[start : start + 2] == digraph:
                self.survived += 1
                self.survived_weight += frequency

    @property
    def survival(self) -> float:
        return self.survived / self.occurrences if self.occurrences else 1.0

    @property
    def weighted_survival(self) -> float:
        return self.survived_weight / self.weight if self.weight else 1.0


def count_digraphs(
    pairs: t.Iterable[t.Tuple[str, str]],
    table: t.Optional[DigraphTable] = None,
) -> DigraphCount:
    table = table or DigraphTable()
    count = DigraphCount()
    for plain, obfuscated in pairs:
        count.add(plain.lower(), obfuscated.lower(), table)
    return count


def digraph_survival(
    plain: str,
    obfuscated: str,
    table: t.Optional[DigraphTable] = None,
    *,
    dictionary: t.Optional[SubstitutionDictionary] = None,
) -> float:
    """
    Fraction of the digraph occurrences in the words of `plain` that survive in `obfuscated`.

    Returns 1.0 when the plain text contains none of the digraphs.

    Raises:
        AlignmentError: the texts do not have the same number of words.
    """
    pairs = [
        (p.text, o.text) for p, o in align_words(plain, obfuscated, dictionary=dictionary)
    ]
    return count_digraphs(pairs, table).survival
