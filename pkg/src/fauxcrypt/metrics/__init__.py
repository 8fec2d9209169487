from .alignment import align_words  # noqa
from .digraphs import COMMON_DIGRAPHS, DigraphTable, digraph_survival  # noqa
from .distance import damerau_levenshtein, hamming, levenshtein  # noqa
from .report import (  # noqa
    CorpusReport,
    LengthBucket,
    WordPairDistance,
    analyze_corpus,
    compare_words,
    write_pairs,
)
