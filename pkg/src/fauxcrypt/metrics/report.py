"""This module compares plain and obfuscated texts word by word and reports the distances."""
import concurrent.futures
import json
import logging
import typing as t
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path

import pyarrow as pa
import pyarrow.parquet as pq
from fsspec import open as fs_open

from fauxcrypt.core.exceptions import InvalidCorpusReport
from fauxcrypt.core.lexicon import SubstitutionDictionary
from fauxcrypt.core.schema import validate
from fauxcrypt.metrics.alignment import align_words
from fauxcrypt.metrics.digraphs import DigraphTable, count_digraphs
from fauxcrypt.metrics.distance import damerau_levenshtein, levenshtein

logger = logging.getLogger(__name__)

DEFAULT_TOP_K = 12

PAIR_SCHEMA = pa.schema(
    [
        ("index", pa.int64()),
        ("plain", pa.string()),
        ("obfuscated", pa.string()),
        ("levenshtein", pa.int32()),
        ("damerau", pa.int32()),
    ],
)


@dataclass(frozen=True)
class WordPairDistance:
    """
    Distances between a plain word and its obfuscated form, both lowercased.

    Args:
        plain: the plain word
        obfuscated: the obfuscated word
        levenshtein: Levenshtein distance between both
        damerau: optimal string alignment distance between both
        index: position of the pair in the word sequence; not part of equality
    """

    plain: str
    obfuscated: str
    levenshtein: int
    damerau: int
    index: int = field(default=0, compare=False)

    @classmethod
    def measure(cls, plain: str, obfuscated: str, index: int = 0) -> "WordPairDistance":
        plain, obfuscated = plain.lower(), obfuscated.lower()
        return cls(
            plain=plain,
            obfuscated=obfuscated,
            levenshtein=levenshtein(plain, obfuscated),
            damerau=damerau_levenshtein(plain, obfuscated),
            index=index,
        )

    def to_dict(self) -> t.Dict[str, t.Any]:
        return {
            "plain": self.plain,
            "obfuscated": self.obfuscated,
            "levenshtein": self.levenshtein,
            "damerau": self.damerau,
        }


@dataclass(frozen=True)
class LengthBucket:
    """Number of words of one plain length and their summed Levenshtein distance."""

    length: int
    words: int
    total_levenshtein: int

    @property
    def per_word_levenshtein(self) -> float:
        return self.total_levenshtein / self.words if self.words else 0.0


@dataclass(frozen=True)
class CorpusReport:
    """Word by word comparison of a plain text with its obfuscated form."""

    word_count: int
    total_levenshtein: int
    per_word_levenshtein: float
    total_damerau: int
    per_word_damerau: float
    digraph_survival: float
    top_pairs: t.Tuple[WordPairDistance, ...] = ()
    changed_words: int = 0
    weighted_digraph_survival: float = 1.0
    length_profile: t.Tuple[LengthBucket, ...] = ()

    def to_dict(self) -> t.Dict[str, t.Any]:
        return {
            "word_count": self.word_count,
            "total_levenshtein": self.total_levenshtein,
            "per_word_levenshtein": self.per_word_levenshtein,
            "total_damerau": self.total_damerau,
            "per_word_damerau": self.per_word_damerau,
            "digraph_survival": self.digraph_survival,
            "top_pairs": [pair.to_dict() for pair in self.top_pairs],
            "changed_words": self.changed_words,
            "weighted_digraph_survival": self.weighted_digraph_survival,
            "length_profile": [asdict(bucket) for bucket in self.length_profile],
        }

    @classmethod
    def from_dict(cls, data: t.Mapping[str, t.Any]) -> "CorpusReport":
        """Create a report from its dict form, validating it against the report schema."""
        validate(data, schema_name="corpus_report.json", error_cls=InvalidCorpusReport)
        return cls(
            word_count=data["word_count"],
            total_levenshtein=data["total_levenshtein"],
            per_word_levenshtein=float(data["per_word_levenshtein"]),
            total_damerau=data["total_damerau"],
            per_word_damerau=float(data["per_word_damerau"]),
            digraph_survival=float(data["digraph_survival"]),
            top_pairs=tuple(WordPairDistance(**pair) for pair in data["top_pairs"]),
            changed_words=data.get("changed_words", 0),
            weighted_digraph_survival=float(data.get("weighted_digraph_survival", 1.0)),
            length_profile=tuple(
                LengthBucket(**bucket) for bucket in data.get("length_profile", [])
            ),
        )

    def validate(self) -> None:
        """Raise InvalidCorpusReport when the report does not match the report schema."""
        validate(
            self.to_dict(),
            schema_name="corpus_report.json",
            error_cls=InvalidCorpusReport,
        )

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, document: str) -> "CorpusReport":
        return cls.from_dict(json.loads(document))

    @classmethod
    def from_file(cls, path: t.Union[str, Path]) -> "CorpusReport":
        """Load the report from the JSON file specified by the provided path."""
        with fs_open(path, "r", encoding="utf-8") as file_:
            return cls.from_dict(json.load(file_))

    def to_file(self, path: t.Union[str, Path]) -> None:
        """Dump the report as JSON to the file specified by the provided path."""
        with fs_open(path, "w", encoding="utf-8", auto_mkdir=True) as file_:
            json.dump(self.to_dict(), file_, indent=2)

    def to_text(self) -> str:
        """Render the report as aligned plain text tables."""
        summary = [
            ("Words", f"{self.word_count}"),
            ("Changed words", f"{self.changed_words}"),
            ("Total Levenshtein distance", f"{self.total_levenshtein}"),
            ("Levenshtein distance per word", f"{self.per_word_levenshtein:.3f}"),
            ("Total Damerau-Levenshtein distance", f"{self.total_damerau}"),
            ("Damerau-Levenshtein distance per word", f"{self.per_word_damerau:.3f}"),
            ("Digraph survival", f"{self.digraph_survival:.3f}"),
            ("Weighted digraph survival", f"{self.weighted_digraph_survival:.3f}"),
        ]
        label_width = max(len(label) for label, _ in summary)
        lines = [f"{label:<{label_width}}  {value}" for label, value in summary]

        if self.top_pairs:
            plain_width = max(len("Plaintext"), *(len(p.plain) for p in self.top_pairs))
            header = f"{'LD':>3} {'DL':>3}  {'Plaintext':<{plain_width}}  Obfuscated"
            lines += ["", header]
            lines += [
                f"{pair.levenshtein:>3} {pair.damerau:>3}  "
                f"{pair.plain:<{plain_width}}  {pair.obfuscated}"
                for pair in self.top_pairs
            ]

        if self.length_profile:
            lines += ["", f"{'Length':>6} {'Words':>8} {'LD':>8} {'LD/word':>8}"]
            lines += [
                f"{bucket.length:>6} {bucket.words:>8} {bucket.total_levenshtein:>8} "
                f"{bucket.per_word_levenshtein:>8.3f}"
                for bucket in self.length_profile
            ]

        return "\n".join(lines) + "\n"


def compare_words(
    plain: str,
    obfuscated: str,
    *,
    workers: int = 1,
    dictionary: t.Optional[SubstitutionDictionary] = None,
) -> t.List[WordPairDistance]:
    """
    Measure the distance of every aligned word pair of two texts.

    Pass the dictionary used for obfuscation when replacements may span several words.

    Raises:
        AlignmentError: the texts do not have the same number of words.
    """
    aligned = align_words(plain, obfuscated, dictionary=dictionary)

    def measure(position: int) -> WordPairDistance:
        plain_token, obfuscated_token = aligned[position]
        return WordPairDistance.measure(
            plain_token.text,
            obfuscated_token.text,
            position,
        )

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(measure, range(len(aligned))))

    return [measure(position) for position in range(len(aligned))]


def top_pairs(
    pairs: t.Iterable[WordPairDistance],
    k: int = DEFAULT_TOP_K,
) -> t.Tuple[WordPairDistance, ...]:
    """
    The `k` most distant distinct word pairs, by descending Levenshtein distance. Ties go to
    the pair that occurs first. Unchanged pairs are never listed.
    """
    ranked = sorted(
        (pair for pair in pairs if pair.levenshtein > 0),
        key=lambda pair: (-pair.levenshtein, pair.index),
    )
    seen: t.Set[t.Tuple[str, str]] = set()
    selected: t.List[WordPairDistance] = []
    for pair in ranked:
        if len(selected) == k:
            break
        if (pair.plain, pair.obfuscated) in seen:
            continue
        seen.add((pair.plain, pair.obfuscated))
        selected.append(pair)
    return tuple(selected)


def length_profile(pairs: t.Iterable[WordPairDistance]) -> t.Tuple[LengthBucket, ...]:
    word_counts: t.Counter[int] = Counter()
    distances: t.Counter[int] = Counter()
    for pair in pairs:
        word_counts[len(pair.plain)] += 1
        distances[len(pair.plain)] += pair.levenshtein
    return tuple(
        LengthBucket(
            length=length,
            words=word_counts[length],
            total_levenshtein=distances[length],
        )
        for length in sorted(word_counts)
    )


def summarize(
    pairs: t.Sequence[WordPairDistance],
    *,
    top_k: int = DEFAULT_TOP_K,
    table: t.Optional[DigraphTable] = None,
) -> CorpusReport:
    """Build a corpus report from measured word pairs."""
    word_count = len(pairs)
    total_levenshtein = sum(pair.levenshtein for pair in pairs)
    total_damerau = sum(pair.damerau for pair in pairs)
    digraphs = count_digraphs(((pair.plain, pair.obfuscated) for pair in pairs), table)

    report = CorpusReport(
        word_count=word_count,
        total_levenshtein=total_levenshtein,
        per_word_levenshtein=total_levenshtein / word_count if word_count else 0.0,
        total_damerau=total_damerau,
        per_word_damerau=total_damerau / word_count if word_count else 0.0,
        digraph_survival=digraphs.survival,
        top_pairs=top_pairs(pairs, top_k),
        changed_words=sum(1 for pair in pairs if pair.levenshtein > 0),
        weighted_digraph_survival=digraphs.weighted_survival,
        length_profile=length_profile(pairs),
    )
    logger.info(
        f"Compared {report.word_count} words: total Levenshtein distance "
        f"{report.total_levenshtein} ({report.per_word_levenshtein:.3f} per word)",
    )
    return report


def analyze_corpus(
    plain: str,
    obfuscated: str,
    *,
    top_k: int = DEFAULT_TOP_K,
    table: t.Optional[DigraphTable] = None,
    workers: int = 1,
    dictionary: t.Optional[SubstitutionDictionary] = None,
) -> CorpusReport:
    """
    Compare a plain text with its obfuscated form word by word, ignoring letter case.

    Raises:
        AlignmentError: the texts do not have the same number of words.
    """
    pairs = compare_words(
        plain,
        obfuscated,
        workers=workers,
        dictionary=dictionary,
    )
    return summarize(pairs, top_k=top_k, table=table)


def pairs_table(pairs: t.Iterable[WordPairDistance]) -> pa.Table:
    rows = [{"index": pair.index, **pair.to_dict()} for pair in pairs]
    return pa.Table.from_pylist(rows, schema=PAIR_SCHEMA)


def write_pairs(pairs: t.Iterable[WordPairDistance], path: t.Union[str, Path]) -> None:
    """Write every word pair and its distances to a parquet file."""
    table = pairs_table(pairs)
    with fs_open(path, "wb", auto_mkdir=True) as file_:
        pq.write_table(table, file_)
    logger.info(f"Wrote {table.num_rows} word pairs to {path}")
