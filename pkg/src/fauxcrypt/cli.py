# ruff: noqa: E501 (suppressing line length warnings in this file)
"""This file contains the CLI script for the fauxcrypt package.


The entrypoint function is the main entrypoint for the CLI and is configured in the `pyproject.toml` file.

    [tool.poetry.scripts]
    fauxcrypt = "fauxcrypt.cli:entrypoint"

When installing the fauxcrypt package, the script will be available in the
environment.

eg `fauxcrypt --help`

If you want to extend the cli you can add a new subcommand by registering a new function in this file and adding it to the `entrypoint` function.
"""
import argparse
import logging
import sys
import textwrap
import typing as t
from dataclasses import dataclass, replace

import yaml
from fsspec import open as fs_open

from fauxcrypt.core.config import ObfuscationConfig
from fauxcrypt.core.corpus import gutenberg_body_words, strip_gutenberg_boilerplate
from fauxcrypt.core.exceptions import (
    AlignmentError,
    DictionaryDecodeError,
    DictionaryParseError,
    InvalidObfuscationConfig,
)
from fauxcrypt.core.lexicon import (
    SubstitutionDictionary,
    load_sample_dictionary,
)
from fauxcrypt.metrics.report import (
    DEFAULT_TOP_K,
    WordPairDistance,
    compare_words,
    summarize,
    write_pairs,
)
from fauxcrypt.scrambler.scrambler import Scrambler

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO_ERROR = 1
EXIT_USAGE_ERROR = 2

STDIO = "-"
SAMPLE_DICTIONARY = "sample"


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        msg = f"{value} is not a positive integer"
        raise argparse.ArgumentTypeError(msg)
    return number


@dataclass(frozen=True)
class CliConfig:
    """
    Validated settings of a single CLI invocation.

    Args:
        subcommand: `obfuscate` or `analyze`
        inputs: input paths; one for `obfuscate`, the plain and obfuscated text for `analyze`
        output: output path, standard output when None or `-`
        obfuscation: obfuscation settings, only set for `obfuscate`
        dictionary: path of the substitution dictionary, `sample` for the packaged one
        report_format: `text` or `json`
        top_k: number of word pairs listed in the report
        pairs_output: path of the parquet file receiving every word pair
        strip_gutenberg: whether Project Gutenberg boilerplate is removed from the inputs
    """

    subcommand: str
    inputs: t.Tuple[str, ...]
    output: t.Optional[str] = None
    obfuscation: t.Optional[ObfuscationConfig] = None
    dictionary: t.Optional[str] = None
    report_format: str = "text"
    top_k: int = DEFAULT_TOP_K
    pairs_output: t.Optional[str] = None
    strip_gutenberg: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        """Build the config from parsed arguments. Obfuscation flags override `--config`."""
        if args.subcommand == "obfuscate":
            base = (
                ObfuscationConfig.from_file(args.config)
                if args.config
                else ObfuscationConfig()
            )
            obfuscation = base.replace(
                seed=args.seed,
                consonant_swap_min_len=args.min_swap_len,
                vowel_shift_prob=args.shift_prob,
                extreme=True if args.extreme else None,
                extreme_max_move=args.max_move,
                workers=args.workers,
            )
            return cls(
                subcommand="obfuscate",
                inputs=(args.input,),
                output=args.output,
                obfuscation=obfuscation,
                dictionary=args.dict,
                strip_gutenberg=args.strip_gutenberg,
            )

        return cls(
            subcommand="analyze",
            inputs=(args.plain, args.obfuscated),
            output=args.output,
            report_format="json" if args.json else "text",
            dictionary=args.dict,
            top_k=args.top,
            pairs_output=args.pairs_output,
            strip_gutenberg=args.strip_gutenberg,
        )


def read_text(path: str) -> str:
    """Read a UTF-8 text from a local or remote path, or from standard input for `-`."""
    if path == STDIO:
        return sys.stdin.read()
    with fs_open(path, "r", encoding="utf-8", newline="") as file_:
        return file_.read()


def write_text(text: str, path: t.Optional[str]) -> None:
    if path is None or path == STDIO:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with fs_open(path, "w", encoding="utf-8", newline="", auto_mkdir=True) as file_:
        file_.write(text)


def load_dictionary_option(option: t.Optional[str]) -> SubstitutionDictionary:
    if option is None:
        return SubstitutionDictionary()
    if option == SAMPLE_DICTIONARY:
        return load_sample_dictionary()
    return SubstitutionDictionary.from_file(option)


def entrypoint(argv: t.Optional[t.List[str]] = None) -> int:
    """Entrypoint for the fauxcrypt CLI."""
    parser = argparse.ArgumentParser(
        prog="fauxcrypt",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=textwrap.dedent(
            """
        fauxcrypt scrambles the words of a text so that it stays readable for people but is
        hard to search or index by machine, and measures how far the scrambled words are from
        the originals.

        Example:
        fauxcrypt obfuscate carol.txt -o carol.fc.txt --seed 42
        fauxcrypt analyze carol.txt carol.fc.txt
        """,
        ),
        epilog=textwrap.dedent(
            """
        For a full list of commands run:
        fauxcrypt --help

        Or for a specific command run

        fauxcrypt <command> --help
        """,
        ),
    )
    subparsers = parser.add_subparsers(dest="subcommand")
    register_obfuscate(subparsers)
    register_analyze(subparsers)

    args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    if args.subcommand is None:
        parser.print_help()
        return EXIT_OK

    if args.verbose:
        logging.getLogger("fauxcrypt").setLevel(logging.DEBUG)

    return args.func(args)


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--output",
        "-o",
        help="Output path, standard output when omitted or `-`.",
    )
    parser.add_argument(
        "--strip-gutenberg",
        action="store_true",
        help="Drop the Project Gutenberg header and license text around the e-text body.",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Log debug messages.",
    )


def register_obfuscate(parent_parser):
    parser = parent_parser.add_parser(
        "obfuscate",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=textwrap.dedent(
            """
        Obfuscate a text. Every word is lowercased, replaced when it is listed in the
        substitution dictionary and otherwise scrambled, keeping its first and last letter in place.
        Everything that is not a word is copied as is.

        The output only depends on the input and the flags. When no seed is given one is drawn at
        random and logged, so the run can be repeated afterwards.

        Example:

        fauxcrypt obfuscate carol.txt -o carol.fc.txt --seed 42 --dict sample
        """,
        ),
    )
    parser.add_argument(
        "input",
        help="Path of the text to obfuscate (local or remote), `-` for standard input.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        help="Seed of the random choices, an unsigned 64-bit integer. Drawn at random when omitted.",
    )
    parser.add_argument(
        "--dict",
        help=f"Path of a substitution dictionary, or `{SAMPLE_DICTIONARY}` for the packaged sample dictionary.",
    )
    parser.add_argument(
        "--extreme",
        action="store_true",
        help="Additionally move one letter per word over a larger distance.",
    )
    parser.add_argument(
        "--min-swap-len",
        type=int,
        help="Words with more letters than this get a pair of consonants swapped. Defaults to 5.",
    )
    parser.add_argument(
        "--shift-prob",
        type=float,
        help="Probability that a vowel is shifted over a neighbouring consonant. Defaults to 0.5.",
    )
    parser.add_argument(
        "--max-move",
        type=int,
        help="Maximum distance a letter is moved in extreme mode. Defaults to 3.",
    )
    parser.add_argument(
        "--workers",
        type=int,
        help="Number of threads obfuscating words. Defaults to 1.",
    )
    parser.add_argument(
        "--config",
        help="YAML file with obfuscation settings. Flags take precedence over its values.",
    )
    _add_common_arguments(parser)

    parser.set_defaults(func=obfuscate)


def register_analyze(parent_parser):
    parser = parent_parser.add_parser(
        "analyze",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=textwrap.dedent(
            """
        Compare a plain text with its obfuscated form word by word, ignoring letter case.

        The report lists the total and per word Levenshtein and Damerau-Levenshtein distances, the
        survival of common English digraphs and the word pairs that changed the most.
        Both texts must contain the same number of words. Pass the dictionary used for
        obfuscation with `--dict` when replacements such as `pr0n` split into several words.

        Example:

        fauxcrypt analyze carol.txt carol.fc.txt --json -o report.json
        """,
        ),
    )
    parser.add_argument("plain", help="Path of the plain text, `-` for standard input.")
    parser.add_argument("obfuscated", help="Path of the obfuscated text.")
    parser.add_argument(
        "--json",
        action="store_true",
        help="Write the report as JSON instead of text tables.",
    )
    parser.add_argument(
        "--top",
        type=positive_int,
        default=DEFAULT_TOP_K,
        help=f"Number of most changed word pairs to list. Repeated and unchanged pairs are skipped, so fewer may be listed. Defaults to {DEFAULT_TOP_K}.",
    )
    parser.add_argument(
        "--pairs-output",
        help="Write every word pair and its distances to this parquet file.",
    )
    parser.add_argument(
        "--dict",
        help=f"Substitution dictionary used for obfuscation, or `{SAMPLE_DICTIONARY}`. Replacements that split into several words are paired with their plain word.",
    )
    _add_common_arguments(parser)

    parser.set_defaults(func=analyze)


def obfuscate(args) -> int:
    try:
        config = CliConfig.from_args(args)
    except (InvalidObfuscationConfig, yaml.YAMLError) as e:
        logger.error(f"Invalid obfuscation settings: {e}")
        return EXIT_USAGE_ERROR
    except OSError as e:
        logger.error(f"Could not read config file: {e}")
        return EXIT_IO_ERROR

    return run_obfuscate(config)


def run_obfuscate(config: CliConfig) -> int:
    """Obfuscate the input of the config and write it to the configured output."""
    obfuscation = config.obfuscation or ObfuscationConfig()

    try:
        dictionary = load_dictionary_option(config.dictionary)
    except (DictionaryParseError, DictionaryDecodeError) as e:
        logger.error(str(e))
        return EXIT_USAGE_ERROR
    except OSError as e:
        logger.error(f"Could not read dictionary: {e}")
        return EXIT_IO_ERROR

    try:
        text = read_text(config.inputs[0])
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Could not read input: {e}")
        return EXIT_IO_ERROR

    if config.strip_gutenberg:
        text = strip_gutenberg_boilerplate(text)

    logger.info(f"Obfuscating {config.inputs[0]} with seed {obfuscation.seed}")
    scrambled = Scrambler(dictionary=dictionary, config=obfuscation).obfuscate(text)

    try:
        write_text(scrambled, config.output)
    except OSError as e:
        logger.error(f"Could not write output: {e}")
        return EXIT_IO_ERROR

    return EXIT_OK


def compare_gutenberg_body(
    plain: str,
    obfuscated: str,
    dictionary: SubstitutionDictionary,
) -> t.List[WordPairDistance]:
    """
    Compare the e-text bodies of a plain Project Gutenberg text and its obfuscated form.

    The markers of an obfuscated copy of the full e-text are scrambled, so its body is taken at
    the word positions of the plain body. An obfuscated text that was stripped before obfuscation
    is compared with the plain body as is.
    """
    body = gutenberg_body_words(plain)
    try:
        pairs = compare_words(plain, obfuscated, dictionary=dictionary)
    except AlignmentError:
        logger.debug("Obfuscated text does not cover the full e-text, comparing bodies")
        return compare_words(
            strip_gutenberg_boilerplate(plain),
            obfuscated,
            dictionary=dictionary,
        )

    logger.info(f"Comparing Project Gutenberg body words {body.start}-{body.stop}")
    return [replace(pair, index=index) for index, pair in enumerate(pairs[body])]


def analyze(args) -> int:
    return run_analyze(CliConfig.from_args(args))


def run_analyze(config: CliConfig) -> int:
    """Compare the two inputs of the config and write the report to the configured output."""
    try:
        dictionary = load_dictionary_option(config.dictionary)
    except (DictionaryParseError, DictionaryDecodeError) as e:
        logger.error(str(e))
        return EXIT_USAGE_ERROR
    except OSError as e:
        logger.error(f"Could not read dictionary: {e}")
        return EXIT_IO_ERROR

    try:
        plain, obfuscated = (read_text(path) for path in config.inputs)
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Could not read input: {e}")
        return EXIT_IO_ERROR

    try:
        if config.strip_gutenberg:
            pairs = compare_gutenberg_body(plain, obfuscated, dictionary)
        else:
            pairs = compare_words(plain, obfuscated, dictionary=dictionary)
    except AlignmentError as e:
        logger.error(str(e))
        return EXIT_USAGE_ERROR

    report = summarize(pairs, top_k=config.top_k)
    if config.report_format == "json":
        report.validate()
        rendered = report.to_json(indent=2) + "\n"
    else:
        rendered = report.to_text()

    try:
        write_text(rendered, config.output)
        if config.pairs_output:
            write_pairs(pairs, config.pairs_output)
    except OSError as e:
        logger.error(f"Could not write report: {e}")
        return EXIT_IO_ERROR

    return EXIT_OK

