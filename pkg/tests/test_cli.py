import io
import json
import logging
from pathlib import Path

import pyarrow.parquet as pq
import pytest
from fauxcrypt.cli import (
    EXIT_IO_ERROR,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    entrypoint,
)
from fauxcrypt.core.config import ObfuscationConfig
from fauxcrypt.core.tokenizer import words
from fauxcrypt.scrambler.scrambler import obfuscate_text

examples_path = Path(__file__).parent / "examples"
PLAIN = examples_path / "christmas_carol_opening.txt"
OBFUSCATED = examples_path / "christmas_carol_opening.fc.txt"
GUTENBERG = examples_path / "christmas_carol_gutenberg.txt"


def test_no_subcommand_prints_help(capsys):
    assert entrypoint([]) == EXIT_OK
    assert "usage: fauxcrypt" in capsys.readouterr().out


@pytest.mark.parametrize("command", [["--help"], ["obfuscate", "--help"], ["analyze", "--help"]])
def test_help(command, capsys):
    with pytest.raises(SystemExit) as excinfo:
        entrypoint(command)
    assert excinfo.value.code == 0
    assert "fauxcrypt" in capsys.readouterr().out


def test_obfuscate_to_file(tmp_path):
    output = tmp_path / "out" / "carol.fc.txt"
    assert entrypoint(["obfuscate", str(PLAIN), "--seed", "42", "-o", str(output)]) == EXIT_OK

    plain = PLAIN.read_text(encoding="utf-8")
    obfuscated = output.read_text(encoding="utf-8")
    assert obfuscated == obfuscate_text(plain, config=ObfuscationConfig(seed=42))
    assert len(words(obfuscated)) == len(words(plain))


def test_obfuscate_is_deterministic(tmp_path, capsys):
    arguments = ["obfuscate", str(PLAIN), "--seed", "7", "--extreme"]
    assert entrypoint(arguments) == EXIT_OK
    first = capsys.readouterr().out
    assert entrypoint([*arguments, "--workers", "4"]) == EXIT_OK
    assert capsys.readouterr().out == first


def test_obfuscate_logs_seed(caplog, capsys):
    with caplog.at_level(logging.INFO):
        assert entrypoint(["obfuscate", str(PLAIN), "--seed", "1234"]) == EXIT_OK
    assert "seed 1234" in caplog.text


def test_obfuscate_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("MARLEY was dead:"))
    assert entrypoint(["obfuscate", "-", "--seed", "3", "--min-swap-len", "6"]) == EXIT_OK
    assert "was daed:" in capsys.readouterr().out


def test_obfuscate_empty_input(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert entrypoint(["obfuscate", str(empty), "--seed", "1"]) == EXIT_OK
    assert capsys.readouterr().out == ""


def test_obfuscate_missing_input(tmp_path):
    assert entrypoint(["obfuscate", str(tmp_path / "missing.txt")]) == EXIT_IO_ERROR


def test_obfuscate_sample_dictionary(tmp_path, capsys):
    source = tmp_path / "links.txt"
    source.write_text("Visit HTTP links\n")
    assert entrypoint(["obfuscate", str(source), "--seed", "1", "--dict", "sample"]) == EXIT_OK
    assert "hxxp" in capsys.readouterr().out


def test_obfuscate_malformed_dictionary(tmp_path):
    dictionary = tmp_path / "dict.tsv"
    dictionary.write_text("http hxxp\n")
    arguments = ["obfuscate", str(PLAIN), "--dict", str(dictionary)]
    assert entrypoint(arguments) == EXIT_USAGE_ERROR


def test_obfuscate_missing_dictionary(tmp_path):
    arguments = ["obfuscate", str(PLAIN), "--dict", str(tmp_path / "missing.tsv")]
    assert entrypoint(arguments) == EXIT_IO_ERROR


@pytest.mark.parametrize(
    "flags",
    [["--shift-prob", "2"], ["--min-swap-len", "2"], ["--max-move", "0"], ["--workers", "0"]],
)
def test_obfuscate_invalid_settings(flags):
    assert entrypoint(["obfuscate", str(PLAIN), *flags]) == EXIT_USAGE_ERROR


def test_obfuscate_config_file(tmp_path, capsys):
    config = tmp_path / "config.yaml"
    config.write_text("seed: 5\nvowel_shift_prob: 0.0\nconsonant_swap_min_len: 50\n")
    source = tmp_path / "marley.txt"
    source.write_text("MARLEY was dead:")

    assert entrypoint(["obfuscate", str(source), "--config", str(config)]) == EXIT_OK
    assert capsys.readouterr().out == "marley was daed:"

    arguments = ["obfuscate", str(source), "--config", str(config), "--min-swap-len", "5"]
    assert entrypoint(arguments) == EXIT_OK
    assert capsys.readouterr().out == "malrey was daed:"


def test_obfuscate_invalid_config_file(tmp_path):
    config = tmp_path / "config.yaml"
    config.write_text("seed: 5\nshuffle: true\n")
    assert entrypoint(["obfuscate", str(PLAIN), "--config", str(config)]) == EXIT_USAGE_ERROR


def test_obfuscate_strip_gutenberg(capsys):
    assert entrypoint(["obfuscate", str(PLAIN), "--seed", "11"]) == EXIT_OK
    expected = capsys.readouterr().out
    arguments = ["obfuscate", str(GUTENBERG), "--seed", "11", "--strip-gutenberg"]
    assert entrypoint(arguments) == EXIT_OK
    assert capsys.readouterr().out == expected


def test_analyze_json(capsys):
    assert entrypoint(["analyze", str(PLAIN), str(OBFUSCATED), "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)

    assert report["word_count"] == 137
    assert report["total_levenshtein"] == 115
    assert report["per_word_levenshtein"] == pytest.approx(115 / 137)
    assert report["total_damerau"] == 68
    assert report["per_word_damerau"] == pytest.approx(68 / 137)
    assert report["digraph_survival"] == pytest.approx(69 / 131)
    assert report["changed_words"] == 47
    assert [pair["plain"] for pair in report["top_pairs"]] == [
        "therefore",
        "emphatically",
        "clergyman",
        "knowledge",
        "deadest",
        "ironmongery",
        "repeat",
        "change",
        "anything",
        "inclined",
        "coffin-nail",
        "ancestors",
    ]
    assert report["top_pairs"][0] == {
        "plain": "therefore",
        "obfuscated": "teherfroo",
        "levenshtein": 5,
        "damerau": 4,
    }


def test_analyze_text(tmp_path):
    output = tmp_path / "report.txt"
    arguments = ["analyze", str(PLAIN), str(OBFUSCATED), "--top", "3", "-o", str(output)]
    assert entrypoint(arguments) == EXIT_OK

    report = output.read_text(encoding="utf-8")
    assert "Total Levenshtein distance" in report
    assert "therefore" in report
    assert "clergyman" in report
    assert "knowledge" not in report


def test_analyze_pairs_output(tmp_path, capsys):
    pairs = tmp_path / "pairs.parquet"
    arguments = ["analyze", str(PLAIN), str(OBFUSCATED), "--pairs-output", str(pairs)]
    assert entrypoint(arguments) == EXIT_OK

    table = pq.read_table(pairs)
    assert table.num_rows == 137
    assert sum(table.column("levenshtein").to_pylist()) == 115


def test_analyze_strip_gutenberg(capsys):
    arguments = ["analyze", str(GUTENBERG), str(OBFUSCATED), "--json", "--strip-gutenberg"]
    assert entrypoint(arguments) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["total_levenshtein"] == 115


def test_analyze_word_count_mismatch(tmp_path):
    truncated = tmp_path / "truncated.txt"
    truncated.write_text("marley was daed:")
    assert entrypoint(["analyze", str(PLAIN), str(truncated)]) == EXIT_USAGE_ERROR


def test_analyze_missing_input(tmp_path):
    arguments = ["analyze", str(PLAIN), str(tmp_path / "missing.txt")]
    assert entrypoint(arguments) == EXIT_IO_ERROR


def test_analyze_invalid_top():
    with pytest.raises(SystemExit) as excinfo:
        entrypoint(["analyze", str(PLAIN), str(OBFUSCATED), "--top", "0"])
    assert excinfo.value.code == EXIT_USAGE_ERROR


def test_round_trip_through_cli(tmp_path, capsys):
    obfuscated = tmp_path / "carol.fc.txt"
    assert entrypoint(["obfuscate", str(PLAIN), "--seed", "42", "-o", str(obfuscated)]) == 0
    assert entrypoint(["analyze", str(PLAIN), str(obfuscated), "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["word_count"] == 137
    assert 0 < report["per_word_levenshtein"] < 2


def test_analyze_strip_gutenberg_full_obfuscation(tmp_path, capsys):
    obfuscated = tmp_path / "carol.fc.txt"
    assert entrypoint(["obfuscate", str(GUTENBERG), "--seed", "9", "-o", str(obfuscated)]) == 0

    pairs = tmp_path / "pairs.parquet"
    arguments = [
        "analyze",
        str(GUTENBERG),
        str(obfuscated),
        "--json",
        "--strip-gutenberg",
        "--pairs-output",
        str(pairs),
    ]
    assert entrypoint(arguments) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["word_count"] == 137

    table = pq.read_table(pairs)
    plain = [token.text.lower() for token in words(PLAIN.read_text(encoding="utf-8"))]
    assert table.column("plain").to_pylist() == plain
    assert table.column("index").to_pylist() == list(range(137))


def test_analyze_sample_dictionary(tmp_path, capsys):
    source = tmp_path / "links.txt"
    source.write_text("No porn here, only http links.\n")
    obfuscated = tmp_path / "links.fc.txt"
    arguments = ["obfuscate", str(source), "--seed", "1", "--dict", "sample", "-o", str(obfuscated)]
    assert entrypoint(arguments) == EXIT_OK
    assert "pr0n" in obfuscated.read_text(encoding="utf-8")

    arguments = ["analyze", str(source), str(obfuscated), "--json", "--dict", "sample"]
    assert entrypoint(arguments) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["word_count"] == 6


def test_analyze_split_replacement_without_dictionary(tmp_path, caplog):
    source = tmp_path / "links.txt"
    source.write_text("No porn here, only http links.\n")
    obfuscated = tmp_path / "links.fc.txt"
    arguments = ["obfuscate", str(source), "--seed", "1", "--dict", "sample", "-o", str(obfuscated)]
    assert entrypoint(arguments) == EXIT_OK

    assert entrypoint(["analyze", str(source), str(obfuscated)]) == EXIT_USAGE_ERROR
    assert "position 1" in caplog.text


def test_analyze_missing_dictionary(tmp_path):
    arguments = ["analyze", str(PLAIN), str(OBFUSCATED), "--dict", str(tmp_path / "missing.tsv")]
    assert entrypoint(arguments) == EXIT_IO_ERROR
