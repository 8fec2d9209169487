import pytest
from fauxcrypt.core.exceptions import AlignmentError
from fauxcrypt.core.lexicon import SubstitutionDictionary
from fauxcrypt.metrics.alignment import align_words


def test_align_words():
    pairs = align_words("MARLEY was dead:", "marley was daed:")
    assert [(p.text, o.text) for p, o in pairs] == [
        ("MARLEY", "marley"),
        ("was", "was"),
        ("dead", "daed"),
    ]


def test_align_empty():
    assert align_words("", "...") == []


def test_different_separators_still_align():
    pairs = align_words("door-nail, a", "doro-nail a")
    assert [(p.text, o.text) for p, o in pairs] == [("door-nail", "doro-nail"), ("a", "a")]


def test_word_count_mismatch_position():
    with pytest.raises(AlignmentError) as excinfo:
        align_words("a b c", "a bb")
    assert excinfo.value.plain_count == 3
    assert excinfo.value.obfuscated_count == 2
    assert excinfo.value.position == 1


def test_word_count_mismatch_at_end():
    with pytest.raises(AlignmentError) as excinfo:
        align_words("a b c", "a b")
    assert excinfo.value.position == 2
    assert "3 words" in str(excinfo.value)


def test_multi_word_replacement_needs_dictionary():
    with pytest.raises(AlignmentError) as excinfo:
        align_words("no porn here", "no pr0n here")
    assert excinfo.value.position == 1


def test_multi_word_replacement_with_dictionary():
    dictionary = SubstitutionDictionary({"porn": "pr0n", "http": "hxxp"})
    pairs = align_words("No PORN, only http here", "no pr0n, only hxxp hree", dictionary=dictionary)
    assert [(p.text, o.text) for p, o in pairs] == [
        ("No", "no"),
        ("PORN", "pr0n"),
        ("only", "only"),
        ("http", "hxxp"),
        ("here", "hree"),
    ]
    assert pairs[1][1].index == 2


def test_dictionary_mismatch_position():
    dictionary = SubstitutionDictionary({"porn": "pr0n"})
    with pytest.raises(AlignmentError) as excinfo:
        align_words("no porn here", "no porn here", dictionary=dictionary)
    assert excinfo.value.position == 1


def test_replacement_without_letters():
    dictionary = SubstitutionDictionary({"one": "1"})
    pairs = align_words("one dog", "1 dog", dictionary=dictionary)
    assert [(p.text, o.text) for p, o in pairs] == [("one", "1"), ("dog", "dog")]
