import pytest
from fauxcrypt.core.tokenizer import Token, TokenKind, detokenize, tokenize, words
from hypothesis import given
from hypothesis import strategies as st

WORD = TokenKind.WORD
SEP = TokenKind.SEPARATOR


def kinds_and_texts(tokens):
    return [(token.kind, token.text) for token in tokens]


def test_empty_text():
    assert tokenize("") == []
    assert detokenize([]) == ""


def test_sentence():
    tokens = tokenize("MARLEY was dead:")
    assert kinds_and_texts(tokens) == [
        (WORD, "MARLEY"),
        (SEP, " "),
        (WORD, "was"),
        (SEP, " "),
        (WORD, "dead"),
        (SEP, ":"),
    ]
    assert [token.index for token in tokens] == list(range(6))


@pytest.mark.parametrize(
    "word",
    ["door-nail", "don't", "scrooge's", "coffin-nail", "Country's"],
)
def test_joined_words_are_single_tokens(word):
    assert kinds_and_texts(tokenize(word)) == [(WORD, word)]


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("'Change", [(SEP, "'"), (WORD, "Change")]),
        ("nail-", [(WORD, "nail"), (SEP, "-")]),
        ("a--b", [(WORD, "a"), (SEP, "--"), (WORD, "b")]),
        ("pr0n", [(WORD, "pr"), (SEP, "0"), (WORD, "n")]),
        ("café", [(WORD, "caf"), (SEP, "é")]),
        ("a—b", [(WORD, "a"), (SEP, "—"), (WORD, "b")]),
        ("  \n", [(SEP, "  \n")]),
    ],
)
def test_separators(text, expected):
    assert kinds_and_texts(tokenize(text)) == expected


def test_detokenize_concatenates():
    tokens = [
        Token(kind=WORD, text="a", index=0),
        Token(kind=SEP, text="—", index=1),
        Token(kind=WORD, text="b", index=2),
    ]
    assert detokenize(tokens) == "a—b"


def test_round_trip_sample():
    text = "mnid! i don't"
    assert detokenize(tokenize(text)) == text


def test_words_keep_stream_index():
    assert [(token.text, token.index) for token in words("Mind! I don't")] == [
        ("Mind", 0),
        ("I", 2),
        ("don't", 4),
    ]


@pytest.mark.property
@given(st.text())
def test_round_trip_property(text):
    tokens = tokenize(text)
    assert detokenize(tokens) == text
    assert [token.index for token in tokens] == list(range(len(tokens)))


@pytest.mark.property
@given(st.text(alphabet=st.characters(max_codepoint=0x7F)) | st.text())
def test_token_content_property(text):
    for token in tokenize(text):
        has_letter = any(char.isascii() and char.isalpha() for char in token.text)
        if token.is_word:
            assert has_letter
            assert not any(char.isspace() for char in token.text)
        else:
            assert not has_letter
            assert token.text


@pytest.mark.property
@given(st.text())
def test_tokens_alternate(text):
    tokens = tokenize(text)
    for left, right in zip(tokens, tokens[1:]):
        assert left.kind != right.kind
