import unicodedata

import pytest
from hypothesis import given, strategies as st

from corpws.resources import default_abbreviations
from corpws.segmenter import (
    Token,
    count_units,
    flatten,
    is_word,
    normalize,
    tokenize,
)


def texts(sentences):
    return [[t.text for t in s] for s in sentences]


def test_clitic_split():
    sents = tokenize("Mae Cymru'n wlad Geltaidd.")
    assert texts(sents) == [["Mae", "Cymru", "'n", "wlad", "Geltaidd", "."]]
    coords = [(t.sentence, t.position) for t in sents[0]]
    assert coords == [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]


def test_two_sentences_with_clitic():
    sents = tokenize("aeth i'r dre. daeth.")
    assert texts(sents) == [["aeth", "i", "'r", "dre", "."], ["daeth", "."]]
    assert sents[1][0].sentence == 2
    assert sents[1][0].position == 1


def test_token_and_word_counts():
    tokens = flatten(tokenize("Mae Cymru'n wlad Geltaidd."))
    counts = count_units(tokens)
    assert counts.tokens == 6
    assert counts.words == 4  # 'n and . do not start with a letter


def test_all_clitic_forms():
    sents = tokenize("a'i b'th c'ch d'n e'r f'm g'u h'w")
    flat = [t.text for t in flatten(sents)]
    assert flat == ["a", "'i", "b", "'th", "c", "'ch", "d", "'n",
                    "e", "'r", "f", "'m", "g", "'u", "h", "'w"]


def test_standalone_clitic():
    assert texts(tokenize("y dyn 'n dda")) == [["y", "dyn", "'n", "dda"]]


def test_leading_quote_is_not_a_clitic():
    # 'new: apostrophe followed by more letters than a clitic takes
    assert texts(tokenize("'newydd' yw e")) == [
        ["'", "newydd", "'", "yw", "e"]]


def test_abbreviations_protected():
    abbrevs = default_abbreviations()
    sents = tokenize("Aeth Dr. Jones adre e.e. heddiw.", abbrevs)
    assert len(sents) == 1
    assert "Dr." in [t.text for t in sents[0]]
    assert "e.e." in [t.text for t in sents[0]]


def test_abbreviation_requires_boundary():
    # t. is on the list but 'te' must not be eaten by it
    abbrevs = default_abbreviations()
    assert texts(tokenize("te a t. da", abbrevs)) == [["te", "a", "t.", "da"]]


def test_typographic_apostrophe_normalized():
    a = tokenize("Mae Cymru’n wlad.")
    b = tokenize("Mae Cymru'n wlad.")
    assert texts(a) == texts(b)
    assert a[0][2].text == "'n"


def test_nfc_normalization():
    decomposed = unicodedata.normalize("NFD", "tŷ mawr")
    sents = tokenize(decomposed)
    assert sents[0][0].text == "tŷ"


def test_decimal_number_does_not_split_sentence():
    sents = tokenize("mae 3.14 yn fwy na 3. dyna fe.")
    assert len(sents) == 2
    assert texts(sents)[0][:4] == ["mae", "3", ".", "14"]


def test_exclamation_and_question():
    sents = tokenize("Beth? Wel! Da iawn.")
    assert len(sents) == 3


def test_hyphenated_word_stays_whole():
    assert texts(tokenize("dyn di-waith")) == [["dyn", "di-waith"]]


def test_empty_and_whitespace():
    assert tokenize("") == []
    assert tokenize("   \n\t ") == []


def test_spans_are_half_open_into_normalized_text():
    text = "Mae Cymru'n wlad."
    norm = normalize(text)
    for token in flatten(tokenize(text)):
        start, end = token.span
        assert norm[start:end] == token.text


def test_is_word_letter_rule():
    assert is_word("Geltaidd")
    assert is_word("ŵy")
    assert not is_word("'n")
    assert not is_word(".")
    assert not is_word("3")
    assert not is_word("")


_WELSH_TEXT = st.text(
    alphabet="abcdef ghilmnoprstuwy'.,!?-ŵŷ’\n ",
    min_size=0,
    max_size=80,
)


@given(_WELSH_TEXT)
def test_lossless_coverage(text):
    norm = normalize(text)
    tokens = flatten(tokenize(text))
    covered = [False] * len(norm)
    for token in tokens:
        start, end = token.span
        assert norm[start:end] == token.text
        for i in range(start, end):
            assert not covered[i], "overlapping spans"
            covered[i] = True
    for i, flag in enumerate(covered):
        assert flag == (not norm[i].isspace())


@given(_WELSH_TEXT)
def test_retokenization_is_stable(text):
    once = [t.text for t in flatten(tokenize(text))]
    again = [t.text for t in flatten(tokenize(" ".join(once)))]
    assert once == again


@given(_WELSH_TEXT)
def test_words_never_exceed_tokens(text):
    counts = count_units(flatten(tokenize(text)))
    assert 0 <= counts.words <= counts.tokens
