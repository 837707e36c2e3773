"""Exercise generators: bands, profile, cloze, identify, word task."""

from collections import Counter

import pytest

from corpws.corpus import Corpus, DocMeta, ingest
from corpws.errors import NoMaterial
from corpws.query import CorpusSnapshot
from corpws.resources import default_corpus
from corpws.segmenter import is_word
from corpws.tagset import BasicCat
from corpws.tiwtiadur import (
    BANDS,
    BandTable,
    ClozeTask,
    Profile,
    build_bands,
    check_answers,
    cloze_check,
    cloze_create,
    identify_task,
    make_task_id,
    profile,
    word_task,
)


@pytest.fixture(scope="module")
def snap() -> CorpusSnapshot:
    return CorpusSnapshot(default_corpus())


@pytest.fixture(scope="module")
def bands(snap) -> BandTable:
    return build_bands(snap)


def make_doc(text: str, doc_id: str = "d1", genre: str = "book",
             language_type: str = "written",
             sensitive: bool = False):
    meta = DocMeta(id=doc_id, language_type=language_type, genre=genre,
                   sensitive=sensitive)
    return ingest(text, meta)


# ---------------------------------------------------------------- bands


@pytest.mark.parametrize("rank,band", [
    (1, "K1"),
    (999, "K1"),
    (1000, "K1"),
    (1001, "K2"),
    (2000, "K2"),
    (2001, "K3"),
    (3000, "K3"),
    (3001, "K4"),
    (3500, "K4"),
    (4000, "K4"),
    (4001, "K5"),
    (5000, "K5"),
    (5001, "K6plus"),
    (123456, "K6plus"),
])
def test_band_for_rank_boundaries(rank, band):
    assert BandTable.band_for_rank(rank) == band


def test_band_for_rank_rejects_nonpositive():
    with pytest.raises(ValueError):
        BandTable.band_for_rank(0)


def test_band_of_and_contains():
    table = BandTable({"mae": 1, "gath": 1500, "pell": 4200})
    assert table.band_of("mae") == "K1"
    assert table.band_of("Mae") == "K1"  # case folded
    assert table.band_of("gath") == "K2"
    assert table.band_of("pell") == "K5"
    assert table.band_of("absent") == "K6plus"
    assert "mae" in table and "Mae" in table
    assert "absent" not in table
    assert table.rank_of("gath") == 1500
    assert table.rank_of("absent") is None


def test_build_bands_ranks_by_frequency():
    corpus = Corpus([make_doc("Y gath a y ci.")])
    table = build_bands(CorpusSnapshot(corpus))
    # y occurs twice, everything else once: ties share the dense rank
    assert table.rank_of("y") == 1
    assert table.rank_of("gath") == 2
    assert table.rank_of("a") == 2
    assert table.rank_of("ci") == 2
    assert "." not in table  # words only


def test_build_bands_empty_corpus_errors():
    with pytest.raises(NoMaterial):
        build_bands(CorpusSnapshot(Corpus([])))


def test_build_bands_includes_sensitive_by_default(snap):
    # the marker word lives only in the sensitive conversation
    full = build_bands(snap)
    assert "cythraul" in full
    sanitized = build_bands(snap, exclude_sensitive_from_stats=True)
    assert "cythraul" not in sanitized


def test_bundled_bands_consistent(snap, bands):
    for word, rank in bands.ranks.items():
        assert bands.band_of(word) == BandTable.band_for_rank(rank)
    # most frequent word of the fixture corpus sits at rank 1
    top = snap.word_freq["token_lower"].most_common(1)[0][0]
    assert bands.rank_of(top) == 1


# -------------------------------------------------------------- profile


RANKS = {"mae": 1, "y": 2, "gath": 3, "ci": 4, "a": 1500}


def test_profile_counts_and_percentages():
    table = BandTable(RANKS)
    prof = profile("Mae y gath a'r ci. Gwelodd xyz y gath.", table)
    assert isinstance(prof, Profile)
    # 'r is a clitic token, not a word; 9 words in total
    assert prof.total_words == 9
    assert prof.counts == {"K1": 6, "K2": 1, "K3": 0, "K4": 0,
                           "K5": 0, "K6plus": 2}
    assert prof.percentages["K1"] == pytest.approx(600 / 9)
    assert prof.percentages["K2"] == pytest.approx(100 / 9)
    assert prof.percentages["K6plus"] == pytest.approx(200 / 9)
    assert abs(sum(prof.percentages.values()) - 100.0) < 1e-9
    assert set(prof.counts) == set(BANDS)


def test_profile_ninety_ten_split():
    table = BandTable(RANKS)
    prof = profile("Mae y gath y ci y gath y ci zzz.", table)
    assert prof.total_words == 10
    assert prof.percentages["K1"] == 90.0
    assert prof.percentages["K6plus"] == 10.0


def test_profile_highlight_toggle():
    table = BandTable(RANKS)
    text = "Mae xyz."
    default = profile(text, table)
    flipped = profile(text, table, highlight_non_level=True)
    assert [e.word for e in default.entries] == ["Mae", "xyz"]
    # default marks in-list words, the toggle marks the absent ones
    assert [e.highlight for e in default.entries] == [True, False]
    assert [e.highlight for e in flipped.entries] == [False, True]
    # the toggle changes flags only, never counts
    assert default.counts == flipped.counts
    assert default.percentages == flipped.percentages
    assert [e.band for e in default.entries] == ["K1", "K6plus"]


def test_profile_empty_text():
    prof = profile("", BandTable(RANKS))
    assert prof.total_words == 0
    assert prof.entries == ()
    assert all(v == 0 for v in prof.counts.values())
    assert all(v == 0.0 for v in prof.percentages.values())


# ---------------------------------------------------------------- cloze


THREE_BY_SEVEN = (
    "Mae y gath fach yn y tŷ. "
    "Mae y ci mawr yn y parc. "
    "Mae y plentyn bach yn y ardd."
)


def test_cloze_every_seventh_word():
    corpus = Corpus([make_doc(THREE_BY_SEVEN)])
    task = cloze_create(CorpusSnapshot(corpus), genre="book",
                        gap_frequency=7, text_length=100, seed=3)
    # 21 words, so the gaps fall on words 7, 14 and 21
    assert task.answers == ("tŷ", "parc", "ardd")
    assert task.display[6] == {"gap": 0}
    assert task.display[7] == {"word": "."}
    assert task.display[14] == {"gap": 1}
    assert task.display[22] == {"gap": 2}
    assert Counter(task.bank) == Counter(task.answers)
    assert task.doc_id == "d1"
    assert task.params == {"genre": "book", "gap_frequency": 7,
                           "text_length": 100, "seed": 3}


def test_cloze_substitution_restores_window():
    corpus = Corpus([make_doc(THREE_BY_SEVEN)])
    doc = corpus.documents[0]
    task = cloze_create(CorpusSnapshot(corpus), genre="book",
                        gap_frequency=7, text_length=100, seed=3)
    rebuilt = [task.answers[item["gap"]] if "gap" in item
               else item["word"] for item in task.display]
    # window runs from the first word to the last, so the final full
    # stop is cut off but the sentence-internal ones remain
    assert rebuilt == [t.text for t in doc.tokens[:23]]


def test_cloze_gap_count_floor():
    corpus = Corpus([make_doc(THREE_BY_SEVEN)])
    snap21 = CorpusSnapshot(corpus)
    for n in (2, 4, 5, 10):
        task = cloze_create(snap21, "book", n, 100, seed=0)
        assert len(task.answers) == 21 // n


def test_cloze_window_capped_at_text_length(snap):
    doc = snap.corpus.get("hanes-y-fro")
    task = cloze_create(snap, genre="book", gap_frequency=5,
                        text_length=100, seed=11)
    gaps = sum(1 for item in task.display if "gap" in item)
    words_shown = sum(1 for item in task.display
                      if "word" in item and is_word(item["word"]))
    assert gaps + words_shown == min(100, doc.n_words)
    assert len(task.answers) == gaps


def test_cloze_deterministic(snap):
    a = cloze_create(snap, None, 4, 200, seed=7)
    b = cloze_create(snap, None, 4, 200, seed=7)
    assert a == b
    assert a.task_id == b.task_id


def test_cloze_bank_is_answer_multiset(snap):
    task = cloze_create(snap, genre="book", gap_frequency=3,
                        text_length=100, seed=2)
    assert Counter(task.bank) == Counter(task.answers)
    assert len(task.answers) >= 1


def test_cloze_varies_documents(snap):
    seen = {cloze_create(snap, None, 5, 100, seed=s).doc_id
            for s in range(30)}
    assert len(seen) >= 2
    assert "sgwrs-gegin" not in seen  # the sensitive conversation


@pytest.mark.parametrize("n,length", [(1, 100), (0, 100), (5, 150),
                                      (5, 99), (5, 501)])
def test_cloze_rejects_bad_params(snap, n, length):
    with pytest.raises(ValueError):
        cloze_create(snap, None, n, length, seed=0)


def test_cloze_accepts_every_allowed_length(snap):
    for length in (100, 200, 300, 400, 500):
        task = cloze_create(snap, None, 6, length, seed=1)
        assert isinstance(task, ClozeTask)


def test_cloze_sensitive_only_genre_is_no_material(snap):
    # the only private-genre document is sensitive
    with pytest.raises(NoMaterial):
        cloze_create(snap, genre="private", gap_frequency=4,
                     text_length=100, seed=0)


def test_cloze_unknown_genre_is_no_material(snap):
    with pytest.raises(NoMaterial):
        cloze_create(snap, genre="thesis", gap_frequency=4,
                     text_length=100, seed=0)


def test_cloze_check_casefold_and_nfc():
    assert check_answers(("gath",), ("Gath",)) == [True]
    # decomposed y + combining circumflex matches the composed form
    assert check_answers(("tŷ",), ("tŷ",)) == [True]
    assert check_answers(("gath", "ci"), ("gath", "cath")) == [True, False]


def test_cloze_check_length_mismatch():
    with pytest.raises(ValueError):
        check_answers(("a", "b"), ("a",))


def test_cloze_check_on_task(snap):
    task = cloze_create(snap, genre="book", gap_frequency=6,
                        text_length=100, seed=9)
    marks = cloze_check(task, [a.upper() for a in task.answers])
    assert marks == [True] * len(task.answers)


# -------------------------------------------------------------- identify


def test_identify_picks_banded_word():
    text = "Mae y gath yn y tŷ. Mae y gath yn y parc."
    corpus = Corpus([make_doc(text)])
    table = BandTable({"mae": 1, "y": 1, "yn": 1, "tŷ": 1, "parc": 1,
                       "gath": 1500})
    task = identify_task(CorpusSnapshot(corpus), table, band="K2",
                         word_type=BasicCat.E, max_sentences=5, seed=0)
    assert task.answer == "gath"
    assert task.band == "K2"
    assert task.word_type == "E"
    assert len(task.lines) == 2
    for line in task.lines:
        assert "___" in line.tokens
        assert all(t.casefold() != "gath" for t in line.tokens)


def test_identify_respects_max_sentences():
    text = "Mae y gath yn y tŷ. Mae y gath yn y parc."
    corpus = Corpus([make_doc(text)])
    table = BandTable({"mae": 1, "y": 1, "yn": 1, "tŷ": 1, "parc": 1,
                       "gath": 1500})
    task = identify_task(CorpusSnapshot(corpus), table, band="K2",
                         word_type=BasicCat.E, max_sentences=1, seed=4)
    assert len(task.lines) == 1


def test_identify_no_material_for_unpopulated_band():
    text = "Mae y gath yn y tŷ."
    corpus = Corpus([make_doc(text)])
    table = BandTable({"mae": 1, "y": 1, "yn": 1, "tŷ": 1, "gath": 1500})
    with pytest.raises(NoMaterial):
        identify_task(CorpusSnapshot(corpus), table, band="K3",
                      word_type=BasicCat.E, max_sentences=3, seed=0)
    with pytest.raises(NoMaterial):
        # K2 holds a noun but no verb
        identify_task(CorpusSnapshot(corpus), table, band="K2",
                      word_type=BasicCat.B, max_sentences=3, seed=0)


def test_identify_param_validation(snap, bands):
    with pytest.raises(ValueError):
        identify_task(snap, bands, band="K4", word_type=BasicCat.E,
                      max_sentences=3, seed=0)
    with pytest.raises(ValueError):
        identify_task(snap, bands, band="K1", word_type=BasicCat.E,
                      max_sentences=0, seed=0)


def test_identify_on_bundled_corpus(snap, bands):
    task = identify_task(snap, bands, band="K1", word_type=BasicCat.E,
                         max_sentences=3, seed=1)
    assert 1 <= len(task.lines) <= 3
    assert bands.band_of(task.answer) == "K1"
    for line in task.lines:
        assert "___" in line.tokens
        assert line.doc_id != "sgwrs-gegin"
        assert all(t.casefold() != task.answer for t in line.tokens)
    again = identify_task(snap, bands, band="K1", word_type=BasicCat.E,
                          max_sentences=3, seed=1)
    assert again == task


def test_identify_never_uses_sensitive_material(snap, bands):
    # the marker noun occurs only inside the sensitive document, so no
    # seed may surface it or quote that document
    for seed in range(60):
        task = identify_task(snap, bands, band="K1",
                             word_type=BasicCat.E, max_sentences=4,
                             seed=seed)
        assert task.answer != "cythraul"
        assert all(line.doc_id != "sgwrs-gegin" for line in task.lines)


# -------------------------------------------------------------- wordtask


def test_word_task_blanks_target(snap):
    task = word_task(snap, "y", max_lines=20, seed=0)
    assert task.reveal == "y"
    assert task.word == "y"
    assert len(task.lines) == 20  # far more occurrences than lines
    for line in task.lines:
        assert "___" in line.tokens
        assert all(t.casefold() != "y" for t in line.tokens)
        assert line.doc_id != "sgwrs-gegin"


def test_word_task_fewer_occurrences_than_limit(snap):
    task = word_task(snap, "Cymru", max_lines=20, seed=0)
    count = snap.word_freq["token_lower"]["cymru"]
    assert 1 <= len(task.lines) <= min(20, count)


def test_word_task_pos_filter(snap):
    task = word_task(snap, "yn", pos=BasicCat.Ar, max_lines=5, seed=2)
    assert task.pos == "Ar"
    assert len(task.lines) <= 5
    with pytest.raises(NoMaterial):
        word_task(snap, "gath", pos=BasicCat.B, max_lines=5, seed=0)


def test_word_task_absent_word(snap):
    with pytest.raises(NoMaterial):
        word_task(snap, "zzyzx", max_lines=5, seed=0)


def test_word_task_sensitive_word_is_no_material(snap):
    with pytest.raises(NoMaterial):
        word_task(snap, "cythraul", max_lines=5, seed=0)


def test_word_task_line_bounds(snap):
    with pytest.raises(ValueError):
        word_task(snap, "y", max_lines=21, seed=0)
    with pytest.raises(ValueError):
        word_task(snap, "y", max_lines=0, seed=0)
    task = word_task(snap, "y", max_lines=1, seed=0)
    assert len(task.lines) == 1


def test_word_task_deterministic(snap):
    a = word_task(snap, "gath", max_lines=10, seed=5)
    b = word_task(snap, "gath", max_lines=10, seed=5)
    assert a == b


# ------------------------------------------------------------- task ids


def test_task_ids_stable_and_distinct():
    p = {"genre": None, "gap_frequency": 5, "text_length": 100, "seed": 1}
    assert make_task_id("cloze", p) == make_task_id("cloze", dict(p))
    q = dict(p, seed=2)
    assert make_task_id("cloze", p) != make_task_id("cloze", q)
    assert make_task_id("cloze", p) != make_task_id("identify", p)
