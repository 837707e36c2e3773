"""Mutation engine and lexicon lookup.

The mutation table is small enough to check exhaustively; the demutation
inverse is covered by a round-trip property over every lexicon base plus
randomly built word shapes.
"""

import pytest
from hypothesis import given, strategies as st

from corpws.errors import LexiconError
from corpws.lexicon import (
    Analysis,
    LexEntry,
    Lexicon,
    MutationKind,
    apply_mutation,
    demutate,
    load_lexicon,
)
from corpws.resources import data_path, default_lexicon, default_tagset

SOFT = MutationKind.SOFT
NASAL = MutationKind.NASAL
ASP = MutationKind.ASPIRATE
NONE = MutationKind.NONE


@pytest.fixture(scope="module")
def lexicon():
    return default_lexicon()


# -- apply_mutation -------------------------------------------------------

def test_cath_in_all_three_series():
    assert apply_mutation("cath", SOFT) == "gath"
    assert apply_mutation("cath", NASAL) == "nghath"
    assert apply_mutation("cath", ASP) == "chath"


def test_full_soft_series():
    pairs = [("pen", "ben"), ("tad", "dad"), ("cath", "gath"),
             ("bara", "fara"), ("dyn", "ddyn"), ("gwlad", "wlad"),
             ("mam", "fam"), ("llyfr", "lyfr"), ("rhaglen", "raglen")]
    for base, mutated in pairs:
        assert apply_mutation(base, SOFT) == mutated


def test_full_nasal_series():
    pairs = [("pen", "mhen"), ("tad", "nhad"), ("cath", "nghath"),
             ("bara", "mara"), ("dyn", "nyn"), ("gwlad", "ngwlad")]
    for base, mutated in pairs:
        assert apply_mutation(base, NASAL) == mutated


def test_full_aspirate_series():
    assert apply_mutation("pen", ASP) == "phen"
    assert apply_mutation("tad", ASP) == "thad"
    assert apply_mutation("cath", ASP) == "chath"


def test_case_carries_to_replacement():
    assert apply_mutation("Cymru", SOFT) == "Gymru"
    assert apply_mutation("Cymru", NASAL) == "Nghymru"
    assert apply_mutation("Celtaidd", SOFT) == "Geltaidd"
    assert apply_mutation("Llanelli", SOFT) == "Lanelli"
    assert apply_mutation("Gwlad", SOFT) == "Wlad"


def test_unmutable_initials_unchanged():
    assert apply_mutation("afal", SOFT) == "afal"
    assert apply_mutation("llong", NASAL) == "llong"
    assert apply_mutation("mam", NASAL) == "mam"
    assert apply_mutation("chwarae", SOFT) == "chwarae"  # ch is not c
    assert apply_mutation("enw", ASP) == "enw"
    assert apply_mutation("tad", NONE) == "tad"


# -- demutate -------------------------------------------------------------

def test_demutate_wlad_recovers_gwlad():
    hits = demutate("wlad")
    assert hits[0] == ("wlad", NONE)
    assert ("gwlad", SOFT) in hits


def test_demutate_nghath_recovers_cath():
    assert ("cath", NASAL) in demutate("nghath")


def test_demutate_parses_longest_cluster_first():
    # nghath must never be read as n+ghath or ng+hath
    bases = [b for b, k in demutate("nghath") if k is NASAL and b != "nghath"]
    assert bases == ["cath"]


def test_demutate_case_transfer():
    assert ("Cymru", SOFT) in demutate("Gymru")
    assert ("Cymru", NASAL) in demutate("Nghymru")
    assert ("Gwlad", SOFT) in demutate("Wlad")
    assert ("Llanelli", SOFT) in demutate("Lanelli")


def test_demutate_no_duplicates():
    for surface in ("wlad", "gath", "mae", "fam", "Nghymru", "a"):
        hits = demutate(surface)
        assert len(hits) == len(set(hits))


def test_round_trip_over_every_lexicon_base(lexicon):
    kinds = (SOFT, NASAL, ASP)
    for base in lexicon.bases:
        for kind in kinds:
            assert (base, kind) in demutate(apply_mutation(base, kind)), (
                base, kind)


_INITIALS = list("ptcbdgm") + ["ll", "rh"] + list("aeiouwy")
_VOWELS = "aeiouwy"


@given(
    initial=st.sampled_from(_INITIALS),
    rest=st.text(alphabet=_VOWELS, min_size=1, max_size=6),
    kind=st.sampled_from([SOFT, NASAL, ASP]),
    capital=st.booleans(),
)
def test_round_trip_property(initial, rest, kind, capital):
    base = initial + rest
    if capital:
        base = base[0].upper() + base[1:]
    assert (base, kind) in demutate(apply_mutation(base, kind))


@given(st.text(min_size=1, max_size=10))
def test_demutate_always_offers_unmutated_reading(surface):
    hits = demutate(surface)
    assert hits[0] == (surface, NONE)
    assert len(hits) == len(set(hits))


# -- lookup ---------------------------------------------------------------

def test_lookup_mutated_surface(lexicon):
    hits = lexicon.lookup("wlad")
    assert len(hits) == 1
    analysis = hits[0]
    assert analysis.lemma == "gwlad"
    assert analysis.basic.value == "E"
    assert analysis.rich == "Ebu"
    assert analysis.mutation is SOFT


def test_lookup_prefers_unmutated_reading_of_same_entry(lexicon):
    # mae trivially matches its own entry; the vacuous nasal/aspirate
    # candidates must not produce extra analyses
    hits = lexicon.lookup("mae")
    assert len(hits) == 1
    assert hits[0] == Analysis("bod", hits[0].basic, "Bpres3u", NONE)


def test_lookup_yn_has_three_readings_by_frequency(lexicon):
    hits = lexicon.lookup("yn")
    assert [h.rich for h in hits] == ["Utra", "Arsym", "Uadf"]
    assert all(h.lemma == "yn" for h in hits)


def test_lookup_english_word(lexicon):
    hits = lexicon.lookup("and")
    assert len(hits) == 1
    assert hits[0].rich == "Gwest"
    assert hits[0].basic.value == "Gw"
    assert hits[0].mutation is NONE
    assert lexicon.lookup("The")[0].rich == "Gwest"


def test_lookup_unknown_is_empty(lexicon):
    assert lexicon.lookup("zzzz") == []


def test_lookup_case_folds_on_miss(lexicon):
    hits = lexicon.lookup("Mae")
    assert len(hits) == 1 and hits[0].lemma == "bod"
    # capitalized lexicon entries match at original casing
    hits = lexicon.lookup("Cymru")
    assert len(hits) == 1 and hits[0].rich == "Epb"
    # and their soft-mutated surfaces resolve with case transfer
    hits = lexicon.lookup("Gymru")
    assert len(hits) == 1 and hits[0].mutation is SOFT


def test_lowercase_entry_distinct_from_capitalized(lexicon):
    hits = lexicon.lookup("cymraeg")
    assert len(hits) == 1
    assert hits[0].lemma == "Cymraeg"


def test_equal_frequency_breaks_on_file_order(default=None):
    tagset = default_tagset()
    entries = [
        LexEntry("tes", "tes1", "Egu", 50, 0),
        LexEntry("tes", "tes2", "Ebu", 50, 1),
    ]
    lex = Lexicon(entries, tagset)
    assert [h.lemma for h in lex.lookup("tes")] == ["tes1", "tes2"]


def test_load_rejects_bad_rows(tmp_path):
    tagset = default_tagset()
    bad = tmp_path / "lex.tsv"
    bad.write_text("gair\tgair\tEgu\n", encoding="utf-8")
    with pytest.raises(LexiconError):
        load_lexicon(bad, tagset)
    bad.write_text("gair\tgair\tEgu\tx\n", encoding="utf-8")
    with pytest.raises(LexiconError):
        load_lexicon(bad, tagset)
    bad.write_text("gair\tgair\tNope\t5\n", encoding="utf-8")
    with pytest.raises(LexiconError):
        load_lexicon(bad, tagset)


def test_bundled_lexicon_loads(lexicon):
    assert len(lexicon) > 200
    assert "the" in lexicon.english
    assert data_path("lexicon.tsv").exists()
