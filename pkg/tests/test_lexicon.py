import io

import pytest
from hypothesis import given, strategies as st

from bisynset.errors import DuplicateSynsetId, EmptySide, EmptyWord, InvalidUtf8, MalformedLine
from bisynset.lexicon import (
    GoldSynset,
    Languages,
    TranslationPair,
    flatten_synsets,
    load_gold_synsets,
    load_pairs,
    serialize_gold_synsets,
    serialize_pairs,
)

from helpers import DATA, gold


def test_single_pair():
    pairs, report = load_pairs("غابة\tforest\n".encode())
    assert pairs == {TranslationPair("غابة", "forest")}
    assert report.duplicates == 0


def test_empty_stream():
    pairs, report = load_pairs(b"")
    assert pairs == frozenset()
    assert report.lines == 0


def test_duplicates_counted():
    pairs, report = load_pairs(b"a\tx\na\tx\n")
    assert pairs == {TranslationPair("a", "x")}
    assert report.duplicates == 1


def test_comments_blank_lines_and_crlf():
    pairs, report = load_pairs(b"# header\r\n\r\na\tx\r\nb\ty\n\n")
    assert pairs == {TranslationPair("a", "x"), TranslationPair("b", "y")}
    assert report.skipped == 3


def test_reads_path_and_file_object():
    from_path, _ = load_pairs(DATA / "forest.tsv")
    from_file, _ = load_pairs(io.BytesIO((DATA / "forest.tsv").read_bytes()))
    assert from_path == from_file
    assert len(from_path) == 10


@pytest.mark.parametrize("line", [b"a\n", b"a\tx\ty\n", b"a x\n"])
def test_malformed_line(line):
    with pytest.raises(MalformedLine) as exc:
        load_pairs(b"ok\tfine\n" + line)
    assert exc.value.line_no == 2


@pytest.mark.parametrize("line", [b"\tx\n", b"a\t\n", b"  \tx\n"])
def test_empty_word(line):
    with pytest.raises(EmptyWord) as exc:
        load_pairs(line)
    assert exc.value.line_no == 1


def test_invalid_utf8_offset():
    with pytest.raises(InvalidUtf8) as exc:
        load_pairs(b"a\tx\nb\t\xff\n")
    assert exc.value.offset == 6


def test_surfaces_are_not_normalized():
    # same letters, different diacritics -> different words
    data = "غَابَة\tforest\nغابة\tforest\nForest\tx\nforest\tx\n".encode()
    pairs, _ = load_pairs(data)
    assert len(pairs) == 4


def test_gold_synset_line():
    (g,) = load_gold_synsets("s1\tغابة|غاب\tforest|woods\n".encode())
    assert g == gold("s1", {"غابة", "غاب"}, {"forest", "woods"})


def test_gold_monolingual_side():
    (g,) = load_gold_synsets(b"s1\t\tforest\n")
    assert g.l1_words == frozenset() and g.l2_words == {"forest"}


def test_gold_duplicate_words_collapse_with_warning(caplog):
    (g,) = load_gold_synsets(b"s1\ta|a\tx\n")
    assert g.l1_words == {"a"}
    assert "duplicate" in caplog.text


def test_gold_errors():
    with pytest.raises(DuplicateSynsetId):
        load_gold_synsets(b"s1\ta\tx\ns1\tb\ty\n")
    with pytest.raises(MalformedLine):
        load_gold_synsets(b"s1\ta\n")
    with pytest.raises(MalformedLine):
        load_gold_synsets(b"s1\t\t\n")
    with pytest.raises(EmptyWord):
        load_gold_synsets(b"s1\ta||b\tx\n")


def test_flatten_cross_product():
    assert flatten_synsets([gold("s", {"a1", "a2"}, {"e1"})]) == {
        TranslationPair("a1", "e1"),
        TranslationPair("a2", "e1"),
    }


def test_flatten_union_dedups():
    out = flatten_synsets([gold("s1", {"a1"}, {"e1", "e2"}), gold("s2", {"a1"}, {"e2", "e3"})])
    assert out == {TranslationPair("a1", e) for e in ("e1", "e2", "e3")}


def test_flatten_forest_synset():
    # 2 x 2 cross product, enumerated by hand
    out = flatten_synsets([gold("s1", {"غابة", "غاب"}, {"forest", "woods"})])
    assert out == {
        TranslationPair("غابة", "forest"),
        TranslationPair("غابة", "woods"),
        TranslationPair("غاب", "forest"),
        TranslationPair("غاب", "woods"),
    }


def test_flatten_rejects_empty_side():
    with pytest.raises(EmptySide) as exc:
        flatten_synsets([gold("s9", set(), {"x"})])
    assert exc.value.synset_id == "s9"


def test_languages_must_differ():
    with pytest.raises(ValueError):
        Languages("en", "en")


# words: any text without TAB/newline/CR/| that is not blank and not a comment
words = st.text(
    alphabet=st.characters(blacklist_characters="\t\n\r|", blacklist_categories=("Cs",)),
    min_size=1,
    max_size=6,
).filter(lambda w: w.strip() and not w.startswith("#") and not w.startswith("\ufeff"))


@given(st.sets(st.tuples(words, words), max_size=20))
def test_pairs_round_trip(raw):
    pairs = frozenset(TranslationPair(a, e) for a, e in raw)
    loaded, report = load_pairs(serialize_pairs(pairs).encode("utf-8"))
    assert loaded == pairs
    assert report.duplicates == 0
    # byte-identical surfaces
    assert {p.source.encode() for p in loaded} == {p.source.encode() for p in pairs}


@given(st.lists(st.tuples(st.sets(words, min_size=1, max_size=3), st.sets(words, min_size=1, max_size=3)), max_size=8))
def test_flatten_size_bound(sides):
    synsets = [GoldSynset(f"s{i}", frozenset(a), frozenset(e)) for i, (a, e) in enumerate(sides)]
    out = flatten_synsets(synsets)
    bound = sum(len(g.l1_words) * len(g.l2_words) for g in synsets)
    assert len(out) <= bound
    cross = [{(a, e) for a in g.l1_words for e in g.l2_words} for g in synsets]
    shared = any(cross[i] & cross[j] for i in range(len(cross)) for j in range(i + 1, len(cross)))
    assert (len(out) == bound) == (not shared)


@given(st.lists(st.tuples(st.sets(words, min_size=1, max_size=3), st.sets(words, max_size=3)), max_size=6))
def test_gold_round_trip(sides):
    synsets = tuple(GoldSynset(f"s{i}", frozenset(a), frozenset(e)) for i, (a, e) in enumerate(sides))
    assert load_gold_synsets(serialize_gold_synsets(synsets).encode("utf-8")) == synsets
