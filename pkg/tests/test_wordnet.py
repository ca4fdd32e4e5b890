import random

import pytest

from docsent.wordnet import (POS_NAMES, Relation, WordNetError, _parse_data_line, load_wordnet,
                             normalize_pos)

ABLE = ("00001740 00 a 01 able 0 005 = 05200169 n 0000 = 05616246 n 0000 + 05616246 n 0101 "
        "+ 05200169 n 0101 ! 00002098 a 0101 | (usually followed by `to') having the necessary "
        "means or skill or know-how or authority to do something")

# the pairs WordNet 3.0 itself leaves unreciprocated (all verbs)
KNOWN_WARNINGS = 5


def test_parse_first_adjective_synset():
    ss = _parse_data_line(ABLE, "a")
    assert ss.offset == 1740 and ss.ss_type == "a" and ss.lemmas == ("able",)
    ants = [p for p in ss.pointers if p.symbol == "!"]
    assert [(p.offset, p.pos, p.source, p.target) for p in ants] == [(2098, "a", 1, 1)]
    assert len(ss.pointers) == 5


def test_first_data_line_is_able(db):
    ss = db.synsets["a"][1740]
    assert ss.lemmas == ("able",)
    assert db.related_lemmas("able", "a", Relation.ANTONYM) == {"unable"}


def test_hex_word_count_and_markers():
    line = ("00000001 00 s 0a a 0 b 0 c 0 d 0 e 0 f 0 g 0 h 0 i 0 galore(ip) 0 000 | gloss")
    ss = _parse_data_line(line, "a")
    assert len(ss.lemmas) == 10 and ss.lemmas[-1] == "galore"


def test_index_lookup(db):
    assert len(db.lookup("good", "adj")) == 21
    assert db.lookup("Good", "a") == db.lookup("good", "s")
    assert db.lookup("zxqv", "a") == ()


def test_index_offsets_resolve(db):
    for pos in POS_NAMES:
        table = db.synsets[pos]
        for offsets in db.index[pos].values():
            assert all(o in table for o in offsets)
    assert {ss.ss_type for ss in db.synsets["a"].values()} == {"a", "s"}


@pytest.mark.parametrize("surface, pos, expected", [
    ("movies", "n", ["movie"]),
    ("good", "a", ["good"]),
    ("worst", "a", ["bad", "worst"]),
    ("bored", "v", ["bore"]),
    ("likes", "v", ["like"]),
    ("zxqv", "a", []),
])
def test_lemmatize(db, surface, pos, expected):
    assert db.lemmatize(surface, pos) == expected


def test_lemmatize_exception_first(db):
    out = db.lemmatize("better", "a")
    assert out[0] == "good" and "well" in out


def test_related(db):
    assert "bad" in db.related_lemmas("good", "a", Relation.ANTONYM)
    assert "good" in db.related_lemmas("bad", "a", Relation.ANTONYM)
    syn = db.related_lemmas("bad", "a", Relation.SYNONYM, similar=False)
    assert {"spoiled", "spoilt"} <= syn
    assert "beneficial" in db.related_lemmas("good", "a", Relation.SYNONYM, similar=False)
    assert db.related_lemmas("zxqv", "a", Relation.SYNONYM) == set()
    assert "bad" not in db.related_lemmas("bad", "a", Relation.SYNONYM)


def test_similar_to_widens_adjectives(db):
    strict = db.related_lemmas("good", "a", Relation.SYNONYM, similar=False)
    wide = db.related_lemmas("good", "a", Relation.SYNONYM)
    assert strict < wide and "superb" in wide - strict


def test_adjective_antonyms_symmetric(db):
    words = random.Random(11).sample(db.vocabulary("a"), 3000)
    for w in words:
        for a in db.related_lemmas(w, "a", Relation.ANTONYM):
            assert w in db.related_lemmas(a, "a", Relation.ANTONYM), (w, a)


def test_validation_warnings_are_the_known_ones(db):
    assert len(db.warnings) == KNOWN_WARNINGS
    assert all(w.startswith("data.verb: antonym") for w in db.warnings)


def test_normalize_pos():
    assert [normalize_pos(p) for p in ("adj", "s", "NOUN", "r", "verb")] == ["a", "a", "n", "r", "v"]
    with pytest.raises(ValueError):
        normalize_pos("xyz")


def test_empty_directory(tmp_path):
    with pytest.raises(WordNetError, match="index.noun"):
        load_wordnet(tmp_path)


def test_missing_directory(tmp_path):
    with pytest.raises(WordNetError, match="not found"):
        load_wordnet(tmp_path / "nope")


def mini_wordnet(path, adj_data):
    for name in POS_NAMES.values():
        (path / f"index.{name}").write_text("  license header line\n")
        (path / f"data.{name}").write_text("  license header line\n")
        (path / f"{name}.exc").write_text("")
    (path / "data.adj").write_text("  header\n" + adj_data)
    return path


def test_malformed_data_line_reports_file_and_line(tmp_path):
    mini_wordnet(tmp_path, "00000010 00 a 01 fine 0 zz | broken\n")
    with pytest.raises(WordNetError, match=r"data\.adj:2"):
        load_wordnet(tmp_path)


def test_dangling_offset_is_a_warning(tmp_path):
    mini_wordnet(tmp_path, "00000010 00 a 01 fine 0 001 ! 00000099 a 0101 | ok\n")
    (tmp_path / "index.adj").write_text("fine a 1 1 ! 1 0 00000010\n")
    db = load_wordnet(tmp_path)
    assert db.lookup("fine", "a") == (10,)
    assert len(db.warnings) == 1 and "00000099" in db.warnings[0]


def test_strict_synonymy_symmetric(db):
    for pos in ("a", "v", "r"):
        words = random.Random(pos).sample(db.vocabulary(pos), 800)
        for w in words:
            for s in db.related_lemmas(w, pos, Relation.SYNONYM, similar=False):
                assert w in db.related_lemmas(s, pos, Relation.SYNONYM, similar=False), (pos, w, s)


def test_load_is_deterministic(wn_dir, db):
    again = load_wordnet(wn_dir)
    assert again.index == db.index and again.synsets == db.synsets
