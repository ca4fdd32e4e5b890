import pytest
from hypothesis import given, settings, strategies as st

from docsent.corpus import tokenize
from docsent.pipeline import analyze_text
from docsent.tagger import (PENN_TAGS, TaggingError, load_tag_dictionary, parse_pretagged,
                            render_pretagged, tag)


def tags_of(text, lex=None):
    return [t.tag for t in tag(tokenize(text), lex)]


# reviewed by hand against Penn Treebank guidelines; the first also agrees
# with spaCy's en_core_web_sm tagger
GOLDEN = [
    ("This movie is not good.", "DT NN VBZ RB JJ ."),
    ("I like commercial movies but I get bored easily.", "PRP VBP JJ NNS CC PRP VBP VBN RB ."),
    ("The acting is excellent!", "DT NN VBZ JJ ."),
    ("I didn't like the film.", "PRP VBD RB VB DT NN ."),
    ("They want to watch it again.", "PRP VBP TO VB PRP RB ."),
    ("The songs were very good (mostly).", "DT NNS VBD RB JJ -LRB- RB -RRB- ."),
]


@pytest.mark.parametrize("text, expected", GOLDEN)
def test_golden_sentences(text, expected):
    assert tags_of(text) == expected.split()


def test_standalone_good_is_adjective():
    assert tags_of("good") == ["JJ"]


@pytest.mark.parametrize("word, expected", [
    ("chartbusters", "NNS"), ("blorkly", "RB"), ("glorped", "VBN"), ("zizzing", "VBG"),
    ("zxqv", "NN"), ("1,250", "CD"),
])
def test_unknown_word_heuristics(word, expected):
    assert tags_of(f"it {word}")[-1] == expected


def test_capitalized_unknown_mid_sentence_is_proper_noun():
    assert tags_of("We saw Zorblax today.")[2] == "NNP"
    assert tags_of("Zorblax rules.")[0] != "NNP"


def test_determiner_patch_turns_verb_into_noun():
    # "hit" is a verb first in the dictionary; after "a" it is a noun
    assert tags_of("hit")[0].startswith("VB")
    assert tags_of("It was a hit.")[3] == "NN"


def test_copula_patch_prefers_adjective():
    assert tags_of("The film is boring and slow.")[3] == "JJ"


def test_load_tag_dictionary_normalizes(tmp_path):
    p = tmp_path / "t.tsv"
    p.write_text("# comment\ngood\tJJ\t100\ngood\tNN\t5\nfilm\tNN\t1\nhit\tVB\t3\nhit\tNN\t3\n")
    lex = load_tag_dictionary(p)
    (t1, f1), (t2, f2) = lex.words["good"]
    assert (t1, t2) == ("JJ", "NN")
    assert f1 == pytest.approx(100 / 105) and round(f1, 3) == 0.952
    assert f2 == pytest.approx(5 / 105) and round(f2, 3) == 0.048
    assert lex.words["film"] == (("NN", 1.0),)
    assert lex.tags_for("hit") == ("NN", "VB")


@pytest.mark.parametrize("line", ["good\tJJX\t1", "good\tJJ\tmany", "good\tJJ\t0", "good JJ 1"])
def test_load_tag_dictionary_rejects(tmp_path, line):
    p = tmp_path / "t.tsv"
    p.write_text(line + "\n")
    with pytest.raises(TaggingError, match="t.tsv:1"):
        load_tag_dictionary(p)


def test_bundled_dictionary_is_well_formed(tag_lexicon):
    assert len(tag_lexicon.words) > 50_000
    for word, tags in tag_lexicon.words.items():
        assert word == word.lower()
        assert abs(sum(f for _, f in tags) - 1.0) < 1e-9
        assert all(t in PENN_TAGS for t, _ in tags)


def test_parse_pretagged():
    toks = parse_pretagged("This/DT movie/NN")
    assert [(t.surface, t.tag) for t in toks] == [("This", "DT"), ("movie", "NN")]
    (t,) = parse_pretagged("1/2/CD")
    assert (t.surface, t.tag) == ("1/2", "CD")
    with pytest.raises(TaggingError, match="item 1"):
        parse_pretagged("ok/UH word")


def test_pretagged_sentences():
    toks = parse_pretagged("Bad/JJ ./. Good/JJ !/.")
    assert [t.sentence_index for t in toks] == [0, 0, 1, 1]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from("The movie is n't good but songs hit , very . ! I like it".split()),
                max_size=30).map(" ".join))
def test_tagging_total_deterministic_and_round_trips(text):
    a = analyze_text(text).tokens
    b = analyze_text(text).tokens
    assert a == b
    assert all(t.tag for t in a)
    assert [t.token_index for t in a] == list(range(len(a)))
    back = parse_pretagged(render_pretagged(a))
    assert [(t.surface, t.tag, t.token_index) for t in back] == \
        [(t.surface, t.tag, t.token_index) for t in a]
