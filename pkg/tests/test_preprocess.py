import pytest

from stylograph.preprocess import (
    DEFAULT_STOPWORDS,
    SCENARIOS,
    STOPWORDS,
    Lemmatizer,
    apply_scenario,
    lemmatize,
    load_stopwords,
    remove_stopwords,
    tokenize,
)

EXTRACT = (
    '"There are three men waiting for him at the door", said Holmes. '
    '"Oh, indeed! You seem to have done the thing very completely. '
    'I must compliment you." "And I you", Holmes answered.'
)


def test_tokenize_basic_punctuation():
    assert tokenize('"Oh, indeed! You seem') == ["oh", "indeed", "you", "seem"]


def test_tokenize_keeps_contractions():
    assert tokenize("He's here.") == ["he's", "here"]
    assert tokenize("isn't") == ["isn't"]


def test_tokenize_quoted_clause():
    assert tokenize('"door", said Holmes.') == ["door", "said", "holmes"]


def test_tokenize_apostrophe_needs_letters_both_sides():
    assert tokenize("'tis the dogs' day") == ["tis", "the", "dogs", "day"]
    assert tokenize("' ' ''") == []


def test_tokenize_curly_apostrophe():
    assert tokenize("he’s") == ["he's"]


def test_tokenize_digits_dropped():
    assert tokenize("chapter 42 begins") == ["chapter", "begins"]
    assert tokenize("10,000 leagues") == ["leagues"]


def test_tokenize_empty():
    assert tokenize("") == []


def test_stopword_list_shape():
    assert len(STOPWORDS) == 127
    assert STOPWORDS[0] == "i"
    assert STOPWORDS[-1] == "now"
    assert len(DEFAULT_STOPWORDS) == 127


def test_remove_stopwords_extract_row():
    tokens = ["there", "are", "three", "men", "waiting", "for", "him", "at", "the", "door"]
    assert remove_stopwords(tokens) == ["three", "men", "waiting", "door"]


def test_remove_stopwords_empty_and_identity():
    assert remove_stopwords([]) == []
    assert remove_stopwords(["door", "holmes"]) == ["door", "holmes"]


def test_remove_stopwords_idempotent():
    tokens = tokenize(EXTRACT)
    once = remove_stopwords(tokens)
    assert remove_stopwords(once) == once


def test_remove_stopwords_whole_token_only():
    # "s", "t", "don" are stopwords only as bare tokens
    assert remove_stopwords(["don't", "don", "say", "s"]) == ["don't", "say"]


def test_lemmatize_examples():
    assert lemmatize(["waiting"]) == ["wait"]
    assert lemmatize(["said"]) == ["say"]
    assert lemmatize(["zxqv"]) == ["zxqv"]


def test_lemmatize_keeps_men_and_names():
    assert lemmatize(["men", "holmes", "indeed", "thing"]) == ["men", "holmes", "indeed", "thing"]


def test_lemmatize_rules():
    lem = Lemmatizer()
    assert lem.lemma("doors") == "door"
    assert lem.lemma("carried") == "carry"
    assert lem.lemma("ladies") == "lady"
    assert lem.lemma("stopped") == "stop"
    assert lem.lemma("running") == "run"
    assert lem.lemma("watches") == "watch"
    assert lem.lemma("falling") == "fall"
    assert lem.lemma("this") == "this"
    assert lem.lemma("yes") == "yes"
    assert lem.lemma("done") == "do"


def test_lemmatize_preserves_length_and_order():
    tokens = tokenize(EXTRACT)
    lemmas = lemmatize(tokens)
    assert len(lemmas) == len(tokens)


def test_lemmatizer_from_file(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("# comment\nwaiting\tpause\n", encoding="utf-8")
    lem = Lemmatizer.from_file(path)
    assert lem.lemma("waiting") == "pause"
    assert lem.lemma("said") == "say"  # built-ins still apply


def test_lemmatizer_bad_file(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("no tab here\n", encoding="utf-8")
    with pytest.raises(ValueError, match="line 1"):
        Lemmatizer.from_file(path)


def test_load_stopwords_file(tmp_path):
    path = tmp_path / "stops.txt"
    path.write_text("# a comment\nfoo\nBAR  \n\nbaz # trailing\n", encoding="utf-8")
    assert load_stopwords(path) == frozenset({"foo", "bar", "baz"})


def test_apply_scenario_original_is_tokenize():
    stream = apply_scenario(EXTRACT, "original")
    assert list(stream.tokens) == tokenize(EXTRACT)


def test_apply_scenario_extract_nostop_lemma():
    stream = apply_scenario(EXTRACT, "nostop-lemma")
    assert list(stream.tokens[:8]) == ["three", "men", "wait", "door", "say", "holmes", "oh", "indeed"]


def test_apply_scenario_lemma_then_filter_order():
    # lemmas that land in the stopword set are filtered out
    stream = apply_scenario("the waiting", "nostop-lemma")
    assert list(stream.tokens) == ["wait"]


def test_apply_scenario_unknown_tag():
    with pytest.raises(ValueError, match="unknown scenario"):
        apply_scenario("text", "reverse")


def test_scenario_token_count_relations():
    original = apply_scenario(EXTRACT, "original")
    nostop = apply_scenario(EXTRACT, "nostop")
    lemma = apply_scenario(EXTRACT, "lemma")
    assert len(nostop) <= len(original)
    assert len(lemma) == len(original)


def test_nostop_lemma_subsequence_of_lemma():
    lemma = list(apply_scenario(EXTRACT, "lemma").tokens)
    sub = list(apply_scenario(EXTRACT, "nostop-lemma").tokens)
    it = iter(lemma)
    assert all(tok in it for tok in sub)


def test_scenario_set():
    assert SCENARIOS == ("original", "nostop", "lemma", "nostop-lemma")
