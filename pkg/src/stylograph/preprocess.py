"""Tokenization and the four preprocessing scenarios.

Scenarios:
  original     -- tokenize only
  nostop       -- tokenize, then drop stopwords
  lemma        -- tokenize, then lemmatize
  nostop-lemma -- tokenize, lemmatize, then drop stopwords

Tokens are lowercase words; punctuation and digits act as separators, except
that an apostrophe flanked by letters on both sides is kept, so contractions
(he's, isn't) survive as single tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

SCENARIOS = ("original", "nostop", "lemma", "nostop-lemma")

# Default stopword list: 127 function words, matched as whole tokens.
STOPWORDS = (
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
    "your", "yours", "yourself", "yourselves", "he", "him", "his",
    "himself", "she", "her", "hers", "herself", "it", "its", "itself",
    "they", "them", "their", "theirs", "themselves", "what", "which",
    "who", "whom", "this", "that", "these", "those", "am", "is", "are",
    "was", "were", "be", "been", "being", "have", "has", "had", "having",
    "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if",
    "or", "because", "as", "until", "while", "of", "at", "by", "for",
    "with", "about", "against", "between", "into", "through", "during",
    "before", "after", "above", "below", "to", "from", "up", "down", "in",
    "out", "on", "off", "over", "under", "again", "further", "then",
    "once", "here", "there", "when", "where", "why", "how", "all", "any",
    "both", "each", "few", "more", "most", "other", "some", "such", "no",
    "nor", "not", "only", "own", "same", "so", "than", "too", "very", "s",
    "t", "can", "will", "just", "don", "should", "now",
)

DEFAULT_STOPWORDS = frozenset(STOPWORDS)

# A word is a run of letters, optionally chained by internal apostrophes.
_WORD_RE = re.compile(r"[^\W\d_]+(?:'[^\W\d_]+)*")
_APOSTROPHES = {ord("’"): "'", ord("ʼ"): "'"}


def tokenize(text: str) -> list[str]:
    """Split text into lowercase word tokens, keeping contractions intact."""
    return _WORD_RE.findall(text.translate(_APOSTROPHES).lower())


def load_stopwords(path) -> frozenset[str]:
    """Read a stopword file: one word per line, '#' starts a comment."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def remove_stopwords(tokens, stops=None) -> list[str]:
    stops = DEFAULT_STOPWORDS if stops is None else stops
    return [t for t in tokens if t not in stops]


# Irregular forms the suffix rules cannot reach (or would get wrong).
# Deliberately maps verb forms only; irregular noun plurals such as "men"
# are left alone.
_IRREGULAR = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "says": "say", "said": "say", "saying": "say",
    "goes": "go", "went": "go", "gone": "go", "going": "go",
    "comes": "come", "came": "come", "coming": "come",
    "takes": "take", "took": "take", "taken": "take", "taking": "take",
    "gives": "give", "gave": "give", "given": "give", "giving": "give",
    "gets": "get", "got": "get", "gotten": "get", "getting": "get",
    "makes": "make", "made": "make", "making": "make",
    "knows": "know", "knew": "know", "known": "know", "knowing": "know",
    "thinks": "think", "thought": "think", "thinking": "think",
    "sees": "see", "saw": "see", "seen": "see", "seeing": "see",
    "tells": "tell", "told": "tell", "telling": "tell",
    "finds": "find", "found": "find", "finding": "find",
    "feels": "feel", "felt": "feel", "feeling": "feel",
    "leaves": "leave", "left": "leave", "leaving": "leave",
    "keeps": "keep", "kept": "keep", "keeping": "keep",
    "holds": "hold", "held": "hold", "holding": "hold",
    "brings": "bring", "brought": "bring", "bringing": "bring",
    "stands": "stand", "stood": "stand", "standing": "stand",
    "hears": "hear", "heard": "hear", "hearing": "hear",
    "meets": "meet", "met": "meet", "meeting": "meet",
    "runs": "run", "ran": "run",
    "sits": "sit", "sat": "sit",
    "speaks": "speak", "spoke": "speak", "spoken": "speak",
    "writes": "write", "wrote": "write", "written": "write", "writing": "write",
    "lies": "lie", "lay": "lie", "lying": "lie",
    "rises": "rise", "rose": "rise", "risen": "rise", "rising": "rise",
    "falls": "fall", "fell": "fall", "fallen": "fall",
    "begins": "begin", "began": "begin", "begun": "begin",
    "breaks": "break", "broke": "break", "broken": "break",
    "chooses": "choose", "chose": "choose", "chosen": "choose",
    "draws": "draw", "drew": "draw", "drawn": "draw",
    "drinks": "drink", "drank": "drink", "drunk": "drink",
    "drives": "drive", "drove": "drive", "driven": "drive", "driving": "drive",
    "eats": "eat", "ate": "eat", "eaten": "eat",
    "flies": "fly", "flew": "fly", "flown": "fly",
    "forgets": "forget", "forgot": "forget", "forgotten": "forget",
    "grows": "grow", "grew": "grow", "grown": "grow",
    "hides": "hide", "hid": "hide", "hidden": "hide", "hiding": "hide",
    "leads": "lead", "led": "lead",
    "loses": "lose", "lost": "lose", "losing": "lose",
    "means": "mean", "meant": "mean",
    "pays": "pay", "paid": "pay",
    "reads": "read",
    "rides": "ride", "rode": "ride", "ridden": "ride", "riding": "ride",
    "sells": "sell", "sold": "sell",
    "sends": "send", "sent": "send",
    "shakes": "shake", "shook": "shake", "shaken": "shake", "shaking": "shake",
    "shows": "show", "showed": "show", "shown": "show",
    "sings": "sing", "sang": "sing", "sung": "sing",
    "sleeps": "sleep", "slept": "sleep",
    "spends": "spend", "spent": "spend",
    "swims": "swim", "swam": "swim", "swum": "swim",
    "throws": "throw", "threw": "throw", "thrown": "throw",
    "understands": "understand", "understood": "understand",
    "wakes": "wake", "woke": "wake", "woken": "wake", "waking": "wake",
    "wears": "wear", "wore": "wear", "worn": "wear",
    "wins": "win", "won": "win",
    "builds": "build", "built": "build",
    "buys": "buy", "bought": "buy", "buying": "buy",
    "catches": "catch", "caught": "catch",
    "fights": "fight", "fought": "fight",
    "seeks": "seek", "sought": "seek",
    "teaches": "teach", "taught": "teach",
    "answered": "answer", "answering": "answer", "answers": "answer",
}

_VOWELS = set("aeiou")
# Doubled finals that are usually genuine (kiss, fall, buzz, stuff).
_KEEP_DOUBLE = set("slzf")


def _undouble(stem: str) -> str:
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in _KEEP_DOUBLE
    ):
        return stem[:-1]
    return stem


class Lemmatizer:
    """Deterministic lemma mapping: exception lexicon plus suffix rules.

    Total and identity on unknown words. The rules strip -ies/-ied, -ing,
    -ed, -es and -s with consonant-doubling undo; they are intentionally
    conservative (a kept inflection is harmless, a mangled word is not).
    """

    def __init__(self, lexicon: dict[str, str] | None = None, use_rules: bool = True):
        self.lexicon = dict(_IRREGULAR)
        if lexicon:
            self.lexicon.update(lexicon)
        self.use_rules = use_rules

    @classmethod
    def from_file(cls, path, use_rules: bool = True) -> "Lemmatizer":
        """Load extra lexicon entries from lines of ``surface<TAB>lemma``."""
        extra = {}
        for n, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path} line {n}: expected surface<TAB>lemma")
            extra[parts[0].strip().lower()] = parts[1].strip().lower()
        return cls(extra, use_rules=use_rules)

    def __call__(self, token: str) -> str:
        return self.lemma(token)

    def lemma(self, token: str) -> str:
        hit = self.lexicon.get(token)
        if hit is not None:
            return hit
        if not self.use_rules:
            return token
        return self._apply_rules(token)

    @staticmethod
    def _apply_rules(word: str) -> str:
        if word.endswith("ies") and len(word) >= 5:
            return word[:-3] + "y"
        if word.endswith("ied") and len(word) >= 5:
            return word[:-3] + "y"
        if word.endswith("ing") and len(word) >= 6:
            return _undouble(word[:-3])
        if word.endswith("ed") and len(word) >= 5 and not word.endswith("eed"):
            return _undouble(word[:-2])
        if word.endswith("oes") and len(word) >= 5:
            return word[:-2]
        if word.endswith("es") and len(word) >= 4:
            stem = word[:-2]
            if stem.endswith(("s", "x", "z", "ch", "sh")):
                return stem
            return word  # leave -es words alone rather than risk names
        if (
            word.endswith("s")
            and len(word) >= 4
            and not word.endswith(("ss", "us", "is"))
        ):
            return word[:-1]
        return word


def lemmatize(tokens, lemmatizer: Lemmatizer | None = None) -> list[str]:
    """Element-wise lemma application; length and order preserved."""
    lemmatizer = lemmatizer or Lemmatizer()
    return [lemmatizer.lemma(t) for t in tokens]


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[str, ...]
    book_id: str = ""
    scenario: str = "original"

    def __len__(self) -> int:
        return len(self.tokens)

    def replace_tokens(self, tokens) -> "TokenStream":
        return TokenStream(tuple(tokens), self.book_id, self.scenario)


def apply_scenario(
    text: str,
    scenario: str,
    stops=None,
    lemmatizer: Lemmatizer | None = None,
    book_id: str = "",
) -> TokenStream:
    """Run one preprocessing pipeline over raw text."""
    if scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}, expected one of {SCENARIOS}")
    tokens = tokenize(text)
    if scenario in ("lemma", "nostop-lemma"):
        tokens = lemmatize(tokens, lemmatizer)
    if scenario in ("nostop", "nostop-lemma"):
        tokens = remove_stopwords(tokens, stops)
    return TokenStream(tuple(tokens), book_id, scenario)
