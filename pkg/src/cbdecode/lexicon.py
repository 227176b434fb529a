"""Biased-word inventory and unit tokenization.

Each biased word is treated as a single token unit; every other character
stands alone. Matching is leftmost-longest greedy over a character trie, so
when a shorter biased word is a prefix of a longer one, only the longer word
is recognised. Text and words are NFC-normalized before any comparison.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DuplicateWordError, EmptyWordError, UnknownSynonymWordError


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class TokenUnit:
    """One unit of a tokenized sequence.

    ``word_index`` is the lexicon index for a biased-word unit and ``None``
    for a plain single-character unit.
    """

    surface: str
    word_index: Optional[int] = None

    @property
    def is_biased(self) -> bool:
        return self.word_index is not None


TokenSequence = list


class _TrieNode:
    __slots__ = ("children", "word_index")

    def __init__(self):
        self.children: dict[str, _TrieNode] = {}
        self.word_index: Optional[int] = None


@dataclass
class BiasedLexicon:
    """Immutable biased-word list with a trie for longest-match lookup."""

    words: tuple[str, ...]
    synonym_classes: dict[int, int] = field(default_factory=dict)
    _root: _TrieNode = field(default_factory=_TrieNode, repr=False, compare=False)
    _index: dict[str, int] = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.words)

    def word_index(self, word: str) -> Optional[int]:
        return self._index.get(nfc(word))

    def longest_match(self, text: str, start: int) -> Optional[tuple[int, int]]:
        """Longest biased word starting at ``text[start]``.

        Returns ``(word_index, length)`` or ``None`` when no word matches.
        """
        node = self._root
        best = None
        for pos in range(start, len(text)):
            node = node.children.get(text[pos])
            if node is None:
                break
            if node.word_index is not None:
                best = (node.word_index, pos - start + 1)
        return best


def build_lexicon(
    words: Iterable[str],
    synonyms: Optional[Iterable[tuple[int, str]]] = None,
) -> BiasedLexicon:
    """Build a :class:`BiasedLexicon` from words and optional synonym pairs.

    ``synonyms`` is an iterable of ``(class_id, word)`` rows; words sharing a
    class id are treated as interchangeable by the alignment metrics.

    Raises :class:`EmptyWordError`, :class:`DuplicateWordError` or
    :class:`UnknownSynonymWordError` on invalid input.
    """
    normalized: list[str] = []
    index: dict[str, int] = {}
    for raw in words:
        word = nfc(raw.strip())
        if not word:
            raise EmptyWordError("biased word must be non-empty")
        if word in index:
            raise DuplicateWordError(f"duplicate biased word: {word!r}")
        index[word] = len(normalized)
        normalized.append(word)

    root = _TrieNode()
    for idx, word in enumerate(normalized):
        node = root
        for ch in word:
            node = node.children.setdefault(ch, _TrieNode())
        node.word_index = idx

    classes: dict[int, int] = {}
    if synonyms is not None:
        for class_id, raw in synonyms:
            word = nfc(raw.strip())
            if word not in index:
                raise UnknownSynonymWordError(
                    f"synonym entry refers to unknown word: {word!r}"
                )
            classes[index[word]] = class_id

    return BiasedLexicon(
        words=tuple(normalized), synonym_classes=classes, _root=root, _index=index
    )


def tokenize(text: str, lexicon: BiasedLexicon) -> list[TokenUnit]:
    """Segment ``text`` into biased-word units and single characters.

    Leftmost-longest greedy: at each position the longest biased word wins,
    otherwise one character is emitted. Concatenating the unit surfaces
    reproduces the NFC-normalized input exactly.
    """
    text = nfc(text)
    units: list[TokenUnit] = []
    pos = 0
    while pos < len(text):
        hit = lexicon.longest_match(text, pos)
        if hit is not None:
            idx, length = hit
            units.append(TokenUnit(text[pos : pos + length], idx))
            pos += length
        else:
            units.append(TokenUnit(text[pos]))
            pos += 1
    return units


def load_word_list(path) -> list[str]:
    """Read a biased-word list file: UTF-8, one word per line, ``#`` comments."""
    words = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words.append(line)
    return words


def load_synonym_file(path) -> list[tuple[int, str]]:
    """Read a synonym TSV: ``class_id<TAB>word`` per row."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            class_id, word = line.split("\t", 1)
            rows.append((int(class_id), word))
    return rows


def load_lexicon(words_path, synonyms_path=None) -> BiasedLexicon:
    synonyms = load_synonym_file(synonyms_path) if synonyms_path else None
    return build_lexicon(load_word_list(words_path), synonyms)
