"""Segmented Smirnov words: parsing, classification, enumeration, insertions.

A segmented Smirnov word is a concatenation of Smirnov blocks (no two equal
adjacent letters within a block; equal letters may touch across block
boundaries).  Shapes are compositions of block lengths, contents are weak
compositions of letter multiplicities.  All reported indices are 1-based.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from sympy.utilities.iterables import multiset_permutations

INSERTION_KINDS = ("peak", "double_fall", "double_rise", "singleton")


@dataclass(frozen=True)
class SegmentedSmirnovWord:
    """letters with a block-length shape; validated on construction."""

    letters: tuple
    shape: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        shape = tuple(self.shape)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "shape", shape)
        for part in shape:
            if not isinstance(part, int) or part < 1:
                raise ValueError("shape parts must be positive integers, got %r" % (part,))
        if sum(shape) != len(letters):
            raise ValueError("shape %r does not sum to letter count %d" % (shape, len(letters)))
        for pos, letter in enumerate(letters, start=1):
            if not isinstance(letter, int) or letter < 1:
                raise ValueError("letter at index %d must be a positive integer, got %r"
                                 % (pos, letter))
        pos = 0
        for part in shape:
            for i in range(pos, pos + part - 1):
                if letters[i] == letters[i + 1]:
                    raise ValueError(
                        "Smirnov violation: equal adjacent letters at in-block index %d "
                        "(word index %d)" % (i - pos + 1, i + 1))
            pos += part

    @property
    def n(self) -> int:
        return len(self.letters)

    @cached_property
    def blocks(self) -> tuple:
        out = []
        pos = 0
        for part in self.shape:
            out.append(self.letters[pos:pos + part])
            pos += part
        return tuple(out)

    @cached_property
    def initial_positions(self) -> frozenset:
        """1-based positions that start a block."""
        out, pos = [], 1
        for part in self.shape:
            out.append(pos)
            pos += part
        return frozenset(out)

    @cached_property
    def final_positions(self) -> frozenset:
        out, pos = [], 0
        for part in self.shape:
            pos += part
            out.append(pos)
        return frozenset(out)

    def content(self) -> tuple:
        """Weak composition: entry i-1 is the multiplicity of letter i; trailing zeros trimmed."""
        if not self.letters:
            return ()
        mu = [0] * max(self.letters)
        for letter in self.letters:
            mu[letter - 1] += 1
        return tuple(mu)

    def ascent_positions(self) -> frozenset:
        """1-based i with w_{i+1} > w_i inside one block."""
        return frozenset(i for i in range(1, self.n)
                         if i not in self.final_positions
                         and self.letters[i] > self.letters[i - 1])

    def descent_positions(self) -> frozenset:
        return frozenset(i for i in range(1, self.n)
                         if i not in self.final_positions
                         and self.letters[i] < self.letters[i - 1])

    def text(self) -> str:
        sep = "" if all(letter <= 9 for letter in self.letters) else ","
        return "|".join(sep.join(str(letter) for letter in block) for block in self.blocks)

    def to_json(self) -> dict:
        return {"letters": list(self.letters), "shape": list(self.shape)}

    @classmethod
    def from_json(cls, data: dict) -> "SegmentedSmirnovWord":
        return cls(tuple(data["letters"]), tuple(data["shape"]))

    def __str__(self) -> str:
        return self.text()


EMPTY_WORD = SegmentedSmirnovWord((), ())


@dataclass(frozen=True)
class PositionProfile:
    """Per-index classification in the infinity-padded word; all sets 1-based."""

    roles: tuple  # roles[i-1] in {"peak","valley","double_rise","double_fall"}
    initial: frozenset
    final: frozenset
    ascents: frozenset
    descents: frozenset

    def role(self, i: int) -> str:
        return self.roles[i - 1]


def parse_word(text: str) -> SegmentedSmirnovWord:
    """Parse bar notation like "231|3212|12" or "12,3|4,12"."""
    if text == "":
        raise ValueError("empty word text (construct the empty word directly)")
    letters = []
    shape = []
    for block_no, chunk in enumerate(text.split("|"), start=1):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty block at block index %d" % block_no)
        if "," in chunk:
            tokens = [t.strip() for t in chunk.split(",")]
        else:
            tokens = list(chunk)
        block = []
        for tok in tokens:
            if not tok.isdigit() or int(tok) < 1:
                raise ValueError("bad letter %r in block %d" % (tok, block_no))
            block.append(int(tok))
        letters.extend(block)
        shape.append(len(block))
    return SegmentedSmirnovWord(tuple(letters), tuple(shape))


def format_word(w: SegmentedSmirnovWord) -> str:
    return w.text()


def classify(w: SegmentedSmirnovWord) -> PositionProfile:
    """Roles from a(w) = inf w^1 inf w^2 inf ... inf; ascents/descents per block."""
    inf = math.inf
    padded = []
    for block in w.blocks:
        padded.append(inf)
        padded.extend(block)
    padded.append(inf)
    roles = []
    for p in range(1, len(padded) - 1):
        if padded[p] is inf:
            continue
        left, mid, right = padded[p - 1], padded[p], padded[p + 1]
        if left > mid < right:
            roles.append("valley")
        elif left < mid > right:
            roles.append("peak")
        elif left < mid:
            roles.append("double_rise")
        else:
            roles.append("double_fall")
    return PositionProfile(tuple(roles), w.initial_positions, w.final_positions,
                           w.ascent_positions(), w.descent_positions())


def compositions_of(n: int) -> Iterator[tuple]:
    """All compositions of n in lexicographic order; () for n = 0."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def partitions_of(n: int) -> Iterator[tuple]:
    """All partitions of n, parts weakly decreasing."""
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest
    yield from rec(n, n)


def _trim(mu: Sequence[int]) -> tuple:
    mu = list(mu)
    while mu and mu[-1] == 0:
        mu.pop()
    for part in mu:
        if part < 0:
            raise ValueError("content parts must be nonnegative")
    return tuple(mu)


def enumerate_words(mu: Sequence[int]) -> Iterator[SegmentedSmirnovWord]:
    """All segmented Smirnov words of content mu, lexicographic by letters then shape."""
    mu = _trim(mu)
    n = sum(mu)
    if n == 0:
        yield EMPTY_WORD
        return
    multiset = []
    for value, count in enumerate(mu, start=1):
        multiset.extend([value] * count)
    for perm in multiset_permutations(multiset):
        letters = tuple(perm)
        for shape in compositions_of(n):
            try:
                yield SegmentedSmirnovWord(letters, shape)
            except ValueError:
                continue


def enumerate_words_by_stat(mu: Sequence[int], k: int, l: int) -> Iterator[SegmentedSmirnovWord]:
    """Words of content mu with exactly k ascents and l descents."""
    for w in enumerate_words(mu):
        if len(w.ascent_positions()) == k and len(w.descent_positions()) == l:
            yield w


def insert_many(w: SegmentedSmirnovWord, m: int,
                peaks: Sequence[int] = (), rises: Sequence[int] = (),
                falls: Sequence[int] = (), gaps: Sequence[int] = ()) -> SegmentedSmirnovWord:
    """Insert occurrences of a maximal letter m in bulk.

    peaks: separator indices of w (1..#blocks-1) replaced by m, joining blocks.
    rises/falls: indices (1-based) of the blocks *after joining* receiving a
    final/initial m.  gaps: singleton-block counts per gap 0..#joined-blocks.
    """
    if any(letter > m for letter in w.letters):
        raise ValueError("m=%d is smaller than a letter of the word" % m)
    if m < 1:
        raise ValueError("m must be a positive letter")
    blocks = [list(b) for b in w.blocks]
    s = len(blocks)
    peaks = set(peaks)
    for t in peaks:
        if not 1 <= t <= s - 1:
            raise ValueError("peak separator %d out of range 1..%d" % (t, s - 1))
    if peaks and any(letter == m for letter in w.letters):
        raise ValueError("peak insertion requires m strictly above every letter")
    joined = []
    if blocks:
        cur = blocks[0]
        for t in range(1, s):
            if t in peaks:
                cur = cur + [m] + blocks[t]
            else:
                joined.append(cur)
                cur = blocks[t]
        joined.append(cur)
    s1 = len(joined)
    for b in set(rises):
        if not 1 <= b <= s1:
            raise ValueError("rise block %d out of range 1..%d" % (b, s1))
        if joined[b - 1][-1] == m:
            raise ValueError("block %d already ends with m=%d" % (b, m))
        joined[b - 1].append(m)
    for b in set(falls):
        if not 1 <= b <= s1:
            raise ValueError("fall block %d out of range 1..%d" % (b, s1))
        if joined[b - 1][0] == m:
            raise ValueError("block %d already starts with m=%d" % (b, m))
        joined[b - 1].insert(0, m)
    gaps = list(gaps) or [0] * (s1 + 1)
    if len(gaps) != s1 + 1 or any(g < 0 for g in gaps):
        raise ValueError("gaps must list %d nonnegative counts" % (s1 + 1))
    out = []
    for g, blk in itertools.zip_longest(range(s1 + 1), joined):
        out.extend([m] for _ in range(gaps[g]))
        if blk is not None:
            out.append(blk)
    letters = tuple(itertools.chain.from_iterable(out))
    shape = tuple(len(b) for b in out)
    return SegmentedSmirnovWord(letters, shape)


def insert_maximal(w: SegmentedSmirnovWord, kind: str, slot: int, m: int) -> SegmentedSmirnovWord:
    """Insert one occurrence of a maximal letter m at the named site.

    Slots: peak -> separator 1..s-1; double_fall / double_rise -> block 1..s;
    singleton -> gap 0..s (0 = before the first block).
    """
    if kind == "peak":
        return insert_many(w, m, peaks=(slot,))
    if kind == "double_fall":
        return insert_many(w, m, falls=(slot,))
    if kind == "double_rise":
        return insert_many(w, m, rises=(slot,))
    if kind == "singleton":
        s = len(w.shape)
        if not 0 <= slot <= s:
            raise ValueError("singleton gap %d out of range 0..%d" % (slot, s))
        gaps = [0] * (s + 1)
        gaps[slot] = 1
        return insert_many(w, m, gaps=gaps)
    raise ValueError("unknown insertion kind %r" % (kind,))


def delete_occurrence(w: SegmentedSmirnovWord, pos: int) -> SegmentedSmirnovWord:
    """Remove the letter at 1-based pos, inverting the matching insertion.

    Peaks are replaced by a block separator; initial/final letters are dropped
    from their block; a singleton block disappears.
    """
    if not 1 <= pos <= w.n:
        raise ValueError("position %d out of range" % pos)
    blocks = [list(b) for b in w.blocks]
    seen = 0
    for b_idx, blk in enumerate(blocks):
        if pos <= seen + len(blk):
            in_block = pos - seen - 1
            if len(blk) == 1:
                del blocks[b_idx]
            elif in_block == 0:
                del blk[0]
            elif in_block == len(blk) - 1:
                del blk[-1]
            else:
                blocks[b_idx:b_idx + 1] = [blk[:in_block], blk[in_block + 1:]]
            break
        seen += len(blk)
    letters = tuple(itertools.chain.from_iterable(blocks))
    shape = tuple(len(b) for b in blocks)
    return SegmentedSmirnovWord(letters, shape)


@dataclass(frozen=True)
class InsertionRecord:
    """How the occurrences of the maximal letter m sit inside a word.

    peaks are separator indices of the stripped word; rises/falls index the
    joined blocks; gaps[g] counts singleton-m blocks in gap g (0-based from the
    left, over the joined blocks).
    """

    m: int
    peaks: frozenset
    rises: frozenset
    falls: frozenset
    gaps: tuple


def extract_maximal(w: SegmentedSmirnovWord) -> tuple:
    """Split off every occurrence of the maximal letter.

    Returns (w_prime, record) with insert_many(w_prime, record.m, ...) == w.
    """
    if w.n == 0:
        raise ValueError("cannot extract from the empty word")
    m = max(w.letters)
    gap_counts = []
    pending = 0
    runs = []  # (sub-blocks, had_initial_m, had_final_m) per non-singleton block
    for blk in w.blocks:
        if blk == (m,):
            pending += 1
            continue
        gap_counts.append(pending)
        pending = 0
        body = list(blk)
        had_final = body[-1] == m
        if had_final:
            body.pop()
        had_initial = body[0] == m
        if had_initial:
            body.pop(0)
        subs, cur = [], []
        for letter in body:
            if letter == m:
                subs.append(cur)
                cur = []
            else:
                cur.append(letter)
        subs.append(cur)
        runs.append((subs, had_initial, had_final))
    gap_counts.append(pending)
    peaks, rises, falls = set(), set(), set()
    new_blocks = []
    for b_idx, (subs, had_initial, had_final) in enumerate(runs, start=1):
        start = len(new_blocks) + 1
        new_blocks.extend(subs)
        peaks.update(range(start, start + len(subs) - 1))
        if had_final:
            rises.add(b_idx)
        if had_initial:
            falls.add(b_idx)
    letters = tuple(itertools.chain.from_iterable(new_blocks))
    shape = tuple(len(b) for b in new_blocks)
    record = InsertionRecord(m, frozenset(peaks), frozenset(rises), frozenset(falls),
                             tuple(gap_counts))
    return SegmentedSmirnovWord(letters, shape), record
