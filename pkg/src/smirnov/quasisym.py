"""Standardization of segmented Smirnov words, split sets, and the fundamental
quasisymmetric expansion of the standard-word enumerator."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .qengine import QPolynomial
from .stats import sminv_count
from .words import SegmentedSmirnovWord, enumerate_words_by_stat


def thick_positions(w: SegmentedSmirnovWord) -> frozenset:
    """1-based i that start a block or are preceded (in the word) by a larger letter."""
    out = set(w.initial_positions)
    for i in range(2, w.n + 1):
        if i not in out and w.letters[i - 2] > w.letters[i - 1]:
            out.add(i)
    return frozenset(out)


def standardize(w: SegmentedSmirnovWord) -> SegmentedSmirnovWord:
    """Relabel by the reading order: for each value, thin occurrences right to
    left, then thick occurrences left to right; smaller values read first."""
    thick = thick_positions(w)
    order = sorted(
        range(1, w.n + 1),
        key=lambda i: (w.letters[i - 1], i in thick, i if i in thick else -i))
    sigma = [0] * w.n
    for rank, i in enumerate(order, start=1):
        sigma[i - 1] = rank
    return SegmentedSmirnovWord(tuple(sigma), w.shape)


def split_set(sigma: SegmentedSmirnovWord) -> frozenset:
    """Values v such that the positions i, j of v and v+1 satisfy one of:
    same block with |i-j| = 1; i thick and j thin; both thin with i < j;
    both thick with j < i."""
    letters = sigma.letters
    n = sigma.n
    if sorted(letters) != list(range(1, n + 1)):
        raise ValueError("split_set requires a segmented permutation")
    thick = thick_positions(sigma)
    pos = {v: i for i, v in enumerate(letters, start=1)}
    block_of = {}
    for b, (lo, hi) in enumerate(_block_spans(sigma)):
        for i in range(lo, hi + 1):
            block_of[i] = b
    out = set()
    for v in range(1, n):
        i, j = pos[v], pos[v + 1]
        i_thick, j_thick = i in thick, j in thick
        if block_of[i] == block_of[j] and abs(i - j) == 1:
            out.add(v)
        elif i_thick and not j_thick:
            out.add(v)
        elif not i_thick and not j_thick and i < j:
            out.add(v)
        elif i_thick and j_thick and j < i:
            out.add(v)
    return frozenset(out)


def _block_spans(w: SegmentedSmirnovWord):
    pos = 1
    for part in w.shape:
        yield (pos, pos + part - 1)
        pos += part


def fiber_condition(sigma: SegmentedSmirnovWord, w: SegmentedSmirnovWord) -> bool:
    """Whether w lies in the standardization fiber of sigma: same shape, the
    letters of w are weakly increasing along consecutive values of sigma, and
    strictly increasing at splitting values."""
    if w.shape != sigma.shape:
        return False
    split = split_set(sigma)
    pos = {v: i for i, v in enumerate(sigma.letters, start=1)}
    for v in range(1, sigma.n):
        i, j = pos[v], pos[v + 1]
        if w.letters[i - 1] > w.letters[j - 1]:
            return False
        if v in split and w.letters[i - 1] == w.letters[j - 1]:
            return False
    return True


def composition_from_split(split: Iterable[int], n: int) -> tuple:
    """The composition of n whose partial sums are the split set."""
    sums = sorted(split)
    if sums and (sums[0] < 1 or sums[-1] >= n):
        raise ValueError("split set must lie in 1..n-1")
    parts = []
    prev = 0
    for s in sums + [n]:
        parts.append(s - prev)
        prev = s
    return tuple(parts)


@dataclass(frozen=True)
class FundamentalTerm:
    """q^sminv-aggregated coefficient of one fundamental quasisymmetric function."""

    composition: tuple
    coefficient: QPolynomial

    @property
    def split(self) -> frozenset:
        return frozenset(itertools.accumulate(self.composition[:-1]))

    def to_json(self) -> dict:
        return {"composition": list(self.composition),
                "coeff": self.coefficient.to_json()}


def fundamental_expansion(n: int, k: int, l: int) -> List[FundamentalTerm]:
    """Group q^sminv over segmented permutations with k ascents, l descents by split set."""
    if n > 0 and k + l >= n:
        raise ValueError("fundamental_expansion requires k+l < n")
    groups: Dict[tuple, QPolynomial] = {}
    for sigma in enumerate_words_by_stat((1,) * n, k, l):
        comp = composition_from_split(split_set(sigma), n)
        poly = QPolynomial.q_power(sminv_count(sigma))
        groups[comp] = groups.get(comp, QPolynomial.zero()) + poly
    return [FundamentalTerm(comp, coeff) for comp, coeff in sorted(groups.items())]


def monomials_of_fundamental(split: Iterable[int], n: int, bound: int):
    """Exponent vectors (length bound) of the fundamental quasisymmetric
    function Q_{split,n} over the alphabet 1..bound."""
    split = frozenset(split)
    for seq in itertools.combinations_with_replacement(range(1, bound + 1), n):
        if all(seq[s] > seq[s - 1] for s in split):
            exps = [0] * bound
            for x in seq:
                exps[x - 1] += 1
            yield tuple(exps)


def expand_to_monomials(terms: Sequence[FundamentalTerm],
                        alphabet_bound: int) -> Dict[tuple, QPolynomial]:
    """Monomial expansion of a sum of fundamental terms over x_1..x_bound."""
    out: Dict[tuple, QPolynomial] = {}
    for term in terms:
        n = sum(term.composition)
        for exps in monomials_of_fundamental(term.split, n, alphabet_bound):
            out[exps] = out.get(exps, QPolynomial.zero()) + term.coefficient
    return {e: p for e, p in out.items() if p}


def direct_monomial_sum(n: int, k: int, l: int, bound: int) -> Dict[tuple, QPolynomial]:
    """Sum of q^sminv(w) x^w over all words with n letters <= bound, k ascents,
    l descents; computed by direct enumeration, independent of the expansion."""
    out: Dict[tuple, QPolynomial] = {}
    from .words import compositions_of

    shapes = list(compositions_of(n))
    for letters in itertools.product(range(1, bound + 1), repeat=n):
        for shape in shapes:
            try:
                w = SegmentedSmirnovWord(letters, shape)
            except ValueError:
                continue
            if len(w.ascent_positions()) != k or len(w.descent_positions()) != l:
                continue
            exps = [0] * bound
            for x in letters:
                exps[x - 1] += 1
            key = tuple(exps)
            out[key] = out.get(key, QPolynomial.zero()) + QPolynomial.q_power(sminv_count(w))
    return {e: p for e, p in out.items() if p}
