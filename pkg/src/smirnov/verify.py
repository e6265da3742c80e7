"""Verification suites confronting the algebraic recursion with independent
enumeration, bijections, insertion lemmas, quasisymmetric expansions, and the
classical models.  Used by the CLI and by the acceptance tests."""

from __future__ import annotations

import itertools
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Sequence

from . import models, paths, quasisym
from .qengine import (QPolynomial, enumerative_q_sum, q_binomial, sf_h_coefficient,
                      standard_q_count)
from .stats import (enumerate_omp, omp_dinv, omp_inv, project,
                    sdinv_count, sminv, sminv_count)
from .words import (SegmentedSmirnovWord, compositions_of, enumerate_words, insert_many,
                    partitions_of)

SUITES = ("main-theorem", "equidistribution", "bijection", "insertion-lemmas",
          "quasisym", "models")


@dataclass(frozen=True)
class CaseResult:
    key: str
    ok: bool
    witness: str = ""


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    cases: List[CaseResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.ok)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "passed": self.passed,
            "failed": self.failed,
            "elapsed": round(self.elapsed, 3),
            "cases": [{"key": c.key, "status": "pass" if c.ok else "fail",
                       "witness": c.witness} for c in self.cases],
        }


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SMIRNOV_THREADS", "1")))
    except ValueError:
        return 1


def _run_cases(fn: Callable, arglist: Sequence) -> List[CaseResult]:
    workers = _worker_count()
    if workers > 1 and len(arglist) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, arglist))
    else:
        results = [fn(args) for args in arglist]
    return sorted(results, key=lambda c: c.key)


def _distributions(mu: tuple, stat_fn) -> dict:
    """Map (k, l) -> QPolynomial of q^stat over SW(mu, k, l)."""
    buckets: dict = {}
    for w in enumerate_words(mu):
        key = (len(w.ascent_positions()), len(w.descent_positions()))
        buckets.setdefault(key, Counter())[stat_fn(w)] += 1
    out = {}
    for key, counts in buckets.items():
        coeffs = [0] * (max(counts) + 1)
        for value, c in counts.items():
            coeffs[value] = c
        out[key] = QPolynomial(coeffs)
    return out


# --- main-theorem suite -----------------------------------------------------

def _case_main_mu(mu: tuple) -> CaseResult:
    n = sum(mu)
    key = "main-theorem mu=%s" % (mu,)
    dist = _distributions(mu, sminv_count)
    for k in range(n + 1):
        for l in range(n - k):
            lhs = sf_h_coefficient(n, k, l, mu)
            rhs = dist.get((k, l), QPolynomial.zero())
            if lhs != rhs:
                return CaseResult(key, False,
                                  "k=%d l=%d recursion=%s enumeration=%s"
                                  % (k, l, lhs, rhs))
    for (k, l), poly in dist.items():
        if n > 0 and k + l >= n and poly:
            return CaseResult(key, False, "words found with k+l >= n at k=%d l=%d" % (k, l))
    return CaseResult(key, True)


def _case_standard(n: int) -> CaseResult:
    key = "standard-case n=%d" % n
    dist = _distributions((1,) * n, sminv_count)
    for k in range(n + 1):
        for l in range(n + 1 - k):
            rec = standard_q_count(n, k, l)
            enum = dist.get((k, l), QPolynomial.zero())
            if rec != enum:
                return CaseResult(key, False, "k=%d l=%d recursion=%s enumeration=%s"
                                  % (k, l, rec, enum))
            if n == 0 or k + l < n:
                alg = sf_h_coefficient(n, k, l, (1,) * n)
                if alg != rec:
                    return CaseResult(key, False, "k=%d l=%d table=%s standard=%s"
                                      % (k, l, alg, rec))
    return CaseResult(key, True)


def _case_symmetry(mu: tuple) -> CaseResult:
    key = "symmetry mu=%s" % (mu,)
    reference = _distributions(tuple(sorted(mu, reverse=True)), sminv_count)
    for perm in set(itertools.permutations(mu)):
        dist = _distributions(perm, sminv_count)
        if dist != reference:
            return CaseResult(key, False, "rearrangement %s changes the enumerator" % (perm,))
    return CaseResult(key, True)


def _case_q_chu_vandermonde(bound: int) -> CaseResult:
    key = "q-chu-vandermonde bound=%d" % bound
    for j in range(bound + 1):
        for a in range(j + 1):
            for r in range(j + 1):
                rhs = QPolynomial.zero()
                for i in range(j + 1):
                    term = q_binomial(r, i) * q_binomial(j - r, a - i)
                    rhs = rhs + term.times_q_power((r - i) * (a - i))
                if q_binomial(j, a) != rhs:
                    return CaseResult(key, False, "j=%d a=%d r=%d" % (j, a, r))
    return CaseResult(key, True)


def _case_trinomial(bound: int) -> CaseResult:
    key = "trinomial bound=%d" % bound
    for x in range(bound + 1):
        for y in range(x + 1):
            for z in range(y + 1):
                lhs = q_binomial(x, y) * q_binomial(y, z)
                rhs = q_binomial(x, x - y + z) * q_binomial(x - y + z, z)
                if lhs != rhs:
                    return CaseResult(key, False, "x=%d y=%d z=%d" % (x, y, z))
    return CaseResult(key, True)


def suite_main_theorem(n_max: int = 6) -> List[CaseResult]:
    results = []
    mus = [mu for n in range(n_max + 1) for mu in partitions_of(n)]
    results += _run_cases(_case_main_mu, mus)
    results += _run_cases(_case_standard, list(range(n_max + 1)))
    sym_mus = [mu for n in range(min(n_max, 6) + 1) for mu in partitions_of(n)
               if len(set(mu)) > 1]
    results += _run_cases(_case_symmetry, sym_mus)
    results.append(_case_q_chu_vandermonde(8))
    results.append(_case_trinomial(10))
    return results


# --- equidistribution suite -------------------------------------------------

def _case_equidistribution(mu: tuple) -> CaseResult:
    key = "equidistribution mu=%s" % (mu,)
    lhs = _distributions(mu, sminv_count)
    rhs = _distributions(mu, sdinv_count)
    if lhs != rhs:
        diff = [kl for kl in set(lhs) | set(rhs)
                if lhs.get(kl, QPolynomial.zero()) != rhs.get(kl, QPolynomial.zero())]
        return CaseResult(key, False, "distributions differ at (k,l)=%s" % (sorted(diff),))
    return CaseResult(key, True)


def suite_equidistribution(n_max: int = 6) -> List[CaseResult]:
    mus = [mu for n in range(n_max + 1) for mu in partitions_of(n)]
    return _run_cases(_case_equidistribution, mus)


# --- bijection suite --------------------------------------------------------

def _case_bijection_mu(mu: tuple) -> CaseResult:
    n = sum(mu)
    key = "bijection mu=%s" % (mu,)
    images = {}
    unified_sums: dict = {}
    for w in enumerate_words(mu):
        D = paths.phi(w)
        k, l = len(w.ascent_positions()), len(w.descent_positions())
        if D.content() != w.content() or D.rise_count() != k or D.valley_count() != l:
            return CaseResult(key, False, "decorations not transported for %s" % w)
        if paths.phi_inverse(D) != w:
            return CaseResult(key, False, "round trip fails for %s" % w)
        if D in images:
            return CaseResult(key, False, "phi not injective: %s and %s" % (w, images[D]))
        images[D] = w
        unified_sums.setdefault((k, l), Counter())[sdinv_count(w)] += 1
    all_paths = set()
    for D in paths.enumerate_area0(mu):
        if D in all_paths:
            return CaseResult(key, False, "duplicate path in enumeration: %s" % D)
        all_paths.add(D)
        if paths.phi(paths.phi_inverse(D)) != D:
            return CaseResult(key, False, "path round trip fails for %s" % D)
    if all_paths != set(images):
        return CaseResult(key, False, "phi is not onto the area-0 paths of content %s" % (mu,))
    for (k, l), counts in unified_sums.items():
        coeffs = [0] * (max(counts) + 1)
        for value, c in counts.items():
            coeffs[value] = c
        poly = QPolynomial(coeffs)
        if n > 0 and k + l < n and poly != sf_h_coefficient(n, k, l, mu):
            return CaseResult(key, False, "unified dinv sum differs at k=%d l=%d" % (k, l))
    for D, w in images.items():
        k, l = D.rise_count(), D.valley_count()
        if (k == 0 or l == 0) and paths.unified_dinv(D) != paths.path_dinv(D):
            return CaseResult(key, False,
                              "classical dinv mismatch on %s (k=%d l=%d)" % (D, k, l))
    return CaseResult(key, True)


def _case_projection_mu(mu: tuple) -> CaseResult:
    n = sum(mu)
    key = "projection mu=%s" % (mu,)
    by_kl: dict = {}
    for w in enumerate_words(mu):
        by_kl.setdefault((len(w.ascent_positions()), len(w.descent_positions())), []).append(w)
    for (k, l), words in sorted(by_kl.items()):
        if l == 0:
            target = {p.blocks for p in enumerate_omp(mu, n - k)}
            seen = {}
            for w in words:
                p = project(w)
                if p.blocks in seen:
                    return CaseResult(key, False, "projection not injective at k=%d" % k)
                seen[p.blocks] = w
                if sminv_count(w) != omp_inv(p):
                    return CaseResult(key, False, "sminv != inv for %s" % w)
                if sdinv_count(w) != omp_dinv(p):
                    return CaseResult(key, False, "sdinv != dinv for %s" % w)
            if set(seen) != target:
                return CaseResult(key, False, "projection not onto OP(mu, %d)" % (n - k))
        if k == 0:
            target = {p.blocks for p in enumerate_omp(mu, n - l)}
            seen = set()
            for w in words:
                p = project(w)
                seen.add(p.blocks)
                if sminv_count(w) != omp_inv(p):
                    return CaseResult(key, False, "sminv != inv for %s (k=0)" % w)
                if sdinv_count(w) != omp_inv(p):
                    return CaseResult(key, False, "sdinv != inv for %s (k=0)" % w)
            if len(seen) != len(words) or seen != target:
                return CaseResult(key, False, "projection not bijective onto OP(mu, %d)" % (n - l))
    return CaseResult(key, True)


def suite_bijection(n_max: int = 5) -> List[CaseResult]:
    mus = [mu for n in range(n_max + 1) for mu in partitions_of(n)]
    results = _run_cases(_case_bijection_mu, mus)
    proj_mus = [mu for n in range(min(n_max + 1, 7)) for mu in partitions_of(n)]
    results += _run_cases(_case_projection_mu, proj_mus)
    return results


# --- insertion-lemmas suite -------------------------------------------------

def _random_word(rng: random.Random, n_max: int) -> SegmentedSmirnovWord:
    n = rng.randint(2, n_max)
    alphabet = rng.randint(2, max(2, n - 1))
    while True:
        letters = tuple(rng.randint(1, alphabet) for _ in range(n))
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1)))
        shape = tuple(b - a for a, b in zip([0] + cuts, cuts + [n]))
        try:
            return SegmentedSmirnovWord(letters, shape)
        except ValueError:
            continue


def _insertion_enumerator(w, m, kind, s, stat_fn) -> QPolynomial:
    blocks = len(w.shape)
    total = QPolynomial.zero()
    if kind == "peak":
        sites = range(1, blocks)
        for subset in itertools.combinations(sites, s):
            total = total + QPolynomial.q_power(stat_fn(insert_many(w, m, peaks=subset)))
    elif kind == "double_fall":
        for subset in itertools.combinations(range(1, blocks + 1), s):
            total = total + QPolynomial.q_power(stat_fn(insert_many(w, m, falls=subset)))
    elif kind == "double_rise":
        for subset in itertools.combinations(range(1, blocks + 1), s):
            total = total + QPolynomial.q_power(stat_fn(insert_many(w, m, rises=subset)))
    else:  # singleton
        for placement in itertools.combinations_with_replacement(range(blocks + 1), s):
            gaps = [0] * (blocks + 1)
            for g in placement:
                gaps[g] += 1
            total = total + QPolynomial.q_power(stat_fn(insert_many(w, m, gaps=gaps)))
    return total


def _expected_enumerator(kind: str, B: int, s: int) -> QPolynomial:
    if kind == "peak":
        return q_binomial(B - 1, s)
    if kind in ("double_fall", "double_rise"):
        return q_binomial(B, s).times_q_power(s * (s - 1) // 2)
    return q_binomial(B + s, s)


def _case_insertion(args: tuple) -> CaseResult:
    kind, batch, count, seed, n_max = args
    key = "insertion %s batch=%d" % (kind, batch)
    rng = random.Random("%d:%s:%d" % (seed, kind, batch))
    for _ in range(count):
        w = _random_word(rng, n_max)
        mx = max(w.letters)
        m = mx + 1
        if kind != "peak" and rng.random() < 0.5:
            if kind == "double_fall" and all(b[0] != mx for b in w.blocks):
                m = mx
            elif kind == "double_rise" and all(b[-1] != mx for b in w.blocks):
                m = mx
            elif kind == "singleton" and all(b != (mx,) for b in w.blocks):
                m = mx
        B = len(w.shape)
        max_s = B - 1 if kind == "peak" else (B if kind != "singleton" else B + 1)
        s = rng.randint(0, max(0, min(max_s, 4)))
        expected_shape = _expected_enumerator(kind, B, s)
        for stat_fn, name in ((sminv_count, "sminv"), (sdinv_count, "sdinv")):
            got = _insertion_enumerator(w, m, kind, s, stat_fn)
            expected = expected_shape.times_q_power(stat_fn(w))
            if got != expected:
                return CaseResult(key, False,
                                  "w=%s m=%d s=%d stat=%s got=%s expected=%s"
                                  % (w, m, s, name, got, expected))
    return CaseResult(key, True)


def suite_insertion_lemmas(n_max: int = 7, instances: int = 200, seed: int = 0) -> List[CaseResult]:
    batch_size = 50
    args = []
    for kind in ("peak", "double_fall", "double_rise", "singleton"):
        remaining = instances
        batch = 0
        while remaining > 0:
            args.append((kind, batch, min(batch_size, remaining), seed, n_max))
            remaining -= batch_size
            batch += 1
    return _run_cases(_case_insertion, args)


# --- quasisym suite ---------------------------------------------------------

def _case_expansion(args: tuple) -> CaseResult:
    n, k, l = args
    key = "expansion n=%d k=%d l=%d" % (n, k, l)
    terms = quasisym.fundamental_expansion(n, k, l)
    for bound in range(1, n + 1):
        lhs = quasisym.expand_to_monomials(terms, bound)
        rhs = quasisym.direct_monomial_sum(n, k, l, bound)
        if lhs != rhs:
            return CaseResult(key, False, "monomial expansions differ at bound=%d" % bound)
    return CaseResult(key, True)


def _case_standardization(args: tuple) -> CaseResult:
    n, bound = args
    key = "standardization n=%d bound=%d" % (n, bound)
    shapes = list(compositions_of(n))
    for letters in itertools.product(range(1, bound + 1), repeat=n):
        for shape in shapes:
            try:
                w = SegmentedSmirnovWord(letters, shape)
            except ValueError:
                continue
            sigma = quasisym.standardize(w)
            if sorted(sigma.letters) != list(range(1, n + 1)) or sigma.shape != w.shape:
                return CaseResult(key, False, "st(%s) = %s is not a segmented permutation"
                                  % (w, sigma))
            if (w.ascent_positions() != sigma.ascent_positions()
                    or w.descent_positions() != sigma.descent_positions()
                    or sminv(w).pair_set() != sminv(sigma).pair_set()):
                return CaseResult(key, False, "st does not preserve statistics on %s" % w)
    return CaseResult(key, True)


def _case_fiber(n: int) -> CaseResult:
    key = "fiber n=%d" % n
    sigmas = list(enumerate_words((1,) * n))
    shapes = list(compositions_of(n))
    by_shape: dict = {}
    for sigma in sigmas:
        by_shape.setdefault(sigma.shape, []).append(sigma)
    for letters in itertools.product(range(1, n + 1), repeat=n):
        for shape in shapes:
            try:
                w = SegmentedSmirnovWord(letters, shape)
            except ValueError:
                continue
            sigma = quasisym.standardize(w)
            for cand in by_shape.get(shape, ()):
                if quasisym.fiber_condition(cand, w) != (cand == sigma):
                    return CaseResult(key, False,
                                      "fiber condition disagrees for w=%s sigma=%s" % (w, cand))
    return CaseResult(key, True)


def suite_quasisym(n_max: int = 5) -> List[CaseResult]:
    args = [(n, k, l) for n in range(1, n_max + 1)
            for k in range(n) for l in range(n - k)]
    results = _run_cases(_case_expansion, args)
    results += _run_cases(_case_standardization,
                          [(n, min(4, n)) for n in range(1, min(n_max + 1, 7))])
    results += _run_cases(_case_fiber, list(range(1, min(n_max, 4) + 1)))
    return results


# --- models suite -----------------------------------------------------------

def _case_avoidance(n: int) -> CaseResult:
    key = "231-avoidance n=%d" % n
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        word = SegmentedSmirnovWord(perm, (n,))
        zero = sminv_count(word) == 0
        if zero != models.is_231_avoiding(perm):
            return CaseResult(key, False, "mismatch at %s" % (perm,))
        count += zero
    if count != models.catalan(n):
        return CaseResult(key, False, "count %d != Catalan %d" % (count, models.catalan(n)))
    return CaseResult(key, True)


def _case_noncrossing(n: int) -> CaseResult:
    key = "noncrossing n=%d" % n
    avoiders_by_descents: dict = {}
    for perm in itertools.permutations(range(1, n + 1)):
        if models.is_231_avoiding(perm):
            d = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
            avoiders_by_descents.setdefault(d, set()).add(perm)
    partitions_by_blocks: dict = {}
    images = set()
    for p in models.enumerate_noncrossing(n):
        perm = models.noncrossing_to_permutation(p)
        if not models.is_231_avoiding(perm):
            return CaseResult(key, False, "image %s is not 231-avoiding" % (perm,))
        if models.permutation_to_noncrossing(perm) != p:
            return CaseResult(key, False, "decreasing runs do not invert %s" % (p.blocks,))
        # blocks are decreasing runs, junctions are ascents: n - #blocks descents
        d = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        if d != n - len(p.blocks):
            return CaseResult(key, False, "image of %s has %d descents" % (p.blocks, d))
        images.add(perm)
        partitions_by_blocks[len(p.blocks)] = partitions_by_blocks.get(len(p.blocks), 0) + 1
    all_avoiders = set().union(*avoiders_by_descents.values()) if avoiders_by_descents else set()
    if images != all_avoiders:
        return CaseResult(key, False, "images are not exactly the 231-avoiders")
    # Narayana refinement: as many partitions with l+1 blocks as avoiders with l descents
    for l in range(n):
        if partitions_by_blocks.get(l + 1, 0) != len(avoiders_by_descents.get(l, set())):
            return CaseResult(key, False, "Narayana refinement fails at %d descents" % l)
    return CaseResult(key, True)


def _case_polyomino(n: int) -> CaseResult:
    key = "polyomino n=%d" % n
    images: dict = {}
    for letters in models.single_block_words(n, n):
        w = SegmentedSmirnovWord(letters, (n,))
        k = len(w.ascent_positions())
        p = models.smirnov_to_polyomino(w)
        if (p.width, p.height) != (n - k, k + 1):
            return CaseResult(key, False, "size mismatch for %s" % w)
        if not p.is_area_zero():
            return CaseResult(key, False, "image of %s has positive area" % w)
        if models.polyomino_to_word(p) != w:
            return CaseResult(key, False, "label reading does not invert %s" % w)
        images.setdefault((n - k, k + 1), set()).add(p)
    for (width, height), image_set in sorted(images.items()):
        brute = set(models.enumerate_area0_polyominoes(width, height, n))
        if brute != image_set:
            return CaseResult(key, False,
                              "area-0 polyominoes of size %dx%d not matched "
                              "(%d enumerated vs %d images)"
                              % (width, height, len(brute), len(image_set)))
    return CaseResult(key, True)


def _case_chromatic(n: int) -> CaseResult:
    key = "chromatic n=%d" % n
    tallies = models.chromatic_path_enumerator(n, n)
    for mu in partitions_of(n):
        exps = tuple(mu) + (0,) * (n - len(mu))
        for l in range(n):
            k = n - 1 - l
            got = tallies.get(l, Counter()).get(exps, 0)
            expected = enumerative_q_sum(mu, k, l, "sminv")(1) if k >= 0 else 0
            if got != expected:
                return CaseResult(key, False, "mu=%s l=%d tally=%d recursion=%d"
                                  % (mu, l, got, expected))
    return CaseResult(key, True)


def suite_models(n_max: int = 7) -> List[CaseResult]:
    results = _run_cases(_case_avoidance, list(range(1, n_max + 1)))
    results += _run_cases(_case_noncrossing, list(range(1, n_max + 1)))
    results += _run_cases(_case_polyomino, list(range(1, min(n_max, 6) + 1)))
    results += _run_cases(_case_chromatic, list(range(1, min(n_max, 6) + 1)))
    return results


_SUITE_FUNCTIONS = {
    "main-theorem": suite_main_theorem,
    "equidistribution": suite_equidistribution,
    "bijection": suite_bijection,
    "insertion-lemmas": suite_insertion_lemmas,
    "quasisym": suite_quasisym,
    "models": suite_models,
}

_DEFAULT_N_MAX = {
    "main-theorem": 6,
    "equidistribution": 6,
    "bijection": 5,
    "insertion-lemmas": 7,
    "quasisym": 5,
    "models": 7,
}


def run_suite(name: str, n_max: int | None = None, **kwargs) -> VerificationReport:
    if name not in _SUITE_FUNCTIONS:
        raise ValueError("unknown suite %r (choose from %s)" % (name, ", ".join(SUITES)))
    bound = n_max if n_max is not None else _DEFAULT_N_MAX[name]
    start = time.perf_counter()
    if name == "insertion-lemmas":
        cases = suite_insertion_lemmas(bound, **kwargs)
    else:
        cases = _SUITE_FUNCTIONS[name](bound)
    return VerificationReport(name, bound, cases, time.perf_counter() - start)
