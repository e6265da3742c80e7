"""Exact q-polynomial arithmetic, q-binomials, and the memoized coefficient recursion.

Every quantity in this package is a counting series, so QPolynomial only
supports addition and multiplication; coefficients are arbitrary-precision
nonnegative integers and subtraction is deliberately absent.
"""

from __future__ import annotations

import functools
import json
from typing import Iterable, Sequence


class QPolynomial:
    """A polynomial in q with nonnegative integer coefficients, dense ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if c < 0:
                raise ValueError("QPolynomial coefficients must be nonnegative, got %r" % (c,))
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def q_power(cls, k: int) -> "QPolynomial":
        return cls((0,) * k + (1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def times_q_power(self, k: int) -> "QPolynomial":
        if not self.coeffs:
            return self
        return QPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for p, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if p == 0:
                terms.append(str(c))
            else:
                qp = "q" if p == 1 else "q^%d" % p
                terms.append(qp if c == 1 else "%d%s" % (c, qp))
        return "+".join(terms)

    def __repr__(self) -> str:
        return "QPolynomial(%r)" % (self.coeffs,)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "QPolynomial":
        return cls(int(c) for c in data["coeffs"])


@functools.lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial [a choose b]_q; zero when b < 0 or b > a (so for all a < 0)."""
    if b < 0 or b > a:
        return QPolynomial.zero()
    if b == 0:
        return QPolynomial.one()
    return q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).times_q_power(b)


def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1); zero for n <= 0."""
    if n <= 0:
        return QPolynomial.zero()
    return QPolynomial((1,) * n)


def _binom2(x: int) -> int:
    return x * (x - 1) // 2


def _canonical_mu(mu: Sequence[int]) -> tuple:
    """Sorted-descending partition key with zero parts dropped."""
    parts = sorted((p for p in mu if p != 0), reverse=True)
    for p in parts:
        if p < 0:
            raise ValueError("content parts must be nonnegative, got %r" % (p,))
    return tuple(parts)


class SfCoefficientTable:
    """Memoized map (n, k, l, sorted mu) -> QPolynomial via the coefficient recursion.

    The recursion strips the j occurrences of the largest letter (j = last
    positive part of mu) and sums over 0 <= r, a, i <= j; out-of-range
    q-binomials vanish, so the loops run over the displayed limits verbatim.
    """

    def __init__(self):
        self.memo: dict = {}

    def coefficient(self, n: int, k: int, l: int, mu: tuple) -> QPolynomial:
        if n == 0:
            return QPolynomial.one() if (k, l) == (0, 0) else QPolynomial.zero()
        if n < 0 or k < 0 or l < 0 or k + l >= n:
            return QPolynomial.zero()
        key = (n, k, l, mu)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        j = mu[-1]  # multiplicity of the largest letter (mu sorted descending)
        mu_minus = mu[:-1]
        B = n - k - l
        total = QPolynomial.zero()
        for r in range(j + 1):
            for a in range(j + 1):
                for i in range(j + 1):
                    sub = self.coefficient(n - j, k - r, l - a, mu_minus)
                    if not sub:
                        continue
                    d = j - r - a + i
                    factor = q_binomial(B, d)
                    if not factor:
                        continue
                    factor = factor * q_binomial(B - d, a - i).times_q_power(_binom2(a - i))
                    if not factor:
                        continue
                    factor = factor * q_binomial(B - d, r - i).times_q_power(_binom2(r - i))
                    if not factor:
                        continue
                    if i:  # for i = 0 the peak factor is the empty product,
                        # even when the intermediate word has no separators
                        factor = factor * q_binomial(B - (j - r - a) - 1, i)
                    if not factor:
                        continue
                    total = total + factor * sub
        self.memo[key] = total
        return total

    def dump(self, path: str) -> None:
        data = [
            {"n": n, "k": k, "l": l, "mu": list(mu), "value": poly.to_json()}
            for (n, k, l, mu), poly in self.memo.items()
        ]
        with open(path, "w") as fh:
            json.dump(data, fh)

    def load(self, path: str) -> None:
        with open(path) as fh:
            data = json.load(fh)
        for entry in data:
            key = (entry["n"], entry["k"], entry["l"], tuple(entry["mu"]))
            self.memo[key] = QPolynomial.from_json(entry["value"])


_DEFAULT_TABLE = SfCoefficientTable()


def sf_h_coefficient(n: int, k: int, l: int, mu: Sequence[int],
                     table: SfCoefficientTable | None = None) -> QPolynomial:
    """The h_mu-coefficient of the symmetric-function side, by the memoized recursion.

    Requires k + l < n (or n = 0): the underlying symmetric function is only
    defined with at least one block.  The combinatorial sum for k + l >= n is
    genuinely zero and is available via enumerative_q_sum.
    """
    if n < 0 or k < 0 or l < 0:
        raise ValueError("n, k, l must be nonnegative")
    key = _canonical_mu(mu)
    if sum(key) != n:
        raise ValueError("content %r does not sum to n=%d" % (tuple(mu), n))
    if n > 0 and k + l >= n:
        raise ValueError("sf_h_coefficient requires k+l < n (got n=%d, k=%d, l=%d)" % (n, k, l))
    if table is None:
        table = _DEFAULT_TABLE
    return table.coefficient(n, k, l, key)


@functools.lru_cache(maxsize=None)
def standard_q_count(n: int, k: int, l: int) -> QPolynomial:
    """SW_q(1^n, k, l) by the standard-case recursion; zero when k+l >= n > 0."""
    if n == 0:
        return QPolynomial.one() if (k, l) == (0, 0) else QPolynomial.zero()
    if n < 0 or k < 0 or l < 0 or k + l >= n:
        return QPolynomial.zero()
    rest = (standard_q_count(n - 1, k, l)
            + standard_q_count(n - 1, k, l - 1)
            + standard_q_count(n - 1, k - 1, l)
            + standard_q_count(n - 1, k - 1, l - 1))
    return q_int(n - k - l) * rest


def enumerative_q_sum(mu: Sequence[int], k: int, l: int, stat: str = "sminv") -> QPolynomial:
    """Exact sum of q^stat(w) over all words of content mu with k ascents, l descents."""
    from .stats import sdinv_count, sminv_count
    from .words import enumerate_words_by_stat

    if stat == "sminv":
        fn = sminv_count
    elif stat == "sdinv":
        fn = sdinv_count
    else:
        raise ValueError("unknown statistic %r" % (stat,))
    counts: dict = {}
    for w in enumerate_words_by_stat(mu, k, l):
        v = fn(w)
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return QPolynomial.zero()
    out = [0] * (max(counts) + 1)
    for v, c in counts.items():
        out[v] = c
    return QPolynomial(out)


def hilbert_table(n: int) -> dict:
    """Table (k, l) -> standard_q_count(n, k, l) over all k + l < n."""
    return {(k, l): standard_q_count(n, k, l)
            for k in range(n) for l in range(n - k)}
