"""Invariants of a 2 x n variable matrix under unimodular row moves.

The invariant ring is generated by the 2 x 2 column minors
D(i,j) = x_i y_j - x_j y_i, subject to the three-term relations
D(i,l)D(j,k) - D(i,k)D(j,l) + D(i,j)D(k,l).  Grading counts minor
factors, so degree d means a product of d minors.

A linear basis of the degree d component is indexed by parallelogram
polyominoes of width d + 1 and height n - 1.  Reading the lower height
sequence against the upper one shifted by a step gives d index pairs,
and the resulting products are exactly the multisets of pairs that form
a chain under the componentwise order (i, j) <= (k, l) iff i <= k and
j <= l.  The order is weak on purpose: repeated factors must count as
comparable or valid polyominoes would be excluded.

All arithmetic is exact.  Expanded minors carry integer coefficients
and rank certification uses fraction-free row elimination.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import comb, gcd

from .polyomino import count_polyominoes, enum_polyominoes
from .qt import QTPoly, QTRat
from .symfunc import CapExceeded, Partition, SymF, partitions, rect_principal, zmu

RANK_MAX_D = 3
RANK_MAX_N = 6
HILBERT_MAX_TRUNC = 30

_FACTOR_RE = re.compile(r"X\[(\d+),(\d+)\](?:\^(\d+))?$")


class MinorMonomial:
    """Multiset of column pairs (i, j) with i < j, one per minor factor."""

    __slots__ = ("pairs",)

    def __init__(self, pairs=()):
        if isinstance(pairs, MinorMonomial):
            pairs = pairs.pairs
        out = []
        for p in pairs:
            i, j = p
            i, j = int(i), int(j)
            if not 1 <= i < j:
                raise ValueError("minor pair needs 1 <= i < j, got %r" % (p,))
            out.append((i, j))
        self.pairs = tuple(sorted(out))

    def degree(self):
        return len(self.pairs)

    def max_index(self):
        return max((j for _, j in self.pairs), default=1)

    def text(self):
        if not self.pairs:
            return "1"
        parts = []
        for p, grp in itertools.groupby(self.pairs):
            e = sum(1 for _ in grp)
            s = "X[%d,%d]" % p
            parts.append(s if e == 1 else s + "^%d" % e)
        return "*".join(parts)

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if s == "1":
            return cls()
        pairs = []
        for factor in s.split("*"):
            m = _FACTOR_RE.match(factor.strip())
            if not m:
                raise ValueError("bad minor factor %r" % (factor,))
            i, j, e = int(m.group(1)), int(m.group(2)), int(m.group(3) or 1)
            pairs.extend([(i, j)] * e)
        return cls(pairs)

    def __eq__(self, other):
        if not isinstance(other, MinorMonomial):
            return NotImplemented
        return self.pairs == other.pairs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "MinorMonomial(%r)" % (list(self.pairs),)


class BivarPoly:
    """Integer polynomial in x_1..x_n, y_1..y_n as a sparse term map.

    Keys are exponent tuples of length 2n, x block first.  Text output
    lists terms by descending exponent tuple, so leading terms come
    first and the form is canonical.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("need at least one column")
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            c = int(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != 2 * n or any(e < 0 for e in exps):
                raise ValueError("bad exponent vector %r" % (exps,))
            clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * (2 * n): 1})

    @classmethod
    def minor(cls, i, j, n):
        """x_i y_j - x_j y_i."""
        if not 1 <= i < j <= n:
            raise ValueError("minor indices out of range")
        a = [0] * (2 * n)
        b = [0] * (2 * n)
        a[i - 1] = a[n + j - 1] = 1
        b[j - 1] = b[n + i - 1] = 1
        return cls(n, {tuple(a): 1, tuple(b): -1})

    def is_zero(self):
        return not self.terms

    def __neg__(self):
        return BivarPoly(self.n, {e: -c for e, c in self.terms.items()})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("mixed variable counts")

    def __add__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return BivarPoly(self.n, out)

    def __sub__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivarPoly(self.n,
                             {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return BivarPoly(self.n, out)

    __rmul__ = __mul__

    def permute(self, sigma):
        """Relabel column indices by sigma, a sequence of images of 1..n."""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, self.n + 1)):
            raise ValueError("sigma must be a permutation of 1..n")
        out = {}
        for exps, c in self.terms.items():
            e = [0] * (2 * self.n)
            for i in range(self.n):
                e[sigma[i] - 1] = exps[i]
                e[self.n + sigma[i] - 1] = exps[self.n + i]
            out[tuple(e)] = c
        return BivarPoly(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def _mono_text(self, exps):
        out = []
        for i, e in enumerate(exps):
            if not e:
                continue
            name = ("x%d" % (i + 1)) if i < self.n else ("y%d" % (i - self.n + 1))
            out.append(name if e == 1 else name + "^%d" % e)
        return "*".join(out)

    def text(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = self._mono_text(exps)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%d*%s" % (mag, mono)
            if not bits:
                bits.append(body if c > 0 else "-" + body)
            else:
                bits.append(("+ " if c > 0 else "- ") + body)
        return " ".join(bits)

    def __repr__(self):
        return "BivarPoly(%d, %s)" % (self.n, self.text())


# ----------------------------------------------------------------------
# basis construction


def minor_monomial(pi):
    """Minor monomial of a polyomino, one factor per east step but one.

    Pairs the lower height after each step with the upper height before
    it, shifted up by one; the polyomino condition is exactly the
    strict inequality the pairs need.
    """
    u = pi.upper.heights()
    v = pi.lower.heights()
    return MinorMonomial((v[i] + 1, u[i - 1] + 1) for i in range(1, len(u)))


def minor_basis(d, n):
    """One standard minor monomial per polyomino of width d + 1.

    Degree d products on n columns; the list order follows the
    polyomino enumeration and every entry is checked standard.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if n < 2:
        raise ValueError("need at least two columns")
    out = []
    for pi in enum_polyominoes(d + 1, n - 1):
        m = minor_monomial(pi)
        assert is_standard(m) and m.max_index() <= n
        out.append(m)
    return out


def is_standard(m):
    """True iff all factor pairs are chained in the componentwise order."""
    pairs = sorted(set(MinorMonomial(m).pairs))
    for (a, b), (c, e) in itertools.combinations(pairs, 2):
        if not ((a <= c and b <= e) or (c <= a and e <= b)):
            return False
    return True


def expand(m, n):
    """Multiply out the minors of m inside the 2 x n polynomial ring."""
    m = MinorMonomial(m)
    if m.max_index() > n:
        raise ValueError("column index exceeds n")
    out = BivarPoly.one(n)
    for (i, j) in m.pairs:
        out = out * BivarPoly.minor(i, j, n)
    return out


# ----------------------------------------------------------------------
# rank certification


def _strip_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {e: v // g for e, v in row.items()}


def _echelon_rank(rows):
    """Rank of sparse integer rows; cross-multiply, divide out content."""
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _strip_content(row)
                rank += 1
                break
            a, b = piv[col], row[col]
            new = {e: a * v for e, v in row.items()}
            for e, v in piv.items():
                w = new.get(e, 0) - b * v
                if w:
                    new[e] = w
                elif e in new:
                    del new[e]
            row = _strip_content(new)
    return rank


def rank_check(d, n, max_d=RANK_MAX_D, max_n=RANK_MAX_N):
    """Exact rank of the expanded degree-d basis over the rationals."""
    if d > max_d:
        raise CapExceeded(d, max_d)
    if n > max_n:
        raise CapExceeded(n, max_n)
    rows = [expand(m, n).terms for m in minor_basis(d, n)]
    return _echelon_rank(rows)


def rank_report(d, n, max_d=RANK_MAX_D, max_n=RANK_MAX_N):
    expected = count_polyominoes(d + 1, n - 1)
    rank = rank_check(d, n, max_d, max_n)
    return {"d": d, "n": n, "expected": expected, "rank": rank,
            "ok": rank == expected}


# ----------------------------------------------------------------------
# graded enumeration


def hilbert(n, trunc):
    """Basis counts per degree next to the closed-form series.

    Returns (series_a, series_b) through degree trunc.  series_a counts
    the minor basis, series_b expands
    (sum_k binom(n-2,k) binom(n-1,k) x^k / (k+1)) / (1 - x^(2n-1)).
    The two disagree in general; callers are expected to surface both.
    """
    if n < 2:
        raise ValueError("need at least two columns")
    if trunc < 0:
        raise ValueError("truncation must be nonnegative")
    if trunc > HILBERT_MAX_TRUNC:
        raise CapExceeded(trunc, HILBERT_MAX_TRUNC)
    series_a = [count_polyominoes(d + 1, n - 1) for d in range(trunc + 1)]
    series_b = [0] * (trunc + 1)
    for k in range(n - 1):
        c = comb(n - 2, k) * comb(n - 1, k) // (k + 1)
        for j in range(k, trunc + 1, 2 * n - 1):
            series_b[j] += c
    return series_a, series_b


# ----------------------------------------------------------------------
# symmetric group character of each degree


def _fixed_power_sum(k, mu):
    # fixed points of the k-th power of a permutation of cycle type mu
    return sum(p for p in mu if k % p == 0)


def littlewood_frob(d, n):
    """Frobenius characteristic of the column permutation action.

    Expands the two-row rectangle Schur function in power sums, then
    evaluates p_k at the fixed-point count of the k-th power of each
    cycle type.  Checked against explicit traces on the expanded basis
    for small sizes.
    """
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    sdd = SymF.one() if d == 0 else SymF.s([d, d])
    out = {}
    for mu in partitions(n):
        val = Fraction(0)
        for rho, c in sdd.pc.items():
            assert c.num.qdeg() == c.num.tdeg() == 0
            assert c.den.qdeg() == c.den.tdeg() == 0
            f = c.num.terms.get((0, 0), Fraction(0)) / c.den.terms[(0, 0)]
            for r in rho:
                f *= _fixed_power_sum(r, mu)
            val += f
        if val:
            out[Partition(mu)] = QTRat(QTPoly.const(val / zmu(mu)))
    return SymF(out)


def slr_count(k, n, r):
    """Number of r-tuples of nested paths in a k x n box, as an integer.

    Principal evaluation of the r x k rectangle Schur function on n + 1
    letters; r = 1 gives binom(n + k, k), r = 2 counts polyominoes.
    """
    if k < 0 or n < 0 or r < 0:
        raise ValueError("need k, n, r >= 0")
    v = rect_principal(k, r, n + 1).evaluate(Fraction(1), Fraction(1))
    assert v.denominator == 1
    return int(v)
