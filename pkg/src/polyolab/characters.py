"""Frobenius characteristics of labelled polyomino modules.

The symmetric group acts on labelled polyominoes (and labelled paths)
by permuting labels; the stabilizer of a shape is the Young subgroup
of its run composition, so every character here is assembled as a sum
of complete homogeneous functions h_gamma over shapes.  Brute-force
sums therefore iterate over shapes with multiplicity h_gamma, never
over individual labellings.

Gradings: q always tracks the area statistic of the shape.  A second
parameter t tracks dinv, which is defined only for ribbon shapes
(area zero); general shapes expose the q-grading only.

Closed forms are plethystic: h_n[c z] rescales every p_r by c, and
h_n[z (1-q^k)/(1-q)] rescales p_r by 1 + q^r + ... + q^(r(k-1)).
The three-term product formula for doubly labelled polyominoes has
denominators k-1 and n-1 and is only evaluated for k, n >= 2; the
remaining cases are served by the brute sum.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .macdonald import nabla
from .polyomino import dinv, enum_paths, enum_polyominoes
from .qt import QTPoly, QTRat, to_rat
from .symfunc import BiSymF, Partition, SymF, hall, partitions, pleth_scale, zmu


def h_dilate(n, c):
    """h_n[c z] for a scalar c."""
    if n == 0:
        return SymF.one()
    return pleth_scale(SymF.h([n]), lambda r: to_rat(c))


def _qint_factor(k, var):
    if var == "q":
        return lambda r: QTPoly({(i * r, 0): 1 for i in range(k)})
    if var == "t":
        return lambda r: QTPoly({(0, i * r): 1 for i in range(k)})
    raise ValueError("var must be q or t")


def h_qint(n, k, var="q"):
    """h_n[z (1-v^k)/(1-v)] with v = q or t; k = 0 gives 0 (n >= 1)."""
    if n == 0:
        return SymF.one()
    if k == 0:
        return SymF.zero()
    return pleth_scale(SymF.h([n]), _qint_factor(k, var))


def e_qint(n, k, var="q"):
    """e_n[z (1-v^k)/(1-v)] with v = q or t."""
    if n == 0:
        return SymF.one()
    if k == 0:
        return SymF.zero()
    return pleth_scale(SymF.e([n]), _qint_factor(k, var))


def _run_partition(comp):
    return Partition(sorted((c for c in comp if c), reverse=True))


def _h_sum(table):
    """Assemble sum of coeff * h_mu from a table Partition -> QTPoly."""
    tot = SymF.zero()
    for mu, c in table.items():
        tot = tot + SymF.h(mu) * QTRat(c)
    return tot


def _at_one(p):
    """Sum of the coefficients of a QTPoly, as an exact rational."""
    return sum(p.terms.values(), Fraction(0))


def dimension(f):
    """Total dimension: d! times the p_{1^d} coefficient, per degree."""
    tot = QTRat.zero()
    for mu, c in f.pc.items():
        if all(x == 1 for x in mu):
            tot = tot + c * math.factorial(len(mu))
    return tot


def dimension2(F):
    """Two-alphabet dimension of a BiSymF."""
    tot = QTRat.zero()
    for (lam, rho), c in F.pc.items():
        if all(x == 1 for x in lam) and all(x == 1 for x in rho):
            tot = tot + c * (math.factorial(len(lam)) * math.factorial(len(rho)))
    return tot


# ----------------------------------------------------------------------
# shape aggregation; every brute force below reads one of these tables

@functools.lru_cache(maxsize=None)
def _shape_table(k, n):
    """Upper run partition -> sum of q^area over shapes in the k x n box."""
    out = {}
    for pi in enum_polyominoes(k, n):
        key = _run_partition(pi.gamma())
        out[key] = out.get(key, QTPoly.zero()) + QTPoly.q(pi.area())
    return out


@functools.lru_cache(maxsize=None)
def _doubly_table(k, n, star):
    """(lower run partition, upper run partition) -> sum of q^area.

    With star set the first east run loses one step: its label is
    pinned and only k-1 labels move.
    """
    out = {}
    for pi in enum_polyominoes(k, n):
        d = list(pi.delta())
        if star:
            d[0] -= 1
        key = (_run_partition(d), _run_partition(pi.gamma()))
        out[key] = out.get(key, QTPoly.zero()) + QTPoly.q(pi.area())
    return out


@functools.lru_cache(maxsize=None)
def _ribbon_table(k, n):
    """Upper run partition -> sum of t^dinv over area-zero shapes."""
    out = {}
    for pi in enum_polyominoes(k, n):
        if pi.area() == 0:
            key = _run_partition(pi.gamma())
            out[key] = out.get(key, QTPoly.zero()) + QTPoly.t(dinv(pi))
    return out


# ----------------------------------------------------------------------
# labelled paths

def frob_labelled_paths(k, n, graded=False):
    """Character of labelled paths to (k, n): h_n[(k+1)z], or its
    q-analog h_n[z (1-q^(k+1))/(1-q)] with q counting the total
    horizontal displacement of the north steps."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if graded:
        return h_qint(n, k + 1)
    return h_dilate(n, k + 1)


def frob_labelled_paths_brute(k, n, graded=False):
    """Same character, summed shape by shape over all paths."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    out = {}
    for p in enum_paths(k, n):
        key = _run_partition(p.runs_n())
        w = QTPoly.q(sum(p.indents())) if graded else QTPoly.one()
        out[key] = out.get(key, QTPoly.zero()) + w
    return _h_sum(out)


# ----------------------------------------------------------------------
# labelled polyominoes

def frob_L(k, n):
    """Character of labelled polyominoes: (1/k) h_n[k z] binom(n+k-2, k-1)."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    return h_dilate(n, k) * QTRat(QTPoly.const(
        Fraction(math.comb(n + k - 2, k - 1), k)))


def frob_L_brute(k, n):
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    return _h_sum({mu: QTPoly.const(_at_one(c))
                   for mu, c in _shape_table(k, n).items()})


def frob_L_q(k, n):
    """Area-graded character of labelled polyominoes, as the shape sum
    of q^area h_gamma.  No closed form; conjecturally a Delta-operator
    image (see the verification registry)."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    return _h_sum(_shape_table(k, n))


def ribbon_frob(k, n):
    """dinv-graded character of ribbon-shaped labelled polyominoes."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    return _h_sum(_ribbon_table(k, n))


def ribbon_closed(k, n):
    """t^n (h_n[z (1-t^k)/(1-t)] - h_n[z (1-t^(k-1))/(1-t)])."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    return (h_qint(n, k, "t") - h_qint(n, k - 1, "t")) * QTRat(QTPoly.t(n))


# ----------------------------------------------------------------------
# doubly labelled polyominoes

def frob_L2(k, n, graded=False, closed=False):
    """Character of doubly labelled polyominoes, h_delta(y) h_gamma(z)
    summed over shapes; y carries the lower labels (a set of size k),
    z the upper ones (size n).

    With closed set, evaluates the three-term product formula instead
    of the shape sum; it needs k, n >= 2 and has no graded version.
    """
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    if closed:
        if graded:
            raise ValueError("no graded closed form")
        if k < 2 or n < 2:
            raise ValueError("formula out of domain")
        a = (BiSymF.product(h_dilate(k, n - 1), h_dilate(n, k))
             * QTRat(QTPoly.const(Fraction(1, n - 1))))
        b = (BiSymF.product(h_dilate(k, n), h_dilate(n, k - 1))
             * QTRat(QTPoly.const(Fraction(1, k - 1))))
        c = (BiSymF.product(h_dilate(k, n - 1), h_dilate(n, k - 1))
             * QTRat(QTPoly.const(Fraction(n + k - 1, (n - 1) * (k - 1)))))
        return a + b - c
    tot = BiSymF.zero()
    for (dl, gm), w in _doubly_table(k, n, False).items():
        coef = QTRat(w) if graded else QTRat(QTPoly.const(_at_one(w)))
        tot = tot + BiSymF.product(SymF.h(dl), SymF.h(gm)) * coef
    return tot


def frob_L2star(k, n):
    """Character with the first lower label pinned: (1/k) h_n[kz] h_{k-1}[ny]."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    return (BiSymF.product(h_dilate(k - 1, n), h_dilate(n, k))
            * QTRat(QTPoly.const(Fraction(1, k))))


def frob_L2star_brute(k, n):
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    tot = BiSymF.zero()
    for (dl, gm), w in _doubly_table(k, n, True).items():
        tot = tot + (BiSymF.product(SymF.h(dl), SymF.h(gm))
                     * QTRat(QTPoly.const(_at_one(w))))
    return tot


def s_rho_coefficient(r, n, graded=False):
    """Coefficient of the rectangular Schur function s_{r^n}(y) in the
    doubly labelled character of the (rn) x n box."""
    if r < 1 or n < 1:
        raise ValueError("need r, n >= 1")
    return frob_L2(r * n, n, graded=graded).coeff_sy(Partition([r] * n))


# ----------------------------------------------------------------------
# bounce pairing and the trivariate comparison series

@functools.lru_cache(maxsize=None)
def _nabla_e(m):
    # one shared image per degree; every (k, n) with k + n - 2 = m reads it
    return nabla(SymF.e([m]))


def bounce_pairing(k, n):
    """<nabla e_{k+n-2}, h_{k-1} h_{n-1}>: the area, bounce generating
    polynomial of unlabelled polyominoes in the k x n box."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    m = k + n - 2
    f = _nabla_e(m) if m >= 1 else SymF.one()
    g = SymF.one()
    for j in (k - 1, n - 1):
        if j:
            g = g * SymF.h([j])
    return hall(f, g)


def bounce_area_brute(k, n):
    """Sum of q^area over unlabelled polyominoes in the k x n box."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    tot = QTPoly.zero()
    for c in _shape_table(k, n).values():
        tot = tot + c
    return QTRat(tot)


def trivariate_frob(n, r):
    """Comparison series: sum over partitions of n of
    (rn+1)^(len-2) prod_j binom((r+1)j, j) p_lambda / z_lambda."""
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")
    out = {}
    for lam in partitions(n):
        base = Fraction(r * n + 1)
        c = base ** (len(lam) - 2) if len(lam) >= 2 else 1 / base
        for j in lam:
            c *= math.comb((r + 1) * j, j)
        out[lam] = QTRat(QTPoly.const(c / zmu(lam)))
    return SymF(out)
