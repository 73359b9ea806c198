"""Registry of named identity checks with declared parameter domains.

Every identity this package can verify lives here as data: an id, a
status tag, an anchor label for reports, a parameter box (with an
optional named predicate trimming it), and the names of two builders.
Running a check means evaluating both builders at a parameter point and
comparing the results, either symbolically (canonical forms) or by
exact evaluation on an integer grid larger than the degree bounds.

Status semantics: a "theorem" point that compares unequal is a failure
of the build.  "conjecture" and "observation" points are reported
either way; expect_equal records the documented outcome, so a strict
run fails whenever any point disagrees with its documentation.  The
one entry expected to be unequal (hilbertDual, the two displayed
series for the invariant ring) is marked expect_equal=False.

Records carry digests of the canonical text of both sides rather than
the values themselves, so reports stay small and diffable; equal values
always produce equal digests.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .qt import (
    QTPoly,
    QTRat,
    evaluation_equal,
    qbinom,
    qint,
    swap_qt,
    to_rat,
)
from .symfunc import (
    BiSymF,
    Composition,
    Partition,
    SymF,
    compositions,
    omega,
    partitions,
    pleth_scale,
    to_basis,
)
from .macdonald import (
    OpSpec,
    bmu,
    c_op,
    delta,
    e_gamma,
    e_mu_via_H,
    e_nr,
    macdonald_H,
    nabla,
    sym_eval,
)
from .polyomino import (
    AWord,
    cyclic_map,
    count_polyominoes,
    dinv,
    enum_labelled,
    enum_labelled_paths,
    enum_paths,
    enum_polyominoes,
    from_motzkin,
    motzkin_to_aword,
    to_aword,
    to_motzkin,
)
from .characters import (
    bounce_area_brute,
    bounce_pairing,
    dimension,
    e_qint,
    frob_L,
    frob_L2,
    frob_L2star,
    frob_L2star_brute,
    frob_L_brute,
    frob_L_q,
    frob_labelled_paths,
    frob_labelled_paths_brute,
    h_dilate,
    ribbon_closed,
    ribbon_frob,
    s_rho_coefficient,
    trivariate_frob,
)
from .sl2 import MinorMonomial, expand, hilbert, littlewood_frob, rank_check, slr_count

THEOREM = "theorem"
CONJECTURE = "conjecture"
OBSERVATION = "observation"

ONE = QTPoly.one()
PARAM_ORDER = ("k", "n", "r", "d")


@dataclass(frozen=True)
class IdentityEntry:
    """One named check: two builders over a parameter box."""

    id: str
    status: str
    anchor: str
    domain: tuple  # ((param, lo, hi), ...) in PARAM_ORDER
    lhs: str
    rhs: str
    where: str = None
    expect_equal: bool = True


# ----------------------------------------------------------------------
# predicates trimming rectangular domains

PREDICATES = {
    "k_le_n": lambda p: p["k"] <= p["n"],
    "sum_le_8": lambda p: p["k"] + p["n"] <= 8,
    "bounce_window": lambda p: p["k"] <= p["n"] and p["k"] + p["n"] <= 9,
    "b_lt_a": lambda p: p["r"] < p["k"],
    "box_le_4": lambda p: p["r"] * p["n"] <= 4,
    "narrow_box": lambda p: p["r"] == 1 or p["n"] <= 3,
}


# ----------------------------------------------------------------------
# builders; each takes the parameter dict of one point

def _const(c):
    return QTRat(QTPoly.const(Fraction(c)))


def _h_of(m):
    return SymF.one() if m == 0 else SymF.h([m])


def _swap_symf(f):
    return SymF({mu: swap_qt(c) for mu, c in f.pc.items()})


def _multinomial(n, comp):
    m, rest = 1, n
    for part in comp:
        m *= math.comb(rest, part)
        rest -= part
    return m


def _count_enum(p):
    return sum(1 for _ in enum_polyominoes(p["k"], p["n"]))


def _count_closed(p):
    return count_polyominoes(p["k"], p["n"])


def _count_L_shapes(p):
    k, n = p["k"], p["n"]
    return sum(_multinomial(n, pi.gamma()) for pi in enum_polyominoes(k, n))


def _count_L_closed(p):
    k, n = p["k"], p["n"]
    return k ** (n - 1) * math.comb(n + k - 2, k - 1)


def _labelled_by_shape(p):
    seen = {}
    for L in enum_labelled(p["k"], p["n"]):
        key = L.shape.text()
        seen[key] = seen.get(key, 0) + 1
    return sorted(seen.items())


def _multinomial_by_shape(p):
    return sorted((pi.text(), _multinomial(p["n"], pi.gamma()))
                  for pi in enum_polyominoes(p["k"], p["n"]))


def _labelled_gf_coeff(p):
    # coefficient of x^(n-1) in (1 - kx)^(-k) by truncated convolution
    k, n = p["k"], p["n"]
    geo = [k ** m for m in range(n)]
    series = [1] + [0] * (n - 1)
    for _ in range(k):
        series = [sum(series[i] * geo[m - i] for i in range(m + 1))
                  for m in range(n)]
    return series[n - 1]


def _path_area_sum(p):
    tot = QTPoly.zero()
    for path in enum_paths(p["k"], p["n"]):
        tot = tot + QTPoly.q(path.area())
    return tot


def _path_area_closed(p):
    return qbinom(p["n"] + p["k"], p["k"])


def _lpath_area_sum(p):
    tot = QTPoly.zero()
    for lp in enum_labelled_paths(p["k"], p["n"]):
        tot = tot + QTPoly.q(sum(lp.path.indents()))
    return tot


def _lpath_area_closed(p):
    return qint(p["k"] + 1) ** p["n"]


def _encoding_failures(p):
    bad = 0
    for pi in enum_polyominoes(p["k"], p["n"]):
        w = to_motzkin(pi)
        aw = motzkin_to_aword(w)
        if from_motzkin(w) != pi:
            bad += 1
        if to_aword(pi) != aw or AWord.parse(aw.text()) != aw:
            bad += 1
        if (pi.area() == 0
                and dinv(pi) != pi.lower.area() + p["k"] + p["n"] - 1):
            bad += 1
    return bad


def _cyclic_profile(p):
    k, n = p["k"], p["n"]
    reps = {}
    size_bad = self_missing = partition_bad = 0
    inputs = 0
    for lp in enum_labelled_paths(k - 1, n):
        for b in enum_paths(k - 1, n - 1):
            inputs += 1
            pairs, rep = cyclic_map(lp, b)
            if len(pairs) != k:
                size_bad += 1
            if not any(a == lp and bb == b for a, bb in pairs):
                self_missing += 1
            if lp.set_partition() != rep.set_partition():
                partition_bad += 1
            reps[rep.text()] = reps.get(rep.text(), 0) + 1
    mult_bad = sum(1 for v in reps.values() if v != k)
    return {"inputs": inputs, "classes": len(reps),
            "size_bad": size_bad, "self_missing": self_missing,
            "partition_bad": partition_bad, "multiplicity_bad": mult_bad}


def _cyclic_expected(p):
    k, n = p["k"], p["n"]
    classes = k ** (n - 1) * math.comb(n + k - 2, k - 1)
    return {"inputs": k * classes, "classes": classes,
            "size_bad": 0, "self_missing": 0,
            "partition_bad": 0, "multiplicity_bad": 0}


def _frob_paths_brute(p):
    k, n = p["k"], p["n"]
    return [frob_labelled_paths_brute(k, n),
            frob_labelled_paths_brute(k, n, graded=True)]


def _frob_paths_closed(p):
    k, n = p["k"], p["n"]
    return [frob_labelled_paths(k, n),
            frob_labelled_paths(k, n, graded=True)]


def _frob_L_brute(p):
    return frob_L_brute(p["k"], p["n"])


def _frob_L_closed(p):
    return frob_L(p["k"], p["n"])


def _frob_L_display(p):
    k, n = p["k"], p["n"]
    if n == 1:
        return SymF.h([1])
    if n == 2:
        return (SymF.h([1, 1]) * _const(math.comb(k, 2))
                + SymF.h([2]) * _const(k))
    if n == 3:
        return (SymF.h([1, 1, 1]) * _const(2 * math.comb(k + 1, 4))
                + SymF.h([2, 1]) * _const(3 * math.comb(k + 1, 3))
                + SymF.h([3]) * _const(math.comb(k + 1, 2)))
    if n == 4:
        return (SymF.h([1, 1, 1, 1]) * _const(5 * math.comb(k + 2, 6))
                + SymF.h([2, 1, 1]) * _const(10 * math.comb(k + 2, 5))
                + SymF.h([3, 1]) * _const(4 * math.comb(k + 2, 4))
                + SymF.h([2, 2]) * _const(2 * math.comb(k + 2, 4))
                + SymF.h([4]) * _const(math.comb(k + 2, 3)))
    raise ValueError("display values cover n <= 4 only")


def _frob_L_q_shift(p):
    return frob_L_q(p["k"] + 1, p["n"])


def _delta_t1_twist(p):
    return omega(delta(OpSpec(_h_of(p["k"]), "t=1"), SymF.e([p["n"]])))


def _deltabar_lhs(p):
    k, n = p["k"], p["n"]
    pre = QTRat(QTPoly.q(k * n - math.comb(k + 1, 2)))
    return delta(OpSpec(SymF.e([k]), "t=1/q"), SymF.e([n])) * pre


def _deltabar_rhs(p):
    k, n = p["k"], p["n"]
    return e_qint(n, k + 1) * QTRat(qbinom(n, k), qint(k + 1))


def _ribbon_sum(p):
    return ribbon_frob(p["k"], p["n"])


def _ribbon_closed(p):
    return ribbon_closed(p["k"], p["n"])


def _frob_L2_shapes(p):
    return frob_L2(p["k"], p["n"])


def _frob_L2_closed(p):
    return frob_L2(p["k"], p["n"], closed=True)


def _frob_L2star_brute(p):
    return frob_L2star_brute(p["k"], p["n"])


def _frob_L2star_closed(p):
    return frob_L2star(p["k"], p["n"])


def _srho_coeff(p):
    return s_rho_coefficient(p["r"], p["n"])


def _srho_closed(p):
    rn = p["r"] * p["n"]
    return h_dilate(p["n"], rn - 1) * _const(Fraction(1, rn - 1))


def _srho_graded_coeff(p):
    return s_rho_coefficient(p["r"], p["n"], graded=True)


def _srho_nabla_twist(p):
    r, n = p["r"], p["n"]
    scalar = QTRat(QTPoly.const(Fraction((-1) ** (n - 1))), QTPoly.q(n - 1))
    return omega(nabla(SymF.h([n]), r, "t=1") * scalar)


def _nonneg_int_coeffs(c):
    if c.den != ONE:
        return False
    return all(v >= 0 and v.denominator == 1 for v in c.num.terms.values())


def _trivariate_h_negatives(p):
    r, n = p["r"], p["n"]
    diff = frob_L(r * n, n) - trivariate_frob(n, r)
    bad = 0
    for mu, c in to_basis(diff, "h").items():
        if (c.den != ONE or c.num.qdeg() > 0 or c.num.tdeg() > 0
                or c.num.terms.get((0, 0), Fraction(0)) < 0):
            bad += 1
    return bad


def _delta_nabla_s_negatives(p):
    r, n = p["r"], p["n"]
    f = SymF.h([r * n - 1]) if r * n > 1 else SymF.one()
    d = (delta(f, SymF.e([n]))
         - nabla(SymF.e([n]), r) * QTRat(QTPoly.q(math.comb(n - 1, 2))))
    return sum(1 for c in to_basis(d, "s").values()
               if not _nonneg_int_coeffs(c))


def _triangularity_violations(p):
    n = p["n"]
    bad = 0
    for mu in partitions(n):
        H = macdonald_H(mu)
        if to_basis(H, "s")[Partition((n,))] != QTRat.one():
            bad += 1
        scaled_q = pleth_scale(H, lambda r: QTRat(ONE - QTPoly.q(r)))
        bad += sum(1 for nu in to_basis(scaled_q, "s")
                   if not nu.dominates(mu))
        scaled_t = pleth_scale(H, lambda r: QTRat(ONE - QTPoly.t(r)))
        bad += sum(1 for nu in to_basis(scaled_t, "s")
                   if not nu.dominates(mu.conjugate()))
        if _swap_symf(H) != macdonald_H(mu.conjugate()):
            bad += 1
    return bad


def _H_one_row(p):
    return macdonald_H(Partition((p["n"],)))


def _H_one_row_closed(p):
    n = p["n"]
    pref = QTRat.one()
    for i in range(1, n + 1):
        pref = pref * QTRat(ONE - QTPoly.q(i))
    return pleth_scale(SymF.h([n]),
                       lambda r: QTRat(ONE, ONE - QTPoly.q(r))) * pref


def _H_t1_by_mu(p):
    return [macdonald_H(mu).specialize_t("t=1") for mu in partitions(p["n"])]


def _H_t1_products(p):
    out = []
    for mu in partitions(p["n"]):
        f = SymF.one()
        for part in mu:
            f = f * macdonald_H(Partition((part,))).specialize_t("t=1")
        out.append(f)
    return out


def _H_invq_by_mu(p):
    return [macdonald_H(mu).specialize_t("t=1/q") for mu in partitions(p["n"])]


def _H_invq_hooks(p):
    out = []
    for mu in partitions(p["n"]):
        ns = mu.n_stat()
        pref = QTRat(ONE, QTPoly.q(ns)) if ns else QTRat.one()
        for (i, j) in mu.cells():
            pref = pref * QTRat(ONE - QTPoly.q(mu.hook(i, j)))
        out.append(pleth_scale(SymF.s(mu),
                               lambda r: QTRat(ONE, ONE - QTPoly.q(r))) * pref)
    return out


def _nabla_e2(p):
    return nabla(SymF.e([2]))


def _nabla_e2_display(p):
    return SymF.s([2]) + SymF.s([1, 1]) * QTRat(QTPoly.q() + QTPoly.t())


def _prop1_lhs(p):
    return delta(OpSpec(SymF.h([p["k"]]), "t=0"), SymF.e([p["n"]]))


def _prop1_rhs(p):
    k, n = p["k"], p["n"]
    big = pleth_scale(
        SymF.e([n]),
        lambda r: QTRat(QTPoly({(j * r, 0): 1 for j in range(k + 1)})))
    small = pleth_scale(
        SymF.e([n]),
        lambda r: QTRat(QTPoly({(j * r, 0): 1 for j in range(k)})))
    return (big - small) * QTRat(ONE, QTPoly.q(k))


def _prop2_lhs(p):
    k, n = p["k"], p["n"]
    return omega(delta(OpSpec(_h_of(k - 1), "generic"),
                       SymF.e([n]))).specialize_t("t=1/q")


def _prop2_rhs(p):
    k, n = p["k"], p["n"]
    hpart = pleth_scale(
        SymF.h([n]),
        lambda r: QTRat(QTPoly({(j * r, 0): 1 for j in range(k)})))
    epow = n + k - n * k - 1
    pref = (QTRat(QTPoly.q(epow), qint(k)) if epow >= 0
            else QTRat(ONE, QTPoly.q(-epow) * qint(k)))
    return hpart * (pref * QTRat(qbinom(n + k - 2, k - 1)))


def _enr_total(p):
    tot = SymF.zero()
    for r in range(1, p["n"] + 1):
        tot = tot + e_nr(p["n"], r)
    return tot


def _e_n(p):
    return SymF.e([p["n"]])


def _e_mu_via_H_list(p):
    return [e_mu_via_H(mu) for mu in partitions(p["n"])]


def _e_gamma_by_mu(p):
    return [e_gamma(Composition(tuple(mu))) for mu in partitions(p["n"])]


_COMM_SEEDS = (SymF.one(), SymF.s([1]))


def _comm_lhs(p):
    a, b = p["k"], p["r"]
    return [(c_op(b, c_op(a, seed)) + c_op(a - 1, c_op(b + 1, seed)))
            * QTRat.q() for seed in _COMM_SEEDS]


def _comm_rhs(p):
    a, b = p["k"], p["r"]
    return [c_op(a, c_op(b, seed)) + c_op(b + 1, c_op(a - 1, seed))
            for seed in _COMM_SEEDS]


def _eigen_images(p):
    k, n = p["k"], p["n"]
    out = []
    for r in range(1, n + 1):
        for comp in compositions(n, r):
            out.append(delta(OpSpec(SymF.h([k]), "t=0"), e_gamma(comp)))
    return out


def _eigen_scaled(p):
    k, n = p["k"], p["n"]
    out = []
    for r in range(1, n + 1):
        for comp in compositions(n, r):
            out.append(e_gamma(comp) * QTRat(qbinom(k + r - 1, r - 1)))
    return out


_HOOK_FS = (SymF.h([1]), SymF.h([2]), SymF.e([2]))


def _hook_cell_values(p):
    n = p["n"]
    out = []
    for r in range(n):
        B = bmu(Partition((n - r,) + (1,) * r))

        def point(rr, B=B):
            Br = QTPoly({(qe * rr, te * rr): c
                         for (qe, te), c in B.terms.items()})
            return QTRat(Br).specialize_t("t=1/q")

        out.extend(sym_eval(f, point, "t=1/q") for f in _HOOK_FS)
    return out


def _hook_flat_values(p):
    n = p["n"]
    out = []
    for r in range(n):

        def point(rr, r=r):
            return QTRat(QTPoly({(j * rr, 0): 1 for j in range(n)}),
                         QTPoly.q(r * rr))

        out.extend(sym_eval(f, point, "t=1/q") for f in _HOOK_FS)
    return out


def _bounce_value(p):
    return bounce_pairing(p["k"], p["n"])


def _bounce_swapped(p):
    return swap_qt(bounce_pairing(p["k"], p["n"]))


def _bounce_flipped(p):
    return bounce_pairing(p["n"], p["k"])


def _bounce_at_t1(p):
    return bounce_pairing(p["k"], p["n"]).specialize_t("t=1")


def _bounce_area_sum(p):
    return bounce_area_brute(p["k"], p["n"])


def _bounce_invq(p):
    k, n = p["k"], p["n"]
    return (bounce_pairing(k, n).specialize_t("t=1/q")
            * QTRat(QTPoly.q((k - 1) * (n - 1))))


def _qangela_closed(p):
    k, n = p["k"], p["n"]
    return QTRat(qbinom(n + k, n) * qbinom(n + k - 2, n - 1), qint(n + k))


def _plucker_violations(p):
    n = p["n"]
    bad = 0
    for (i, j, k, l) in itertools.combinations(range(1, n + 1), 4):
        rel = (expand(MinorMonomial([(i, l), (j, k)]), n)
               - expand(MinorMonomial([(i, k), (j, l)]), n)
               + expand(MinorMonomial([(i, j), (k, l)]), n))
        if not rel.is_zero():
            bad += 1
    return bad


def _minor_rank(p):
    return rank_check(p["d"], p["n"])


def _minor_count(p):
    return count_polyominoes(p["d"] + 1, p["n"] - 1)


def _littlewood_dim(p):
    return dimension(littlewood_frob(p["d"], p["n"]))


def _slr_two_count(p):
    return slr_count(p["k"], p["n"], 2)


def _pp_count(p):
    return count_polyominoes(p["k"] + 1, p["n"])


def _hilbert_basis_series(p):
    return hilbert(p["n"], 8)[0]


def _hilbert_closed_series(p):
    return hilbert(p["n"], 8)[1]


def _zero(p):
    return 0


BUILDERS = {
    "countEnum": _count_enum,
    "countClosed": _count_closed,
    "countLShapes": _count_L_shapes,
    "countLClosed": _count_L_closed,
    "labelledByShape": _labelled_by_shape,
    "multinomialByShape": _multinomial_by_shape,
    "labelledGFCoeff": _labelled_gf_coeff,
    "pathAreaSum": _path_area_sum,
    "pathAreaClosed": _path_area_closed,
    "lpathAreaSum": _lpath_area_sum,
    "lpathAreaClosed": _lpath_area_closed,
    "encodingFailures": _encoding_failures,
    "cyclicProfile": _cyclic_profile,
    "cyclicExpected": _cyclic_expected,
    "frobPathsBrute": _frob_paths_brute,
    "frobPathsClosed": _frob_paths_closed,
    "frobLBrute": _frob_L_brute,
    "frobLClosed": _frob_L_closed,
    "frobLDisplay": _frob_L_display,
    "frobLqShift": _frob_L_q_shift,
    "deltaT1Twist": _delta_t1_twist,
    "deltabarLhs": _deltabar_lhs,
    "deltabarRhs": _deltabar_rhs,
    "ribbonSum": _ribbon_sum,
    "ribbonClosed": _ribbon_closed,
    "frobL2Shapes": _frob_L2_shapes,
    "frobL2Closed": _frob_L2_closed,
    "frobL2starBrute": _frob_L2star_brute,
    "frobL2starClosed": _frob_L2star_closed,
    "srhoCoeff": _srho_coeff,
    "srhoClosed": _srho_closed,
    "srhoGradedCoeff": _srho_graded_coeff,
    "srhoNablaTwist": _srho_nabla_twist,
    "trivariateHNegatives": _trivariate_h_negatives,
    "deltaNablaSNegatives": _delta_nabla_s_negatives,
    "triangularityViolations": _triangularity_violations,
    "HOneRow": _H_one_row,
    "HOneRowClosed": _H_one_row_closed,
    "Ht1ByMu": _H_t1_by_mu,
    "Ht1Products": _H_t1_products,
    "HInvqByMu": _H_invq_by_mu,
    "HInvqHooks": _H_invq_hooks,
    "nablaE2Value": _nabla_e2,
    "nablaE2Display": _nabla_e2_display,
    "prop1Lhs": _prop1_lhs,
    "prop1Rhs": _prop1_rhs,
    "prop2Lhs": _prop2_lhs,
    "prop2Rhs": _prop2_rhs,
    "enrTotal": _enr_total,
    "eN": _e_n,
    "eMuViaH": _e_mu_via_H_list,
    "eGammaByMu": _e_gamma_by_mu,
    "commLhs": _comm_lhs,
    "commRhs": _comm_rhs,
    "eigenImages": _eigen_images,
    "eigenScaled": _eigen_scaled,
    "hookCellValues": _hook_cell_values,
    "hookFlatValues": _hook_flat_values,
    "bounceValue": _bounce_value,
    "bounceSwapped": _bounce_swapped,
    "bounceFlipped": _bounce_flipped,
    "bounceAtT1": _bounce_at_t1,
    "bounceAreaSum": _bounce_area_sum,
    "bounceInvq": _bounce_invq,
    "qangelaClosed": _qangela_closed,
    "pluckerViolations": _plucker_violations,
    "minorRank": _minor_rank,
    "minorCount": _minor_count,
    "littlewoodDim": _littlewood_dim,
    "slrTwoCount": _slr_two_count,
    "ppCount": _pp_count,
    "hilbertBasisSeries": _hilbert_basis_series,
    "hilbertClosedSeries": _hilbert_closed_series,
    "zero": _zero,
}


# ----------------------------------------------------------------------
# the registry table

def _E(id, status, anchor, domain, lhs, rhs, where=None, expect_equal=True):
    return IdentityEntry(id, status, anchor, tuple(domain), lhs, rhs,
                         where, expect_equal)


REGISTRY = (
    _E("counts", THEOREM, "unlabeled",
       [("k", 1, 6), ("n", 1, 6)], "countEnum", "countClosed"),
    _E("countsL", THEOREM, "labelled2",
       [("k", 1, 6), ("n", 1, 6)], "countLShapes", "countLClosed"),
    _E("labelledTerm", THEOREM, "labelled",
       [("k", 1, 4), ("n", 1, 4)], "labelledByShape", "multinomialByShape"),
    _E("labelled3", THEOREM, "labelled3",
       [("k", 1, 6), ("n", 1, 10)], "labelledGFCoeff", "countLClosed"),
    _E("areaPaths", THEOREM, "path-area",
       [("k", 0, 6), ("n", 1, 6)], "pathAreaSum", "pathAreaClosed"),
    _E("areaLabelled", THEOREM, "frobq",
       [("k", 0, 6), ("n", 1, 6)], "lpathAreaSum", "lpathAreaClosed"),
    _E("encodings", THEOREM, "motzkin-words",
       [("k", 1, 7), ("n", 1, 7)], "encodingFailures", "zero",
       where="sum_le_8"),
    _E("cyclic", THEOREM, "eq:Frob-proof",
       [("k", 1, 4), ("n", 1, 4)], "cyclicProfile", "cyclicExpected"),
    _E("frobPaths", THEOREM, "chemins",
       [("k", 0, 3), ("n", 1, 4)], "frobPathsBrute", "frobPathsClosed"),
    _E("eqFrob", THEOREM, "eq:Frob",
       [("k", 1, 6), ("n", 1, 6)], "frobLBrute", "frobLClosed"),
    _E("frobSpecial", THEOREM, "special-values",
       [("k", 1, 8), ("n", 1, 4)], "frobLClosed", "frobLDisplay"),
    _E("michele", CONJECTURE, "michele",
       [("k", 0, 3), ("n", 1, 5)], "frobLqShift", "deltaT1Twist"),
    _E("deltabar", OBSERVATION, "delta-bar",
       [("k", 1, 6), ("n", 1, 6)], "deltabarLhs", "deltabarRhs",
       where="k_le_n"),
    _E("ribbonFrob", OBSERVATION, "Frob-ribbon",
       [("k", 1, 5), ("n", 1, 5)], "ribbonSum", "ribbonClosed"),
    _E("doubleFrob", OBSERVATION, "double_frob",
       [("k", 2, 4), ("n", 2, 4)], "frobL2Shapes", "frobL2Closed"),
    _E("frob2star", THEOREM, "eq:Frob2star",
       [("k", 1, 4), ("n", 1, 4)], "frobL2starBrute", "frobL2starClosed"),
    _E("srho", THEOREM, "doubly_diag",
       [("n", 2, 4), ("r", 1, 2)], "srhoCoeff", "srhoClosed",
       where="box_le_4"),
    _E("srhoGraded", CONJECTURE, "doubly_diag-graded",
       [("n", 2, 4), ("r", 1, 2)], "srhoGradedCoeff", "srhoNablaTwist",
       where="box_le_4"),
    _E("remark3", OBSERVATION, "formule_frob_p",
       [("n", 1, 5), ("r", 1, 2)], "trivariateHNegatives", "zero"),
    _E("diffSchur", OBSERVATION, "diff_shur_pos",
       [("n", 2, 4), ("r", 1, 2)], "deltaNablaSNegatives", "zero",
       where="narrow_box"),
    _E("triangular", THEOREM, "H-basis",
       [("n", 1, 6)], "triangularityViolations", "zero"),
    _E("Hunepart", THEOREM, "H_unepart",
       [("n", 1, 6)], "HOneRow", "HOneRowClosed"),
    _E("Hmult", THEOREM, "H-t1-mult",
       [("n", 1, 6)], "Ht1ByMu", "Ht1Products"),
    _E("HtInvq", THEOREM, "H_t_invq",
       [("n", 1, 6)], "HInvqByMu", "HInvqHooks"),
    _E("nablaE2", THEOREM, "nabla-e2",
       [], "nablaE2Value", "nablaE2Display"),
    _E("propEq1", THEOREM, "prop_equation1",
       [("k", 1, 4), ("n", 1, 5)], "prop1Lhs", "prop1Rhs"),
    _E("propEq2", THEOREM, "prop_equation2",
       [("k", 1, 4), ("n", 1, 5)], "prop2Lhs", "prop2Rhs"),
    _E("enrSum", THEOREM, "en_to_Enr",
       [("n", 1, 6)], "enrTotal", "eN"),
    _E("egamma", THEOREM, "Emu_en_Hmu",
       [("n", 1, 5)], "eMuViaH", "eGammaByMu"),
    _E("commC", THEOREM, "commC",
       [("k", 2, 4), ("r", 1, 3)], "commLhs", "commRhs", where="b_lt_a"),
    _E("eigenD", THEOREM, "eigenfunctD",
       [("k", 1, 4), ("n", 1, 5)], "eigenImages", "eigenScaled"),
    _E("hookEig", OBSERVATION, "hook_eigenvals",
       [("n", 2, 6)], "hookCellValues", "hookFlatValues"),
    _E("bounceSym", THEOREM, "angela",
       [("k", 1, 8), ("n", 1, 8)], "bounceValue", "bounceSwapped",
       where="bounce_window"),
    _E("bounceFlip", THEOREM, "angela",
       [("k", 1, 8), ("n", 1, 8)], "bounceValue", "bounceFlipped",
       where="bounce_window"),
    _E("bounceArea", THEOREM, "angela",
       [("k", 1, 8), ("n", 1, 8)], "bounceAtT1", "bounceAreaSum",
       where="bounce_window"),
    _E("qangela", THEOREM, "qangela",
       [("k", 1, 8), ("n", 1, 8)], "bounceInvq", "qangelaClosed",
       where="bounce_window"),
    _E("plucker", THEOREM, "plucker",
       [("n", 4, 6)], "pluckerViolations", "zero"),
    _E("sl2rank", THEOREM, "minor-basis",
       [("n", 2, 5), ("d", 0, 3)], "minorRank", "minorCount"),
    _E("littlewoodDim", THEOREM, "littlewood",
       [("n", 2, 6), ("d", 0, 2)], "littlewoodDim", "minorCount"),
    _E("sl2count", THEOREM, "PPschur",
       [("k", 0, 5), ("n", 1, 5)], "slrTwoCount", "ppCount"),
    _E("hilbertDual", OBSERVATION, "hilbert-dual",
       [("n", 2, 5)], "hilbertBasisSeries", "hilbertClosedSeries",
       expect_equal=False),
)

REGISTRY_BY_ID = {e.id: e for e in REGISTRY}
if len(REGISTRY_BY_ID) != len(REGISTRY):
    raise AssertionError("duplicate identity ids")


def entry_points(entry, max_k=None, max_n=None):
    """Parameter dicts of one entry, clamped and filtered, in order."""
    names, ranges = [], []
    for (name, lo, hi) in entry.domain:
        if name == "k" and max_k is not None:
            hi = min(hi, max_k)
        if name == "n" and max_n is not None:
            hi = min(hi, max_n)
        names.append(name)
        ranges.append(range(lo, hi + 1))
    pred = PREDICATES[entry.where] if entry.where else None
    for combo in itertools.product(*ranges):
        params = dict(zip(names, combo))
        if pred is None or pred(params):
            yield params


# ----------------------------------------------------------------------
# comparison and digests

def _sym_equal(a, b):
    if isinstance(a, (SymF, BiSymF)) or isinstance(b, (SymF, BiSymF)):
        return type(a) is type(b) and a == b
    if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
        return (len(a) == len(b)
                and all(_sym_equal(x, y) for x, y in zip(a, b)))
    if isinstance(a, dict) and isinstance(b, dict):
        return (set(a) == set(b)
                and all(_sym_equal(a[k], b[k]) for k in a))
    if isinstance(a, str) or isinstance(b, str):
        return a == b
    return to_rat(a) == to_rat(b)


def _eval_equal(a, b, bound):
    if isinstance(a, (SymF, BiSymF)) or isinstance(b, (SymF, BiSymF)):
        if type(a) is not type(b):
            return False
        keys = set(a.pc) | set(b.pc)
        zero = QTRat.zero()
        return all(_eval_equal(a.pc.get(key, zero), b.pc.get(key, zero),
                               bound) for key in keys)
    if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
        return (len(a) == len(b)
                and all(_eval_equal(x, y, bound) for x, y in zip(a, b)))
    if isinstance(a, dict) and isinstance(b, dict):
        return (set(a) == set(b)
                and all(_eval_equal(a[k], b[k], bound) for k in a))
    if isinstance(a, str) or isinstance(b, str):
        return a == b
    equal, rec = evaluation_equal(to_rat(a), to_rat(b))
    bound["qdeg_bound"] = max(bound["qdeg_bound"], rec["qdeg_bound"])
    bound["tdeg_bound"] = max(bound["tdeg_bound"], rec["tdeg_bound"])
    return equal


def values_equal(a, b, mode="symbolic"):
    """Compare two builder results; returns (equal, degree-bound record).

    Symbolic mode compares canonical forms and returns None for the
    record; evaluation mode proves equality on an integer grid and
    reports the largest degree bound it had to cover.
    """
    if mode == "symbolic":
        return _sym_equal(a, b), None
    if mode != "evaluation":
        raise ValueError("mode must be symbolic or evaluation")
    bound = {"qdeg_bound": 0, "tdeg_bound": 0}
    return _eval_equal(a, b, bound), bound


def canonical_text(v):
    """Stable text of any builder result, for digesting and display."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, str):
        return v
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(canonical_text(x) for x in v) + "]"
    if isinstance(v, dict):
        items = sorted((canonical_text(key), canonical_text(val))
                       for key, val in v.items())
        return "{" + ", ".join("%s: %s" % kv for kv in items) + "}"
    return v.text()


def digest(v):
    return hashlib.sha256(canonical_text(v).encode()).hexdigest()[:16]


# ----------------------------------------------------------------------
# running

def _params_key(params):
    return tuple(params.get(name, -1) for name in PARAM_ORDER)


def run_point(entry, params, mode="symbolic"):
    """Evaluate both sides of one entry at one point; returns a record."""
    t0 = time.perf_counter()
    lhs = BUILDERS[entry.lhs](params)
    rhs = BUILDERS[entry.rhs](params)
    equal, bound = values_equal(lhs, rhs, mode)
    return {
        "id": entry.id,
        "status": entry.status,
        "anchor": entry.anchor,
        "params": {name: params[name] for name in PARAM_ORDER
                   if name in params},
        "equal": equal,
        "expected": entry.expect_equal,
        "lhs_digest": digest(lhs),
        "rhs_digest": digest(rhs),
        "bound": bound,
        "time_ms": int(round((time.perf_counter() - t0) * 1000)),
    }


def verify(ids=None, max_k=None, max_n=None, mode="symbolic", threads=1):
    """Run registry checks and assemble the report envelope.

    ids of None means every entry.  The envelope carries the records
    sorted by (id, params), counts of the points that misbehaved, and
    two summary flags: ok (no theorem failures) and ok_strict (no
    point at all disagreed with its documented outcome).
    """
    if ids is None:
        entries = list(REGISTRY)
    else:
        seen = []
        for i in ids:
            if i not in REGISTRY_BY_ID:
                raise ValueError("unknown identity id: %s" % (i,))
            if i not in seen:
                seen.append(i)
        entries = [REGISTRY_BY_ID[i] for i in seen]
    work = [(entry, params) for entry in entries
            for params in entry_points(entry, max_k, max_n)]
    t0 = time.perf_counter()
    if threads > 1 and len(work) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(
                lambda wp: run_point(wp[0], wp[1], mode), work))
    else:
        records = [run_point(entry, params, mode) for entry, params in work]
    records.sort(key=lambda r: (r["id"], _params_key(r["params"])))
    unexpected = [r for r in records if r["equal"] != r["expected"]]
    theorem_failures = [r for r in unexpected if r["status"] == THEOREM]
    return {
        "mode": mode,
        "points": len(records),
        "unexpected": len(unexpected),
        "theorem_failures": len(theorem_failures),
        "ok": not theorem_failures,
        "ok_strict": not unexpected,
        "total_ms": int(round((time.perf_counter() - t0) * 1000)),
        "records": records,
    }
