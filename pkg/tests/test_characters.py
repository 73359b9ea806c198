"""Polyomino module characters: shape sums against their closed forms."""

import math
from fractions import Fraction

import pytest

from polyolab.qt import AuxSeries, QTPoly, QTRat, qbinom, qint, swap_qt
from polyolab.symfunc import BiSymF, Partition, SymF, partitions, to_basis, zmu
from polyolab.macdonald import OpSpec, delta, nabla
from polyolab.characters import (
    bounce_area_brute,
    bounce_pairing,
    dimension,
    dimension2,
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


def P(s):
    return Partition.parse(s)


def const(c):
    return QTRat(QTPoly.const(Fraction(c)))


def spec_q(x, mode):
    """Specialize q the way specialize_t specializes t."""
    return swap_qt(swap_qt(x).specialize_t(mode))


def spec_q_symf(f, mode):
    return SymF({mu: spec_q(c, mode) for mu, c in f.pc.items()})


def q_coeff(f, j):
    """Coefficient of q^j in a SymF whose denominators are constants."""
    out = {}
    for mu, c in f.pc.items():
        assert c.den.qdeg() == 0 and c.den.tdeg() == 0
        v = c.num.terms.get((j, 0), Fraction(0)) / c.den.terms[(0, 0)]
        if v:
            out[mu] = QTRat(QTPoly.const(v))
    return SymF(out)


def h_of(n):
    return SymF.one() if n == 0 else SymF.h([n])


def nonneg_int_coeffs(c):
    if c.den != QTPoly.one():
        return False
    return all(v >= 0 and v.denominator == 1 for v in c.num.terms.values())


# ----------------------------------------------------------------------
# labelled paths


def test_paths_brute_matches_closed():
    for k in range(0, 4):
        for n in range(1, 5):
            assert frob_labelled_paths_brute(k, n) == frob_labelled_paths(k, n)
            graded = frob_labelled_paths_brute(k, n, graded=True)
            assert graded == frob_labelled_paths(k, n, graded=True)
            assert spec_q_symf(graded, "t=1") == frob_labelled_paths(k, n)


def test_paths_power_sum_coefficients():
    for k in range(0, 4):
        for n in range(1, 5):
            f = frob_labelled_paths(k, n)
            for mu in partitions(n):
                assert f.coeff(mu) == const(
                    Fraction((k + 1) ** len(mu), zmu(mu)))


def test_paths_edge_cases():
    assert frob_labelled_paths(0, 3) == SymF.h([3])
    for k in range(0, 4):
        assert dimension(frob_labelled_paths(k, 3)) == const((k + 1) ** 3)
        g = dimension(frob_labelled_paths(k, 3, graded=True))
        assert g == QTRat(qint(k + 1) ** 3)
    with pytest.raises(ValueError):
        frob_labelled_paths(-1, 2)


# ----------------------------------------------------------------------
# labelled polyominoes, ungraded


def test_frob_L_brute_matches_closed():
    for k in range(1, 6):
        for n in range(1, 6):
            assert frob_L_brute(k, n) == frob_L(k, n)
    assert frob_L_brute(6, 5) == frob_L(6, 5)
    assert frob_L_brute(6, 6) == frob_L(6, 6)


def test_frob_L_display_values():
    for k in range(1, 9):
        assert frob_L(k, 2) == (SymF.h([1, 1]) * const(math.comb(k, 2))
                                + SymF.h([2]) * const(k))
        assert frob_L(k, 3) == (
            SymF.h([1, 1, 1]) * const(2 * math.comb(k + 1, 4))
            + SymF.h([2, 1]) * const(3 * math.comb(k + 1, 3))
            + SymF.h([3]) * const(math.comb(k + 1, 2)))
        assert frob_L(k, 4) == (
            SymF.h([1, 1, 1, 1]) * const(5 * math.comb(k + 2, 6))
            + SymF.h([2, 1, 1]) * const(10 * math.comb(k + 2, 5))
            + SymF.h([3, 1]) * const(4 * math.comb(k + 2, 4))
            + SymF.h([2, 2]) * const(2 * math.comb(k + 2, 4))
            + SymF.h([4]) * const(math.comb(k + 2, 3)))
    assert frob_L(1, 4) == SymF.h([4])


def test_frob_L_dimension():
    for k in range(1, 7):
        for n in range(1, 7):
            assert dimension(frob_L(k, n)) == const(
                k ** (n - 1) * math.comb(n + k - 2, k - 1))


def test_labelled_count_generating_function():
    # sum over n of the labelled count times x^n equals x / (1 - kx)^k
    for k in range(1, 6):
        gk = AuxSeries.geometric(k, 8)
        s = gk
        for _ in range(k - 1):
            s = s * gk
        s = s.shift(1)
        for n in range(1, 8):
            assert s.coefficient(n) == const(
                k ** (n - 1) * math.comb(n + k - 2, k - 1))


# ----------------------------------------------------------------------
# area grading


def test_frob_L_q_specializations():
    for k in range(1, 6):
        for n in range(1, 5):
            f = frob_L_q(k, n)
            assert spec_q_symf(f, "t=1") == frob_L(k, n)
    assert frob_L_q(4, 1) == SymF.h([1])


def test_frob_L_q_h_positive():
    # h-expansion coefficients are polynomials in q with counts >= 0
    for k in range(1, 6):
        for n in range(1, 5):
            for mu, c in to_basis(frob_L_q(k, n), "h").items():
                assert nonneg_int_coeffs(c)


def test_area_series_displays():
    # generating function in u of the area-graded characters, n = 2, 3
    hi = 6
    g1 = AuxSeries.geometric(1, hi)
    gq = AuxSeries.geometric(QTPoly.q(1), hi)
    gq2 = AuxSeries.geometric(QTPoly.q(2), hi)
    A = (g1 * gq).shift(1)
    B = (g1 * g1 * gq).shift(2)
    for k in range(1, 6):
        assert frob_L_q(k, 2) == (SymF.h([2]) * A.coefficient(k)
                                  + SymF.h([1, 1]) * B.coefficient(k))
    C = (g1 * gq * gq2).shift(1)
    D = (g1 * g1 * gq * gq2).shift(2).scale(QTPoly({(0, 0): 2, (1, 0): 1}))
    E = (g1 * g1 * g1 * gq * gq2).shift(3).scale(QTPoly({(0, 0): 1, (1, 0): 1}))
    for k in range(1, 6):
        assert frob_L_q(k, 3) == (SymF.h([3]) * C.coefficient(k)
                                  + SymF.h([2, 1]) * D.coefficient(k)
                                  + SymF.h([1, 1, 1]) * E.coefficient(k))


def test_delta_image_matches_area_grading():
    # the area-graded character is the twisted Delta image at t=1
    from polyolab.symfunc import omega
    for n in range(1, 6):
        for w in range(1, 6):
            rhs = omega(delta(OpSpec(h_of(w - 1), "t=1"), SymF.e([n])))
            assert frob_L_q(w, n) == rhs


# ----------------------------------------------------------------------
# ribbons


def test_ribbon_brute_matches_closed():
    for k in range(1, 6):
        for n in range(1, 6):
            assert ribbon_frob(k, n) == ribbon_closed(k, n)


def test_ribbon_small_values():
    assert ribbon_frob(2, 2) == (SymF.h([1, 1]) * QTRat(QTPoly.t(3))
                                 + SymF.h([2]) * QTRat(QTPoly.t(4)))
    # one ribbon per single-column box, graded by t^n
    for n in range(1, 5):
        assert ribbon_frob(1, n) == SymF.h([n]) * QTRat(QTPoly.t(n))


def test_ribbon_t1_counts_flat_shapes():
    # forgetting the grading leaves the area-zero part of frob_L_q
    for k in range(1, 5):
        for n in range(1, 5):
            flat = ribbon_frob(k, n).specialize_t("t=1")
            assert flat == q_coeff(frob_L_q(k, n), 0)


def test_ribbon_matches_shifted_delta_image():
    # t^(n+k-1) times the q-free part of the twisted Delta image
    from polyolab.symfunc import omega
    for k in range(1, 5):
        for n in range(1, 5):
            img = omega(delta(h_of(k - 1), SymF.e([n])))
            shifted = spec_q_symf(img, "t=0") * QTRat(QTPoly.t(n + k - 1))
            assert ribbon_frob(k, n) == shifted


# ----------------------------------------------------------------------
# doubly labelled


def test_frob_L2_brute_matches_closed():
    for k in range(2, 5):
        for n in range(2, 5):
            assert frob_L2(k, n) == frob_L2(k, n, closed=True)


def test_frob_L2_closed_domain():
    with pytest.raises(ValueError, match="formula out of domain"):
        frob_L2(1, 3, closed=True)
    with pytest.raises(ValueError, match="formula out of domain"):
        frob_L2(3, 1, closed=True)
    with pytest.raises(ValueError):
        frob_L2(3, 3, graded=True, closed=True)


def test_frob_L2_display():
    want = (BiSymF.product(SymF.s([3]) * 6 + SymF.s([2, 1]) * 3, SymF.s([2]))
            + BiSymF.product(SymF.s([3]) * 3 + SymF.s([2, 1]), SymF.s([1, 1])))
    assert frob_L2(3, 2) == want
    assert frob_L2(3, 2).text() == ("sY[2,1]*sZ[1,1] + 3*sY[2,1]*sZ[2]"
                                    " + 3*sY[3]*sZ[1,1] + 6*sY[3]*sZ[2]")


def test_frob_L2_symmetry_and_restriction():
    for k in range(1, 5):
        for n in range(1, 5):
            F = frob_L2(k, n)
            assert F.swap() == frob_L2(n, k)
            assert F.hall_y(SymF.h([k])) == frob_L(k, n)


def test_frob_L2_count():
    for k in range(1, 5):
        for n in range(1, 5):
            want = (k ** n * (n - 1) ** (k - 1)
                    + (k - 1) ** (n - 1) * n ** k
                    - (k - 1) ** (n - 1) * (n - 1) ** (k - 1) * (n + k - 1))
            assert dimension2(frob_L2(k, n)) == const(want)


def test_frob_L2star():
    for k in range(1, 5):
        for n in range(1, 5):
            assert frob_L2star_brute(k, n) == frob_L2star(k, n)
            assert dimension2(frob_L2star(k, n)) == const(
                k ** (n - 1) * n ** (k - 1))
    assert frob_L2star(1, 3) == BiSymF.from_z(SymF.h([3]))
    assert dimension2(frob_L2star(2, 2)) == const(4)


# ----------------------------------------------------------------------
# rectangular isotypic coefficient


def test_s_rho_ungraded():
    for (r, n) in [(1, 2), (1, 3), (1, 4), (2, 2)]:
        rn = r * n
        want = h_dilate(n, rn - 1) * const(Fraction(1, rn - 1))
        assert s_rho_coefficient(r, n) == want


def test_s_rho_graded_matches_nabla_image():
    from polyolab.symfunc import omega
    for (r, n) in [(1, 2), (1, 3), (1, 4), (2, 2)]:
        scalar = QTRat(QTPoly.const(Fraction((-1) ** (n - 1))),
                       QTPoly.q(n - 1))
        want = omega(nabla(SymF.h([n]), r, "t=1") * scalar)
        assert s_rho_coefficient(r, n, graded=True) == want


# ----------------------------------------------------------------------
# bounce pairing


def test_bounce_small_values():
    v = bounce_pairing(2, 2)
    assert v == QTRat(QTPoly({(0, 0): 1, (1, 0): 1, (0, 1): 1}))
    assert v.specialize_t("t=1") == QTRat(QTPoly({(0, 0): 2, (1, 0): 1}))
    w = v.specialize_t("t=1/q") * QTRat(QTPoly.q(1))
    assert w == QTRat(QTPoly({(0, 0): 1, (1, 0): 1, (2, 0): 1}))
    assert w == QTRat(qbinom(4, 2) * qbinom(2, 1), qint(4))


def test_bounce_symmetries_and_specializations():
    for k in range(1, 7):
        for n in range(k, 7):
            if k + n > 7:
                continue
            v = bounce_pairing(k, n)
            assert swap_qt(v) == v
            assert bounce_pairing(n, k) == v
            assert v.specialize_t("t=1") == bounce_area_brute(k, n)
            lhs = v.specialize_t("t=1/q") * QTRat(QTPoly.q((k - 1) * (n - 1)))
            rhs = QTRat(qbinom(n + k, n) * qbinom(n + k - 2, n - 1),
                        qint(n + k))
            assert lhs == rhs


def test_bounce_rectangular_principal_form():
    from polyolab.symfunc import rect_principal
    for k in range(2, 5):
        for n in range(k, 6):
            if k + n > 7:
                continue
            v = bounce_pairing(k, n).specialize_t("t=1/q")
            lhs = v * QTRat(QTPoly.q((k - 1) * (n - 1) + (k - 1)))
            assert lhs == QTRat(rect_principal(k - 1, 2, n + 1))


# ----------------------------------------------------------------------
# operator identities with polynomial prefactors


def test_elementary_delta_hook_identity():
    # q^(kn - C(k+1,2)) Delta_{e_k}|_{t=1/q} e_n, as a binomial multiple
    # of e_n at the truncated geometric alphabet
    for n in range(1, 6):
        for k in range(1, n + 1):
            pre = QTRat(QTPoly.q(k * n - math.comb(k + 1, 2)))
            lhs = delta(OpSpec(SymF.e([k]), "t=1/q"), SymF.e([n])) * pre
            rhs = e_qint(n, k + 1) * QTRat(qbinom(n, k), qint(k + 1))
            assert lhs == rhs


def test_delta_nabla_difference_schur_positive():
    for (r, n) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]:
        f = SymF.h([r * n - 1]) if r * n > 1 else SymF.one()
        d = (delta(f, SymF.e([n]))
             - nabla(SymF.e([n]), r) * QTRat(QTPoly.q(math.comb(n - 1, 2))))
        for mu, c in to_basis(d, "s").items():
            assert nonneg_int_coeffs(c), (r, n, mu, c)


# ----------------------------------------------------------------------
# trivariate comparison series


def test_trivariate_term_count():
    assert len(trivariate_frob(5, 1).pc) == len(list(partitions(5)))
    assert trivariate_frob(1, 2) == SymF.h([1])


def test_trivariate_difference_h_positive():
    for r in (1, 2):
        for n in range(1, 6):
            diff = frob_L(r * n, n) - trivariate_frob(n, r)
            for mu, c in to_basis(diff, "h").items():
                assert c.den == QTPoly.one()
                assert c.num.qdeg() == 0 and c.num.tdeg() == 0
                assert c.num.terms.get((0, 0), Fraction(0)) >= 0
