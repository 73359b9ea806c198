"""Symmetric-function layer: bases, pairings, specializations, text forms."""

import math
import random
from fractions import Fraction
from itertools import product as iproduct

import pytest

from polyolab.qt import QTPoly, QTRat, qbinom, qint
from polyolab.symfunc import (
    BASES,
    BiSymF,
    CapExceeded,
    Composition,
    Partition,
    SymF,
    compositions,
    hall,
    omega,
    partitions,
    pleth_scale,
    principal,
    rect_principal,
    schur_char,
    to_basis,
    zmu,
)


def test_partition_validation():
    assert Partition((3, 1, 1)) == (3, 1, 1)
    assert Partition().weight == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition((-1,))


def test_partition_views():
    lam = Partition((4, 2, 1))
    assert lam.weight == 7
    assert lam.length == 3
    assert lam.conjugate() == (3, 2, 1, 1)
    for n in range(7):
        for mu in partitions(n):
            assert mu.conjugate().conjugate() == mu
            assert mu.conjugate().weight == mu.weight
    assert Partition((3, 2, 1)).n_stat() == 4
    assert len(list(Partition((3, 2)).cells())) == 5
    assert Partition((2, 2)).hook(0, 0) == 3
    assert Partition((2, 2)).hook(1, 1) == 1
    assert Partition((3, 2)).multiplicities() == {3: 1, 2: 1}


def test_dominance():
    chain = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for i in range(len(chain)):
        for j in range(i, len(chain)):
            assert Partition(chain[i]).dominates(chain[j])
            if i < j:
                assert not Partition(chain[j]).dominates(chain[i])
    assert Partition((3, 3)).dominates((2, 2, 2))
    assert not Partition((3, 1, 1, 1)).dominates((2, 2, 2))
    with pytest.raises(ValueError):
        Partition((2,)).dominates((1,))


def test_partition_text():
    assert Partition((3, 1, 1)).text() == "[3,1,1]"
    assert Partition.parse("[3,1,1]") == (3, 1, 1)
    assert Partition.parse(" [] ") == ()
    assert Partition().text() == "[]"
    with pytest.raises(ValueError):
        Partition.parse("3,1")


def test_composition_basics():
    c = Composition((1, 2, 1))
    assert c.weight == 4 and c.length == 3
    assert c.to_partition() == (2, 1, 1)
    assert c.text() == "(1,2,1)"
    assert Composition.parse("(1,2,1)") == (1, 2, 1)
    assert Composition.parse("()") == ()
    assert Composition((2, 1)) != Composition((1, 2))
    with pytest.raises(ValueError):
        Composition((1, 0))


def test_partition_counts():
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    for n, c in enumerate(counts):
        plist = list(partitions(n))
        assert len(plist) == c
        assert len(set(plist)) == c
        if n:
            assert plist[0] == (n,)
            assert plist[-1] == tuple([1] * n)
    assert list(partitions(5, max_part=2)) == [
        (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_compositions():
    for n in range(1, 7):
        assert len(list(compositions(n))) == 2 ** (n - 1)
    assert list(compositions(4, length=2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(0)) == [()]
    assert list(compositions(3, length=0)) == []


def test_zmu():
    assert zmu((1, 1, 1)) == 6
    assert zmu((2, 1)) == 2
    assert zmu((3, 3)) == 18
    assert zmu(()) == 1
    # conjugacy class sizes n!/z_mu add up to n!
    n = 6
    assert sum(Fraction(math.factorial(n), zmu(mu)) for mu in partitions(n)) \
        == math.factorial(n)


def hook_product(lam):
    conj = Partition(lam).conjugate()
    out = 1
    for (i, j) in Partition(lam).cells():
        out *= Partition(lam).hook(i, j, conj)
    return out


def test_schur_char_oracles():
    for mu in partitions(5):
        assert schur_char((5,), mu) == 1
        assert schur_char((1, 1, 1, 1, 1), mu) == (-1) ** (5 - mu.length)
    assert schur_char((1, 1, 1), (2, 1)) == -1
    assert schur_char((2, 1), (1, 1, 1)) == 2
    with pytest.raises(ValueError):
        schur_char((2,), (1,))


def test_schur_char_dimensions():
    # chi^lam at the identity class is n!/(product of hooks)
    for n in range(1, 7):
        ones = Partition([1] * n)
        for lam in partitions(n):
            assert schur_char(lam, ones) == math.factorial(n) // hook_product(lam)


def test_schur_char_orthogonality():
    n = 5
    plist = list(partitions(n))
    for lam in plist:
        for nu in plist:
            acc = Fraction(0)
            for mu in plist:
                acc += Fraction(schur_char(lam, mu) * schur_char(nu, mu), zmu(mu))
            assert acc == (1 if lam == nu else 0)


def test_to_basis_oracles():
    half = QTRat(Fraction(1, 2))
    assert to_basis(SymF.h(2), "p") == {(2,): half, (1, 1): half}
    assert to_basis(SymF.e(3), "s") == {(1, 1, 1): QTRat.one()}
    assert to_basis(SymF.s((2, 1)), "h") == {(2, 1): QTRat.one(),
                                             (3,): QTRat(-1)}
    with pytest.raises(ValueError):
        to_basis(SymF.h(2), "x")


def corpus():
    q = QTRat.q()
    t = QTRat.t()
    return [
        SymF.one(),
        SymF.h((2, 1)) - SymF.s((1, 1, 1)) * (q * 3),
        SymF.p((4, 2)) + SymF.e((3, 3)) * t,
        SymF.s((3, 2, 1)),
        SymF.m((2, 2)) + SymF.one() * q - SymF.forgotten((2, 1, 1)),
        SymF.h((4, 3, 1)) * QTRat(1, QTPoly.one() - QTPoly.q()),
    ]


def test_round_trips_all_bases():
    for f in corpus():
        for basis in BASES:
            back = SymF.from_coeffs(basis, to_basis(f, basis))
            assert back == f, basis


def test_duality_pairs():
    n = 5
    plist = list(partitions(n))
    for lam in plist:
        for mu in plist:
            want = QTRat.one() if lam == mu else QTRat.zero()
            assert hall(SymF.h(lam), SymF.m(mu)) == want
            assert hall(SymF.s(lam), SymF.s(mu)) == want
            assert hall(SymF.e(lam), SymF.forgotten(mu)) == want


def test_hall_values():
    assert hall(SymF.p(2), SymF.p(2)) == QTRat(2)
    assert hall(SymF.p((2,)) * QTRat.q(), SymF.p(2)) == QTRat(2) * QTRat.q()
    assert hall(SymF.h(3), SymF.one()) == QTRat.zero()
    # omega preserves the pairing
    for f in corpus()[:4]:
        for g in corpus()[:4]:
            assert hall(omega(f), omega(g)) == hall(f, g)


def test_omega():
    for n in range(7):
        assert omega(SymF.e(n)) == SymF.h(n)
        assert omega(SymF.h(n)) == SymF.e(n)
    assert omega(SymF.s((2, 1))) == SymF.s((2, 1))
    assert omega(SymF.s((3, 1))) == SymF.s((2, 1, 1))
    for f in corpus():
        assert omega(omega(f)) == f


def test_pleth_scale():
    assert pleth_scale(SymF.h(1), lambda r: 3) == SymF.h(1) * 3
    got = to_basis(pleth_scale(SymF.h(2), lambda r: 2), "h")
    assert got == {(2,): QTRat(2), (1, 1): QTRat.one()}
    one_minus_q3 = QTPoly.one() - QTPoly.q(3)
    f = pleth_scale(SymF.p(3), lambda r: QTPoly.one() - QTPoly.q(r))
    assert f == SymF.p(3) * QTRat(one_minus_q3)
    for g in corpus():
        assert pleth_scale(g, lambda r: 1) == g


def test_principal():
    assert principal(SymF.s((1, 1)), 2) == QTRat.q()
    for k in range(6):
        assert principal(SymF.p(1), k) == QTRat(qint(k))
    for k, n in [(2, 3), (3, 2), (4, 4)]:
        val = principal(SymF.h(k), n + 1)
        assert val.evaluate(Fraction(1), Fraction(0)) == math.comb(n + k, k)
    rng = random.Random(7)
    fs = corpus()
    for _ in range(4):
        f, g = rng.choice(fs), rng.choice(fs)
        assert principal(f * g, 3) == principal(f, 3) * principal(g, 3)
    assert principal(SymF.one() * 5, 0) == QTRat(5)
    with pytest.raises(ValueError):
        principal(SymF.h(2), -1)


def brute_rect_ssyt(k, r, m):
    """Sum of q^(sum of entries - cells) over r x k semistandard fillings."""
    total = QTPoly.zero()
    cells = [(i, j) for i in range(r) for j in range(k)]
    for filling in iproduct(range(1, m + 1), repeat=len(cells)):
        grid = {}
        for (c, v) in zip(cells, filling):
            grid[c] = v
        ok = True
        for (i, j) in cells:
            if j + 1 < k and grid[(i, j)] > grid[(i, j + 1)]:
                ok = False
                break
            if i + 1 < r and grid[(i, j)] >= grid[(i + 1, j)]:
                ok = False
                break
        if ok:
            total = total + QTPoly.q(sum(filling) - len(cells))
    return total


def test_rect_principal():
    assert rect_principal(2, 2, 3) == brute_rect_ssyt(2, 2, 3)
    assert rect_principal(1, 2, 3) == brute_rect_ssyt(1, 2, 3)
    assert rect_principal(1, 2, 3).evaluate(Fraction(1), Fraction(0)) == 3
    assert rect_principal(3, 2, 4) == brute_rect_ssyt(3, 2, 4)
    for k in range(1, 5):
        for n in range(1, 5):
            assert rect_principal(k, 1, n + 1) == qbinom(n + k, k)
    assert rect_principal(0, 3, 2) == QTPoly.one()
    assert rect_principal(3, 0, 2) == QTPoly.one()
    assert rect_principal(2, 3, 2) == QTPoly.zero()
    with pytest.raises(ValueError):
        rect_principal(1, 1, 0)


def test_symf_arithmetic():
    s1 = SymF.s(1)
    assert to_basis(s1 * s1, "s") == {(2,): QTRat.one(), (1, 1): QTRat.one()}
    assert to_basis(SymF.s(2) * s1, "s") == {(3,): QTRat.one(),
                                             (2, 1): QTRat.one()}
    assert SymF.p(1) * SymF.p(1) == SymF.p((1, 1))
    assert SymF.h(1) == SymF.e(1) == SymF.p(1) == SymF.s(1) == SymF.m(1)
    f = SymF.h(2)
    assert f - f == SymF.zero()
    assert (f - f).is_zero
    assert f.degree() == 2 and SymF.zero().degree() == -1
    g = f + SymF.h(3)
    assert g.degrees() == [2, 3]
    assert g.homogeneous(3) == SymF.h(3)
    assert SymF.zero() == SymF() and not SymF.zero()


def test_specialize_t():
    f = SymF.p(2) * QTRat.t() + SymF.p(1)
    assert f.specialize_t("t=1") == SymF.p(2) + SymF.p(1)
    assert f.specialize_t("t=0") == SymF.p(1)
    g = SymF.p(1) * (QTRat.q() * QTRat.t())
    assert g.specialize_t("t=1/q") == SymF.p(1)


def test_text_forms():
    q = QTRat.q()
    f = SymF.h((2, 1)) - SymF.s((1, 1, 1)) * (q * 3)
    assert SymF.parse("h[2,1] - 3*q*s[1,1,1]") == f
    assert SymF.parse(f.text("s")) == f
    assert SymF.parse(f.text("h")) == f
    assert SymF.parse(f.text("m")) == f
    assert SymF.zero().text("h") == "0"
    assert SymF.parse("0") == SymF.zero()
    const_plus = SymF.one() + SymF.h(2)
    assert const_plus.text("h") == "1 + h[2]"
    assert SymF.parse("1 + h[2]") == const_plus
    r = SymF.h(2) * QTRat(1, QTPoly.one() - QTPoly.q())
    assert SymF.parse(r.text("h")) == r
    mixed = SymF.parse("p[2] + e[1,1] - f[2]")
    assert mixed == SymF.p(2) + SymF.e((1, 1)) - SymF.forgotten(2)
    with pytest.raises(ValueError):
        SymF.parse("h[2")
    with pytest.raises(ValueError):
        SymF.parse("")
    with pytest.raises(ValueError):
        SymF.parse("h[2] + + h[1]")


def test_bisym_basics():
    G = BiSymF.product(SymF.h(2), SymF.h((1, 1)))
    assert G.ydeg() == 2 and G.zdeg() == 2
    assert G.swap() == BiSymF.product(SymF.h((1, 1)), SymF.h(2))
    assert G.swap().swap() == G
    assert G.coeff_sy((2,)) == SymF.h((1, 1))
    assert G.coeff_sy((1, 1)) == SymF.zero()
    assert G.coeff_sz((1, 1)) + G.coeff_sz((2,)) == SymF.h(2) + SymF.h(2)
    # pairing the y side against the dual basis picks out coefficients
    H = BiSymF.product(SymF.m((2, 1)), SymF.p(3)) \
        + BiSymF.product(SymF.m((1, 1, 1)), SymF.p((1, 1, 1)))
    assert H.hall_y(SymF.h((2, 1))) == SymF.p(3)
    assert H.hall_y(SymF.h((1, 1, 1))) == SymF.p((1, 1, 1))


def test_bisym_arithmetic():
    A = BiSymF.product(SymF.h(1), SymF.h(2))
    B = BiSymF.product(SymF.h(2), SymF.h(1))
    assert A * B == BiSymF.product(SymF.h((2, 1)), SymF.h((2, 1)))
    assert (A + B) - B == A
    assert A * QTRat.q() == BiSymF.product(SymF.h(1) * QTRat.q(), SymF.h(2))
    assert BiSymF.zero().is_zero
    assert BiSymF.one() * A == A
    assert BiSymF.from_y(SymF.h(2)) * BiSymF.from_z(SymF.h(3)) \
        == BiSymF.product(SymF.h(2), SymF.h(3))


def test_bisym_text():
    G = BiSymF.product(SymF.h(2), SymF.h((1, 1))) * QTRat.q() \
        - BiSymF.from_z(SymF.s((2, 1)))
    assert BiSymF.parse(G.text()) == G
    assert BiSymF.zero().text() == "0"
    one_term = BiSymF.product(SymF.s((2,)), SymF.s((1, 1)))
    assert one_term.text() == "sY[2]*sZ[1,1]"
    assert BiSymF.parse("sY[2]*sZ[1,1]") == one_term
    assert BiSymF.parse("1") == BiSymF.one()


def test_cap():
    with pytest.raises(CapExceeded) as err:
        to_basis(SymF.p(13), "s")
    assert err.value.degree == 13 and err.value.cap == 12
    with pytest.raises(CapExceeded):
        to_basis(SymF.p(5), "m", cap=4)
    assert to_basis(SymF.p(13), "p", cap=None) == {(13,): QTRat.one()}
    big = to_basis(SymF.p(13), "h", cap=13)
    assert SymF.from_coeffs("h", big) == SymF.p(13)
