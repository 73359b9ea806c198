"""Paths, polyominoes, encodings, statistics, labellings, cyclic map."""

import itertools
from collections import Counter
from math import comb

import pytest

from polyolab.polyomino import (
    AWord,
    DoublyLabelledPolyomino,
    LabelledPath,
    LabelledPolyomino,
    LatticePath,
    MotzkinWord,
    Polyomino,
    aword_dinv,
    cyclic_map,
    dinv,
    enum_doubly,
    enum_labelled,
    count_polyominoes,
    enum_labelled_paths,
    enum_paths,
    enum_polyominoes,
    from_motzkin,
    motzkin_to_aword,
    path_area,
    to_aword,
    to_motzkin,
)
from polyolab.qt import QTPoly, qbinom


FIGURE_PATH = "yyxxxyyxxyxxxyxx"


def test_path_basics():
    p = LatticePath(FIGURE_PATH)
    assert p.steps == "NNEEENNEENEEENEE"
    assert p.endpoint == (10, 6)
    assert p.heights() == (2, 2, 2, 4, 4, 5, 5, 5, 6, 6)
    assert p.indents() == (0, 0, 3, 3, 5, 8)
    assert p.area() == 41
    assert LatticePath("NE").area() == 1
    assert LatticePath("xY nE") == LatticePath("ENNE")
    with pytest.raises(ValueError):
        LatticePath("NZ")


def test_path_views_round_trip():
    for k, n in [(2, 2), (3, 4), (5, 1), (0, 3), (4, 0)]:
        for p in enum_paths(k, n):
            assert LatticePath.from_heights(p.heights(), n) == p
            assert LatticePath.from_indents(p.indents(), k) == p
    with pytest.raises(ValueError):
        LatticePath.from_heights((2, 1), 3)


def test_enum_paths():
    for k in range(6):
        for n in range(6):
            paths = list(enum_paths(k, n))
            assert len(paths) == comb(n + k, k)
            assert len(set(paths)) == len(paths)
            words = [p.steps for p in paths]
            assert words == sorted(words)
    assert [p.steps for p in enum_paths(2, 1)] == ["EEN", "ENE", "NEE"]


def test_path_area_generating_function():
    for k in range(5):
        for n in range(5):
            total = QTPoly.zero()
            for p in enum_paths(k, n):
                total = total + QTPoly.q(p.area())
            assert total == qbinom(n + k, k)


def test_polyomino_validity():
    assert Polyomino("NE", "EN").area() == 0
    with pytest.raises(ValueError):
        Polyomino("EN", "EN")
    with pytest.raises(ValueError):
        Polyomino("NE", "NE")
    with pytest.raises(ValueError):
        Polyomino("NEE", "ENE")  # lower ends east, touches the corner
    with pytest.raises(ValueError):
        Polyomino("N", "N")  # k = 0 rejected
    with pytest.raises(ValueError):
        Polyomino("E", "E")  # n = 0 rejected
    with pytest.raises(ValueError):
        Polyomino("NNEE", "ENNE")  # endpoint mismatch is caught first


def geom_valid(u, l):
    """Independent filter: both endpoints shared, nothing else, upper
    leaves north first."""
    if u.endpoint != l.endpoint:
        return False
    shared = set(u.vertices()) & set(l.vertices())
    if shared != {(0, 0), u.endpoint}:
        return False
    return u.steps[0] == "N"


def test_polyomino_counts_and_geometry():
    for k in range(1, 5):
        for n in range(1, 5):
            mine = {(pi.upper.steps, pi.lower.steps)
                    for pi in enum_polyominoes(k, n)}
            closed = comb(n + k - 1, k - 1) * comb(n + k - 2, k - 1) // k
            assert len(mine) == closed
            assert count_polyominoes(k, n) == closed
            paths = list(enum_paths(k, n))
            brute = {(u.steps, l.steps) for u in paths for l in paths
                     if geom_valid(u, l)}
            assert mine == brute
    assert sum(1 for _ in enum_polyominoes(1, 5)) == 1
    assert sum(1 for _ in enum_polyominoes(6, 6)) == 19404
    assert count_polyominoes(6, 6) == 19404
    with pytest.raises(ValueError):
        list(enum_polyominoes(0, 3))
    with pytest.raises(ValueError):
        count_polyominoes(0, 3)


def area_counter(k, n):
    return Counter(pi.area() for pi in enum_polyominoes(k, n))


def test_poly_area():
    assert Polyomino("NNEE", "EENN").area() == 1  # full 2x2 square
    assert area_counter(2, 2) == {0: 2, 1: 1}
    assert area_counter(2, 3) == {0: 3, 1: 2, 2: 1}
    assert area_counter(2, 4) == {0: 4, 1: 3, 2: 2, 3: 1}
    assert area_counter(3, 3) == {0: 6, 1: 6, 2: 5, 3: 2, 4: 1}
    for pi in enum_polyominoes(3, 3):
        assert pi.area() >= 0


def test_reflect():
    for k, n in [(2, 3), (3, 2), (3, 3), (4, 2)]:
        image = {pi.reflect() for pi in enum_polyominoes(k, n)}
        target = set(enum_polyominoes(n, k))
        assert image == target
        for pi in enum_polyominoes(k, n):
            assert pi.reflect().area() == pi.area()
            assert pi.reflect().reflect() == pi


def test_gamma_delta():
    assert next(enum_polyominoes(1, 4)).gamma() == (4,)
    assert Polyomino("NNEE", "EENN").gamma() == (2,)
    assert Polyomino("NNEE", "EENN").delta() == (2,)
    figure_upper = LatticePath.from_indents((0, 0, 3, 3, 5, 8), 10)
    assert figure_upper.runs_n() == (2, 2, 1, 1)
    assert Polyomino("NENE", "EENN").gamma() == (1, 1)


def test_motzkin_basics():
    assert to_motzkin(Polyomino("NE", "EN")).text() == "d d~"
    w = MotzkinWord.parse("d r d b d~ d d~ b d~")
    pi = from_motzkin(w)
    assert to_motzkin(pi) == w
    assert (w.n, w.k) == (pi.n, pi.k) == (4, 5)
    for bad in ["d", "d d~ d d~", "r d d~", "d d~ r"]:
        with pytest.raises(ValueError):
            MotzkinWord.parse(bad)
    with pytest.raises(ValueError):
        MotzkinWord(())
    with pytest.raises(ValueError):
        MotzkinWord(("d", "z", "d~"))


def primitive_words(length):
    for toks in itertools.product(("d", "r", "b", "d~"), repeat=length):
        h = 0
        ok = True
        for i, t in enumerate(toks):
            if t == "d":
                h += 1
            elif t == "d~":
                h -= 1
            if h <= 0 and i < length - 1:
                ok = False
                break
        if ok and h == 0:
            yield MotzkinWord(toks)


def test_motzkin_bijection_both_directions():
    for total in range(2, 9):
        words = {w.text() for w in primitive_words(total)}
        image = set()
        for k in range(1, total):
            n = total - k
            for pi in enum_polyominoes(k, n):
                w = to_motzkin(pi)
                assert from_motzkin(w) == pi
                image.add(w.text())
        assert image == words
        for w in words:
            assert to_motzkin(from_motzkin(MotzkinWord.parse(w))).text() == w


def test_aword():
    w = MotzkinWord.parse("d r d b d~ d d~ b d~")
    aw = motzkin_to_aword(w)
    assert aw.text() == "0~,1,1,1~,2,2~,1~,2,1~"
    assert AWord.parse(aw.text()) == aw
    assert aword_dinv(aw) == 12
    assert to_aword(Polyomino("NE", "EN")).text() == "0~,1"
    for total in range(2, 8):
        for k in range(1, total):
            pi_list = list(enum_polyominoes(k, total - k))
            for pi in pi_list:
                w = to_motzkin(pi)
                nd = sum(1 for t in w.tokens if t == "d")
                nr = sum(1 for t in w.tokens if t == "r")
                nb = sum(1 for t in w.tokens if t == "b")
                assert len(to_aword(pi)) == 2 * nd + nr + nb
    with pytest.raises(ValueError):
        AWord(("0",))  # unbarred letters start at 1
    with pytest.raises(ValueError):
        AWord(("x",))


def test_dinv_ribbon_calibration():
    """Successor convention: on ribbons, dinv is the area below the
    lower path plus k+n-1.  The predecessor convention has no constant
    offset, so calibration picks the successor direction."""
    offsets = set()
    for total in range(2, 9):
        for k in range(1, total):
            n = total - k
            for pi in enum_polyominoes(k, n):
                if pi.area() != 0:
                    continue
                assert dinv(pi) == pi.lower.area() + (k + n - 1)
                r = to_aword(pi).ranks()
                pred = sum(1 for i in range(len(r)) for j in range(i + 1, len(r))
                           if r[j] == r[i] - 1)
                offsets.add(pred - pi.lower.area())
    assert len(offsets) > 1  # predecessor direction drifts
    assert dinv(Polyomino("NE", "EN")) == 1


def test_labelled_paths():
    lp = LabelledPath("NNE", (1, 2))
    assert lp.gamma() == (2,)
    assert lp.set_partition() == frozenset({frozenset({1, 2})})
    with pytest.raises(ValueError):
        LabelledPath("NNE", (2, 1))
    with pytest.raises(ValueError):
        LabelledPath("NNE", (1, 3))
    for k in range(4):
        for n in range(1, 5):
            allp = list(enum_labelled_paths(k, n))
            assert len(allp) == (k + 1) ** n
            assert len(set(allp)) == len(allp)
    assert LabelledPath.parse("NEN|[1,2]") == LabelledPath("NEN", (1, 2))
    assert LabelledPath("EE", ()).text() == "EE|[]"


def test_labelled_polyominoes():
    assert sum(1 for _ in enum_labelled(2, 2)) == 4
    for k in range(1, 6):
        for n in range(1, 6):
            shapes = list(enum_polyominoes(k, n))
            per_shape = 0
            for pi in shapes:
                g = pi.gamma()
                m = 1
                rest = n
                for part in g:
                    m *= comb(rest, part)
                    rest -= part
                per_shape += m
            count = sum(1 for _ in enum_labelled(k, n))
            assert count == per_shape
            assert count == k ** (n - 1) * comb(n + k - 2, k - 1)
    with pytest.raises(ValueError):
        LabelledPolyomino(Polyomino("NNEE", "ENEN"), (2, 1))
    two = [lp.labels for lp in enum_labelled(2, 2)
           if lp.gamma() == (1, 1)]
    assert sorted(two) == [(1, 2), (2, 1)]


def test_labelled_generating_function():
    """Coefficient of x^(n-1) in (1 - k x)^(-k), expanded honestly by
    truncated series multiplication, counts labelled polyominoes."""
    N = 10
    for k in range(1, 7):
        geo = [k ** m for m in range(N)]  # 1/(1-kx)
        series = [1] + [0] * (N - 1)
        for _ in range(k):
            series = [sum(series[i] * geo[m - i] for i in range(m + 1))
                      for m in range(N)]
        for n in range(1, N + 1):
            assert series[n - 1] == k ** (n - 1) * comb(n + k - 2, k - 1)


def test_doubly_labelled():
    for k in range(1, 5):
        for n in range(1, 5):
            c = sum(1 for _ in enum_doubly(k, n))
            f = (k ** n * (n - 1) ** (k - 1)
                 + (k - 1) ** (n - 1) * n ** k
                 - (k - 1) ** (n - 1) * (n - 1) ** (k - 1) * (n + k - 1))
            assert c == f, (k, n)
            cs = sum(1 for _ in enum_doubly(k, n, star=True))
            assert cs == k ** (n - 1) * n ** (k - 1), (k, n)
    assert sum(1 for _ in enum_doubly(2, 2, star=True)) == 4
    base = next(enum_labelled(2, 2))
    with pytest.raises(ValueError):
        DoublyLabelledPolyomino(base, (2, 1), star=True)
    for d in enum_doubly(3, 2):
        g = d.base.gamma()
        assert sorted(d.lower_labels) == [1, 2, 3]


def test_text_forms():
    pi = Polyomino("NNEE", "ENEN")
    assert Polyomino.parse(pi.text()) == pi
    lp = LabelledPolyomino(pi, (1, 2))
    assert lp.text() == "NNEE|ENEN|[1,2]"
    assert LabelledPolyomino.parse(lp.text()) == lp
    with pytest.raises(ValueError):
        Polyomino.parse("NNEE")
    with pytest.raises(ValueError):
        LabelledPolyomino.parse("NNEE|ENEN")
    for d in enum_doubly(3, 2, star=True):
        back = DoublyLabelledPolyomino.parse(d.text(), star=True)
        assert back == d
    d = next(enum_doubly(2, 2))
    assert d.text() == "NENE|EENN|[1,2]|[1,2]"
    assert DoublyLabelledPolyomino.parse(d.text()) == d
    with pytest.raises(ValueError):
        DoublyLabelledPolyomino.parse("NENE|EENN|[1,2]")
    w = MotzkinWord.parse("d d~")
    assert MotzkinWord.parse(w.text()) == w


def test_cyclic_map_small():
    lp = LabelledPath("NE", (1,))
    pairs, rep = cyclic_map(lp, LatticePath("E"))
    assert rep.text() == "NEE|EEN|[1]"
    assert {(a.text(), b.text()) for a, b in pairs} == {
        ("NE|[1]", "E"), ("EN|[1]", "E")}
    # k = 1: class of size one, representative equals the single cut
    lp1 = LabelledPath("NNN", (1, 2, 3))
    pairs1, rep1 = cyclic_map(lp1, LatticePath("NN"))
    assert len(pairs1) == 1
    assert rep1.shape == next(enum_polyominoes(1, 3))
    with pytest.raises(ValueError):
        cyclic_map(lp, LatticePath("EE"))


def test_cyclic_map_exhaustive():
    for k in range(1, 4):
        for n in range(1, 4):
            inputs = [(lp, b)
                      for lp in enum_labelled_paths(k - 1, n)
                      for b in enum_paths(k - 1, n - 1)]
            assert len(inputs) == k ** n * comb(n + k - 2, k - 1)
            rep_count = Counter()
            for lp, b in inputs:
                pairs, rep = cyclic_map(lp, b)
                assert len(pairs) == k
                assert any(a == lp and bb == b for a, bb in pairs)
                assert lp.set_partition() == rep.set_partition()
                rep_count[rep] += 1
                for a, bb in pairs:
                    _, r2 = cyclic_map(a, bb)
                    assert r2 == rep
            assert len(rep_count) == k ** (n - 1) * comb(n + k - 2, k - 1)
            assert all(v == k for v in rep_count.values())
            assert set(rep_count) == set(enum_labelled(k, n))
