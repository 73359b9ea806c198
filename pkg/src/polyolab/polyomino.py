"""Lattice paths, parallelogram polyominoes, labellings, and statistics.

A lattice path is a word over {E, N} read left to right from (0, 0).
A parallelogram polyomino is a pair of such paths with the same
endpoint that share only their endpoints, the upper one weakly above;
equivalently the height sequences u (upper) and v (lower) satisfy
u_1 >= 1, u_k = n, v_1 = 0, v_k <= n - 1 and v_{i+1} < u_i.

Statistics: area counts the cells between the paths minus the minimum
possible (k + n - 1), so ribbon shapes have area zero.  dinv counts
pairs i < j in the A-word whose letters are adjacent in the ordered
alphabet 0~ < 1 < 1~ < 2 < 2~ < ...; the calibrated direction is that
the LATER letter is the successor of the earlier one.  Under this
convention dinv of a ribbon equals the area below its lower path plus
the constant k + n - 1 (verified exhaustively for k + n <= 8); the
other direction admits no such constant.

Text formats: path ``NNEE``; polyomino ``upper|lower``; labelled
polyomino ``upper|lower|[l1,...,ln]`` with labels read along north
steps bottom to top; doubly labelled ``upper|lower|[...]|[...]`` with
the lower labels read along east steps left to right; Motzkin word
``d r b d~`` (space separated); A-word ``0~,1,1~`` (comma separated).
Path input also accepts the letters x (east) and y (north) in either
case.
"""

from __future__ import annotations

import itertools
import math

from .symfunc import Composition

_STEP_MAP = {"E": "E", "N": "N", "X": "E", "Y": "N",
             "e": "E", "n": "N", "x": "E", "y": "N"}


class LatticePath:
    """Word over {E, N}; height and indentation sequences are views."""

    __slots__ = ("steps",)

    def __init__(self, steps=""):
        if isinstance(steps, LatticePath):
            steps = steps.steps
        out = []
        for ch in steps:
            if ch in " \t":
                continue
            if ch not in _STEP_MAP:
                raise ValueError("bad path letter %r" % (ch,))
            out.append(_STEP_MAP[ch])
        self.steps = "".join(out)

    @property
    def k(self):
        return self.steps.count("E")

    @property
    def n(self):
        return self.steps.count("N")

    @property
    def endpoint(self):
        return (self.k, self.n)

    def __len__(self):
        return len(self.steps)

    def heights(self):
        """Height of each east step, in order; weakly increasing."""
        h = 0
        out = []
        for ch in self.steps:
            if ch == "N":
                h += 1
            else:
                out.append(h)
        return tuple(out)

    def indents(self):
        """Number of east steps before each north step, in order."""
        x = 0
        out = []
        for ch in self.steps:
            if ch == "E":
                x += 1
            else:
                out.append(x)
        return tuple(out)

    @classmethod
    def from_heights(cls, heights, n):
        prev = 0
        word = []
        for h in heights:
            if h < prev or h > n:
                raise ValueError("height sequence must be weakly increasing within [0, n]")
            word.append("N" * (h - prev) + "E")
            prev = h
        word.append("N" * (n - prev))
        return cls("".join(word))

    @classmethod
    def from_indents(cls, indents, k):
        prev = 0
        word = []
        for d in indents:
            if d < prev or d > k:
                raise ValueError("indentation sequence must be weakly increasing within [0, k]")
            word.append("E" * (d - prev) + "N")
            prev = d
        word.append("E" * (k - prev))
        return cls("".join(word))

    def area(self):
        """Cells below the path inside its bounding rectangle."""
        return sum(self.heights())

    def vertices(self):
        x = y = 0
        out = [(0, 0)]
        for ch in self.steps:
            if ch == "E":
                x += 1
            else:
                y += 1
            out.append((x, y))
        return out

    def runs_n(self):
        """Lengths of maximal north-step runs, bottom to top."""
        out = []
        for ch, grp in itertools.groupby(self.steps):
            if ch == "N":
                out.append(sum(1 for _ in grp))
        return Composition(out)

    def runs_e(self):
        out = []
        for ch, grp in itertools.groupby(self.steps):
            if ch == "E":
                out.append(sum(1 for _ in grp))
        return Composition(out)

    def text(self):
        return self.steps

    @classmethod
    def parse(cls, s):
        return cls(s)

    def __eq__(self, other):
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return "LatticePath(%r)" % (self.steps,)


def enum_paths(k, n):
    """All paths from (0,0) to (k,n) in lexicographic word order (E < N)."""
    if k < 0 or n < 0:
        raise ValueError("need k, n >= 0")
    total = k + n
    for epos in itertools.combinations(range(total), k):
        word = ["N"] * total
        for i in epos:
            word[i] = "E"
        yield LatticePath("".join(word))


def path_area(p):
    return p.area()


class Polyomino:
    """Pair of paths sharing only their endpoints, upper weakly above."""

    __slots__ = ("upper", "lower")

    def __init__(self, upper, lower):
        upper = LatticePath(upper)
        lower = LatticePath(lower)
        reason = self._invalid_reason(upper, lower)
        if reason:
            raise ValueError(reason)
        self.upper = upper
        self.lower = lower

    @staticmethod
    def _invalid_reason(upper, lower):
        k, n = upper.endpoint
        if lower.endpoint != (k, n):
            return "paths end at different points"
        if k < 1 or n < 1:
            return "degenerate size: need k >= 1 and n >= 1"
        u = upper.heights()
        v = lower.heights()
        if u[0] < 1 or u[-1] != n or v[0] != 0 or v[-1] > n - 1:
            return "paths touch outside the endpoints"
        for i in range(k - 1):
            if v[i + 1] >= u[i]:
                return "paths touch outside the endpoints"
        return None

    @classmethod
    def check(cls, upper, lower):
        return cls._invalid_reason(LatticePath(upper), LatticePath(lower)) is None

    @property
    def k(self):
        return self.upper.k

    @property
    def n(self):
        return self.upper.n

    def area(self):
        """Cells between the paths, minus the minimum k + n - 1."""
        u = self.upper.heights()
        v = self.lower.heights()
        return sum(u) - sum(v) - (self.k + self.n - 1)

    def gamma(self):
        """North-run lengths of the upper path, bottom to top."""
        return self.upper.runs_n()

    def delta(self):
        """East-run lengths of the lower path, left to right."""
        return self.lower.runs_e()

    def reflect(self):
        """Reflection across the diagonal; swaps width and height."""
        swap = str.maketrans("EN", "NE")
        return Polyomino(self.lower.steps.translate(swap),
                         self.upper.steps.translate(swap))

    def text(self):
        return self.upper.steps + "|" + self.lower.steps

    @classmethod
    def parse(cls, s):
        parts = s.strip().split("|")
        if len(parts) != 2:
            raise ValueError("polyomino text must be upper|lower")
        return cls(parts[0], parts[1])

    def __eq__(self, other):
        if not isinstance(other, Polyomino):
            return NotImplemented
        return self.upper == other.upper and self.lower == other.lower

    def __hash__(self):
        return hash((self.upper, self.lower))

    def __repr__(self):
        return "Polyomino(%r)" % (self.text(),)


def enum_polyominoes(k, n):
    """All parallelogram polyominoes of width k and height n.

    Iterates pairs of height sequences in lexicographic order of
    (upper, lower).
    """
    if k < 1 or n < 1:
        raise ValueError("degenerate size: need k >= 1 and n >= 1")

    def upper_heights(i, prev):
        if i == k:
            yield ()
            return
        lo = max(prev, 1)
        hi = n if i < k - 1 else n
        for h in range(lo, hi + 1):
            if i == k - 1 and h != n:
                continue
            for rest in upper_heights(i + 1, h):
                yield (h,) + rest

    def lower_heights(i, prev, u):
        if i == k:
            yield ()
            return
        if i == 0:
            rng = (0,)
        else:
            top = min(u[i - 1] - 1, n - 1)
            rng = range(prev, top + 1)
        for h in rng:
            for rest in lower_heights(i + 1, h, u):
                yield (h,) + rest

    for u in upper_heights(0, 1):
        up = LatticePath.from_heights(u, n)
        for v in lower_heights(0, 0, u):
            yield Polyomino(up, LatticePath.from_heights(v, n))


def count_polyominoes(k, n):
    """Closed count of parallelogram polyominoes of width k, height n.

    binom(k+n-1, k) * binom(k+n-1, k-1) / (k+n-1); agrees with the
    length of enum_polyominoes (tested for k, n <= 6).
    """
    if k < 1 or n < 1:
        raise ValueError("degenerate size: need k >= 1 and n >= 1")
    m = k + n - 1
    return math.comb(m, k) * math.comb(m, k - 1) // m


def poly_area(pi):
    return pi.area()


def gamma(pi):
    return pi.gamma()


# ----------------------------------------------------------------------
# Motzkin words and A-words

_MOTZKIN_TOKENS = ("d", "r", "b", "d~")

# token built from (lower step, upper step), taken stepwise in parallel
_PAIR_TO_TOKEN = {("E", "N"): "d", ("N", "N"): "r",
                  ("E", "E"): "b", ("N", "E"): "d~"}
_TOKEN_TO_PAIR = {tok: pair for pair, tok in _PAIR_TO_TOKEN.items()}


class MotzkinWord:
    """Balanced primitive word over d, r, b, d~ (d up, d~ down)."""

    __slots__ = ("tokens",)

    def __init__(self, tokens):
        if isinstance(tokens, MotzkinWord):
            tokens = tokens.tokens
        tokens = tuple(tokens)
        if not tokens:
            raise ValueError("empty Motzkin word")
        h = 0
        for i, tok in enumerate(tokens):
            if tok not in _MOTZKIN_TOKENS:
                raise ValueError("bad Motzkin token %r" % (tok,))
            if tok == "d":
                h += 1
            elif tok == "d~":
                h -= 1
            if h <= 0 and i < len(tokens) - 1:
                raise ValueError("word is not primitive")
        if h != 0:
            raise ValueError("word is not balanced")
        self.tokens = tokens

    @property
    def n(self):
        return sum(1 for t in self.tokens if t in ("d", "r"))

    @property
    def k(self):
        return sum(1 for t in self.tokens if t in ("b", "d~"))

    def __len__(self):
        return len(self.tokens)

    def text(self):
        return " ".join(self.tokens)

    @classmethod
    def parse(cls, s):
        return cls(s.split())

    def __eq__(self, other):
        if not isinstance(other, MotzkinWord):
            return NotImplemented
        return self.tokens == other.tokens

    def __hash__(self):
        return hash(self.tokens)

    def __repr__(self):
        return "MotzkinWord(%r)" % (self.text(),)


def to_motzkin(pi):
    """Read off (lower step, upper step) pairs, one token per index."""
    return MotzkinWord(tuple(_PAIR_TO_TOKEN[(lo, up)] for lo, up in
                             zip(pi.lower.steps, pi.upper.steps)))


def from_motzkin(w):
    w = MotzkinWord(w)
    lower = []
    upper = []
    for tok in w.tokens:
        lo, up = _TOKEN_TO_PAIR[tok]
        lower.append(lo)
        upper.append(up)
    return Polyomino("".join(upper), "".join(lower))


class AWord:
    """Word in the ordered alphabet 0~ < 1 < 1~ < 2 < 2~ < ..."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        if isinstance(letters, AWord):
            letters = letters.letters
        letters = tuple(letters)
        for l in letters:
            j, barred = self._split(l)
            if barred and j < 0:
                raise ValueError("bad A-word letter %r" % (l,))
            if not barred and j < 1:
                raise ValueError("bad A-word letter %r" % (l,))
        self.letters = letters

    @staticmethod
    def _split(l):
        if not isinstance(l, str):
            raise ValueError("A-word letters are strings like '1' or '1~'")
        if l.endswith("~"):
            return int(l[:-1]), True
        return int(l), False

    @staticmethod
    def rank(l):
        """Position in the alphabet order: 0~ is 0, j is 2j-1, j~ is 2j."""
        j, barred = AWord._split(l)
        return 2 * j if barred else 2 * j - 1

    def ranks(self):
        return tuple(self.rank(l) for l in self.letters)

    def __len__(self):
        return len(self.letters)

    def text(self):
        return ",".join(self.letters)

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if not s:
            return cls(())
        return cls(tuple(tok.strip() for tok in s.split(",")))

    def __eq__(self, other):
        if not isinstance(other, AWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "AWord(%r)" % (self.text(),)


def motzkin_to_aword(w):
    """Rewrite tokens at their height: d~ drops out, d at height j gives
    j~ then j+1, r at j gives j, b at j gives j~."""
    out = []
    h = 0
    for tok in MotzkinWord(w).tokens:
        if tok == "d":
            out.append("%d~" % h)
            out.append("%d" % (h + 1))
            h += 1
        elif tok == "r":
            out.append("%d" % h)
        elif tok == "b":
            out.append("%d~" % h)
        else:
            h -= 1
    return AWord(tuple(out))


def to_aword(pi):
    return motzkin_to_aword(to_motzkin(pi))


def aword_dinv(w):
    """Pairs i < j whose letters are alphabet neighbours, the later
    letter being the successor of the earlier one."""
    r = AWord(w).ranks()
    total = 0
    for i in range(len(r)):
        for j in range(i + 1, len(r)):
            if r[j] == r[i] + 1:
                total += 1
    return total


def dinv(pi):
    """Adjacent-pair count of the A-word, successor convention.

    On ribbon shapes this equals the area below the lower path plus
    k + n - 1; the opposite direction admits no constant offset, which
    is what fixes the convention.
    """
    return aword_dinv(to_aword(pi))


# ----------------------------------------------------------------------
# labellings


def _label_assignments(runs, labels):
    """Distribute `labels` over runs; each run gets a sorted block."""
    runs = tuple(runs)
    labels = tuple(sorted(labels))
    if not runs:
        yield ()
        return
    r = runs[0]
    for combo in itertools.combinations(labels, r):
        remaining = tuple(x for x in labels if x not in combo)
        for rest in _label_assignments(runs[1:], remaining):
            yield combo + rest


def _runs_ok(word, step, labels):
    """Labels listed along `step` letters must increase within runs."""
    pos = 0
    for ch, grp in itertools.groupby(word):
        size = sum(1 for _ in grp)
        if ch == step:
            block = labels[pos:pos + size]
            if list(block) != sorted(block):
                return False
            pos += size
    return True


class LabelledPath:
    """Path with labels 1..n on its north steps, bottom to top,
    increasing along each maximal north run.  Width zero is allowed."""

    __slots__ = ("path", "labels")

    def __init__(self, path, labels):
        path = LatticePath(path)
        labels = tuple(labels)
        n = path.n
        if sorted(labels) != list(range(1, n + 1)):
            raise ValueError("labels must be a permutation of 1..n")
        if not _runs_ok(path.steps, "N", labels):
            raise ValueError("labels must increase along north runs")
        self.path = path
        self.labels = labels

    def gamma(self):
        return self.path.runs_n()

    def set_partition(self):
        """Label blocks of the north runs, as a set of frozensets."""
        blocks = []
        pos = 0
        for size in self.gamma():
            blocks.append(frozenset(self.labels[pos:pos + size]))
            pos += size
        return frozenset(blocks)

    def text(self):
        return self.path.steps + "|[" + ",".join(map(str, self.labels)) + "]"

    @classmethod
    def parse(cls, s):
        steps, _, rest = s.strip().partition("|")
        rest = rest.strip()
        if not (rest.startswith("[") and rest.endswith("]")):
            raise ValueError("labelled path text must be steps|[l1,...]")
        inner = rest[1:-1].strip()
        labels = [int(tok) for tok in inner.split(",")] if inner else []
        return cls(steps, labels)

    def __eq__(self, other):
        if not isinstance(other, LabelledPath):
            return NotImplemented
        return self.path == other.path and self.labels == other.labels

    def __hash__(self):
        return hash((self.path, self.labels))

    def __repr__(self):
        return "LabelledPath(%r)" % (self.text(),)


def enum_labelled_paths(k, n):
    """All labelled paths to (k, n); there are (k+1)^n of them."""
    for p in enum_paths(k, n):
        for labels in _label_assignments(p.runs_n(), range(1, n + 1)):
            yield LabelledPath(p, labels)


class LabelledPolyomino:
    """Polyomino whose upper north steps carry labels 1..n, increasing
    along each big step (maximal north run)."""

    __slots__ = ("shape", "labels")

    def __init__(self, shape, labels):
        if not isinstance(shape, Polyomino):
            shape = Polyomino.parse(shape) if isinstance(shape, str) else shape
        labels = tuple(labels)
        if sorted(labels) != list(range(1, shape.n + 1)):
            raise ValueError("labels must be a permutation of 1..n")
        if not _runs_ok(shape.upper.steps, "N", labels):
            raise ValueError("labels must increase along big steps")
        self.shape = shape
        self.labels = labels

    def gamma(self):
        return self.shape.gamma()

    def area(self):
        return self.shape.area()

    def set_partition(self):
        blocks = []
        pos = 0
        for size in self.gamma():
            blocks.append(frozenset(self.labels[pos:pos + size]))
            pos += size
        return frozenset(blocks)

    def labelled_upper(self):
        return LabelledPath(self.shape.upper, self.labels)

    def text(self):
        return (self.shape.text() + "|[" +
                ",".join(map(str, self.labels)) + "]")

    @classmethod
    def parse(cls, s):
        parts = s.strip().split("|")
        if len(parts) != 3:
            raise ValueError("labelled polyomino text must be upper|lower|[l1,...]")
        lab = parts[2].strip()
        if not (lab.startswith("[") and lab.endswith("]")):
            raise ValueError("labels must look like [1,3,2]")
        inner = lab[1:-1].strip()
        labels = [int(tok) for tok in inner.split(",")] if inner else []
        return cls(Polyomino(parts[0], parts[1]), labels)

    def __eq__(self, other):
        if not isinstance(other, LabelledPolyomino):
            return NotImplemented
        return self.shape == other.shape and self.labels == other.labels

    def __hash__(self):
        return hash((self.shape, self.labels))

    def __repr__(self):
        return "LabelledPolyomino(%r)" % (self.text(),)


def enum_labelled(k, n):
    """Labelled polyominoes; multinomial(n; gamma) per shape."""
    for pi in enum_polyominoes(k, n):
        for labels in _label_assignments(pi.gamma(), range(1, n + 1)):
            yield LabelledPolyomino(pi, labels)


class DoublyLabelledPolyomino:
    """Labelled polyomino with labels 1..k on the lower east steps,
    increasing along east runs.  With star set, the first east step
    must carry label 1."""

    __slots__ = ("base", "lower_labels", "star")

    def __init__(self, base, lower_labels, star=False):
        if not isinstance(base, LabelledPolyomino):
            raise ValueError("base must be a LabelledPolyomino")
        lower_labels = tuple(lower_labels)
        k = base.shape.k
        if sorted(lower_labels) != list(range(1, k + 1)):
            raise ValueError("lower labels must be a permutation of 1..k")
        if not _runs_ok(base.shape.lower.steps, "E", lower_labels):
            raise ValueError("lower labels must increase along east runs")
        if star and lower_labels[0] != 1:
            raise ValueError("starred: first east step must carry label 1")
        self.base = base
        self.lower_labels = lower_labels
        self.star = bool(star)

    def delta(self):
        return self.base.shape.delta()

    def text(self):
        return (self.base.text() + "|[" +
                ",".join(map(str, self.lower_labels)) + "]")

    @classmethod
    def parse(cls, s, star=False):
        parts = s.strip().split("|")
        if len(parts) != 4:
            raise ValueError(
                "doubly labelled text must be upper|lower|[..]|[..]")
        base = LabelledPolyomino.parse("|".join(parts[:3]))
        low = parts[3].strip()
        if not (low.startswith("[") and low.endswith("]")):
            raise ValueError("labels must look like [1,3,2]")
        inner = low[1:-1].strip()
        labels = [int(tok) for tok in inner.split(",")] if inner else []
        return cls(base, labels, star)

    def __eq__(self, other):
        if not isinstance(other, DoublyLabelledPolyomino):
            return NotImplemented
        return (self.base == other.base
                and self.lower_labels == other.lower_labels
                and self.star == other.star)

    def __hash__(self):
        return hash((self.base, self.lower_labels, self.star))

    def __repr__(self):
        return "DoublyLabelledPolyomino(%r, %r, star=%r)" % (
            self.base.text(), list(self.lower_labels), self.star)


def enum_doubly(k, n, star=False):
    for base in enum_labelled(k, n):
        for low in _label_assignments(base.shape.delta(), range(1, k + 1)):
            if star and low[0] != 1:
                continue
            yield DoublyLabelledPolyomino(base, low, star)


# ----------------------------------------------------------------------
# the cyclic construction


def cyclic_map(lp, beta_prime):
    """Cut the pair of periodic paths at its k transversal points.

    Input: a labelled path of width k-1 and height n, and a plain path
    in the (k-1) x (n-1) grid.  The labelled path plus a final east
    step repeats with period (k, n) through (0, 0); the plain path
    plus a final north step repeats with period (k-1, n) through
    (1, 0).  A transversal point is one that the first periodic path
    reaches by an east step and the second by a north step; there are
    exactly k of them.  Cutting a full window before each such point
    (and prepending an east step to the second path) yields the class
    of k equivalent input pairs and the unique cut that forms a valid
    labelled polyomino.

    Returns (pairs, rep): `pairs` is the list of k (LabelledPath,
    LatticePath) cuts ordered by cut point, `rep` the representative
    LabelledPolyomino.  All cuts in a class share the same label set
    partition.
    """
    if not isinstance(lp, LabelledPath):
        raise ValueError("first argument must be a LabelledPath")
    beta_prime = LatticePath(beta_prime)
    n = lp.path.n
    k = lp.path.k + 1
    if beta_prime.endpoint != (k - 1, n - 1):
        raise ValueError("second path must live in the (k-1) x (n-1) grid")

    # periodic words with their label streams
    lab_iter = iter(lp.labels)
    a = [(ch, next(lab_iter) if ch == "N" else None) for ch in lp.path.steps]
    a.append(("E", None))
    b = list(beta_prime.steps) + ["N"]
    La, Lb = len(a), len(b)

    periods = 2 * k + 4
    ell_east = {}
    x, y = -periods * k, -periods * n
    for j in range(-periods * La, periods * La):
        ch = a[j % La][0]
        if ch == "E":
            x += 1
            ell_east[(x, y)] = j
        else:
            y += 1
    beta_north = {}
    x, y = 1 - periods * (k - 1), -periods * n
    for j in range(-periods * Lb, periods * Lb):
        ch = b[j % Lb]
        if ch == "E":
            x += 1
        else:
            y += 1
            beta_north[(x, y)] = j

    points = sorted(set(ell_east) & set(beta_north))
    if len(points) != k:
        raise AssertionError("expected %d transversal points, found %d"
                             % (k, len(points)))

    pairs = []
    rep = None
    partitions_seen = set()
    for p in points:
        ra = (ell_east[p] + 1) % La
        rb = (beta_north[p] + 1) % Lb
        awin = a[ra:] + a[:ra]
        bwin = b[rb:] + b[:rb]
        upper_word = "".join(ch for ch, _ in awin)
        upper_labels = tuple(l for ch, l in awin if ch == "N")
        lower_word = "E" + "".join(bwin)
        if awin[-1][0] != "E" or bwin[-1] != "N":
            raise AssertionError("cut does not end as expected")
        cut_lp = LabelledPath(upper_word[:-1], upper_labels)
        cut_beta = LatticePath(lower_word[1:-1])
        pairs.append((cut_lp, cut_beta))
        partitions_seen.add(cut_lp.set_partition())
        if Polyomino.check(upper_word, lower_word):
            cand = LabelledPolyomino(Polyomino(upper_word, lower_word),
                                     upper_labels)
            if rep is not None:
                raise AssertionError("two valid cuts in one class")
            rep = cand
    if rep is None:
        raise AssertionError("no valid cut in the class")
    if len(partitions_seen) != 1:
        raise AssertionError("label set partition varies across the class")
    return pairs, rep
