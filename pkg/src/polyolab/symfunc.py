"""Symmetric functions with rational coefficients in q and t.

Everything is stored in power-sum coordinates: a SymF is a finite map
from partitions mu to QTRat coefficients of p_mu.  Power sums make the
Hall pairing and plethystic alphabet scalings diagonal, so those come
for free; the classical bases m, e, h, s and the forgotten basis are
reached through per-degree conversion tables built once and cached.

Partitions are weakly decreasing tuples of positive integers and print
as ``[3,1,1]``; compositions keep their order and print as ``(1,2,1)``.
The text form of a symmetric function is a sum of ``coeff*b[parts]``
terms with a basis letter b in {m, e, h, p, s, f}, for example
``h[2,1] - 3*q*s[1,1,1]``; f stands for the forgotten basis.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from .qt import QTPoly, QTRat, exact_div, to_rat

DEFAULT_CAP = 12

BASES = ("m", "e", "h", "p", "s", "forgotten")
_BASIS_LETTER = {"m": "m", "e": "e", "h": "h", "p": "p", "s": "s",
                 "forgotten": "f"}
_LETTER_BASIS = {v: k for k, v in _BASIS_LETTER.items()}


class CapExceeded(Exception):
    """An operation would pass the configured degree cap."""

    def __init__(self, degree, cap):
        super().__init__("degree %d exceeds cap %d" % (degree, cap))
        self.degree = degree
        self.cap = cap


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; () has weight 0."""

    def __new__(cls, parts=()):
        parts = tuple(int(a) for a in parts)
        prev = None
        for a in parts:
            if a < 1:
                raise ValueError("partition parts must be positive, got %r" % (a,))
            if prev is not None and a > prev:
                raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))
            prev = a
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for a in self if a > j) for j in range(self[0]))

    def multiplicities(self):
        m = {}
        for a in self:
            m[a] = m.get(a, 0) + 1
        return m

    def cells(self):
        """All (row, col) pairs, 0-based; row i holds self[i] cells."""
        for i, a in enumerate(self):
            for j in range(a):
                yield (i, j)

    def n_stat(self):
        """Sum of (i-1)*part_i with rows counted from 1."""
        return sum(i * a for i, a in enumerate(self))

    def hook(self, i, j, conj=None):
        if conj is None:
            conj = self.conjugate()
        return self[i] - j + conj[j] - i - 1

    def dominates(self, other):
        """Partial-sum comparison; requires equal weights."""
        other = Partition(other)
        if self.weight != other.weight:
            raise ValueError("dominance needs equal weights")
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def text(self):
        return "[" + ",".join(str(a) for a in self) + "]"

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError("partition text must look like [3,1,1], got %r" % (s,))
        inner = s[1:-1].strip()
        if not inner:
            return cls()
        return cls(int(tok) for tok in inner.split(","))

    def __repr__(self):
        return "Partition(%s)" % (self.text(),)


class Composition(tuple):
    """Tuple of positive integers; order is significant; () is empty."""

    def __new__(cls, parts=()):
        parts = tuple(int(a) for a in parts)
        for a in parts:
            if a < 1:
                raise ValueError("composition parts must be positive, got %r" % (a,))
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def to_partition(self):
        return Partition(sorted(self, reverse=True))

    def text(self):
        return "(" + ",".join(str(a) for a in self) + ")"

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError("composition text must look like (1,2,1), got %r" % (s,))
        inner = s[1:-1].strip()
        if not inner:
            return cls()
        return cls(int(tok) for tok in inner.split(","))

    def __repr__(self):
        return "Composition(%s)" % (self.text(),)


def partitions(n, max_part=None):
    """Partitions of n, largest first: [n], [n-1,1], ..., [1,...,1]."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest

    top = n if max_part is None else min(max_part, n)
    for tup in rec(n, top):
        yield Partition(tup)


def compositions(n, length=None):
    """Compositions of n; fix the number of parts with `length`."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(rem, left):
        if rem == 0:
            if left in (None, 0):
                yield ()
            return
        if left == 0:
            return
        hi = rem if left is None else rem - (left - 1)
        for first in range(1, hi + 1):
            for rest in rec(rem - first, None if left is None else left - 1):
                yield (first,) + rest

    for tup in rec(n, length):
        yield Composition(tup)


def zmu(mu):
    """Centralizer order: product of i^{m_i} * m_i! over multiplicities."""
    z = 1
    for part, m in Partition(mu).multiplicities().items():
        z *= part ** m * math.factorial(m)
    return z


# ----------------------------------------------------------------------
# symmetric-group characters by border-strip removal on beta numbers


def schur_char(lam, mu):
    """Character value chi^lam(mu); both arguments of equal weight."""
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError("weights differ: %d vs %d" % (lam.weight, mu.weight))
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def _mn(lam, mu):
    if not mu:
        return 1
    r = mu[0]
    rest = Partition(mu[1:])
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        newlam = []
        for i, x in enumerate(newbeta):
            a = x - (ell - 1 - i)
            if a > 0:
                newlam.append(a)
        total += (-1) ** height * _mn(Partition(newlam), rest)
    return total


# ----------------------------------------------------------------------
# p-coordinate tables for the classical bases, cached per degree.
# Coefficients here are plain Fractions; QTRat enters only at SymF level.


def _pprod(d1, d2):
    out = {}
    for a, ca in d1.items():
        for b, cb in d2.items():
            key = Partition(sorted(a + b, reverse=True))
            v = ca * cb
            out[key] = out[key] + v if key in out else v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _hn_p(n):
    return {mu: Fraction(1, zmu(mu)) for mu in partitions(n)}


@lru_cache(maxsize=None)
def _en_p(n):
    return {mu: Fraction((-1) ** (n - len(mu)), zmu(mu)) for mu in partitions(n)}


@lru_cache(maxsize=None)
def _gen_mu_p(letter, mu):
    # product h_mu or e_mu, recursively over the parts
    if not mu:
        return {Partition(): Fraction(1)}
    head = _hn_p(mu[0]) if letter == "h" else _en_p(mu[0])
    return _pprod(head, _gen_mu_p(letter, Partition(mu[1:])))


@lru_cache(maxsize=None)
def _s_p(lam):
    d = {}
    for mu in partitions(sum(lam)):
        c = schur_char(lam, mu)
        if c:
            d[mu] = Fraction(c, zmu(mu))
    return d


@lru_cache(maxsize=None)
def _m_table(n):
    """p-coordinates of every m_mu of weight n.

    With A[mu][rho] = (coefficient of p_rho in h_mu) * z_rho, duality
    <m, h> = delta forces the m-coordinate matrix to be the inverse
    transpose of A; invert with Fractions by Gauss-Jordan.
    """
    plist = list(partitions(n))
    idx = {mu: i for i, mu in enumerate(plist)}
    size = len(plist)
    A = [[Fraction(0)] * size for _ in range(size)]
    for i, mu in enumerate(plist):
        for rho, c in _gen_mu_p("h", mu).items():
            A[i][idx[rho]] = c * zmu(rho)
    M = [[A[j][i] for j in range(size)] for i in range(size)]
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if M[r][col] != 0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        d = M[col][col]
        if d != 1:
            M[col] = [x / d for x in M[col]]
            inv[col] = [x / d for x in inv[col]]
        for r in range(size):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    table = {}
    for i, mu in enumerate(plist):
        table[mu] = {plist[j]: inv[i][j] for j in range(size) if inv[i][j]}
    return table


def _sign_twist(d):
    return {rho: c * (-1) ** (sum(rho) - len(rho)) for rho, c in d.items()}


@lru_cache(maxsize=None)
def _dual_table(basis, n):
    """p-coordinates of the Hall duals of `basis` in degree n."""
    plist = list(partitions(n))
    if basis == "m":
        return {mu: _gen_mu_p("h", mu) for mu in plist}
    if basis == "h":
        return _m_table(n)
    if basis == "e":
        return {mu: _sign_twist(_m_table(n)[mu]) for mu in plist}
    if basis == "forgotten":
        return {mu: _gen_mu_p("e", mu) for mu in plist}
    if basis == "s":
        return {lam: _s_p(lam) for lam in plist}
    raise ValueError("unknown basis %r" % (basis,))


def _as_partition(x):
    if isinstance(x, Partition):
        return x
    if isinstance(x, int):
        return Partition() if x == 0 else Partition((x,))
    return Partition(x)


class SymF:
    """Symmetric function held in power-sum coordinates over QTRat."""

    __slots__ = ("pc",)

    def __init__(self, pcoeffs=None):
        pc = {}
        if pcoeffs:
            for mu, c in pcoeffs.items():
                c = to_rat(c)
                if c.is_zero:
                    continue
                pc[_as_partition(mu)] = c
        self.pc = pc

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({Partition(): 1})

    @classmethod
    def p(cls, mu):
        return cls({_as_partition(mu): 1})

    @classmethod
    def h(cls, mu):
        return cls(_gen_mu_p("h", _as_partition(mu)))

    @classmethod
    def e(cls, mu):
        return cls(_gen_mu_p("e", _as_partition(mu)))

    @classmethod
    def s(cls, lam):
        return cls(_s_p(_as_partition(lam)))

    @classmethod
    def m(cls, mu):
        mu = _as_partition(mu)
        return cls(_m_table(mu.weight)[mu])

    @classmethod
    def forgotten(cls, mu):
        return omega(cls.m(mu))

    @classmethod
    def from_coeffs(cls, basis, coeffs):
        """Assemble from a map Partition -> coefficient in the given basis."""
        gens = {"m": cls.m, "e": cls.e, "h": cls.h, "p": cls.p, "s": cls.s,
                "forgotten": cls.forgotten}
        if basis not in gens:
            raise ValueError("unknown basis %r" % (basis,))
        total = cls.zero()
        for mu, c in coeffs.items():
            total = total + gens[basis](mu) * c
        return total

    @property
    def is_zero(self):
        return not self.pc

    def __bool__(self):
        return bool(self.pc)

    def degree(self):
        if not self.pc:
            return -1
        return max(mu.weight for mu in self.pc)

    def homogeneous(self, d):
        return SymF({mu: c for mu, c in self.pc.items() if mu.weight == d})

    def degrees(self):
        return sorted({mu.weight for mu in self.pc})

    def coeff(self, mu):
        return self.pc.get(_as_partition(mu), QTRat.zero())

    def support(self):
        return sorted(self.pc, key=lambda mu: (mu.weight, mu))

    def __neg__(self):
        return SymF({mu: -c for mu, c in self.pc.items()})

    def __add__(self, other):
        if not isinstance(other, SymF):
            return NotImplemented
        out = dict(self.pc)
        for mu, c in other.pc.items():
            out[mu] = out[mu] + c if mu in out else c
        return SymF(out)

    def __sub__(self, other):
        if not isinstance(other, SymF):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymF):
            out = {}
            for a, ca in self.pc.items():
                for b, cb in other.pc.items():
                    key = Partition(sorted(a + b, reverse=True))
                    v = ca * cb
                    out[key] = out[key] + v if key in out else v
            return SymF(out)
        try:
            r = to_rat(other)
        except TypeError:
            return NotImplemented
        return SymF({mu: c * r for mu, c in self.pc.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymF):
            return NotImplemented
        return self.pc == other.pc

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def specialize_t(self, mode):
        """Apply QTRat.specialize_t to every coefficient."""
        return SymF({mu: c.specialize_t(mode) for mu, c in self.pc.items()})

    def to_basis(self, basis, cap=DEFAULT_CAP):
        return to_basis(self, basis, cap)

    def text(self, basis="p"):
        coeffs = dict(self.pc) if basis == "p" else to_basis(self, basis, cap=None)
        letter = _BASIS_LETTER[basis]
        return _format_terms(
            sorted(coeffs.items(), key=lambda kv: (kv[0].weight, kv[0])),
            lambda mu: letter + mu.text() if mu else "")

    @classmethod
    def parse(cls, s):
        """Parse the text form; basis letters may be mixed freely."""
        total = cls.zero()
        for sign, chunk in _signed_chunks(s):
            m = _TERM_RE.match(chunk)
            if m is None:
                c = _parse_coeff(chunk)
                total = total + cls.one() * (c * sign)
                continue
            coeff_text, letter, parts = m.group(1), m.group(2), m.group(3)
            c = QTRat.one() if coeff_text is None else _parse_coeff(coeff_text)
            mu = _parse_parts(parts)
            gen = cls.from_coeffs(_LETTER_BASIS[letter], {mu: 1})
            total = total + gen * (c * sign)
        return total

    def __repr__(self):
        return "SymF(%s)" % (self.text("p"),)


def to_basis(f, basis, cap=DEFAULT_CAP):
    """Expand f in one of m, e, h, p, s, forgotten; map Partition -> QTRat."""
    if basis not in BASES:
        raise ValueError("unknown basis %r" % (basis,))
    if cap is not None and f.degree() > cap:
        raise CapExceeded(f.degree(), cap)
    if basis == "p":
        return dict(f.pc)
    out = {}
    for d in f.degrees():
        part = {mu: c for mu, c in f.pc.items() if mu.weight == d}
        for mu, dual in _dual_table(basis, d).items():
            val = QTRat.zero()
            for rho, w in dual.items():
                c = part.get(rho)
                if c is not None:
                    val = val + c * (w * zmu(rho))
            if not val.is_zero:
                out[mu] = val
    return out


def hall(f, g):
    """Hall pairing; diagonal on power sums with <p_mu, p_mu> = z_mu."""
    total = QTRat.zero()
    for mu, c in f.pc.items():
        d = g.pc.get(mu)
        if d is not None:
            total = total + c * d * zmu(mu)
    return total


def omega(f):
    """The involution sending p_r to (-1)^(r-1) p_r."""
    return SymF({mu: c * (-1) ** (mu.weight - mu.length)
                 for mu, c in f.pc.items()})


def pleth_scale(f, m):
    """Scale the alphabet: p_r picks up the factor m(r)."""
    out = {}
    for mu, c in f.pc.items():
        v = c
        for r in mu:
            v = v * m(r)
        out[mu] = v
    return SymF(out)


def principal(f, k):
    """Evaluate f at the alphabet 1, q, ..., q^(k-1)."""
    if k < 0:
        raise ValueError("alphabet size must be nonnegative")
    total = QTRat.zero()
    for mu, c in f.pc.items():
        v = c
        for r in mu:
            v = v * QTPoly({(j * r, 0): 1 for j in range(k)})
        total = total + v
    return total


def rect_principal(k, r, m):
    """Schur function of the r x k rectangle at 1, q, ..., q^(m-1).

    Hook-content product; the result is a polynomial in q and the
    division is exact.  Empty rectangle gives 1; m < r gives 0.
    """
    if k < 0 or r < 0 or m < 1:
        raise ValueError("need k, r >= 0 and m >= 1")
    if k == 0 or r == 0:
        return QTPoly.one()
    if m < r:
        return QTPoly.zero()
    one = QTPoly.one()
    num = QTPoly.one()
    den = QTPoly.one()
    for i in range(r):
        for j in range(k):
            num = num * (one - QTPoly.q(m + j - i))
            den = den * (one - QTPoly.q(k + r - i - j - 1))
    return QTPoly.q(k * r * (r - 1) // 2) * exact_div(num, den)


class BiSymF:
    """Finite sum of c * p_lam(y) * p_rho(z) over two alphabets."""

    __slots__ = ("pc",)

    def __init__(self, pcoeffs=None):
        pc = {}
        if pcoeffs:
            for (lam, rho), c in pcoeffs.items():
                c = to_rat(c)
                if c.is_zero:
                    continue
                pc[(_as_partition(lam), _as_partition(rho))] = c
        self.pc = pc

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(Partition(), Partition()): 1})

    @classmethod
    def from_y(cls, f):
        return cls({(mu, Partition()): c for mu, c in f.pc.items()})

    @classmethod
    def from_z(cls, f):
        return cls({(Partition(), mu): c for mu, c in f.pc.items()})

    @classmethod
    def product(cls, fy, fz):
        return cls.from_y(fy) * cls.from_z(fz)

    @property
    def is_zero(self):
        return not self.pc

    def __bool__(self):
        return bool(self.pc)

    def ydeg(self):
        return max((l.weight for l, _ in self.pc), default=-1)

    def zdeg(self):
        return max((r.weight for _, r in self.pc), default=-1)

    def swap(self):
        """Exchange the two alphabets."""
        return BiSymF({(r, l): c for (l, r), c in self.pc.items()})

    def __neg__(self):
        return BiSymF({k: -c for k, c in self.pc.items()})

    def __add__(self, other):
        if not isinstance(other, BiSymF):
            return NotImplemented
        out = dict(self.pc)
        for k, c in other.pc.items():
            out[k] = out[k] + c if k in out else c
        return BiSymF(out)

    def __sub__(self, other):
        if not isinstance(other, BiSymF):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiSymF):
            out = {}
            for (l1, r1), c1 in self.pc.items():
                for (l2, r2), c2 in other.pc.items():
                    key = (Partition(sorted(l1 + l2, reverse=True)),
                           Partition(sorted(r1 + r2, reverse=True)))
                    v = c1 * c2
                    out[key] = out[key] + v if key in out else v
            return BiSymF(out)
        try:
            r = to_rat(other)
        except TypeError:
            return NotImplemented
        return BiSymF({k: c * r for k, c in self.pc.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiSymF):
            return NotImplemented
        return self.pc == other.pc

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def hall_y(self, g):
        """Pair the y alphabet against g; the z alphabet survives."""
        out = {}
        for (lam, rho), a in self.pc.items():
            c = g.pc.get(lam)
            if c is not None:
                v = a * c * zmu(lam)
                out[rho] = out[rho] + v if rho in out else v
        return SymF(out)

    def hall_z(self, g):
        return self.swap().hall_y(g)

    def coeff_sy(self, sigma):
        """Coefficient of s_sigma(y) as a symmetric function in z."""
        return self.hall_y(SymF.s(sigma))

    def coeff_sz(self, sigma):
        return self.swap().coeff_sy(sigma)

    def text(self):
        """Double Schur expansion: sum of coeff * sY[..] * sZ[..] terms."""
        out = {}
        for (lam, rho), a in self.pc.items():
            for sig in partitions(lam.weight):
                c1 = schur_char(sig, lam)
                if not c1:
                    continue
                for tau in partitions(rho.weight):
                    c2 = schur_char(tau, rho)
                    if not c2:
                        continue
                    key = (sig, tau)
                    v = a * (c1 * c2)
                    out[key] = out[key] + v if key in out else v
        items = [(k, c) for k, c in out.items() if not c.is_zero]
        items.sort(key=lambda kv: (kv[0][0].weight, kv[0][1].weight,
                                   kv[0][0], kv[0][1]))

        def body(key):
            sig, tau = key
            if not sig and not tau:
                return ""
            return "sY" + sig.text() + "*sZ" + tau.text()

        return _format_terms(items, body)

    @classmethod
    def parse(cls, s):
        total = cls.zero()
        for sign, chunk in _signed_chunks(s):
            m = _BITERM_RE.match(chunk)
            if m is None:
                c = _parse_coeff(chunk)
                total = total + cls.one() * (c * sign)
                continue
            coeff_text, yparts, zparts = m.group(1), m.group(2), m.group(3)
            c = QTRat.one() if coeff_text is None else _parse_coeff(coeff_text)
            term = cls.product(SymF.s(_parse_parts(yparts)),
                               SymF.s(_parse_parts(zparts)))
            total = total + term * (c * sign)
        return total

    def __repr__(self):
        return "BiSymF(%s)" % (self.text(),)


# ----------------------------------------------------------------------
# shared text-form helpers

_TERM_RE = re.compile(r"^(?:(.+?)\*)?\s*([mehpsf])\[([\d,\s]*)\]\s*$")
_BITERM_RE = re.compile(
    r"^(?:(.+?)\*)?\s*sY\[([\d,\s]*)\]\s*\*\s*sZ\[([\d,\s]*)\]\s*$")


def _signed_chunks(s):
    """Split at top-level + and - into (sign, chunk) pairs."""
    bounds = []
    depth = 0
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced brackets at position %d" % i)
        elif depth == 0 and ch in "+-":
            bounds.append(i)
    if depth != 0:
        raise ValueError("unbalanced brackets in %r" % (s,))
    out = []
    prev = 0
    sign = 1
    for b in bounds + [len(s)]:
        chunk = s[prev:b].strip()
        if chunk:
            out.append((sign, chunk))
        elif prev > 0:
            raise ValueError("empty term at position %d" % prev)
        if b < len(s):
            sign = 1 if s[b] == "+" else -1
            prev = b + 1
    if not out:
        raise ValueError("empty expression")
    return out


def _parse_parts(text):
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(tok) for tok in text.split(","))


def _parse_coeff(s):
    s = s.strip()
    try:
        return QTRat.parse(s)
    except ValueError:
        if s.startswith("(") and s.endswith(")"):
            return QTRat.parse(s[1:-1])
        raise


def _coeff_prefix(c):
    """(negative?, multiplier text ending in '*' or empty)."""
    neg = c.num.leading()[1] < 0
    a = -c if neg else c
    if a.is_one:
        return neg, ""
    if a.is_polynomial and len(a.num.terms) == 1:
        return neg, a.text() + "*"
    if a.is_polynomial:
        return neg, "(" + a.num.text() + ")*"
    return neg, "(" + a.num.text() + ")/(" + a.den.text() + ")*"


def _format_terms(items, body):
    """Render (key, coeff) pairs; `body` maps a key to its symbol text."""
    if not items:
        return "0"
    pieces = []
    for key, c in items:
        neg, pref = _coeff_prefix(c)
        sym = body(key)
        if sym:
            piece = pref + sym
        else:
            piece = pref[:-1] if pref else "1"
        pieces.append((neg, piece))
    parts = []
    for i, (neg, piece) in enumerate(pieces):
        if i == 0:
            parts.append(("-" if neg else "") + piece)
        else:
            parts.append((" - " if neg else " + ") + piece)
    return "".join(parts)
