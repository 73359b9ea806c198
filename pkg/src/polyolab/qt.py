"""Exact arithmetic in the two parameters q and t.

Provides sparse polynomials (QTPoly), canonically reduced rational
functions (QTRat), windowed series in one auxiliary variable u
(AuxSeries), q-integers and q-binomials, and a fraction-free exact
linear solver.  All values are immutable after construction; operations
are pure and safe to share between worker processes.

Negative q-powers never appear inside a QTPoly: values such as q^(1-a)
are represented as rational functions with a q-power denominator.
"""

import math
from fractions import Fraction


def _as_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % type(c))


def _order_key(mono):
    # graded lexicographic, q before t
    return (mono[0] + mono[1], mono[0], mono[1])


_ONE_TERMS = {(0, 0): Fraction(1)}


class QTPoly:
    """Sparse polynomial in q and t with rational coefficients.

    Terms map (q-exponent, t-exponent) -> Fraction; zero coefficients are
    never stored and exponents are nonnegative integers.  The term order
    used for leading terms and printing is graded lex with q before t.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                qe, te = mono
                if not (isinstance(qe, int) and isinstance(te, int)) or qe < 0 or te < 0:
                    raise ValueError("exponents must be nonnegative integers: %r" % (mono,))
                c = _as_coeff(c)
                if c:
                    clean[(qe, te)] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): _as_coeff(c)})

    @classmethod
    def q(cls, e=1):
        return cls({(e, 0): 1})

    @classmethod
    def t(cls, e=1):
        return cls({(0, e): 1})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(qe + te for qe, te in self.terms)

    def qdeg(self):
        if not self.terms:
            return -1
        return max(qe for qe, _ in self.terms)

    def tdeg(self):
        if not self.terms:
            return -1
        return max(te for _, te in self.terms)

    def leading(self):
        """(monomial, coefficient) of the leading term under graded lex."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=_order_key)
        return mono, self.terms[mono]

    def coeff(self, qe, te):
        return self.terms.get((qe, te), Fraction(0))

    # -- arithmetic ----------------------------------------------------

    def __neg__(self):
        return QTPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = _to_poly_or_none(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return QTPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_poly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _to_poly_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_coeff(other)
            if not c:
                return QTPoly()
            return QTPoly({m: v * c for m, v in self.terms.items()})
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = {}
        if all(c.denominator == 1 for c in self.terms.values()) and \
                all(c.denominator == 1 for c in other.terms.values()):
            # plain integer coefficients: keep the inner loop in int land
            bi = [(m, c.numerator) for m, c in other.terms.items()]
            for (qa, ta), ca in self.terms.items():
                ca = ca.numerator
                for (qb, tb), cb in bi:
                    m = (qa + qb, ta + tb)
                    out[m] = out.get(m, 0) + ca * cb
            return QTPoly({m: v for m, v in out.items() if v})
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                m = (qa + qb, ta + tb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return QTPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QTPoly power must be a nonnegative integer")
        result = QTPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _to_poly_or_none(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, qv, tv):
        """Exact value at rational points qv, tv."""
        qv = _as_coeff(qv)
        tv = _as_coeff(tv)
        total = Fraction(0)
        for (qe, te), c in self.terms.items():
            total += c * qv ** qe * tv ** te
        return total

    # -- t-specialization helpers -------------------------------------

    def t_at_one(self):
        out = {}
        for (qe, te), c in self.terms.items():
            m = (qe, 0)
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return QTPoly(out)

    def t_at_zero(self):
        return QTPoly({m: c for m, c in self.terms.items() if m[1] == 0})

    def t_invq_parts(self):
        """Return (hat, shift) with self(q, 1/q) = q^(-shift) * hat(q).

        hat is a genuine polynomial in q; shift is the t-degree of self.
        Terms may cancel, so hat can be zero even for nonzero self.
        """
        shift = max(0, self.tdeg())
        out = {}
        for (qe, te), c in self.terms.items():
            m = (qe + shift - te, 0)
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return QTPoly(out), shift

    # -- integer-content helpers --------------------------------------

    def coeff_denominator_lcm(self):
        L = 1
        for c in self.terms.values():
            L = L * c.denominator // math.gcd(L, c.denominator)
        return L

    def int_content(self):
        """gcd of coefficients for an integer-coefficient polynomial."""
        g = 0
        for c in self.terms.values():
            if c.denominator != 1:
                raise ValueError("int_content needs integer coefficients")
            g = math.gcd(g, abs(c.numerator))
        return g

    def scale_exact(self, num, den=1):
        """Multiply by the rational num/den; every resulting coefficient
        must stay whatever it happens to be (Fractions, so always fine)."""
        f = Fraction(num, den)
        if not f:
            return QTPoly()
        return QTPoly({m: c * f for m, c in self.terms.items()})

    # -- text ----------------------------------------------------------

    def text(self):
        if not self.terms:
            return "0"
        monos = sorted(self.terms, key=_order_key, reverse=True)
        pieces = []
        for i, mono in enumerate(monos):
            c = self.terms[mono]
            neg = c < 0
            c = abs(c)
            qe, te = mono
            factors = []
            if qe:
                factors.append("q" if qe == 1 else "q^%d" % qe)
            if te:
                factors.append("t" if te == 1 else "t^%d" % te)
            if not factors or c != 1:
                factors.insert(0, str(c))
            body = "*".join(factors)
            if i == 0:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    __str__ = text

    def __repr__(self):
        return "QTPoly(%s)" % self.text()

    @classmethod
    def parse(cls, s):
        """Parse text like '3*q^2*t - q + 1'.  Accepts arbitrary
        whitespace and rational coefficients such as 1/2*q."""
        s = s.strip()
        if not s:
            raise ValueError("empty polynomial text")
        terms = {}
        pos = 0
        sign = 1
        n = len(s)
        # leading sign
        while pos < n and s[pos] in "+- \t":
            if s[pos] == "-":
                sign = -sign
            pos += 1
        start = pos
        while start < n:
            end = start
            while end < n and s[end] not in "+-":
                end += 1
            mono, coeff = cls._parse_term(s[start:end], start)
            coeff *= sign
            prev = terms.get(mono, Fraction(0)) + coeff
            if prev:
                terms[mono] = prev
            else:
                terms.pop(mono, None)
            sign = 1
            pos = end
            while pos < n and s[pos] in "+- \t":
                if s[pos] == "-":
                    sign = -sign
                pos += 1
            if pos == end and end < n:
                raise ValueError("parse error at position %d in %r" % (end, s))
            start = pos
        return cls(terms)

    @staticmethod
    def _parse_term(chunk, offset):
        body = chunk.strip()
        if not body:
            raise ValueError("empty term at position %d" % offset)
        coeff = Fraction(1)
        qe = te = 0
        for factor in body.split("*"):
            f = factor.strip()
            if not f:
                raise ValueError("empty factor at position %d in %r" % (offset, chunk))
            if f[0] in "qt":
                var = f[0]
                if len(f) == 1:
                    e = 1
                elif f[1] == "^":
                    try:
                        e = int(f[2:])
                    except ValueError:
                        raise ValueError("bad exponent %r at position %d" % (f, offset)) from None
                else:
                    raise ValueError("bad factor %r at position %d" % (f, offset))
                if e < 0:
                    raise ValueError("negative exponent %r at position %d" % (f, offset))
                if var == "q":
                    qe += e
                else:
                    te += e
            else:
                try:
                    coeff *= Fraction(f)
                except (ValueError, ZeroDivisionError):
                    raise ValueError("bad coefficient %r at position %d" % (f, offset)) from None
        return (qe, te), coeff


def _to_poly_or_none(x):
    if isinstance(x, QTPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QTPoly.const(x)
    return None


def to_poly(x):
    p = _to_poly_or_none(x)
    if p is None:
        raise TypeError("cannot interpret %r as QTPoly" % (x,))
    return p


# ----------------------------------------------------------------------
# univariate integer-coefficient helpers (dict exponent -> int), used by
# the bivariate gcd below


def _udeg(u):
    return max(u) if u else -1


def _uscale(u, k):
    if not k:
        return {}
    return {e: c * k for e, c in u.items()}


def _uadd(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


def _umul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _ucontent(u):
    g = 0
    for c in u.values():
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    return g


def _udivexact(u, d):
    """Divide every coefficient by the integer d (must be exact)."""
    out = {}
    for e, c in u.items():
        q, r = divmod(c, d)
        if r:
            raise ArithmeticError("inexact integer division in gcd routine")
        out[e] = q
    return out


def _uprim(u):
    g = _ucontent(u)
    if g in (0, 1):
        return dict(u)
    return _udivexact(u, g)


def _upolydiv_exact(u, d):
    """Exact polynomial division u / d in Z[q]; raises if not exact."""
    if not d:
        raise ZeroDivisionError
    rem = dict(u)
    out = {}
    dd = _udeg(d)
    lc = d[dd]
    while rem:
        dr = _udeg(rem)
        if dr < dd:
            raise ArithmeticError("inexact polynomial division in gcd routine")
        c, r = divmod(rem[dr], lc)
        if r:
            raise ArithmeticError("inexact polynomial division in gcd routine")
        out[dr - dd] = c
        for e, cd in d.items():
            ee = e + dr - dd
            s = rem.get(ee, 0) - c * cd
            if s:
                rem[ee] = s
            else:
                rem.pop(ee, None)
    return out


def _uprem(a, b):
    """Pseudo-remainder of a by b in Z[q] (up to a power of lc(b))."""
    db = _udeg(b)
    lcb = b[db]
    r = dict(a)
    while r and _udeg(r) >= db:
        dr = _udeg(r)
        lcr = r[dr]
        r = _uscale(r, lcb)
        shift = dr - db
        for e, c in b.items():
            ee = e + shift
            s = r.get(ee, 0) - lcr * c
            if s:
                r[ee] = s
            else:
                r.pop(ee, None)
    return r


_HEU_PRIMES = (2305843009213693951, 9223372036854775783)


def _ueval(u, x):
    """Evaluate an integer polynomial at an integer point (sparse Horner)."""
    acc = 0
    prev = None
    for e in sorted(u, reverse=True):
        if prev is None:
            acc = u[e]
        else:
            acc = acc * x ** (prev - e) + u[e]
        prev = e
    if prev:
        acc *= x ** prev
    return acc


def _u_from_int(val, x):
    """Balanced base-x digit expansion of val, read as a polynomial."""
    u = {}
    e = 0
    half = x // 2
    while val:
        r = val % x
        if r > half:
            r -= x
        val = (val - r) // x
        if r:
            u[e] = r
        e += 1
    return u


def _list_gcd_deg_mod(fa, fb, p):
    """Gcd degree of two dense coefficient lists over F_p (lc nonzero)."""
    fa = fa[:]
    fb = fb[:]
    while fb:
        db = len(fb) - 1
        inv = pow(fb[db], p - 2, p)
        r = fa
        while len(r) > db:
            f = r[-1] * inv % p
            r.pop()
            if f:
                off = len(r) - db
                for i in range(db):
                    r[off + i] = (r[off + i] - f * fb[i]) % p
            while r and r[-1] == 0:
                r.pop()
        fa, fb = fb, r
    return len(fa) - 1


def _ugcd_deg_mod(pa, pb, p):
    """Degree of gcd of the mod-p images, or None if a leading term vanishes."""
    da, db = _udeg(pa), _udeg(pb)
    fa = [0] * (da + 1)
    for e, c in pa.items():
        fa[e] = c % p
    fb = [0] * (db + 1)
    for e, c in pb.items():
        fb[e] = c % p
    if not fa[da] or not fb[db]:
        return None
    return _list_gcd_deg_mod(fa, fb, p)


def _ugcd_heu(pa, pb):
    """Heuristic gcd of primitive nonconstant polynomials in Z[q].

    A success is exact: any returned candidate divides both inputs and its
    degree matches the gcd degree of the mod-p images, which bounds the true
    gcd degree from above.  Returns None when no candidate certifies; the
    caller then falls back to the remainder-sequence gcd.
    """
    dmod = None
    for p in _HEU_PRIMES:
        dmod = _ugcd_deg_mod(pa, pb, p)
        if dmod is not None:
            break
    if dmod is None:
        return None
    if dmod == 0:
        return {0: 1}
    h = max(max(abs(c) for c in pa.values()), max(abs(c) for c in pb.values()))
    x = 2 * h + 2
    for attempt in range(6):
        vg = math.gcd(abs(_ueval(pa, x)), abs(_ueval(pb, x)))
        cand = _uprim(_u_from_int(vg, x))
        if cand and _udeg(cand) == dmod:
            try:
                _upolydiv_exact(pa, cand)
                _upolydiv_exact(pb, cand)
                return cand
            except ArithmeticError:
                pass
        elif cand and _udeg(cand) < dmod and attempt == 1:
            # maybe an unlucky first prime inflated the bound; sharpen once
            for p in _HEU_PRIMES[1:]:
                d2 = _ugcd_deg_mod(pa, pb, p)
                if d2 is not None:
                    dmod = min(dmod, d2)
                    if dmod == 0:
                        return {0: 1}
                    break
        x = x * 7 // 3 + 1
    return None


def _ugcd(a, b):
    """gcd in Z[q], primitive with positive leading coefficient."""
    if not a and not b:
        return {}
    if not a:
        g = _uprim(b)
    elif not b:
        g = _uprim(a)
    else:
        ga = _ucontent(a)
        gb = _ucontent(b)
        g0 = math.gcd(ga, gb)
        pa, pb = _uprim(a), _uprim(b)
        if _udeg(pa) == 0 or _udeg(pb) == 0:
            g = {0: g0}
        else:
            if _udeg(pa) < _udeg(pb):
                pa, pb = pb, pa
            heu = _ugcd_heu(pa, pb)
            if heu is None:
                while pb:
                    r = _uprem(pa, pb)
                    pa, pb = pb, (_uprim(r) if r else {})
                heu = _uprim(pa)
            g = _uscale(heu, g0)
    if g and g[_udeg(g)] < 0:
        g = _uscale(g, -1)
    return g


# bivariate form: dict t-exponent -> univariate dict in q


def _qt_to_b(p):
    out = {}
    for (qe, te), c in p.terms.items():
        if c.denominator != 1:
            raise ValueError("gcd routine needs integer coefficients")
        out.setdefault(te, {})[qe] = c.numerator
    return out


def _b_to_qt(b):
    terms = {}
    for te, u in b.items():
        for qe, c in u.items():
            terms[(qe, te)] = c
    return QTPoly(terms)


def _btdeg(b):
    return max(b) if b else -1


def _bsub(a, b):
    out = {te: dict(u) for te, u in a.items()}
    for te, u in b.items():
        merged = _uadd(out.get(te, {}), _uscale(u, -1))
        if merged:
            out[te] = merged
        else:
            out.pop(te, None)
    return out


def _bscale_u(b, u):
    if not u:
        return {}
    out = {}
    for te, v in b.items():
        prod = _umul(v, u)
        if prod:
            out[te] = prod
    return out


def _bshift_t(b, k):
    return {te + k: u for te, u in b.items()}


def _bcontent(b):
    g = {}
    for u in b.values():
        g = _ugcd(g, u)
        if g == {0: 1}:
            break
    return g


def _bdiv_u(b, d):
    """Divide every t-coefficient by d in Z[q] (exact)."""
    return {te: _upolydiv_exact(u, d) for te, u in b.items()}


def _bprem(a, b):
    """Pseudo-remainder in t over Z[q]."""
    db = _btdeg(b)
    lcb = b[db]
    r = {te: dict(u) for te, u in a.items()}
    while r and _btdeg(r) >= db:
        dr = _btdeg(r)
        lcr = r[dr]
        r = _bscale_u(r, lcb)
        r = _bsub(r, _bscale_u(_bshift_t(b, dr - db), lcr))
    return r


def _bqdeg(b):
    return max(max(u) for u in b.values())


def _beval_t(b, x):
    """Collapse t at integer x; returns a univariate dict in q."""
    out = {}
    for te, u in b.items():
        w = x ** te
        for qe, c in u.items():
            out[qe] = out.get(qe, 0) + c * w
    return {e: c for e, c in out.items() if c}


def _b_from_u_digits(gamma, x):
    """Balanced base-x expansion of a Z[q] polynomial into t-digits."""
    out = {}
    e = 0
    half = x // 2
    g = gamma
    while g:
        digit = {}
        nxt = {}
        for qe, c in g.items():
            r = c % x
            if r > half:
                r -= x
            if r:
                digit[qe] = r
            c2 = (c - r) // x
            if c2:
                nxt[qe] = c2
        if digit:
            out[e] = digit
        g = nxt
        e += 1
    return out


def _bdeg_bound_mod(A, B, p, eta, in_t):
    """Mod-p upper bound for the t-degree (in_t) or q-degree of the gcd.

    The other variable is evaluated at eta; returns None whenever a
    leading coefficient dies in the image, which would break the bound.
    """
    lists = []
    for C in (A, B):
        acc = {}
        pows = {}
        for te, u in C.items():
            for qe, c in u.items():
                k, o = (te, qe) if in_t else (qe, te)
                w = pows.get(o)
                if w is None:
                    w = pows[o] = pow(eta, o, p)
                acc[k] = (acc.get(k, 0) + c * w) % p
        d_true = _btdeg(C) if in_t else _bqdeg(C)
        if not acc.get(d_true, 0):
            return None
        fl = [0] * (d_true + 1)
        for k, v in acc.items():
            if v:
                fl[k] = v
        lists.append(fl)
    return _list_gcd_deg_mod(lists[0], lists[1], p)


def _bgcd_heu(pa, pb):
    """Heuristic gcd of two primitive bivariate forms, or None.

    A returned value is exact: it divides both inputs and attains the
    mod-p degree bounds in both variables, so the leftover cofactor of
    the true gcd is constant and primitivity forces it to be a unit.
    """
    dt = None
    eta = 3
    for p in _HEU_PRIMES:
        dt = _bdeg_bound_mod(pa, pb, p, eta, True)
        if dt is not None:
            break
        eta += 4
    if dt is None:
        return None
    if dt == 0:
        # a t-free divisor of a primitive form divides its content
        return {0: {0: 1}}
    dq = None
    eta = 5
    for p in _HEU_PRIMES:
        dq = _bdeg_bound_mod(pa, pb, p, eta, False)
        if dq is not None:
            break
        eta += 4
    if dq is None:
        return None
    h = 0
    for C in (pa, pb):
        for u in C.values():
            for c in u.values():
                if c > h or -c > h:
                    h = abs(c)
    x = 2 * h + 2
    for _ in range(6):
        gu = _ugcd(_beval_t(pa, x), _beval_t(pb, x))
        cand = _b_from_u_digits(gu, x)
        if cand:
            cc = _bcontent(cand)
            if cc != {0: 1}:
                cand = _bdiv_u(cand, cc)
            if _btdeg(cand) == dt and _bqdeg(cand) == dq:
                pc = _b_to_qt(cand)
                try:
                    exact_div(_b_to_qt(pa), pc)
                    exact_div(_b_to_qt(pb), pc)
                    return cand
                except ValueError:
                    pass
        x = x * 7 // 3 + 1
    return None


def poly_gcd(a, b):
    """Polynomial gcd of two QTPoly values over Z[q,t].

    Integer content is part of the gcd (so gcd(2q, 4) = 2); the result
    has a positive leading coefficient under graded lex and gcd(0, 0)
    is 0.  Rational inputs are cleared first, which only changes the
    answer by a unit factor.  Works via content extraction plus
    primitive pseudo-remainder sequences, t-recursively over Z[q].
    """
    a = to_poly(a)
    b = to_poly(b)
    if a.is_zero and b.is_zero:
        return QTPoly.zero()
    # clear rational coefficients; gcd is only defined up to content anyway
    a = a.scale_exact(a.coeff_denominator_lcm())
    b = b.scale_exact(b.coeff_denominator_lcm())
    if a.is_zero or b.is_zero:
        g = b if a.is_zero else a
    elif a.qdeg() == 0 and b.qdeg() == 0 and (a.tdeg() > 0 or b.tdeg() > 0):
        # free of q: transpose so the univariate machinery applies
        sa = QTPoly({(te, qe): c for (qe, te), c in a.terms.items()})
        sb = QTPoly({(te, qe): c for (qe, te), c in b.terms.items()})
        gs = poly_gcd(sa, sb)
        g = QTPoly({(te, qe): c for (qe, te), c in gs.terms.items()})
    else:
        A = _qt_to_b(a)
        B = _qt_to_b(b)
        if _btdeg(A) == 0 and _btdeg(B) == 0:
            g = _b_to_qt({0: _ugcd(A[0], B[0])})
        elif _btdeg(A) == 0 or _btdeg(B) == 0:
            g0, other = (A[0], B) if _btdeg(A) == 0 else (B[0], A)
            for u in other.values():
                g0 = _ugcd(g0, u)
                if g0 == {0: 1}:
                    break
            g = _b_to_qt({0: g0})
        else:
            ca, cb = _bcontent(A), _bcontent(B)
            gcont = _ugcd(ca, cb)
            pa = _bdiv_u(A, ca)
            pb = _bdiv_u(B, cb)
            gprim = _bgcd_heu(pa, pb)
            if gprim is None:
                if _btdeg(pa) < _btdeg(pb):
                    pa, pb = pb, pa
                while pb and _btdeg(pb) > 0:
                    r = _bprem(pa, pb)
                    if r:
                        r = _bdiv_u(r, _bcontent(r))
                    pa, pb = pb, r
                if pb:
                    gprim = {0: {0: 1}}  # nonzero remainder free of t
                else:
                    gprim = pa
            g = _b_to_qt(_bscale_u(gprim, gcont))
    if g.is_zero:
        return g
    if g.leading()[1] < 0:
        g = -g
    return g


def _exact_div_int(a, b, lb_mono):
    """Integer-coefficient division; None when a step fails over Z."""
    lb = b.terms[lb_mono].numerator
    bi = [(m, c.numerator) for m, c in b.terms.items()]
    rem = {m: c.numerator for m, c in a.terms.items()}
    quot = {}
    while rem:
        lr_mono = max(rem, key=_order_key)
        dq = lr_mono[0] - lb_mono[0]
        dt = lr_mono[1] - lb_mono[1]
        if dq < 0 or dt < 0:
            raise ValueError("polynomials do not divide exactly")
        c, r = divmod(rem[lr_mono], lb)
        if r:
            return None  # may still divide with rational quotient
        quot[(dq, dt)] = quot.get((dq, dt), 0) + c
        for (qb, tb), cb in bi:
            m = (qb + dq, tb + dt)
            s = rem.get(m, 0) - c * cb
            if s:
                rem[m] = s
            else:
                rem.pop(m, None)
    return QTPoly({m: v for m, v in quot.items() if v})


def exact_div(a, b):
    """Exact polynomial division a / b; raises ValueError if inexact."""
    a = to_poly(a)
    b = to_poly(b)
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return QTPoly.zero()
    lb_mono, lb_coeff = b.leading()
    if all(c.denominator == 1 for c in a.terms.values()) and \
            all(c.denominator == 1 for c in b.terms.values()):
        q = _exact_div_int(a, b, lb_mono)
        if q is not None:
            return q
    rem = dict(a.terms)
    quot = {}
    while rem:
        lr_mono = max(rem, key=_order_key)
        dq = lr_mono[0] - lb_mono[0]
        dt = lr_mono[1] - lb_mono[1]
        if dq < 0 or dt < 0:
            raise ValueError("polynomials do not divide exactly")
        c = rem[lr_mono] / lb_coeff
        quot[(dq, dt)] = quot.get((dq, dt), Fraction(0)) + c
        for (qb, tb), cb in b.terms.items():
            m = (qb + dq, tb + dt)
            s = rem.get(m, 0) - c * cb
            if s:
                rem[m] = s
            else:
                rem.pop(m, None)
    return QTPoly(quot)


# ----------------------------------------------------------------------


class QTRat:
    """Canonically reduced rational function num/den in q and t.

    Invariants: den is nonzero; num and den have integer coefficients
    with gcd(num, den) = 1 as polynomials and joint integer content 1;
    den's leading coefficient (graded lex) is positive; zero is 0/1.
    Equality is therefore plain structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = to_poly(num)
        den = to_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = QTPoly.zero()
            self.den = QTPoly.one()
            return
        if den.terms == _ONE_TERMS and \
                all(c.denominator == 1 for c in num.terms.values()):
            # already canonical: integer polynomial over 1
            self.num = num
            self.den = den
            return
        Ln = num.coeff_denominator_lcm()
        Ld = den.coeff_denominator_lcm()
        L = Ln * Ld // math.gcd(Ln, Ld)
        num = num.scale_exact(L)
        den = den.scale_exact(L)
        c = math.gcd(num.int_content(), den.int_content())
        if c > 1:
            num = num.scale_exact(1, c)
            den = den.scale_exact(1, c)
        g = poly_gcd(num, den)
        if g.degree() > 0 or g.int_content() != 1:
            num = exact_div(num, g)
            den = exact_div(den, g)
        if den.leading()[1] < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        # trusted constructor for already-canonical parts
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def zero(cls):
        return cls._raw(QTPoly.zero(), QTPoly.one())

    @classmethod
    def one(cls):
        return cls._raw(QTPoly.one(), QTPoly.one())

    @classmethod
    def q(cls, e=1):
        return cls._raw(QTPoly.q(e), QTPoly.one())

    @classmethod
    def t(cls, e=1):
        return cls._raw(QTPoly.t(e), QTPoly.one())

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num == QTPoly.one() and self.den == QTPoly.one()

    @property
    def is_polynomial(self):
        return self.den == QTPoly.one()

    def __bool__(self):
        return not self.num.is_zero

    def __neg__(self):
        return QTRat._raw(-self.num, self.den)

    def __add__(self, other):
        other = _to_rat_or_none(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        ad, bd = self.den, other.den
        if ad == bd:
            return QTRat(self.num + other.num, ad)
        g = poly_gcd(ad, bd)
        num = self.num * bd + other.num * ad
        if g.degree() == 0 and g.int_content() == 1:
            # coprime denominators: only integer content can still cancel
            if num.is_zero:
                return QTRat.zero()
            den = ad * bd
            c = math.gcd(num.int_content(), den.int_content())
            if c > 1:
                num = num.scale_exact(1, c)
                den = den.scale_exact(1, c)
            return QTRat._raw(num, den)
        return QTRat(num, ad * bd)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_rat_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _to_rat_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _to_rat_or_none(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return QTRat.zero()
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g = poly_gcd(an, bd)
        if g.degree() > 0 or g.int_content() > 1:
            an = exact_div(an, g)
            bd = exact_div(bd, g)
        g = poly_gcd(bn, ad)
        if g.degree() > 0 or g.int_content() > 1:
            bn = exact_div(bn, g)
            ad = exact_div(ad, g)
        # cross-cancelled parts are pairwise coprime, so no reduction left
        return QTRat._raw(an * bn, ad * bd)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _to_rat_or_none(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero QTRat")
        if other.num.leading()[1] < 0:
            return self * QTRat._raw(-other.den, -other.num)
        return self * QTRat._raw(other.den, other.num)

    def __rtruediv__(self, other):
        other = _to_rat_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("QTRat power must be an integer")
        if n == 0:
            return QTRat.one()
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            base = QTRat(self.den, self.num)
            n = -n
        else:
            base = self
        return QTRat(base.num ** n, base.den ** n)

    def __eq__(self, other):
        other = _to_rat_or_none(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, qv, tv):
        d = self.den.evaluate(qv, tv)
        if not d:
            raise ZeroDivisionError("denominator vanishes at (%s, %s)" % (qv, tv))
        return self.num.evaluate(qv, tv) / d

    def specialize_t(self, mode):
        """Exact substitution for t.  mode is one of 't=1', 't=0', 't=1/q'.

        Raises ValueError when the substitution kills the denominator.
        For t=1/q the q-powers are cleared exactly, so the result is a
        genuine rational function of q alone.
        """
        if mode == "t=1":
            d = self.den.t_at_one()
            if d.is_zero:
                raise ValueError("denominator vanishes identically at t=1")
            return QTRat(self.num.t_at_one(), d)
        if mode == "t=0":
            d = self.den.t_at_zero()
            if d.is_zero:
                raise ValueError("denominator vanishes identically at t=0")
            return QTRat(self.num.t_at_zero(), d)
        if mode == "t=1/q":
            nhat, sn = self.num.t_invq_parts()
            dhat, sd = self.den.t_invq_parts()
            if dhat.is_zero:
                raise ValueError("denominator vanishes identically at t=1/q")
            if sd >= sn:
                return QTRat(nhat * QTPoly.q(sd - sn), dhat)
            return QTRat(nhat, dhat * QTPoly.q(sn - sd))
        raise ValueError("unknown specialization mode %r" % (mode,))

    def text(self):
        if self.den == QTPoly.one():
            return self.num.text()
        return "(%s)/(%s)" % (self.num.text(), self.den.text())

    __str__ = text

    def __repr__(self):
        return "QTRat(%s)" % self.text()

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if s.startswith("(") and ")/(" in s and s.endswith(")"):
            idx = s.index(")/(")
            return cls(QTPoly.parse(s[1:idx]), QTPoly.parse(s[idx + 3:-1]))
        if s.startswith("(") and s.endswith(")") and "(" not in s[1:-1]:
            s = s[1:-1]
        return cls(QTPoly.parse(s))


def _to_rat_or_none(x):
    if isinstance(x, QTRat):
        return x
    if isinstance(x, (int, Fraction, QTPoly)):
        return QTRat(x)
    return None


def to_rat(x):
    r = _to_rat_or_none(x)
    if r is None:
        raise TypeError("cannot interpret %r as QTRat" % (x,))
    return r


def swap_qt(x):
    """Exchange the two variables; accepts QTPoly or QTRat and scalars."""
    if isinstance(x, QTRat):
        return QTRat(swap_qt(x.num), swap_qt(x.den))
    p = to_poly(x)
    return QTPoly({(te, qe): c for (qe, te), c in p.terms.items()})


# ----------------------------------------------------------------------
# q-analogs


_QINT_CACHE = {}


def qint(n):
    """[n]_q = 1 + q + ... + q^(n-1); qint(0) = 0."""
    if n < 0:
        raise ValueError("qint needs n >= 0")
    p = _QINT_CACHE.get(n)
    if p is None:
        p = QTPoly({(i, 0): 1 for i in range(n)})
        _QINT_CACHE[n] = p
    return p


_QBINOM_CACHE = {}


def qbinom(n, k):
    """Gaussian binomial coefficient as a polynomial in q.

    Out-of-range k (k < 0 or k > n) gives the zero polynomial.
    """
    if n < 0:
        raise ValueError("qbinom needs n >= 0")
    if k < 0 or k > n:
        return QTPoly.zero()
    k = min(k, n - k)
    key = (n, k)
    p = _QBINOM_CACHE.get(key)
    if p is not None:
        return p
    # row-by-row Pascal recurrence: C(n,k) = C(n-1,k-1) + q^k C(n-1,k)
    row = [QTPoly.one()]
    for m in range(1, n + 1):
        new = [QTPoly.one()]
        top = min(m, k)
        for j in range(1, top + 1):
            left = row[j - 1]
            right = row[j] if j < len(row) else QTPoly.zero()
            new.append(left + QTPoly.q(j) * right)
        row = new
    p = row[k]
    _QBINOM_CACHE[key] = p
    return p


def pochhammer(a, r):
    """(q^a; q)_r = prod_{i=0}^{r-1} (1 - q^(a+i))."""
    if a < 0 or r < 0:
        raise ValueError("pochhammer needs nonnegative arguments")
    out = QTPoly.one()
    for i in range(r):
        out = out * (QTPoly.one() - QTPoly.q(a + i))
    return out


# ----------------------------------------------------------------------
# linear solving


class SingularSystemError(Exception):
    """Raised when solve_linear meets a singular matrix.

    The rank attribute carries the number of pivots found before the
    elimination stalled.
    """

    def __init__(self, rank):
        super().__init__("singular system (rank found: %d)" % rank)
        self.rank = rank


def solve_linear(A, b):
    """Solve A x = b exactly over rational functions of q and t.

    A is a square matrix and b a vector; entries may be QTRat, QTPoly,
    Fraction or int.  Elimination is fraction-free (Bareiss) on a
    denominator-cleared polynomial matrix, with rational back
    substitution at the end; the solution is verified against the
    original system before being returned.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_linear needs a square system")
    Ar = [[to_rat(x) for x in row] for row in A]
    br = [to_rat(x) for x in b]
    # clear denominators row by row
    M = []
    for i in range(n):
        dens = [Ar[i][j].den for j in range(n)] + [br[i].den]
        row = []
        for j in range(n + 1):
            entry = Ar[i][j] if j < n else br[i]
            p = entry.num
            for jj in range(n + 1):
                if jj != j:
                    p = p * dens[jj]
            row.append(p)
        M.append(row)
    prev = QTPoly.one()
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if not M[i][k].is_zero:
                pivot = i
                break
        if pivot is None:
            raise SingularSystemError(k)
        if pivot != k:
            M[k], M[pivot] = M[pivot], M[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev)
            M[i][k] = QTPoly.zero()
        prev = M[k][k]
    x = [QTRat.zero()] * n
    for i in range(n - 1, -1, -1):
        acc = QTRat(M[i][n])
        for j in range(i + 1, n):
            acc = acc - QTRat(M[i][j]) * x[j]
        x[i] = acc / QTRat(M[i][i])
    for i in range(n):
        acc = QTRat.zero()
        for j in range(n):
            acc = acc + Ar[i][j] * x[j]
        if acc != br[i]:
            raise ArithmeticError("solve_linear self-check failed on row %d" % i)
    return x


# ----------------------------------------------------------------------
# multi-point evaluation equality proof


_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _primes(count):
    while len(_PRIMES) < count:
        cand = _PRIMES[-1] + 2
        while any(cand % p == 0 for p in _PRIMES if p * p <= cand):
            cand += 2
        _PRIMES.append(cand)
    return _PRIMES[:count]


def evaluation_equal(a, b):
    """Decide a == b for QTRat values by integer-point evaluation.

    Cross-multiplies to polynomials, reads off degree bounds, and
    evaluates on a prime grid strictly larger than the bounds in each
    variable.  Returns (equal, record) where the record documents the
    degree bounds and point counts used, making the outcome a proof
    rather than a heuristic.
    """
    a = to_rat(a)
    b = to_rat(b)
    p = a.num * b.den
    r = b.num * a.den
    dq = max(p.qdeg(), r.qdeg(), 0)
    dt = max(p.tdeg(), r.tdeg(), 0)
    qpts = _primes(dq + 2)
    tpts = [v + 1 for v in _primes(dt + 2)]  # offset grid, still distinct
    equal = True
    for qv in qpts:
        for tv in tpts:
            if p.evaluate(qv, tv) != r.evaluate(qv, tv):
                equal = False
                break
        if not equal:
            break
    record = {"qdeg_bound": dq, "tdeg_bound": dt,
              "qpoints": len(qpts), "tpoints": len(tpts)}
    return equal, record


# ----------------------------------------------------------------------
# windowed series in the auxiliary variable u


class AuxSeries:
    """Truncated series in u with coefficients from any commutative ring.

    Exponents may be negative.  Coefficients below window lo are exactly
    zero; those above window hi are unknown (truncated away), and all
    operations propagate windows accordingly.  The zero argument supplies
    the additive identity of the coefficient ring (QTRat by default), so
    the same class serves both rational-function and symmetric-function
    coefficients.
    """

    __slots__ = ("coeffs", "lo", "hi", "zero_elt")

    def __init__(self, coeffs, lo, hi, zero=None):
        if lo > hi:
            raise ValueError("empty window")
        self.zero_elt = QTRat.zero() if zero is None else zero
        clean = {}
        for e, c in coeffs.items():
            if lo <= e <= hi and not _ring_is_zero(c):
                clean[e] = c
        self.coeffs = clean
        self.lo = lo
        self.hi = hi

    @classmethod
    def monomial(cls, c, e, lo, hi, zero=None):
        return cls({e: c}, lo, hi, zero=zero)

    @classmethod
    def geometric(cls, c, hi):
        """1/(1 - c*u) truncated at u^hi, QTRat coefficients."""
        c = to_rat(c)
        coeffs = {}
        acc = QTRat.one()
        for e in range(hi + 1):
            coeffs[e] = acc
            acc = acc * c
        return cls(coeffs, 0, hi)

    def coefficient(self, e):
        if e < self.lo:
            return self.zero_elt
        if e > self.hi:
            raise ValueError("coefficient %d outside window [%d, %d]" % (e, self.lo, self.hi))
        return self.coeffs.get(e, self.zero_elt)

    def __add__(self, other):
        if not isinstance(other, AuxSeries):
            return NotImplemented
        lo = min(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        out = {}
        for e in range(lo, hi + 1):
            c = self.coeffs.get(e)
            d = other.coeffs.get(e)
            if c is None and d is None:
                continue
            s = d if c is None else (c if d is None else c + d)
            out[e] = s
        return AuxSeries(out, lo, hi, zero=self.zero_elt)

    def __sub__(self, other):
        if not isinstance(other, AuxSeries):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c):
        return AuxSeries({e: _ring_scale(v, c) for e, v in self.coeffs.items()},
                         self.lo, self.hi, zero=self.zero_elt)

    def __mul__(self, other):
        if not isinstance(other, AuxSeries):
            return NotImplemented
        lo = self.lo + other.lo
        hi = min(self.hi + other.lo, other.hi + self.lo)
        out = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = ea + eb
                if e > hi:
                    continue
                prod = ca * cb
                if e in out:
                    out[e] = out[e] + prod
                else:
                    out[e] = prod
        return AuxSeries(out, lo, hi, zero=self.zero_elt)

    def shift(self, k):
        """Multiply by u^k."""
        return AuxSeries({e + k: c for e, c in self.coeffs.items()},
                         self.lo + k, self.hi + k, zero=self.zero_elt)

    def inverse(self):
        """Multiplicative inverse; the lowest-order coefficient must be
        invertible in the coefficient ring (QTRat only)."""
        c0 = self.coeffs.get(self.lo)
        if c0 is None or _ring_is_zero(c0):
            raise ValueError("inverse needs a nonzero coefficient at the window floor")
        if not isinstance(c0, QTRat):
            raise TypeError("inverse supported for QTRat coefficients only")
        span = self.hi - self.lo
        lo = -self.lo
        inv = {lo: QTRat.one() / c0}
        for d in range(1, span + 1):
            acc = QTRat.zero()
            for dd in range(d):
                a = self.coeffs.get(self.lo + d - dd)
                if a is not None:
                    acc = acc + a * inv[lo + dd]
            inv[lo + d] = -acc / c0
        return AuxSeries(inv, lo, lo + span, zero=self.zero_elt)

    def __eq__(self, other):
        if not isinstance(other, AuxSeries):
            return NotImplemented
        return (self.lo, self.hi) == (other.lo, other.hi) and self.coeffs == other.coeffs

    def __repr__(self):
        inner = ", ".join("u^%d: %s" % (e, c) for e, c in sorted(self.coeffs.items()))
        return "AuxSeries[%d..%d]{%s}" % (self.lo, self.hi, inner)


def _ring_is_zero(c):
    z = getattr(c, "is_zero", None)
    if z is not None:
        return bool(z) if isinstance(z, bool) else bool(z)
    return not c


def _ring_scale(v, c):
    return v * c
