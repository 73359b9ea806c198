"""Modified Macdonald basis and the Delta operator calculus built on it.

The basis elements H_mu(z;q,t) are produced degree by degree from their
two triangularity properties plus the K_{(n),mu} = 1 normalization, by
exact linear algebra over QTRat; the overdetermined system doubles as a
self test since every leftover row must be satisfied.  Delta operators
act diagonally on that basis.  The three standard t-specializations get
their own cheaper eigenbases (complete-homogeneous, Schur, and creation
operator images, each over the scaled alphabet z/(1-q)) so that large
specialized runs never touch the generic cache.
"""

import threading
from functools import lru_cache

from .qt import AuxSeries, QTPoly, QTRat, exact_div, poly_gcd, qbinom, to_rat
from .symfunc import (
    CapExceeded,
    Composition,
    Partition,
    SymF,
    partitions,
    pleth_scale,
    to_basis,
)

GENERIC_CAP = 8
SPECIAL_CAP = 10
TMODES = ("generic", "t=1", "t=0", "t=1/q")


def _scale_one_minus_q(f):
    return pleth_scale(f, lambda r: QTPoly.one() - QTPoly.q(r))


def _scale_one_minus_t(f):
    return pleth_scale(f, lambda r: QTPoly.one() - QTPoly.t(r))


def _scale_inv_one_minus_q(f):
    return pleth_scale(f, lambda r: QTRat(QTPoly.one(), QTPoly.one() - QTPoly.q(r)))


def bmu(mu):
    """Cell generating polynomial: q^col * t^row summed over the diagram."""
    mu = Partition(mu)
    return QTPoly({(col, row): 1
                   for row, part in enumerate(mu) for col in range(part)})


def _power_sub(p, r):
    # q -> q^r, t -> t^r
    return QTPoly({(qe * r, te * r): c for (qe, te), c in p.terms.items()})


def _qint_pow(m, r):
    """1 + q^r + ... + q^((m-1)r), the principal alphabet at q^r."""
    return QTPoly({(j * r, 0): 1 for j in range(m)})


def sym_eval(f, point, tmode="generic"):
    """Evaluate f plethystically on an alphabet given through power sums.

    point maps r >= 1 to the value of p_r (anything to_rat accepts).  In a
    specialized tmode the coefficients of f get t substituted first.
    """
    if tmode not in TMODES:
        raise ValueError("tmode must be one of %s" % (TMODES,))
    cache = {}
    total = QTRat.zero()
    for mu, c in f.pc.items():
        v = c if tmode == "generic" else c.specialize_t(tmode)
        for r in mu:
            if r not in cache:
                cache[r] = to_rat(point(r))
            v = v * cache[r]
        total = total + v
    return total


def _solve_exact(rows, rhss, ncols):
    """Gauss-Jordan over QTRat, rectangular systems allowed.

    Demands a unique solution satisfying every row exactly; raises
    ArithmeticError naming the defect otherwise.  Pivots prefer entries
    with few monomials to keep intermediate fractions small.
    """
    aug = [[to_rat(x) for x in row] + [to_rat(b)] for row, b in zip(rows, rhss)]
    rank = 0
    pivots = []
    for col in range(ncols):
        best = None
        for i in range(rank, len(aug)):
            c = aug[i][col]
            if not c.is_zero:
                w = len(c.num.terms) + len(c.den.terms)
                if best is None or w < best[1]:
                    best = (i, w)
        if best is None:
            continue
        i = best[0]
        aug[rank], aug[i] = aug[i], aug[rank]
        piv = aug[rank][col]
        aug[rank] = [x / piv for x in aug[rank]]
        row_r = aug[rank]
        for j in range(len(aug)):
            if j == rank:
                continue
            fac = aug[j][col]
            if fac.is_zero:
                continue
            aug[j] = [a - fac * b for a, b in zip(aug[j], row_r)]
        pivots.append(col)
        rank += 1
    if rank < ncols:
        raise ArithmeticError("rank %d < %d unknowns" % (rank, ncols))
    for i in range(rank, len(aug)):
        if not aug[i][ncols].is_zero:
            raise ArithmeticError("inconsistent leftover row %d" % (i,))
    sol = [QTRat.zero()] * ncols
    for r_i, col in enumerate(pivots):
        sol[col] = aug[r_i][ncols]
    return sol


def _invert_rat(rows):
    """Inverse of a square QTRat matrix by exact Gauss-Jordan."""
    m = len(rows)
    aug = [list(rows[i]) + [QTRat.one() if j == i else QTRat.zero()
                            for j in range(m)]
           for i in range(m)]
    for col in range(m):
        best = None
        for i in range(col, m):
            c = aug[i][col]
            if not c.is_zero:
                w = len(c.num.terms) + len(c.den.terms)
                if best is None or w < best[1]:
                    best = (i, w)
        if best is None:
            raise ArithmeticError("transition matrix singular")
        i = best[0]
        aug[col], aug[i] = aug[i], aug[col]
        piv = aug[col][col]
        aug[col] = [x / piv for x in aug[col]]
        rowp = aug[col]
        for j in range(m):
            if j == col:
                continue
            f = aug[j][col]
            if not f.is_zero:
                aug[j] = [a - f * b for a, b in zip(aug[j], rowp)]
    return [r[m:] for r in aug]


def _dense_rat(cols, lams):
    """to_basis columns -> dense QTRat matrix, rows and columns in lams order."""
    zero = QTRat.zero()
    return [[cols[lam].get(nu, zero) for lam in lams] for nu in lams]


def _clear_denominators(V):
    """Rewrite a QTRat matrix as polynomial entries over one denominator."""
    D = QTPoly.one()
    for row in V:
        for x in row:
            if not x.is_zero:
                D = exact_div(D * x.den, poly_gcd(D, x.den))
    P = [[QTPoly.zero() if x.is_zero else x.num * exact_div(D, x.den)
          for x in row] for row in V]
    return P, D


def _poly_matrix(A):
    one = QTPoly.one()
    out = []
    for row in A:
        r = []
        for x in row:
            if x.den != one:
                raise ArithmeticError("matrix entry is not polynomial")
            r.append(x.num)
        out.append(r)
    return out


def _matmul_over_den(A, P, D):
    """Reduced entries of (A @ P) / D for polynomial matrices A and P.

    Dot products run in plain polynomial arithmetic; the single division
    by D at the end is the only place a gcd is paid per entry.
    """
    m = len(A)
    zero = QTRat.zero()
    out = []
    for i in range(m):
        Ai = A[i]
        row = []
        for j in range(m):
            acc = QTPoly.zero()
            for k in range(m):
                a = Ai[k]
                if not a.is_zero:
                    b = P[k][j]
                    if not b.is_zero:
                        acc = acc + a * b
            row.append(zero if acc.is_zero else QTRat(acc, D))
        out.append(row)
    return out


class MacCache:
    """Write-once Schur-coordinate tables for the H basis, per degree.

    For degree n, keeps in one fixed dominance-compatible order (lex
    descending, which refines dominance):
      lams      all partitions of n,
      kostka    mu -> {lam: coefficient of s_lam in H_mu},
      modified  mu -> {nu: coefficient of s_nu in H_mu[z(1-q)]}.
    The modified table is upper triangular against that order, which is
    what makes expansion of arbitrary input a back substitution.

    Each column is found by exact linear solving: the support conditions
    on one side become the parametrization (over the dominance up-set),
    the other side's conditions plus the leading-coefficient
    normalization form an overdetermined polynomial system whose
    leftover rows are all checked.
    """

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def degree(self, n):
        if n not in self._data:
            built = self._build(n)
            with self._lock:
                self._data.setdefault(n, built)
        return self._data[n]

    @staticmethod
    def _build(n):
        lams = sorted(partitions(n), reverse=True)
        m = len(lams)
        t1cols = {}
        t2cols = {}
        for lam in lams:
            sl = SymF.s(lam)
            t1cols[lam] = to_basis(_scale_one_minus_q(sl), "s", cap=None)
            t2cols[lam] = to_basis(_scale_one_minus_t(sl), "s", cap=None)
        M1 = _dense_rat(t1cols, lams)
        M2 = _dense_rat(t2cols, lams)
        V1 = _invert_rat(M1)
        V2 = _invert_rat(M2)
        P1, D1 = _clear_denominators(V1)
        P2, D2 = _clear_denominators(V2)
        W1 = _matmul_over_den(_poly_matrix(M2), P1, D1)
        W2 = _matmul_over_den(_poly_matrix(M1), P2, D2)
        ups = {mu: [i for i, nu in enumerate(lams) if nu.dominates(mu)]
               for mu in lams}
        kostka = {}
        modified = {}
        for mu in lams:
            muc = mu.conjugate()
            sq, st = ups[mu], ups[muc]
            qside = len(sq) <= len(st)
            S = sq if qside else st
            keep = set(st if qside else sq)
            W, V = (W1, V1) if qside else (W2, V2)
            rows = [[W[j][i] for i in S] for j in range(m) if j not in keep]
            rhss = [QTRat.zero()] * len(rows)
            rows.append([V[0][i] for i in S])
            rhss.append(QTRat.one())
            try:
                sol = _solve_exact(rows, rhss, len(S))
            except ArithmeticError as exc:
                raise ArithmeticError(
                    "triangularity system failed for mu=%s: %s" % (mu.text(), exc))
            kcol = {}
            for j in range(m):
                acc = QTRat.zero()
                for i, v in zip(S, sol):
                    w = V[j][i]
                    if not w.is_zero and not v.is_zero:
                        acc = acc + v * w
                if not acc.is_zero:
                    kcol[lams[j]] = acc
            if qside:
                mcol = {lams[i]: v for i, v in zip(S, sol) if not v.is_zero}
            else:
                mcol = {}
                for lam, c in kcol.items():
                    for nu, w in t1cols[lam].items():
                        prev = mcol.get(nu)
                        mcol[nu] = c * w if prev is None else prev + c * w
                mcol = {nu: v for nu, v in mcol.items() if not v.is_zero}
                for nu in mcol:
                    if not nu.dominates(mu):
                        raise ArithmeticError(
                            "support leak at mu=%s, nu=%s" % (mu.text(), nu.text()))
            kostka[mu] = kcol
            modified[mu] = mcol
        return lams, kostka, modified

    def expand(self, g, n):
        """Coordinates of a homogeneous degree-n input in the H basis."""
        lams, _, modified = self.degree(n)
        b = to_basis(_scale_one_minus_q(g), "s", cap=None)
        coords = {}
        for i in range(len(lams) - 1, -1, -1):
            nu = lams[i]
            acc = b.get(nu, QTRat.zero())
            for j in range(i + 1, len(lams)):
                cj = coords.get(lams[j])
                if cj is None or cj.is_zero:
                    continue
                w = modified[lams[j]].get(nu)
                if w is not None:
                    acc = acc - cj * w
            diag = modified[nu].get(nu)
            if diag is None or diag.is_zero:
                raise ArithmeticError("vanishing diagonal at %s" % (nu.text(),))
            coords[nu] = acc / diag
        return coords


_CACHE = MacCache()
_H_SYMF = {}


def macdonald_H(mu):
    """The basis element H_mu(z;q,t), via the triangularity solve."""
    mu = Partition(mu)
    n = mu.weight
    if n == 0:
        return SymF.one()
    if n > GENERIC_CAP:
        raise CapExceeded(n, GENERIC_CAP)
    if mu not in _H_SYMF:
        _, kostka, _ = _CACHE.degree(n)
        _H_SYMF[mu] = SymF.from_coeffs("s", kostka[mu])
    return _H_SYMF[mu]


class OpSpec:
    """A Delta operator: symbol f plus the handling of t.

    Specialized modes substitute t throughout (in the symbol, in the
    argument, and in the eigenvalues) and use their own eigenbases;
    generic mode keeps t formal and reads from the Macdonald cache.
    """

    __slots__ = ("f", "tmode")

    def __init__(self, f, tmode="generic"):
        if not isinstance(f, SymF):
            raise TypeError("operator symbol must be a SymF")
        if tmode not in TMODES:
            raise ValueError("tmode must be one of %s" % (TMODES,))
        self.f = f
        self.tmode = tmode


def delta(spec, g):
    """Apply the Delta operator described by spec (OpSpec or bare SymF)."""
    if isinstance(spec, SymF):
        spec = OpSpec(spec)
    out = SymF.zero()
    for d in g.degrees():
        gd = g.homogeneous(d)
        if spec.tmode != "generic":
            gd = gd.specialize_t(spec.tmode)
        if d == 0:
            out = out + gd * sym_eval(spec.f, lambda r: QTRat.zero(), spec.tmode)
            continue
        cap = GENERIC_CAP if spec.tmode == "generic" else SPECIAL_CAP
        if d > cap:
            raise CapExceeded(d, cap)
        if spec.tmode == "generic":
            out = out + _delta_generic(spec.f, gd, d)
        elif spec.tmode == "t=1":
            out = out + _delta_t1(spec.f, gd, d)
        elif spec.tmode == "t=0":
            out = out + _delta_t0(spec.f, gd, d)
        else:
            out = out + _delta_invq(spec.f, gd, d)
    return out


def _delta_generic(f, gd, d):
    coords = _CACHE.expand(gd, d)
    out = SymF.zero()
    for mu, c in coords.items():
        if c.is_zero:
            continue
        B = bmu(mu)
        eig = sym_eval(f, lambda r: _power_sub(B, r))
        v = c * eig
        if not v.is_zero:
            out = out + macdonald_H(mu) * v
    return out


def _row_qsum(mu, r):
    # p_r of the alphabet sum_i (1-q^{mu_i})/(1-q)
    terms = {}
    for part in mu:
        for j in range(part):
            key = (j * r, 0)
            terms[key] = terms.get(key, 0) + 1
    return QTPoly(terms)


def _delta_t1(f, gd, d):
    hc = to_basis(_scale_one_minus_q(gd), "h", cap=None)
    out = SymF.zero()
    for mu, c in hc.items():
        eig = sym_eval(f, lambda r: _row_qsum(mu, r), "t=1")
        v = c * eig
        if not v.is_zero:
            out = out + _scale_inv_one_minus_q(SymF.h(mu)) * v
    return out


def _delta_t0(f, gd, d):
    lams, cols, plain, modified = _e_basis(d)
    b = to_basis(_scale_one_minus_q(gd), "s", cap=None)
    m = len(lams)
    coords = {}
    for i in range(m - 1, -1, -1):
        mu, nu = cols[i], lams[i]
        acc = b.get(nu, QTRat.zero())
        for j in range(i + 1, m):
            cj = coords.get(cols[j])
            if cj is None or cj.is_zero:
                continue
            w = modified[cols[j]].get(nu)
            if w is not None:
                acc = acc - cj * w
        coords[mu] = acc / modified[mu][nu]
    out = SymF.zero()
    for mu, c in coords.items():
        if c.is_zero:
            continue
        r = mu.length
        eig = sym_eval(f, lambda rr: _qint_pow(r, rr), "t=0")
        v = c * eig
        if not v.is_zero:
            out = out + plain[mu] * v
    return out


def _hook_alphabet(mu, r):
    """p_r of the cell alphabet at t=1/q: sum of q^(r(col-row)) over mu."""
    shift = (mu.length - 1) * r if mu else 0
    terms = {}
    for row, part in enumerate(mu):
        for col in range(part):
            key = ((col - row) * r + shift, 0)
            terms[key] = terms.get(key, 0) + 1
    return QTRat(QTPoly(terms), QTPoly.q(shift))


def _delta_invq(f, gd, d):
    sc = to_basis(_scale_one_minus_q(gd), "s", cap=None)
    out = SymF.zero()
    for mu, c in sc.items():
        eig = sym_eval(f, lambda r: _hook_alphabet(mu, r), "t=1/q")
        v = c * eig
        if not v.is_zero:
            out = out + _scale_inv_one_minus_q(SymF.s(mu)) * v
    return out


def nabla(g, r=1, tmode="generic"):
    """r-fold degree-preserving Delta with symbol e_d on each degree d."""
    if r < 1:
        raise ValueError("power must be positive")
    out = SymF.zero()
    for d in g.degrees():
        gd = g.homogeneous(d)
        if d == 0:
            if tmode != "generic":
                gd = gd.specialize_t(tmode)
            out = out + gd
            continue
        spec = OpSpec(SymF.e(d), tmode)
        for _ in range(r):
            gd = delta(spec, gd)
        out = out + gd
    return out


@lru_cache(maxsize=None)
def _enr_all(n):
    # interpolation against the principal alphabets [k+1]_q, k = 0..n-1
    rows = [[to_rat(qbinom(k + r, r)) for r in range(1, n + 1)]
            for k in range(n)]
    inv_cols = []
    for j in range(n):
        rhs = [QTRat.one() if i == j else QTRat.zero() for i in range(n)]
        inv_cols.append(_solve_exact(rows, rhs, n))
    rhs_syms = [pleth_scale(SymF.e(n),
                            (lambda kk: lambda r: _qint_pow(kk + 1, r))(k))
                for k in range(n)]
    out = []
    for i in range(n):
        acc = SymF.zero()
        for k in range(n):
            w = inv_cols[k][i]
            if not w.is_zero:
                acc = acc + rhs_syms[k] * w
        out.append(acc)
    return tuple(out)


def e_nr(n, r):
    """The pieces E_{n,r} of e_n; summing over r = 1..n returns e_n."""
    if n < 1 or not 1 <= r <= n:
        raise ValueError("need n >= 1 and 1 <= r <= n")
    if n > SPECIAL_CAP:
        raise CapExceeded(n, SPECIAL_CAP)
    return _enr_all(n)[r - 1]


def c_op(a, f):
    """Creation operator C_a.

    Substitutes p_r -> p_r - (q^r - 1)/(q^r u^r) in f, multiplies by the
    complete-homogeneous series in u, extracts the u^a coefficient, and
    scales by (-q)^(1-a).  Raises the degree by a.
    """
    if a < 1:
        raise ValueError("need a >= 1")
    if f.is_zero:
        return SymF.zero()
    d = f.degree()
    if d + a > SPECIAL_CAP:
        raise CapExceeded(d + a, SPECIAL_CAP)
    box = a + d
    zero = SymF.zero()
    total = None
    for mu, c in f.pc.items():
        acc = AuxSeries({0: SymF.one()}, 0, box, zero=zero)
        for r in mu:
            neg = QTRat(QTPoly.one() - QTPoly.q(r), QTPoly.q(r))
            fac = AuxSeries({0: SymF.p(r), -r: SymF.one() * neg},
                            -r, box, zero=zero)
            acc = acc * fac
        acc = acc.scale(c)
        total = acc if total is None else total + acc
    hs = AuxSeries({k: SymF.h(k) for k in range(box + 1)}, 0, box, zero=zero)
    coeff = (total * hs).coefficient(a)
    sign = QTRat(QTPoly.const((-1) ** (a - 1)), QTPoly.q(a - 1))
    return coeff * sign


def e_gamma(gamma):
    """E_gamma built by iterated creation operators; empty composition gives 1."""
    gamma = Composition(gamma)
    if gamma.weight > SPECIAL_CAP:
        raise CapExceeded(gamma.weight, SPECIAL_CAP)
    return _e_gamma_rec(tuple(gamma))


@lru_cache(maxsize=None)
def _e_gamma_rec(g):
    if not g:
        return SymF.one()
    return c_op(g[0], _e_gamma_rec(g[1:]))


@lru_cache(maxsize=None)
def _e_basis(d):
    """Triangular eigenbasis data for the t=0 mode.

    Columns are E_mu over partitions mu of d, ordered so that conjugates
    run lex descending; rows are Schur coordinates of E_mu[z(1-q)].  The
    triangularity of each column against dominance of mu' is asserted,
    not assumed.
    """
    lams = sorted(partitions(d), reverse=True)
    cols = [lam.conjugate() for lam in lams]
    plain = {}
    modified = {}
    for mu in cols:
        E = e_gamma(Composition(mu))
        coeffs = to_basis(_scale_one_minus_q(E), "s", cap=None)
        muc = mu.conjugate()
        for nu in coeffs:
            if not nu.dominates(muc):
                raise ArithmeticError(
                    "lost triangularity at mu=%s, nu=%s" % (mu.text(), nu.text()))
        if muc not in coeffs or coeffs[muc].is_zero:
            raise ArithmeticError("vanishing diagonal at mu=%s" % (mu.text(),))
        plain[mu] = E
        modified[mu] = coeffs
    return lams, cols, plain, modified


def e_mu_via_H(mu):
    """E_mu recovered from the Macdonald side: scaled H at conjugate shape, t=0."""
    mu = Partition(mu)
    n, r = mu.weight, mu.length
    if n == 0:
        return SymF.one()
    if n > GENERIC_CAP:
        raise CapExceeded(n, GENERIC_CAP)
    H = macdonald_H(mu.conjugate()).specialize_t("t=0")
    scalar = QTRat(QTPoly.const((-1) ** (n - r)),
                   QTPoly.q(mu.n_stat() + n - r))
    return H * scalar
