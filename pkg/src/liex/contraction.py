"""Parametric basis families and exact contraction limits.

Everything is computed in the ring of Laurent polynomials over Q in one
parameter (written eps below); matrix inversion goes through the adjugate,
so transformed structure constants are ratios of Laurent polynomials.  When
the exact division comes out clean the denominator disappears; otherwise
the numerator/denominator pair is kept with the denominator normalized to
valuation 0 and constant term 1, which keeps valuations trivially readable.

A family acts on columns: basis vector i of the new frame has the entries
of column i as coordinates in the old frame.  With a constant invertible
matrix B this agrees with change_basis applied to the transpose of B; the
column choice is what makes the bundled 7-dim contraction family reproduce
its target exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InputFormatError
from .liealg import StructureTensor, parse_label, resolve_algebra, validate_lie


class LaurentPoly:
    """Finite-support map exponent -> rational coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, q in terms.items():
                q = linalg.frac(q)
                if q:
                    t[int(e)] = q
        self.terms = t

    @classmethod
    def const(cls, q):
        return cls({0: q})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        t = dict(self.terms)
        for e, q in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + q
        return LaurentPoly(t)

    def __sub__(self, other):
        t = dict(self.terms)
        for e, q in other.terms.items():
            t[e] = t.get(e, Fraction(0)) - q
        return LaurentPoly(t)

    def __neg__(self):
        return LaurentPoly({e: -q for e, q in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: q * other for e, q in self.terms.items()})
        t = {}
        for e1, q1 in self.terms.items():
            for e2, q2 in other.terms.items():
                t[e1 + e2] = t.get(e1 + e2, Fraction(0)) + q1 * q2
        return LaurentPoly(t)

    def shift(self, k):
        return LaurentPoly({e + k: q for e, q in self.terms.items()})

    def valuation(self):
        """Least exponent with nonzero coefficient; None for the zero poly."""
        return min(self.terms) if self.terms else None

    def degree(self):
        return max(self.terms) if self.terms else None

    def coeff(self, e):
        return self.terms.get(e, Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*eps^%d" % (q, e) for e, q in sorted(self.terms.items()))

    def to_json(self):
        return {str(e): str(q) for e, q in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls({int(e): Fraction(q) for e, q in obj.items()})
        except (TypeError, ValueError, AttributeError, ZeroDivisionError):
            raise InputFormatError("bad Laurent polynomial %r" % (obj,))


def _divmod_poly(a, b):
    """Long division of ordinary (valuation >= 0) polynomials."""
    assert b
    q = {}
    r = dict(a.terms)
    db = b.degree()
    lead = b.coeff(db)
    while r:
        dr = max(r)
        if dr < db:
            break
        f = r[dr] / lead
        q[dr - db] = f
        for e, c in b.terms.items():
            ne = e + dr - db
            nv = r.get(ne, Fraction(0)) - f * c
            if nv:
                r[ne] = nv
            else:
                r.pop(ne, None)
    return LaurentPoly(q), LaurentPoly(r)


def _gcd_poly(a, b):
    while b:
        _, rem = _divmod_poly(a, b)
        a, b = b, rem
    if a:
        a = a * (Fraction(1) / a.coeff(a.degree()))
    return a


class LaurentFrac:
    """num/den with den normalized to valuation 0 and constant term 1.

    den is the constant 1 whenever the division is exact, so plain Laurent
    polynomials are the common case.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.const(1)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = LaurentPoly()
            self.den = LaurentPoly.const(1)
            return
        # make both ordinary polynomials, remember the eps-power offset
        vn, vd = num.valuation(), den.valuation()
        n0, d0 = num.shift(-vn), den.shift(-vd)
        q, r = _divmod_poly(n0, d0)
        if not r:
            self.num = q.shift(vn - vd)
            self.den = LaurentPoly.const(1)
            return
        g = _gcd_poly(n0, d0)
        n0, _ = _divmod_poly(n0, g)
        d0, _ = _divmod_poly(d0, g)
        c = d0.coeff(0)
        assert c, "denominator lost its constant term after gcd reduction"
        self.num = n0.shift(vn - vd) * (Fraction(1) / c)
        self.den = d0 * (Fraction(1) / c)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return (isinstance(other, LaurentFrac)
                and self.num == other.num and self.den == other.den)

    def valuation(self):
        # den has valuation 0, so the numerator decides
        return self.num.valuation()

    def value_at_zero(self):
        """Constant term of the eps -> 0 limit; requires valuation >= 0."""
        v = self.valuation()
        if v is None or v > 0:
            return Fraction(0)
        assert v == 0, "divergent entry has no value at zero"
        return self.num.coeff(0) / self.den.coeff(0)

    def __repr__(self):
        if self.den == LaurentPoly.const(1):
            return repr(self.num)
        return "(%r) / (%r)" % (self.num, self.den)


class LaurentBasisFamily:
    """n x n matrix of Laurent polynomials, invertible as a matrix over the
    fraction field (nonzero determinant)."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim, entries):
        self.dim = dim
        rows = []
        for row in entries:
            if len(row) != dim:
                raise InputFormatError("family matrix is not square")
            rows.append([e if isinstance(e, LaurentPoly) else LaurentPoly.const(e)
                         for e in row])
        if len(rows) != dim:
            raise InputFormatError("family matrix is not square")
        self.entries = rows

    @classmethod
    def diagonal_powers(cls, exps):
        n = len(exps)
        m = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
        for i, e in enumerate(exps):
            m[i][i] = LaurentPoly.monomial(e)
        return cls(n, m)

    def to_json(self):
        ent = {}
        for i in range(self.dim):
            for j in range(self.dim):
                if self.entries[i][j]:
                    ent["%d,%d" % (i + 1, j + 1)] = self.entries[i][j].to_json()
        return {"dim": self.dim, "entries": ent}

    @classmethod
    def from_json(cls, obj):
        try:
            n = obj["dim"]
            raw = obj["entries"]
        except (TypeError, KeyError):
            raise InputFormatError("family JSON needs 'dim' and 'entries'")
        m = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
        for key, val in raw.items():
            try:
                i, j = (int(x) for x in key.split(","))
            except ValueError:
                raise InputFormatError("bad entry key %r" % (key,))
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputFormatError("entry key %r out of range" % (key,))
            m[i - 1][j - 1] = LaurentPoly.from_json(val)
        return cls(n, m)


def _det_minor(entries, rows, cols, memo):
    if not rows:
        return LaurentPoly.const(1)
    key = (rows, cols)
    if key in memo:
        return memo[key]
    r = rows[0]
    rest = rows[1:]
    acc = LaurentPoly()
    for pos, c in enumerate(cols):
        e = entries[r][c]
        if not e:
            continue
        sub = _det_minor(entries, rest, cols[:pos] + cols[pos + 1:], memo)
        term = e * sub
        acc = acc + term if pos % 2 == 0 else acc - term
    memo[key] = acc
    return acc


def family_determinant(fam):
    n = fam.dim
    return _det_minor(fam.entries, tuple(range(n)), tuple(range(n)), {})


def family_adjugate(fam):
    """adj with adj*B = det(B)*I; adj[i][j] = (-1)^(i+j) minor(del row j, col i)."""
    n = fam.dim
    memo = {}
    adj = [[None] * n for _ in range(n)]
    full = tuple(range(n))
    for i in range(n):
        cols = tuple(c for c in full if c != i)
        for j in range(n):
            rows = tuple(r for r in full if r != j)
            m = _det_minor(fam.entries, rows, cols, memo)
            adj[i][j] = m if (i + j) % 2 == 0 else -m
    return adj


class LaurentTensor:
    __slots__ = ("dim", "entries")

    def __init__(self, dim, entries):
        self.dim = dim
        self.entries = entries  # n x n x n nested lists of LaurentFrac


def transform_parametric(c, fam):
    """Structure constants in the eps-dependent frame given by fam's columns."""
    n = c.dim
    if fam.dim != n:
        raise InputFormatError("family dimension %d != algebra dimension %d"
                               % (fam.dim, n))
    det = family_determinant(fam)
    if not det:
        raise InputFormatError("family determinant is identically zero")
    adj = family_adjugate(fam)
    B = fam.entries
    t = c.c
    zero = LaurentFrac(LaurentPoly())
    out = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            # [new_i, new_j] in old coordinates, as Laurent polynomials
            v = [LaurentPoly() for _ in range(n)]
            for p in range(n):
                Bpi = B[p][i]
                if not Bpi:
                    continue
                for q in range(n):
                    Bqj = B[q][j]
                    if not Bqj:
                        continue
                    row = t[p][q]
                    f = Bpi * Bqj
                    for r in range(n):
                        if row[r]:
                            v[r] = v[r] + f * row[r]
            for k in range(n):
                num = LaurentPoly()
                for r in range(n):
                    if v[r]:
                        num = num + adj[k][r] * v[r]
                if num:
                    e = LaurentFrac(num, det)
                    out[i][j][k] = e
                    out[j][i][k] = LaurentFrac(-num, det)
    return LaurentTensor(n, out)


@dataclass(frozen=True)
class Divergent:
    """First-class marker for a limit that does not exist."""
    i: int
    j: int
    k: int
    valuation: int

    def to_json(self):
        return {"divergent": {"i": self.i, "j": self.j, "k": self.k,
                              "valuation": self.valuation}}


def limit(lt):
    """eps -> 0 limit: the tensor of constant terms, or a Divergent marker
    naming the first entry with negative valuation."""
    n = lt.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                e = lt.entries[i][j][k]
                v = e.valuation()
                if v is not None and v < 0:
                    return Divergent(i + 1, j + 1, k + 1, v)
    out = [[[lt.entries[i][j][k].value_at_zero() for k in range(n)]
            for j in range(n)] for i in range(n)]
    t = StructureTensor(out)
    rep = validate_lie(t)
    assert rep["ok"], "contraction limit lost the Jacobi identity"
    return t


def verify_contraction(source, fam, target_label, post_change=None):
    """Transform, take the limit, and compare with the named target.

    3-dim targets are compared up to isomorphism via the classifier; other
    dimensions by exact equality, optionally after a user-supplied basis
    change applied to the limit.  Returns a report dict; never raises on a
    divergent limit.
    """
    from .identify import identify3

    name, params = parse_label(target_label)
    target = resolve_algebra(target_label)
    lt = transform_parametric(source, fam)
    lim = limit(lt)
    report = {"target": target_label}
    if isinstance(lim, Divergent):
        report.update(lim.to_json())
        report["ok"] = False
        return report
    report["limit"] = lim.to_json()
    if lim.dim == 3 and target.dim == 3:
        ident = identify3(lim)
        report["identified"] = ident.full_label()
        want_param = params.get("a", params.get("b"))
        report["ok"] = (ident.label, ident.param) == (name, want_param)
    else:
        probe = lim
        if post_change is not None:
            from .liealg import change_basis
            probe = change_basis(lim, post_change)
        report["ok"] = probe == target
        report["identified"] = target_label if report["ok"] else None
    return report


def _ufe():
    h = Fraction(1, 2)
    m = LaurentPoly.monomial
    entries = [[LaurentPoly() for _ in range(7)] for _ in range(7)]
    for i, e in enumerate((1, 3, 4, 5, 6, 7, 8)):
        entries[i][i] = m(e)
    entries[3][1] = m(4, h)
    entries[4][2] = m(5, h)
    entries[5][3] = m(6, h)
    entries[6][4] = m(7, h)
    return LaurentBasisFamily(7, entries)


# the 7-dim family whose eps->0 limit carries gF onto gE
U_FE = _ufe()

BUILTIN_FAMILIES = {"UFE": U_FE}


def resolve_family(name):
    try:
        return BUILTIN_FAMILIES[name]
    except KeyError:
        raise InputFormatError("unknown family name %r (builtins: %s)"
                               % (name, ", ".join(sorted(BUILTIN_FAMILIES))))
