"""Isomorphism classes of real 3-dim Lie algebras, with explicit witnesses.

The decision tree branches on the dimension of the derived algebra, then on
exact eigenstructure of the adjoint action, and finally (for the two simple
classes) on the signature of the Killing form.  Every returned witness u is
verified on the spot: change_basis(input, u) must equal the canonical
catalog tensor entry for entry.

Two failure modes are genuine, not defensive:

  * the continuous family parameter recovered from the input is irrational
    (e.g. adjoint action [[1,2],[-1,1]] on the derived algebra gives
    invariant 1/sqrt(2)), or
  * the parameter is rational but no rational basis can reach the canonical
    form (anisotropic rational forms of the simple classes, and the
    trace-zero solvable cases whose discriminant is not a square).
"""

import math

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from . import linalg
from .errors import (InputFormatError, ParameterNotRationalError,
                     RationalFormError)
from .liealg import (ad_matrix, bracket, catalog, center, change_basis,
                     derived_subalgebra, is_unimodular, killing_form,
                     make_label, nilpotency_degree, require_lie,
                     solvability_degree)

# Cartan subalgebra dimensions are static per-class metadata at dimension 3;
# no general computation is attempted.
CARTAN_DIMENSION = {
    "3A1": 3, "A2.1+A1": 2, "A3.1": 3, "A3.2": 1, "A3.3": 1,
    "A3.4": 1, "A3.5": 1, "sl2R": 1, "so3": 1,
}

FRAME_SEARCH_LIMIT = 24


@dataclass(frozen=True)
class InvariantSignature:
    dim: int
    dim_derived: int
    dim_center: int
    unimodular: bool
    solv_degree: object     # int or None (non-solvable)
    nilp_degree: object
    killing_rank: int
    killing_signature: tuple
    adjoint_parameter: object  # Fraction tr^2/det of ad on derived, when 2-dim


@dataclass(frozen=True)
class Identification:
    label: str
    param: object           # Fraction or None
    witness: tuple          # rows of the verified basis change

    def full_label(self):
        return make_label(self.label, self.param)

    def witness_matrix(self):
        return [list(r) for r in self.witness]


def signature(c):
    if c.dim != 3:
        raise InputFormatError("signature requires a 3-dim tensor")
    require_lie(c)
    der = derived_subalgebra(c)
    kf = killing_form(c)
    adjoint_parameter = None
    if der.dim == 2:
        rho, _ = _adjoint_on_derived(c, der)
        T = rho[0][0] + rho[1][1]
        D = linalg.det(rho)
        assert D != 0
        adjoint_parameter = T * T / D
    return InvariantSignature(
        dim=3,
        dim_derived=der.dim,
        dim_center=center(c).dim,
        unimodular=is_unimodular(c)["unimodular"],
        solv_degree=solvability_degree(c),
        nilp_degree=nilpotency_degree(c),
        killing_rank=kf["rank"],
        killing_signature=kf["signature"],
        adjoint_parameter=adjoint_parameter,
    )


def identify3(c):
    """Class label, canonical parameter, and an exact witness basis change."""
    if c.dim != 3:
        raise InputFormatError("identify3 requires a 3-dim tensor")
    require_lie(c)
    der = derived_subalgebra(c)
    dd = der.dim
    if dd == 0:
        name, param, rows = "3A1", None, linalg.identity(3)
    elif dd == 1:
        name, param, rows = _identify_derived1(c, der)
    elif dd == 2:
        name, param, rows = _identify_derived2(c, der)
    else:
        name, param, rows = _identify_simple(c)
    params = {} if param is None else {("a" if name == "A3.4" else "b"): param}
    target = catalog(name, **params)
    got = change_basis(c, rows)
    assert got == target, "witness check failed for %s" % name
    return Identification(label=name, param=param,
                          witness=tuple(tuple(r) for r in rows))


def _identify_derived1(c, der):
    n = 3
    w = list(der.basis[0])
    # multiplier of [w, e_m] on w; derived is 1-dim so every bracket is a
    # multiple of w
    mults = []
    for m in range(n):
        y = bracket(c, w, linalg.e_k(n, m))
        coords = der.coordinates_of(y)
        assert coords is not None
        mults.append(coords[0])
    if all(x == 0 for x in mults):
        # derived is central: Heisenberg.  Take the first nonvanishing
        # bracket of plain basis vectors as (e~2, e~3, e~1 = their bracket).
        for i in range(n):
            for j in range(i + 1, n):
                b = bracket(c, linalg.e_k(n, i), linalg.e_k(n, j))
                if any(b):
                    return "A3.1", None, [b, linalg.e_k(n, i), linalg.e_k(n, j)]
        raise AssertionError("derived dim 1 but no nonzero bracket")
    m = next(i for i, x in enumerate(mults) if x)
    lam = mults[m]
    u = linalg.e_k(n, m)
    e2 = [x / lam for x in u]
    # complete with a vector killed by both e~1 and e~2
    rows_wu = [w, u]
    v = next(linalg.e_k(n, t) for t in range(n)
             if linalg.rank(rows_wu + [linalg.e_k(n, t)]) == 3)
    mu = der.coordinates_of(bracket(c, w, v))[0]
    v1 = [a - (mu / lam) * b for a, b in zip(v, u)]
    xi = der.coordinates_of(bracket(c, u, v1))[0]
    e3 = [a + (xi / lam) * b for a, b in zip(v1, w)]
    return "A2.1+A1", None, [w, e2, e3]


def _adjoint_on_derived(c, der):
    """2x2 matrix of x -> [x, y] on the derived algebra, and the vector y.

    y is the first standard basis vector outside the derived algebra.  The
    derived algebra is automatically abelian here (it is nilpotent, and the
    2-dim nonabelian algebra is not), which we assert rather than prove.
    """
    n = 3
    f1, f2 = (list(v) for v in der.basis)
    assert not any(bracket(c, f1, f2)), "2-dim derived algebra must be abelian"
    y = next(linalg.e_k(n, m) for m in range(n)
             if not der.contains(linalg.e_k(n, m)))
    rho = linalg.zeros(2, 2)
    for col, f in enumerate((f1, f2)):
        coords = der.coordinates_of(bracket(c, f, y))
        assert coords is not None, "[derived, y] must stay in derived"
        rho[0][col], rho[1][col] = coords
    return rho, y


def _identify_derived2(c, der):
    f1, f2 = (list(v) for v in der.basis)

    def to_ambient(coords):
        return [coords[0] * a + coords[1] * b for a, b in zip(f1, f2)]

    rho, y = _adjoint_on_derived(c, der)
    T = rho[0][0] + rho[1][1]
    D = linalg.det(rho)
    assert D != 0, "adjoint action on a 2-dim derived algebra is invertible"
    disc = T * T - 4 * D

    if disc == 0:
        mu = T / 2
        nil = [[rho[0][0] - mu, rho[0][1]], [rho[1][0], rho[1][1] - mu]]
        e3 = [x / mu for x in y]
        if all(x == 0 for row in nil for x in row):
            return "A3.3", None, [f1, f2, e3]
        g2 = [Fraction(1), Fraction(0)]
        if not any(nil[r][0] for r in range(2)):
            g2 = [Fraction(0), Fraction(1)]
        g1 = [x / mu for x in linalg.mat_vec(nil, g2)]
        return "A3.2", None, [to_ambient(g1), to_ambient(g2), e3]

    if disc > 0:
        ok, s = linalg.is_perfect_square(disc)
        if not ok:
            if T == 0:
                # parameter is -1 but the eigenvalues +-sqrt(-D) are
                # irrational, so no rational diagonalizing frame exists
                raise RationalFormError(
                    "class A3.4(a=-1) admits no rational canonical basis "
                    "here: -det of the adjoint action (%s) is not a square" % (-D,),
                    witness={"trace": str(T), "det": str(D)})
            raise ParameterNotRationalError(
                "eigenvalue ratio of the adjoint action is irrational "
                "(discriminant %s is not a rational square)" % (disc,),
                witness={"trace": str(T), "det": str(D),
                         "invariant": str(T * T / D)})
        mu1, mu2 = (T + s) / 2, (T - s) / 2
        if abs(mu1) < abs(mu2):
            mu1, mu2 = mu2, mu1
        a = mu2 / mu1
        vecs = []
        for mu in (mu1, mu2):
            shifted = [[rho[0][0] - mu, rho[0][1]], [rho[1][0], rho[1][1] - mu]]
            ns = linalg.nullspace(shifted)
            assert len(ns) == 1
            vecs.append(to_ambient(ns[0]))
        e3 = [x / mu1 for x in y]
        return "A3.4", a, [vecs[0], vecs[1], e3]

    # complex eigenvalue pair sigma +- i*tau, tau > 0
    ok, twotau = linalg.is_perfect_square(-disc)
    if not ok:
        if T == 0:
            raise RationalFormError(
                "class A3.5(b=0) admits no rational canonical basis here: "
                "det of the adjoint action (%s) is not a square" % (D,),
                witness={"trace": str(T), "det": str(D)})
        raise ParameterNotRationalError(
            "rotation parameter of the adjoint action is irrational "
            "(-discriminant %s is not a rational square)" % (-disc,),
            witness={"trace": str(T), "det": str(D),
                     "invariant": str(T * T / D)})
    tau = twotau / 2
    sigma = T / 2
    flip = -1 if sigma < 0 else 1
    b = flip * sigma / tau
    rt = [[flip * x / tau for x in row] for row in rho]
    A = [[rt[0][0] - b, rt[0][1]], [rt[1][0], rt[1][1] - b]]
    A2 = linalg.mat_mul(A, A)
    assert A2 == [[Fraction(-1), Fraction(0)], [Fraction(0), Fraction(-1)]]
    g1 = [Fraction(1), Fraction(0)]
    g2 = [-A[0][0], -A[1][0]]
    e3 = [flip * x / tau for x in y]
    return "A3.5", b, [to_ambient(g1), to_ambient(g2), e3]


def _primitive_vectors(dim, limit):
    """Primitive integer vectors by growing sup-norm shells.

    One representative per sign pair (first nonzero entry positive),
    lexicographic within a shell.  Deterministic.
    """
    from math import gcd
    for r in range(1, limit + 1):
        for v in iproduct(range(-r, r + 1), repeat=dim):
            if max(abs(x) for x in v) != r:
                continue
            nz = next((x for x in v if x), 0)
            if nz <= 0:
                continue
            g = 0
            for x in v:
                g = gcd(g, abs(x))
            if g != 1:
                continue
            yield [Fraction(x) for x in v]


def _sqrt_minus_one(p):
    # p an odd prime with p % 4 == 1; smallest nonresidue powers to a root
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return pow(a, (p - 1) // 4, p)
    raise AssertionError("no quadratic nonresidue mod %d" % p)


def _prime_two_squares(p):
    # Hermite-Serret descent; p == 2 or p % 4 == 1
    if p == 2:
        return 1, 1
    x = _sqrt_minus_one(p)
    a, b = p, x
    while b * b > p:
        a, b = b, a % b
    r = b
    s2 = p - r * r
    s = math.isqrt(s2)
    assert s * s == s2
    return r, s


def _two_squares(m):
    """(r, s) with r^2 + s^2 = m, or None when no decomposition exists.

    m is decomposable exactly when every prime p = 3 (mod 4) divides it to
    an even power; built up factor by factor via the two-square product
    identity.
    """
    assert m > 0
    r, s = 1, 0

    def compose(a, b):
        nonlocal r, s
        r, s = r * a - s * b, r * b + s * a

    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    for _ in range(e):
        compose(1, 1)
    p = 3
    while p * p <= m:
        if m % p == 0:
            f = 0
            while m % p == 0:
                m //= p
                f += 1
            if p % 4 == 3:
                if f % 2:
                    return None
                r *= p ** (f // 2)
                s *= p ** (f // 2)
            else:
                a, b = _prime_two_squares(p)
                for _ in range(f):
                    compose(a, b)
        p += 2
    if m > 1:
        if m % 4 == 3:
            return None
        compose(*_prime_two_squares(m))
    return abs(r), abs(s)


def _reduce_gram(B):
    """Unimodular integer rows T with T B T^t short (B positive definite).

    Greedy pairwise reduction: repeatedly shorten row i by the nearest
    integer multiple of row j; exact for dimension <= 3 up to reordering.
    Enumerating small integer combinations of the reduced rows then reaches
    the form's short vectors within a few shells, which keeps the frame
    search bound independent of how skew the input basis is.
    """
    n = len(B)
    T = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]

    def gram():
        return linalg.mat_mul(linalg.mat_mul(T, B), linalg.transpose(T))

    A = gram()
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j or not A[j][j]:
                    continue
                t = round(A[i][j] / A[j][j])
                if not t:
                    continue
                new_norm = A[i][i] - 2 * t * A[i][j] + t * t * A[j][j]
                if new_norm < A[i][i]:
                    T[i] = [a - t * b for a, b in zip(T[i], T[j])]
                    A = gram()
                    changed = True
    order = sorted(range(n), key=lambda i: A[i][i])
    return [T[i] for i in order]


DEFINITE_SEARCH_BUDGET = 2_000_000

_SQ_FILTERS = [(m, frozenset(i * i % m for i in range(m))) for m in (64, 63, 65)]


def _square_norm_vector(B):
    """(x, root) with B(x, x) = root^2 != 0, or None within the budget.

    B positive definite rational.  Works in Gram-reduced integer
    coordinates, sweeping primitive vectors by sup-norm shell; values are
    integers there, so candidates fall to residue filters and one isqrt
    each.  The budget bounds the sweep; misses on genuinely represented
    squares are possible but need heights past every shell the budget
    covers.
    """
    red = _reduce_gram(B)
    A = linalg.mat_mul(linalg.mat_mul(red, B), linalg.transpose(red))
    D = 1
    for i in range(3):
        for j in range(3):
            D = D * A[i][j].denominator // math.gcd(D, A[i][j].denominator)
    M = [[(A[i][j] * D).numerator for j in range(3)] for i in range(3)]
    a, b, c = M[0][0], M[1][1], M[2][2]
    d, e, f = 2 * M[0][1], 2 * M[0][2], 2 * M[1][2]
    seen = 0
    r = 0
    while seen < DEFINITE_SEARCH_BUDGET:
        r += 1
        for x0 in range(-r, r + 1):
            for x1 in range(-r, r + 1):
                for x2 in range(-r, r + 1):
                    if max(abs(x0), abs(x1), abs(x2)) != r:
                        continue
                    if (x0, x1, x2) > (-x0, -x1, -x2):
                        continue
                    if math.gcd(math.gcd(abs(x0), abs(x1)), abs(x2)) != 1:
                        continue
                    seen += 1
                    m = (a * x0 * x0 + b * x1 * x1 + c * x2 * x2
                         + d * x0 * x1 + e * x0 * x2 + f * x1 * x2)
                    t = m * D
                    if any(t % mod not in sq for mod, sq in _SQ_FILTERS):
                        continue
                    s = math.isqrt(t)
                    if s * s != t:
                        continue
                    x = [x0 * red[0][i] + x1 * red[1][i] + x2 * red[2][i]
                         for i in range(3)]
                    return x, Fraction(s, D)
    return None


def _identify_simple(c):
    kf = killing_form(c)
    K = kf["matrix"]
    sig = kf["signature"]

    def kform(x, y):
        return sum(x[i] * K[i][j] * y[j] for i in range(3) for j in range(3))

    if sig == (2, 1, 0):
        # split element: K(x,x)/2 a nonzero square; its ad has rational
        # eigenvalues -c, 0, c
        for x in _primitive_vectors(3, FRAME_SEARCH_LIMIT):
            ok, croot = linalg.is_perfect_square(kform(x, x) / 2)
            if not ok or croot == 0:
                continue
            h = [v / croot for v in x]
            adh = ad_matrix(c, h)
            minus = linalg.nullspace([[adh[i][j] + (1 if i == j else 0)
                                       for j in range(3)] for i in range(3)])
            plus = linalg.nullspace([[adh[i][j] - (1 if i == j else 0)
                                      for j in range(3)] for i in range(3)])
            assert len(minus) == 1 and len(plus) == 1
            vm, vp = minus[0], plus[0]
            # [vm, vp] is a nonzero multiple of h (zero weight space)
            w = bracket(c, vm, vp)
            idx = next(t for t, v in enumerate(h) if v)
            gamma = w[idx] / h[idx]
            assert gamma != 0 and all(w[t] == gamma * h[t] for t in range(3))
            e3 = [2 * v / gamma for v in vp]
            return "sl2R", None, [vm, h, e3]
        raise RationalFormError(
            "no rational split frame found within the search bound; the "
            "input is a nonsplit rational form (or needs a larger bound)",
            witness={"bound": FRAME_SEARCH_LIMIT})

    assert sig == (0, 3, 0), "Killing signature %r impossible in dim 3" % (sig,)

    def bform(x, y):
        return -kform(x, y) / 2

    Bmat = [[bform(linalg.e_k(3, i), linalg.e_k(3, j)) for j in range(3)]
            for i in range(3)]
    found = _square_norm_vector(Bmat)
    if found is not None:
        x, croot = found
        e1 = [v / croot for v in x]
        # Once a unit vector exists the rest is forced: for w in its
        # complement, ad_{e1} preserves the form and squares to -1 there, so
        # w and [e1, w] are an orthogonal pair of equal norm q, and
        # alpha w + beta [e1, w] has norm (alpha^2 + beta^2) q.  A second
        # unit vector exists iff q is a sum of two rational squares; when it
        # is not, Witt cancellation rules out any rational orthonormal
        # frame, so the refusal is a proof rather than a search timeout.
        comp = linalg.nullspace([[bform(linalg.e_k(3, j), e1)
                                  for j in range(3)]])
        assert len(comp) == 2
        w = comp[0]
        q = bform(w, w)
        assert q > 0
        ts = _two_squares(q.numerator * q.denominator)
        if ts is None:
            raise RationalFormError(
                "no rational orthonormal frame exists: a complement norm is "
                "not a sum of two rational squares",
                witness={"complement_norm": str(q)})
        rho = Fraction(ts[0], q.denominator)
        sig2 = Fraction(ts[1], q.denominator)
        assert rho * rho + sig2 * sig2 == q
        u = bracket(c, e1, w)
        e2 = [(rho * a + sig2 * b) / q for a, b in zip(w, u)]
        assert bform(e2, e2) == 1
        e3 = bracket(c, e1, e2)
        return "so3", None, [e1, e2, e3]
    raise RationalFormError(
        "no rational vector of square norm within the search budget",
        witness={"budget": DEFINITE_SEARCH_BUDGET})


def are_isomorphic(c1, c2):
    """Basis change u with change_basis(c1, u) = c2, or None.

    Complete by the classification: equal (label, parameter) decides.
    """
    if c1.dim != 3 or c2.dim != 3:
        raise InputFormatError("are_isomorphic requires 3-dim tensors")
    r1 = identify3(c1)
    r2 = identify3(c2)
    if (r1.label, r1.param) != (r2.label, r2.param):
        return None
    w1 = r1.witness_matrix()
    w2inv = linalg.inverse(r2.witness_matrix())
    u = linalg.mat_mul(w2inv, w1)
    assert change_basis(c1, u) == c2
    return u
