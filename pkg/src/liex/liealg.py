"""Structure-constant tensors with exact rational entries.

Conventions used throughout the package:

  * [e_i, e_j] = sum_k C[i][j][k] e_k.  Storage is 0-based, every reported
    witness/index is 1-based.
  * A basis change u acts by rows: new_i = sum_p u[i][p] old_p, so
    C'[i][j][k] = sum u[i][p] u[j][q] C[p][q][r] uinv[r][k].
  * Jacobi residual of a triple (i,j,k) is the vector
    [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].

Nothing in here enforces the Jacobi identity at construction time;
validate_lie reports every violation so that broken tensors can be examined
(the search module depends on cheap construction).
"""

import re
from fractions import Fraction

from . import linalg
from .errors import InputFormatError, NotALieAlgebraError, NotASubalgebraError


class StructureTensor:
    __slots__ = ("dim", "c")

    def __init__(self, c):
        n = len(c)
        tens = []
        for plane in c:
            if len(plane) != n:
                raise InputFormatError("tensor is not n x n x n")
            rows = []
            for row in plane:
                if len(row) != n:
                    raise InputFormatError("tensor is not n x n x n")
                rows.append(tuple(linalg.frac(x) for x in row))
            tens.append(tuple(rows))
        self.dim = n
        self.c = tuple(tens)

    @classmethod
    def from_brackets(cls, n, brackets):
        """Build from sparse 1-based data {(i,j): {k: coeff}} with i != j.

        Antisymmetry is filled in automatically; specifying both (i,j) and
        (j,i) is rejected to avoid silent double entry.
        """
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for (i, j), coeffs in brackets.items():
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise InputFormatError("bad bracket pair (%r,%r)" % (i, j))
            if (j, i) in seen:
                raise InputFormatError("both (%d,%d) and (%d,%d) specified" % (i, j, j, i))
            seen.add((i, j))
            for k, q in coeffs.items():
                if not 1 <= k <= n:
                    raise InputFormatError("bracket target %r out of range" % (k,))
                v = linalg.frac(q)
                c[i - 1][j - 1][k - 1] = v
                c[j - 1][i - 1][k - 1] = -v
        return cls(c)

    def bracket_of(self, i, j):
        """{k: coeff} for [e_i, e_j], 1-based, zero entries omitted."""
        return {k + 1: v for k, v in enumerate(self.c[i - 1][j - 1]) if v}

    def nonzero_brackets(self):
        """Sorted list of (i, j, {k: coeff}) over i < j with nonzero bracket."""
        out = []
        for i in range(1, self.dim + 1):
            for j in range(i + 1, self.dim + 1):
                b = self.bracket_of(i, j)
                if b:
                    out.append((i, j, b))
        return out

    def __eq__(self, other):
        return isinstance(other, StructureTensor) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        rel = ", ".join("[e%d,e%d]=%s" % (i, j, "+".join(
            ("%s*e%d" % (q, k)) for k, q in sorted(b.items())))
            for i, j, b in self.nonzero_brackets())
        return "StructureTensor(dim=%d%s)" % (self.dim, ", " + rel if rel else "")

    def to_json(self):
        brackets = []
        for i, j, b in self.nonzero_brackets():
            brackets.append({"i": i, "j": j,
                             "coeffs": {str(k): str(q) for k, q in sorted(b.items())}})
        return {"dim": self.dim, "brackets": brackets}

    @classmethod
    def from_json(cls, obj):
        try:
            n = obj["dim"]
            entries = obj.get("brackets", [])
        except (TypeError, KeyError):
            raise InputFormatError("tensor JSON needs 'dim' and 'brackets'")
        if not isinstance(n, int) or n < 1:
            raise InputFormatError("bad dimension %r" % (n,))
        br = {}
        for e in entries:
            try:
                i, j = e["i"], e["j"]
                coeffs = {int(k): Fraction(v) for k, v in e["coeffs"].items()}
            except (TypeError, KeyError, ValueError, ZeroDivisionError):
                raise InputFormatError("bad bracket entry %r" % (e,))
            if not i < j:
                raise InputFormatError("bracket entries must have i < j, got (%r,%r)" % (i, j))
            br[(i, j)] = coeffs
        return cls.from_brackets(n, br)


def bracket(c, x, y):
    """[x, y] for coordinate vectors x, y."""
    n = c.dim
    out = [Fraction(0)] * n
    t = c.c
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        for j in range(n):
            yj = y[j]
            if not yj:
                continue
            row = t[i][j]
            f = xi * yj
            for k in range(n):
                if row[k]:
                    out[k] += f * row[k]
    return out


def ad_matrix(c, x):
    """Matrix of ad_x : v -> [x, v] (columns are images of basis vectors)."""
    n = c.dim
    m = linalg.zeros(n, n)
    for j in range(n):
        col = bracket(c, x, linalg.e_k(n, j))
        for k in range(n):
            m[k][j] = col[k]
    return m


class Subspace:
    """Span of rational vectors, stored as a reduced row-echelon basis.

    The canonical basis makes equality of subspaces plain tuple equality.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, generators):
        self.ambient = ambient
        rows = [list(map(linalg.frac, g)) for g in generators]
        for r in rows:
            if len(r) != ambient:
                raise InputFormatError("generator length != ambient dimension")
        self.basis = tuple(tuple(r) for r in linalg.row_space_basis(rows))
        self.pivots = tuple(next(i for i, x in enumerate(r) if x)
                            for r in self.basis)

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        return self.coordinates_of(v) is not None

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def coordinates_of(self, v):
        """Coefficients of v in the stored basis, or None if outside.

        The basis is reduced echelon with unit pivots, so candidate
        coefficients are read off the pivot coordinates; one reconstruction
        pass decides membership.
        """
        coords = [v[p] for p in self.pivots]
        for i in range(self.ambient):
            s = sum(c * row[i] for c, row in zip(coords, self.basis) if c)
            if s != v[i]:
                return None
        return [linalg.frac(x) for x in coords]

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d of %d)" % (self.dim, self.ambient)


def span_of_brackets(c, a, b):
    """Subspace spanned by all [x, y], x in a, y in b."""
    vecs = [bracket(c, list(x), list(y)) for x in a.basis for y in b.basis]
    return Subspace(c.dim, vecs)


def full_space(n):
    return Subspace(n, [linalg.e_k(n, i) for i in range(n)])


def validate_lie(c):
    """Report antisymmetry and Jacobi violations.

    {"ok": bool, "antisymmetry": [(i,j,k)...],
     "jacobi": [(i,j,k, l, residual)...]} with 1-based indices; the jacobi
    entries list each nonzero component l of the residual vector of the
    triple (i,j,k), i<j<k.
    """
    n = c.dim
    t = c.c
    anti = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if t[i][j][k] != -t[j][i][k]:
                    anti.append((i + 1, j + 1, k + 1))
    jac = []
    for i in range(n):
        ei = linalg.e_k(n, i)
        for j in range(i + 1, n):
            ej = linalg.e_k(n, j)
            for k in range(j + 1, n):
                ek = linalg.e_k(n, k)
                r1 = bracket(c, ei, bracket(c, ej, ek))
                r2 = bracket(c, ej, bracket(c, ek, ei))
                r3 = bracket(c, ek, bracket(c, ei, ej))
                for l in range(n):
                    res = r1[l] + r2[l] + r3[l]
                    if res:
                        jac.append((i + 1, j + 1, k + 1, l + 1, res))
    return {"ok": not anti and not jac, "antisymmetry": anti, "jacobi": jac}


def require_lie(c):
    rep = validate_lie(c)
    if not rep["ok"]:
        if rep["antisymmetry"]:
            w = rep["antisymmetry"][0]
            raise NotALieAlgebraError("tensor fails antisymmetry at %r" % (w,),
                                      witness=list(w))
        i, j, k, l, res = rep["jacobi"][0]
        raise NotALieAlgebraError(
            "tensor fails Jacobi at (%d,%d,%d), residual %s on e_%d" % (i, j, k, res, l),
            witness=[i, j, k, l, str(res)])
    return c


def as_basis_change(u, n):
    """Coerce to an invertible n x n rational matrix; return (u, uinv)."""
    if len(u) != n or any(len(row) != n for row in u):
        raise InputFormatError("basis change must be %d x %d" % (n, n))
    m = [[linalg.frac(x) for x in row] for row in u]
    inv = linalg.inverse(m)
    if inv is None:
        raise InputFormatError("basis change matrix is singular")
    return m, inv


def change_basis(c, u):
    """Rewrite the bracket in the basis new_i = sum_p u[i][p] old_p."""
    n = c.dim
    m, inv = as_basis_change(u, n)
    t = c.c
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            # [new_i, new_j] in old coordinates
            v = [Fraction(0)] * n
            for p in range(n):
                uip = m[i][p]
                if not uip:
                    continue
                for q in range(n):
                    ujq = m[j][q]
                    if not ujq:
                        continue
                    row = t[p][q]
                    f = uip * ujq
                    for r in range(n):
                        if row[r]:
                            v[r] += f * row[r]
            for k in range(n):
                s = sum(v[r] * inv[r][k] for r in range(n) if v[r])
                out[i][j][k] = s
                out[j][i][k] = -s
    return StructureTensor(out)


def compose_changes(u, v):
    """Basis change equal to applying u first, then v (i.e. the product v u)."""
    return linalg.mat_mul(v, u)


def is_unimodular(c):
    """{"unimodular": bool, "traces": [tr ad_{e_1}, ...]}."""
    n = c.dim
    traces = [sum(c.c[i][j][j] for j in range(n)) for i in range(n)]
    return {"unimodular": all(t == 0 for t in traces), "traces": traces}


def derived_series(c):
    """[g, [g,g], [[g,g],[g,g]], ...] until the series stabilizes.

    The last entry is either the zero subspace or a repeat of its
    predecessor (witnessing a nonzero stable term).
    """
    series = [full_space(c.dim)]
    while True:
        nxt = span_of_brackets(c, series[-1], series[-1])
        series.append(nxt)
        if nxt.dim == 0 or nxt == series[-2]:
            return series


def lower_central_series(c):
    """[g, [g,g], [g,[g,g]], ...] until stabilization, same convention."""
    g = full_space(c.dim)
    series = [g]
    while True:
        nxt = span_of_brackets(c, g, series[-1])
        series.append(nxt)
        if nxt.dim == 0 or nxt == series[-2]:
            return series


def solvability_degree(c):
    """Number of derived-series steps to reach zero, or None if never."""
    s = derived_series(c)
    return len(s) - 1 if s[-1].dim == 0 else None


def nilpotency_degree(c):
    """Number of lower-central steps to reach zero, or None if never."""
    s = lower_central_series(c)
    return len(s) - 1 if s[-1].dim == 0 else None


def derived_subalgebra(c):
    return span_of_brackets(c, full_space(c.dim), full_space(c.dim))


def center(c):
    """{v : [v, x] = 0 for all x}, via one stacked linear system."""
    n = c.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([c.c[i][j][k] for i in range(n)])
    return Subspace(n, linalg.nullspace(rows, ncols=n))


def killing_form(c):
    """{"matrix": K, "rank": r, "signature": (plus, minus, zero)}.

    K[i][j] = tr(ad_{e_i} ad_{e_j}); signature by exact congruence
    diagonalization.
    """
    n = c.dim
    ads = [ad_matrix(c, linalg.e_k(n, i)) for i in range(n)]
    K = linalg.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            tr = sum(ads[i][p][q] * ads[j][q][p] for p in range(n) for q in range(n))
            K[i][j] = K[j][i] = tr
    return {"matrix": K, "rank": linalg.rank(K),
            "signature": linalg.symmetric_signature(K)}


def derivation_algebra(c):
    """Basis of the space of derivations D[x,y] = [Dx,y] + [x,Dy].

    Unknowns are the n^2 entries of D (row-major); one equation per basis
    pair i<j and target coordinate s.  Returns matrices, deterministic order.
    """
    n = c.dim
    t = c.c
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    if t[i][j][k]:
                        row[s * n + k] += t[i][j][k]
                for r in range(n):
                    if t[r][j][s]:
                        row[r * n + i] -= t[r][j][s]
                    if t[i][r][s]:
                        row[r * n + j] -= t[i][r][s]
                if any(row):
                    rows.append(row)
    basis = linalg.nullspace(rows, ncols=n * n)
    return [[v[r * n:(r + 1) * n] for r in range(n)] for v in basis]


def _mat_comm(a, b):
    n = len(a)
    ab = linalg.mat_mul(a, b)
    ba = linalg.mat_mul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def _flat(m):
    return [x for row in m for x in row]


def is_nilpotent_matrix_algebra(basis):
    """Lie-nilpotency of the matrix algebra spanned by the given matrices.

    The span must be closed under commutator (checked; violation raises).
    Computes spans of iterated commutator layers [L, [L, [...]]] until they
    stabilize; nilpotent iff the stable layer is zero.
    """
    if not basis:
        return True
    n = len(basis[0])
    red, pivots = linalg.rref([_flat(m) for m in basis])
    span_rows = [red[i] for i in range(len(pivots))]
    for a in basis:
        for b in basis:
            if not linalg.in_row_space(span_rows, pivots, _flat(_mat_comm(a, b))):
                raise NotASubalgebraError(
                    "matrix span is not closed under commutator")
    layer = basis
    prev_dim = None
    while True:
        nxt = [_mat_comm(a, m) for a in basis for m in layer]
        rows = linalg.row_space_basis([_flat(m) for m in nxt])
        d = len(rows)
        if d == 0:
            return True
        if prev_dim is not None and d >= prev_dim:
            return False
        prev_dim = d
        layer = [[r[i * n:(i + 1) * n] for i in range(n)] for r in rows]


# --- catalog -------------------------------------------------------------

F = Fraction


def _param(params, key, label):
    if set(params) != {key}:
        raise InputFormatError("%s takes exactly the parameter %s" % (label, key))
    return linalg.frac(params[key])


def catalog(name, **params):
    """Canonical structure tensor for a named class.

    Names: 3A1, A2.1+A1, A3.1, A3.2, A3.3, A3.4 (parameter a, 0<|a|<=1),
    A3.5 (parameter b >= 0), sl2R, so3, gF, gE.
    """
    plain = {
        "3A1": (3, {}),
        "A2.1+A1": (3, {(1, 2): {1: 1}}),
        "A3.1": (3, {(2, 3): {1: 1}}),
        "A3.2": (3, {(1, 3): {1: 1}, (2, 3): {1: 1, 2: 1}}),
        "A3.3": (3, {(1, 3): {1: 1}, (2, 3): {2: 1}}),
        "sl2R": (3, {(1, 2): {1: 1}, (2, 3): {3: 1}, (1, 3): {2: 2}}),
        "so3": (3, {(1, 2): {3: 1}, (2, 3): {1: 1}, (1, 3): {2: -1}}),
        "gF": (7, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1},
                   (1, 5): {6: 1}, (1, 6): {7: 1},
                   (2, 3): {6: 1}, (2, 4): {7: 1}, (2, 5): {7: 1},
                   (3, 4): {7: -1}}),
        "gE": (7, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1},
                   (1, 5): {6: 1}, (1, 6): {7: 1},
                   (2, 3): {6: 1, 7: 1}, (2, 4): {7: 1}}),
    }
    if name in plain:
        if params:
            raise InputFormatError("%s takes no parameters" % name)
        n, br = plain[name]
        return StructureTensor.from_brackets(n, br)
    if name == "A3.4":
        a = _param(params, "a", "A3.4")
        if not 0 < abs(a) <= 1:
            raise InputFormatError("A3.4 parameter a must satisfy 0 < |a| <= 1")
        return StructureTensor.from_brackets(3, {(1, 3): {1: 1}, (2, 3): {2: a}})
    if name == "A3.5":
        b = _param(params, "b", "A3.5")
        if b < 0:
            raise InputFormatError("A3.5 parameter b must satisfy b >= 0")
        return StructureTensor.from_brackets(
            3, {(1, 3): {1: b, 2: -1}, (2, 3): {1: 1, 2: b}})
    raise InputFormatError("unknown catalog name %r" % (name,))


CATALOG_NAMES = ("3A1", "A2.1+A1", "A3.1", "A3.2", "A3.3", "A3.4", "A3.5",
                 "sl2R", "so3", "gF", "gE")

_LABEL_RE = re.compile(r"^(?P<name>[^()]+?)\s*(?:\(\s*(?:(?P<key>[ab])\s*=\s*)?"
                       r"(?P<val>-?\d+(?:/\d+)?)\s*\))?$")


def parse_label(label):
    """Split 'A3.4(a=1/2)' style labels into (name, params dict).

    The parameter key may be omitted inside the parentheses; it defaults to
    the parameter the named family takes.
    """
    m = _LABEL_RE.match(label.strip())
    if not m:
        raise InputFormatError("cannot parse class label %r" % (label,))
    name = m.group("name").strip()
    if m.group("val") is None:
        return name, {}
    key = m.group("key")
    if key is None:
        key = {"A3.4": "a", "A3.5": "b"}.get(name)
        if key is None:
            raise InputFormatError("label %r has a parameter but %r takes none"
                                   % (label, name))
    return name, {key: Fraction(m.group("val"))}


def make_label(name, param=None):
    if param is None:
        return name
    key = {"A3.4": "a", "A3.5": "b"}[name]
    return "%s(%s=%s)" % (name, key, param)


def resolve_algebra(label):
    """Catalog tensor for a label string such as 'sl2R' or 'A3.4(a=1/2)'."""
    name, params = parse_label(label)
    return catalog(name, **params)
