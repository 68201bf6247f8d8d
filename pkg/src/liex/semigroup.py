"""Finite Abelian semigroups given by 1-based multiplication tables.

A table of order N is an N x N array with entries in 1..N; table[a][b] is the
index of the product of elements a and b (all indices 1-based, matching the
usual lambda_1..lambda_N naming).  Commutativity and associativity are NOT
enforced by the constructor; validate_semigroup produces a full witness
report so broken tables can be inspected.
"""

from itertools import permutations

from .errors import InputFormatError, NoZeroElementError


class BoundExceededError(InputFormatError):
    """Requested enumeration order above the configured bound."""

    code = "bound_exceeded"


DEFAULT_MAX_ORDER = 4


class SemigroupTable:
    __slots__ = ("order", "table")

    def __init__(self, table):
        n = len(table)
        if n == 0:
            raise InputFormatError("empty multiplication table")
        tab = []
        for row in table:
            if len(row) != n:
                raise InputFormatError("table is not square")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or not (1 <= x <= n):
                    raise InputFormatError(
                        "table entries must be integers in 1..%d" % n,
                        witness={"entry": x})
            tab.append(tuple(row))
        self.order = n
        self.table = tuple(tab)

    def product(self, a, b):
        """Index of the product, all 1-based."""
        return self.table[a - 1][b - 1]

    def __eq__(self, other):
        return isinstance(other, SemigroupTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return "SemigroupTable(%r)" % [list(r) for r in self.table]

    def relabel(self, perm):
        """Apply the relabeling a -> perm[a-1] (perm is 1-based values).

        New table satisfies new[perm(a)][perm(b)] = perm(old[a][b]).
        """
        n = self.order
        new = [[0] * n for _ in range(n)]
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                new[perm[a - 1] - 1][perm[b - 1] - 1] = perm[self.table[a - 1][b - 1] - 1]
        return SemigroupTable(new)

    def to_json(self):
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, obj):
        try:
            table = obj["table"]
        except (TypeError, KeyError):
            raise InputFormatError("semigroup JSON needs a 'table' field")
        st = cls(table)
        if "order" in obj and obj["order"] != st.order:
            raise InputFormatError("declared order %r does not match table size %d"
                                   % (obj["order"], st.order))
        return st


def validate_semigroup(s):
    """Full validation report.

    Returns {"ok": bool, "commutativity": [(a,b)...], "associativity":
    [(a,b,c)...]} listing every violated pair/triple (1-based).
    """
    n = s.order
    t = s.table
    comm = []
    for a in range(n):
        for b in range(a + 1, n):
            if t[a][b] != t[b][a]:
                comm.append((a + 1, b + 1))
    assoc = []
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab - 1][c] != t[a][t[b][c] - 1]:
                    assoc.append((a + 1, b + 1, c + 1))
    return {"ok": not comm and not assoc,
            "commutativity": comm,
            "associativity": assoc}


def zero_element(s):
    """1-based index of the absorbing element, or None.

    A zero satisfies a*z = z for all a.  At most one can exist: z = z*z' = z'.
    """
    n = s.order
    found = None
    for z in range(1, n + 1):
        if all(s.product(a, z) == z and s.product(z, a) == z
               for a in range(1, n + 1)):
            assert found is None, "two distinct zeros: %d, %d" % (found, z)
            found = z
    return found


def require_zero(s):
    z = zero_element(s)
    if z is None:
        raise NoZeroElementError("semigroup has no absorbing element")
    return z


def canonical_form(s):
    """Lexicographically least table over all relabelings.

    Deterministic representative of the isomorphism class; idempotent.
    """
    n = s.order
    best = None
    for perm in permutations(range(1, n + 1)):
        cand = s.relabel(perm).table
        if best is None or cand < best:
            best = cand
    return SemigroupTable([list(r) for r in best])


def semigroups_isomorphic(a, b):
    """Relabeling permutation taking a to b, or None.

    Returned value is a tuple p with p[i-1] = image of element i (1-based).
    """
    if a.order != b.order:
        return None
    for perm in permutations(range(1, a.order + 1)):
        if a.relabel(perm) == b:
            return perm
    return None


def enumerate_abelian_semigroups(order, up_to_isomorphism=True,
                                 max_order=DEFAULT_MAX_ORDER):
    """All Abelian semigroup tables of the given order, sorted.

    With up_to_isomorphism, one representative per relabeling orbit (the
    canonical form).  DFS over the upper triangle with incremental
    associativity pruning; the complete check runs once per filled table.
    """
    if order < 1:
        raise InputFormatError("order must be positive")
    if order > max_order:
        raise BoundExceededError(
            "order %d exceeds the enumeration bound %d" % (order, max_order))
    n = order
    cells = [(a, b) for a in range(n) for b in range(a, n)]
    t = [[0] * n for _ in range(n)]  # 0 = unassigned

    def assoc_ok_partial():
        # check only triples whose four lookups are all assigned
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                if not ab:
                    continue
                for c in range(n):
                    bc = t[b][c]
                    if not bc:
                        continue
                    left = t[ab - 1][c]
                    right = t[a][bc - 1]
                    if left and right and left != right:
                        return False
        return True

    out = []

    def fill(idx):
        if idx == len(cells):
            out.append(SemigroupTable([row[:] for row in t]))
            return
        a, b = cells[idx]
        for v in range(1, n + 1):
            t[a][b] = t[b][a] = v
            if assoc_ok_partial():
                fill(idx + 1)
        t[a][b] = t[b][a] = 0

    fill(0)
    for s in out:
        assert validate_semigroup(s)["ok"]
    if up_to_isomorphism:
        reps = {}
        for s in out:
            reps.setdefault(canonical_form(s).table, s)
        out = [SemigroupTable([list(r) for r in tab]) for tab in sorted(reps)]
    else:
        out.sort(key=lambda s: s.table)
    return out


# Built-ins.  S3's printed relations (zero lambda_1, lambda_2*lambda_2 =
# lambda_1, lambda_2*lambda_3 = lambda_2) force lambda_3*lambda_3 = lambda_3:
# any other value breaks associativity on (2,3,3).
TRIVIAL = SemigroupTable([[1]])
S2 = SemigroupTable([[2, 2], [2, 2]])
S3 = SemigroupTable([[1, 1, 1], [1, 1, 2], [1, 2, 3]])

BUILTIN_SEMIGROUPS = {"S2": S2, "S3": S3}


def resolve_semigroup(name):
    try:
        return BUILTIN_SEMIGROUPS[name]
    except KeyError:
        raise InputFormatError("unknown semigroup name %r (builtins: %s)"
                               % (name, ", ".join(sorted(BUILTIN_SEMIGROUPS))))
