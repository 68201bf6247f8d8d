"""Semigroup expansions of Lie algebras and their reductions.

The expanded algebra of an order-N semigroup S and an n-dim algebra g lives
on basis elements E_{(i-1)N + alpha}, the product of semigroup element alpha
with algebra generator i.  The flat layout (algebra index major) is part of
the interface: golden tables downstream depend on it.
"""

import re
from fractions import Fraction

from . import linalg
from .errors import (InputFormatError, NotALieAlgebraError, NotASemigroupError,
                     NotASubalgebraError, NotReducibleError, NotResonantError)
from .liealg import StructureTensor, Subspace, bracket, full_space, require_lie, validate_lie
from .semigroup import require_zero, validate_semigroup


def flat_index(i, alpha, order):
    """1-based flat index of algebra generator i tensored with element alpha."""
    return (i - 1) * order + alpha


def split_index(flat, order):
    """Inverse of flat_index; returns (i, alpha), both 1-based."""
    return (flat - 1) // order + 1, (flat - 1) % order + 1


def require_semigroup(s):
    rep = validate_semigroup(s)
    if not rep["ok"]:
        w = rep["commutativity"][0] if rep["commutativity"] else rep["associativity"][0]
        raise NotASemigroupError("table fails %s at %r" % (
            "commutativity" if rep["commutativity"] else "associativity", w),
            witness=list(w))
    return s


def s_expand(s, c):
    """Expanded algebra: [E_(i,a), E_(j,b)] = C_ij^k E_(k, a*b)."""
    require_semigroup(s)
    require_lie(c)
    n, N = c.dim, s.order
    nd = n * N
    out = [[[Fraction(0)] * nd for _ in range(nd)] for _ in range(nd)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            row = c.c[i - 1][j - 1]
            if not any(row):
                continue
            for a in range(1, N + 1):
                for b in range(1, N + 1):
                    g = s.product(a, b)
                    fi = flat_index(i, a, N) - 1
                    fj = flat_index(j, b, N) - 1
                    for k in range(1, n + 1):
                        v = row[k - 1]
                        if v:
                            out[fi][fj][flat_index(k, g, N) - 1] = v
    t = StructureTensor(out)
    assert validate_lie(t)["ok"]
    return t


def zero_reduce(s, c):
    """Algebra on the non-zero part of S x g; brackets through 0_S are cut.

    Basis elements lambda_alpha e_i with alpha != 0_S keep their relative
    flat order; the result has dimension n(N-1).
    """
    require_lie(c)
    require_semigroup(s)
    z = require_zero(s)
    n, N = c.dim, s.order
    keep = [(i, a) for i in range(1, n + 1) for a in range(1, N + 1) if a != z]
    pos = {ia: t for t, ia in enumerate(keep)}
    nd = len(keep)
    out = [[[Fraction(0)] * nd for _ in range(nd)] for _ in range(nd)]
    for (i, a) in keep:
        for (j, b) in keep:
            g = s.product(a, b)
            if g == z:
                continue
            row = c.c[i - 1][j - 1]
            for k in range(1, n + 1):
                v = row[k - 1]
                if v:
                    out[pos[(i, a)]][pos[(j, b)]][pos[(k, g)]] = v
    t = StructureTensor(out)
    assert validate_lie(t)["ok"]
    return t


def extract_subalgebra(c, span):
    """Bracket restricted to a closed span, in its reduced-echelon basis.

    span may be a Subspace or a list of generator vectors.  Raises when some
    bracket of basis vectors leaves the span (with the offending pair).
    """
    if not isinstance(span, Subspace):
        span = Subspace(c.dim, span)
    basis = [list(v) for v in span.basis]
    m = len(basis)
    out = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            w = bracket(c, basis[a], basis[b])
            coords = span.coordinates_of(w)
            if coords is None:
                raise NotASubalgebraError(
                    "bracket of span basis vectors %d and %d leaves the span"
                    % (a + 1, b + 1),
                    witness={"pair": [a + 1, b + 1],
                             "bracket": [str(x) for x in w]})
            for k in range(m):
                out[a][b][k] = coords[k]
                out[b][a][k] = -coords[k]
    return StructureTensor(out)


def reduce_decomposition(c, checked, hatted):
    """Projected bracket on `checked` along `hatted`.

    Requires checked + hatted to be a direct-sum decomposition of the whole
    space and [checked, hatted] contained in hatted; under these the
    projected bracket satisfies Jacobi (asserted).
    """
    n = c.dim
    if not isinstance(checked, Subspace):
        checked = Subspace(n, checked)
    if not isinstance(hatted, Subspace):
        hatted = Subspace(n, hatted)
    all_rows = [list(v) for v in checked.basis] + [list(v) for v in hatted.basis]
    if checked.dim + hatted.dim != n or linalg.rank(all_rows) != n:
        raise NotReducibleError("checked and hatted do not decompose the space",
                                witness={"checked_dim": checked.dim,
                                         "hatted_dim": hatted.dim})
    for a, x in enumerate(checked.basis):
        for b, y in enumerate(hatted.basis):
            w = bracket(c, list(x), list(y))
            if not hatted.contains(w):
                raise NotReducibleError(
                    "[checked, hatted] is not contained in hatted",
                    witness={"checked_vector": a + 1, "hatted_vector": b + 1,
                             "bracket": [str(v) for v in w]})
    m = checked.dim
    # coordinates in the combined basis; first m coefficients are the
    # checked part of the projection
    combined_t = linalg.transpose(all_rows)
    out = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            w = bracket(c, list(checked.basis[a]), list(checked.basis[b]))
            coords = linalg.solve(combined_t, w)
            assert coords is not None
            for k in range(m):
                out[a][b][k] = coords[k]
                out[b][a][k] = -coords[k]
    t = StructureTensor(out)
    rep = validate_lie(t)
    assert rep["ok"], "projected bracket lost Jacobi: %r" % (rep["jacobi"][:1],)
    return t


# --- resonant decompositions --------------------------------------------


class ResonanceSpec:
    """Decomposition data: subspaces V_p of g, index subsets S_p of S, and
    for each pair (p,q) the target set i(p,q); optionally a per-p partition
    of S_p into a checked and a hatted part (for reductions).

    parts maps p -> Subspace; sets maps p -> iterable of 1-based semigroup
    indices; targets maps (p,q) -> iterable of part keys, and must cover
    every ordered pair.  partitions, when given, maps p -> (checked_set,
    hatted_set).
    """

    def __init__(self, parts, sets, targets, partitions=None):
        self.keys = sorted(parts)
        if sorted(sets) != self.keys:
            raise InputFormatError("parts and sets must share the same keys")
        self.parts = dict(parts)
        self.sets = {p: frozenset(sets[p]) for p in self.keys}
        self.targets = {}
        for p in self.keys:
            for q in self.keys:
                if (p, q) not in targets and (q, p) in targets:
                    self.targets[(p, q)] = frozenset(targets[(q, p)])
                elif (p, q) in targets:
                    self.targets[(p, q)] = frozenset(targets[(p, q)])
                else:
                    raise InputFormatError("no target set for pair (%r,%r)" % (p, q))
                if not self.targets[(p, q)] <= set(self.keys):
                    raise InputFormatError("target set of (%r,%r) names unknown parts" % (p, q))
        self.partitions = None
        if partitions is not None:
            self.partitions = {}
            for p in self.keys:
                if p not in partitions:
                    raise InputFormatError("partition missing for part %r" % (p,))
                chk, hat = partitions[p]
                chk, hat = frozenset(chk), frozenset(hat)
                if chk | hat != self.sets[p] or chk & hat:
                    raise InputFormatError("partition of part %r does not split S_p" % (p,))
                self.partitions[p] = (chk, hat)


def validate_resonance(s, c, rspec):
    """Check all resonance conditions; report with per-condition witnesses."""
    n, N = c.dim, s.order
    report = {"ok": True}

    stacked = []
    total = 0
    for p in rspec.keys:
        V = rspec.parts[p]
        if V.ambient != n:
            raise InputFormatError("subspace for part %r has wrong ambient" % (p,))
        stacked.extend(list(v) for v in V.basis)
        total += V.dim
    report["direct_sum"] = (total == n and linalg.rank(stacked) == n)

    covered = set()
    for p in rspec.keys:
        for a in rspec.sets[p]:
            if not 1 <= a <= N:
                raise InputFormatError("semigroup index %r out of range" % (a,))
        covered |= rspec.sets[p]
    report["covering"] = covered == set(range(1, N + 1))

    bracket_bad = []
    for p in rspec.keys:
        for q in rspec.keys:
            target = rspec.targets[(p, q)]
            gens = []
            for r in target:
                gens.extend(list(v) for v in rspec.parts[r].basis)
            tspace = Subspace(n, gens)
            for x in rspec.parts[p].basis:
                for y in rspec.parts[q].basis:
                    if not tspace.contains(bracket(c, list(x), list(y))):
                        bracket_bad.append((p, q))
                        break
                else:
                    continue
                break
    report["bracket_condition"] = bracket_bad

    product_bad = []
    for p in rspec.keys:
        for q in rspec.keys:
            target = rspec.targets[(p, q)]
            for a in sorted(rspec.sets[p]):
                for b in sorted(rspec.sets[q]):
                    g = s.product(a, b)
                    if any(g not in rspec.sets[r] for r in target):
                        product_bad.append((p, q, a, b))
    report["product_condition"] = product_bad

    partition_bad = []
    if rspec.partitions is not None:
        for p in rspec.keys:
            chk_p = rspec.partitions[p][0]
            for q in rspec.keys:
                hat_q = rspec.partitions[q][1]
                target = rspec.targets[(p, q)]
                for a in sorted(chk_p):
                    for b in sorted(hat_q):
                        g = s.product(a, b)
                        if any(g not in rspec.partitions[r][1] for r in target):
                            partition_bad.append((p, q, a, b))
    report["partition_condition"] = partition_bad

    report["ok"] = (report["direct_sum"] and report["covering"]
                    and not bracket_bad and not product_bad and not partition_bad)
    return report


def resonant_span(s, c, rspec):
    """Span of {lambda_a v : a in S_p, v in V_p} inside the expanded algebra."""
    n, N = c.dim, s.order
    gens = []
    for p in rspec.keys:
        for a in sorted(rspec.sets[p]):
            for v in rspec.parts[p].basis:
                w = [Fraction(0)] * (n * N)
                for i in range(1, n + 1):
                    if v[i - 1]:
                        w[flat_index(i, a, N) - 1] = v[i - 1]
                gens.append(w)
    return Subspace(n * N, gens)


def resonant_subalgebra(s, c, rspec):
    """The subalgebra of the expansion carried by a resonant decomposition."""
    rep = validate_resonance(s, c, rspec)
    if not rep["ok"]:
        for key in ("direct_sum", "covering"):
            if not rep[key]:
                raise NotResonantError("decomposition fails the %s condition" % key)
        for key in ("bracket_condition", "product_condition", "partition_condition"):
            if rep[key]:
                raise NotResonantError("decomposition fails the %s" % key,
                                       witness=list(rep[key][0]))
    expanded = s_expand(s, c)
    # closure is a theorem given the conditions above; extract_subalgebra
    # still verifies it exactly
    return extract_subalgebra(expanded, resonant_span(s, c, rspec))


def resonant_reduction(s, c, rspec):
    """Reduced algebra induced by a partitioned resonant decomposition.

    The hatted part is span{lambda_a v : a in the hatted half of S_p}, the
    checked part its complement inside the resonant span.
    """
    if rspec.partitions is None:
        raise InputFormatError("resonant reduction needs partitions")
    rep = validate_resonance(s, c, rspec)
    if not rep["ok"]:
        raise NotResonantError("decomposition fails resonance/partition checks")
    n, N = c.dim, s.order
    sub_span = resonant_span(s, c, rspec)
    sub = extract_subalgebra(s_expand(s, c), sub_span)

    def inner_coords(sets_of):
        gens = []
        for p in rspec.keys:
            for a in sorted(sets_of(p)):
                for v in rspec.parts[p].basis:
                    w = [Fraction(0)] * (n * N)
                    for i in range(1, n + 1):
                        if v[i - 1]:
                            w[flat_index(i, a, N) - 1] = v[i - 1]
                    gens.append(sub_span.coordinates_of(w))
        return gens

    checked = Subspace(sub.dim, inner_coords(lambda p: rspec.partitions[p][0]))
    hatted = Subspace(sub.dim, inner_coords(lambda p: rspec.partitions[p][1]))
    return reduce_decomposition(sub, checked, hatted)


# --- span strings --------------------------------------------------------

_TERM_RE = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*E(\d+)")


def parse_span(text, ambient):
    """Parse 'E1,E2-E3,2E4' into a list of coordinate vectors.

    Each comma-separated token is a signed rational combination of basis
    symbols E1..E<ambient>.
    """
    vecs = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise InputFormatError("empty span token")
        v = [Fraction(0)] * ambient
        pos = 0
        for m in _TERM_RE.finditer(token):
            if m.start() != pos:
                raise InputFormatError("cannot parse span token %r" % token)
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            idx = int(m.group(3))
            if not 1 <= idx <= ambient:
                raise InputFormatError("basis symbol E%d out of range 1..%d"
                                       % (idx, ambient))
            v[idx - 1] += sign * coeff
        if pos != len(token):
            raise InputFormatError("cannot parse span token %r" % token)
        vecs.append(v)
    return vecs
