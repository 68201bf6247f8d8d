"""Connection search: which classes arise from which by expansion plus
subalgebra extraction, zero reduction, or resonant decomposition.

The span search space is deliberately bounded: candidate subalgebras are
spanned by subsets of the ambient basis vectors, the shape every worked
extraction takes (a span picks out semigroup copies of original basis
vectors).  Closure then reduces to a support check on the pair brackets.
Negative results mean exactly "no witness in this bounded space", and
every result carries the count of candidates examined so the claim is
reproducible.

Classification of the small restricted tensors is cached globally, since
the same tensor shows up in many spans and across searches.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iproduct

from . import linalg
from .errors import InputFormatError, ParameterNotRationalError, RationalFormError
from .expansion import (ResonanceSpec, extract_subalgebra, resonant_span,
                        s_expand, validate_resonance, zero_reduce)
from .identify import identify3
from .liealg import (StructureTensor, Subspace, bracket, catalog, change_basis,
                     parse_label, resolve_algebra)
from .semigroup import (S2, S3, enumerate_abelian_semigroups, semigroups_isomorphic,
                        zero_element)


@dataclass(frozen=True)
class Witness:
    """One replayable connection.

    span generators are coordinates in the ambient algebra of the given mode
    (the expansion for 'subalgebra' and 'resonant', the reduced algebra for
    'zero_reduce').  basis_change maps the tensor extracted from the span
    (in its reduced-echelon basis) onto the canonical catalog form.
    """
    semigroup: object
    semigroup_name: object      # "S2"/"S3" when isomorphic to a built-in
    mode: str
    span: object                # tuple of coordinate tuples
    resonance: object           # JSONable decomposition data, or None
    label: str
    param: object
    basis_change: tuple

    def to_json(self):
        d = {"semigroup": self.semigroup.to_json(), "mode": self.mode,
             "label": self.label}
        if self.semigroup_name:
            d["semigroup_name"] = self.semigroup_name
        if self.param is not None:
            d["param"] = str(self.param)
        if self.span is not None:
            d["span"] = [[str(x) for x in v] for v in self.span]
        if self.resonance is not None:
            d["resonance"] = self.resonance
        d["basis_change"] = [[str(x) for x in row] for row in self.basis_change]
        return d


@dataclass(frozen=True)
class SearchResult:
    witnesses: tuple
    space: dict                 # enumeration counts, per mode
    max_order: int
    modes: tuple

    def found(self):
        return bool(self.witnesses)

    def to_json(self):
        return {"witnesses": [w.to_json() for w in self.witnesses],
                "space": self.space, "max_order": self.max_order,
                "modes": list(self.modes), "found": self.found()}


def semigroup_inventory(max_order):
    """One semigroup per isomorphism class up to max_order, with built-in
    relabelings substituted so witnesses come out in the familiar
    coordinates."""
    out = []
    for order in range(1, max_order + 1):
        for s in enumerate_abelian_semigroups(order, up_to_isomorphism=True):
            name = None
            for bname, b in (("S2", S2), ("S3", S3)):
                if b.order == order and semigroups_isomorphic(s, b) is not None:
                    s, name = b, bname
                    break
            out.append((s, name))
    return out


# derived-algebra dimension per class, used to prefilter spans before the
# full classification runs
DD_BY_LABEL = {"3A1": 0, "A2.1+A1": 1, "A3.1": 1, "A3.2": 2, "A3.3": 2,
               "A3.4": 2, "A3.5": 2, "sl2R": 3, "so3": 3}

_ZERO3 = StructureTensor([[[0] * 3 for _ in range(3)] for _ in range(3)])


@lru_cache(maxsize=None)
def _identify_or_none(c):
    try:
        return identify3(c)
    except (ParameterNotRationalError, RationalFormError):
        return None


def clear_caches():
    """Drop the scan and classification caches (honest cold timings)."""
    scan_3dim_subalgebras.cache_clear()
    _identify_or_none.cache_clear()


def _supp(vec):
    m = 0
    for i, x in enumerate(vec):
        if x:
            m |= 1 << i
    return m


def _rank3(rows):
    basis = []
    for row in rows:
        for b in basis:
            p = next(i for i, x in enumerate(b) if x)
            if row[p]:
                f, c = b[p], row[p]
                row = [f * ri - c * bi for ri, bi in zip(row, b)]
        if any(row):
            basis.append(row)
    return len(basis)


@lru_cache(maxsize=256)
def scan_3dim_subalgebras(ambient):
    """All 3-dim bracket-closed spans of triples of ambient basis vectors.

    Such a span is a subalgebra exactly when each of its three pair
    brackets is supported on the triple's own coordinates, and the
    restricted tensor is then read straight off the ambient structure
    constants.  Returns (records, triples_examined); each record is
    (generators, derived_dim, tensor) with generators the unit coordinate
    vectors and the tensor written in that basis (which is also the span's
    echelon basis, so classifier witnesses apply to it directly).
    """
    d = ambient.dim
    units = []
    for i in range(d):
        v = [0] * d
        v[i] = 1
        units.append(tuple(v))
    csupp = [[_supp(ambient.c[a][b]) for b in range(d)] for a in range(d)]
    records = []
    examined = 0
    for a, b, c in combinations(range(d), 3):
        examined += 1
        mask = (1 << a) | (1 << b) | (1 << c)
        if (csupp[a][b] | csupp[a][c] | csupp[b][c]) & ~mask:
            continue
        gens = (units[a], units[b], units[c])
        rows = [[ambient.c[p][q][t] for t in (a, b, c)]
                for p, q in ((a, b), (a, c), (b, c))]
        if not any(any(r) for r in rows):
            records.append((gens, 0, _ZERO3))
            continue
        c3 = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
        for (i, j), co in zip(((0, 1), (0, 2), (1, 2)), rows):
            for k in range(3):
                c3[i][j][k] = co[k]
                c3[j][i][k] = -co[k]
        records.append((gens, _rank3(rows), StructureTensor(c3)))
    return tuple(records), examined


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _index_subsets(n):
    full = list(range(1, n + 1))
    out = []
    for r in range(n + 1):
        out.extend(frozenset(c) for c in combinations(full, r))
    return out


def _resonant_candidates(s, c):
    """(spec, meta) pairs for decompositions whose resonant subalgebra is
    3-dim: blocks are basis subsets, index sets covering subsets (a part's
    set may be empty; only the union must exhaust the semigroup), targets
    the minimal sets compatible with the brackets."""
    n, N = c.dim, s.order
    subsets = _index_subsets(N)
    full = frozenset(range(1, N + 1))
    examined = 0
    specs = []
    for blocks in _set_partitions(list(range(1, n + 1))):
        blocks = sorted(sorted(bl) for bl in blocks)
        k = len(blocks)
        # minimal target blocks for each pair, from coordinate supports
        tmin = {}
        for p in range(k):
            for q in range(k):
                touched = set()
                for i in blocks[p]:
                    for j in blocks[q]:
                        w = bracket(c, linalg.e_k(n, i - 1), linalg.e_k(n, j - 1))
                        for t, x in enumerate(w):
                            if x:
                                touched.add(t + 1)
                tmin[(p, q)] = frozenset(
                    r for r in range(k) if touched & set(blocks[r]))
        for cover in iproduct(subsets, repeat=k):
            examined += 1
            if frozenset().union(*cover) != full:
                continue
            if sum(len(cover[p]) * len(blocks[p]) for p in range(k)) != 3:
                continue
            ok = True
            for p in range(k):
                for q in range(k):
                    for al in cover[p]:
                        for be in cover[q]:
                            g = s.product(al, be)
                            if any(g not in cover[r] for r in tmin[(p, q)]):
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                continue
            parts = {p: Subspace(n, [linalg.e_k(n, i - 1) for i in blocks[p]])
                     for p in range(k)}
            spec = ResonanceSpec(parts, {p: cover[p] for p in range(k)},
                                 {(p, q): tmin[(p, q)] for p in range(k)
                                  for q in range(k)})
            meta = {"blocks": blocks,
                    "sets": [sorted(cover[p]) for p in range(k)],
                    "targets": {"%d,%d" % (p + 1, q + 1): sorted(x + 1 for x in tmin[(p, q)])
                                for p in range(k) for q in range(k)}}
            specs.append((spec, meta))
    return specs, examined


RESONANT_ORDER_BOUND = 3


def find_connection(source, target_label, max_order=3,
                    modes=("subalgebra",), pre_change=None):
    """Witnesses taking `source` to the class `target_label`.

    Scans every Abelian semigroup up to isomorphism within max_order.  An
    empty result reports the exact number of candidates examined.
    """
    for m in modes:
        if m not in ("subalgebra", "zero_reduce", "resonant"):
            raise InputFormatError("unknown search mode %r" % (m,))
    tname, tparams = parse_label(target_label)
    target = catalog(tname, **tparams)
    if target.dim != 3:
        raise InputFormatError("search targets must be 3-dim classes")
    want = (tname, tparams.get("a", tparams.get("b")))
    ddt = DD_BY_LABEL[tname]
    if pre_change is not None:
        source = change_basis(source, pre_change)
    witnesses = []
    space = {"semigroups": 0}
    for m in modes:
        space["%s_candidates" % m] = 0

    def match_spans(ambient, s, sname, mode):
        records, examined = scan_3dim_subalgebras(ambient)
        space["%s_candidates" % mode] += examined
        for gens, dd, gt in records:
            if dd != ddt:
                continue
            ident = _identify_or_none(gt)
            if ident is None or (ident.label, ident.param) != want:
                continue
            witnesses.append(Witness(s, sname, mode, gens, None,
                                     ident.label, ident.param, ident.witness))

    for s, sname in semigroup_inventory(max_order):
        space["semigroups"] += 1
        if "subalgebra" in modes:
            match_spans(s_expand(s, source), s, sname, "subalgebra")
        if "zero_reduce" in modes and zero_element(s) is not None:
            reduced = zero_reduce(s, source)
            if reduced.dim >= 3:
                match_spans(reduced, s, sname, "zero_reduce")
        if "resonant" in modes and s.order <= RESONANT_ORDER_BOUND:
            specs, examined = _resonant_candidates(s, source)
            space["resonant_candidates"] += examined
            expanded = s_expand(s, source)
            seen_spans = set()
            for spec, meta in specs:
                span = resonant_span(s, source, spec)
                if span.basis in seen_spans:
                    continue
                seen_spans.add(span.basis)
                if not validate_resonance(s, source, spec)["ok"]:
                    continue
                sub = extract_subalgebra(expanded, span)
                try:
                    ident = identify3(sub)
                except (ParameterNotRationalError, RationalFormError):
                    continue
                if (ident.label, ident.param) == want:
                    witnesses.append(Witness(s, sname, "resonant",
                                             tuple(span.basis), meta,
                                             ident.label, ident.param,
                                             ident.witness))
    return SearchResult(tuple(witnesses), space, max_order, tuple(modes))


def replay(source, witness):
    """Re-run a witness pipeline from scratch; True iff it checks out."""
    s = witness.semigroup
    if witness.mode == "subalgebra":
        ambient = s_expand(s, source)
    elif witness.mode == "zero_reduce":
        ambient = zero_reduce(s, source)
    elif witness.mode == "resonant":
        ambient = s_expand(s, source)
    else:
        return False
    try:
        sub = extract_subalgebra(ambient, [list(v) for v in witness.span])
    except Exception:
        return False
    params = {} if witness.param is None else (
        {"a" if witness.label == "A3.4" else "b": witness.param})
    try:
        expected = catalog(witness.label, **params)
    except InputFormatError:
        return False
    return change_basis(sub, [list(r) for r in witness.basis_change]) == expected


def connectivity_matrix(labels, max_order=2, modes=("subalgebra",)):
    """Directed found/not-found report over ordered label pairs.

    Each found edge carries its first witness.  Self-loops come out of the
    order-1 semigroup (the expansion is the algebra itself).
    """
    tensors = {lab: resolve_algebra(lab) for lab in labels}
    edges = {}
    for src in labels:
        for dst in labels:
            res = find_connection(tensors[src], dst, max_order=max_order,
                                  modes=modes)
            entry = {"found": res.found(), "space": res.space}
            if res.found():
                entry["witness"] = res.witnesses[0].to_json()
            edges[(src, dst)] = entry
    return {"labels": list(labels), "max_order": max_order,
            "modes": list(modes), "edges": edges}


def connectivity_to_json(report):
    return {"labels": report["labels"], "max_order": report["max_order"],
            "modes": report["modes"],
            "edges": [{"from": a, "to": b, **entry}
                      for (a, b), entry in sorted(report["edges"].items())]}


def connectivity_to_dot(report):
    """DOT digraph of the found edges; arrow labels name the semigroup and
    mode of the first witness."""
    lines = ["digraph connections {"]
    for lab in report["labels"]:
        lines.append('  "%s";' % lab)
    for (a, b), entry in sorted(report["edges"].items()):
        if not entry["found"]:
            continue
        if a == b:
            continue  # self-loops by the trivial semigroup clutter the picture
        w = entry["witness"]
        tag = w.get("semigroup_name") or "order %d" % w["semigroup"]["order"]
        lines.append('  "%s" -> "%s" [label="%s/%s"];' % (a, b, tag, w["mode"]))
    lines.append("}")
    return "\n".join(lines)
