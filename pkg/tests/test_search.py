"""Connection search: frozen witness counts, replay, connectivity reports.

The witness and candidate counts below are regression values: they were
produced by this code, inspected by hand (the named spans match worked
examples checked in test_expansion), and frozen.  A change in any of them
means the enumeration or the classifier changed behavior.
"""

import dataclasses

import pytest

from liex.errors import InputFormatError
from liex.liealg import catalog, change_basis
from liex.search import (
    DD_BY_LABEL,
    SearchResult,
    clear_caches,
    connectivity_matrix,
    connectivity_to_dot,
    connectivity_to_json,
    find_connection,
    replay,
    scan_3dim_subalgebras,
    semigroup_inventory,
)
from support import unit_rows


def spans_of(res):
    return {(w.semigroup_name, w.span) for w in res.witnesses}


def test_semigroup_inventory_counts_and_naming():
    inv = semigroup_inventory(3)
    assert len(inv) == 1 + 3 + 12
    names = [name for _, name in inv if name]
    assert names == ["S2", "S3"]
    assert all(s.order <= 3 for s, _ in inv)


def test_scan_of_three_dim_algebra_is_the_algebra():
    records, examined = scan_3dim_subalgebras(catalog("sl2R"))
    assert examined == 1 and len(records) == 1
    gens, dd, tensor = records[0]
    assert gens == unit_rows(3, (0, 1, 2))
    assert dd == 3 and tensor == catalog("sl2R")


def test_subalgebra_search_order2():
    res = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2)
    assert len(res.witnesses) == 10
    assert res.space == {"semigroups": 4, "subalgebra_candidates": 61}
    assert ("S2", unit_rows(6, (0, 1, 2))) in spans_of(res)
    assert res.found() and res.max_order == 2
    for w in res.witnesses:
        assert replay(catalog("sl2R"), w)


def test_subalgebra_search_order3():
    res = find_connection(catalog("sl2R"), "A3.3", max_order=3)
    assert len(res.witnesses) == 54
    assert res.space == {"semigroups": 16, "subalgebra_candidates": 1069}
    assert ("S3", unit_rows(9, (0, 1, 5))) in spans_of(res)

    res = find_connection(catalog("A2.1+A1"), "A3.3", max_order=3)
    assert len(res.witnesses) == 27
    assert ("S3", unit_rows(9, (0, 1, 5))) in spans_of(res)

    res = find_connection(catalog("A3.3"), "A2.1+A1", max_order=2)
    assert len(res.witnesses) == 10
    assert ("S2", unit_rows(6, (0, 1, 5))) in spans_of(res)
    for w in res.witnesses:
        assert replay(catalog("A3.3"), w)


def test_search_is_deterministic():
    a = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2)
    b = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2)
    assert a == b
    assert a.to_json() == b.to_json()


def test_zero_reduce_search():
    res = find_connection(catalog("sl2R"), "A2.1+A1", max_order=3,
                          modes=("zero_reduce",))
    assert len(res.witnesses) == 30
    assert res.space == {"semigroups": 16, "zero_reduce_candidates": 162}
    for w in res.witnesses[:5]:
        assert w.mode == "zero_reduce"
        assert replay(catalog("sl2R"), w)

    res = find_connection(catalog("sl2R"), "3A1", max_order=2,
                          modes=("zero_reduce",))
    assert len(res.witnesses) == 1
    assert res.space == {"semigroups": 4, "zero_reduce_candidates": 2}
    assert replay(catalog("sl2R"), res.witnesses[0])


def test_resonant_search():
    res = find_connection(catalog("sl2R"), "A3.3", max_order=3,
                          modes=("resonant",))
    assert len(res.witnesses) == 18
    assert res.space["semigroups"] == 16
    assert res.space["resonant_candidates"] == 8914
    for w in res.witnesses[:5]:
        assert w.mode == "resonant"
        assert set(w.resonance) == {"blocks", "sets", "targets"}
        assert replay(catalog("sl2R"), w)

    res = find_connection(catalog("A2.1+A1"), "A3.3", max_order=3,
                          modes=("resonant",))
    assert len(res.witnesses) == 9

    res = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2,
                          modes=("resonant",))
    assert len(res.witnesses) == 10
    assert any(w.semigroup_name == "S2" for w in res.witnesses)


def test_negative_searches_are_empty():
    for src in ("sl2R", "so3"):
        for target in ("A3.2", "A3.4(a=1/2)", "A3.5(b=1)"):
            res = find_connection(catalog(src), target, max_order=3,
                                  modes=("subalgebra", "zero_reduce"))
            assert not res.found(), (src, target)
            assert res.witnesses == ()


def test_replay_rejects_tampered_witnesses():
    res = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2)
    w = res.witnesses[0]
    assert not replay(catalog("sl2R"), dataclasses.replace(w, mode="bogus"))
    assert not replay(catalog("sl2R"), dataclasses.replace(w, label="A3.2"))
    open_span = unit_rows(6, (0, 4, 2))
    assert not replay(catalog("sl2R"), dataclasses.replace(w, span=open_span))
    # a witness for the wrong source algebra fails too
    assert not replay(catalog("so3"), w)


def test_witness_json_shape():
    res = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2)
    blob = res.to_json()
    assert blob["found"] and blob["max_order"] == 2
    assert blob["modes"] == ["subalgebra"]
    first = blob["witnesses"][0]
    assert first["label"] == "A2.1+A1"
    assert first["semigroup"]["order"] >= 2
    assert all(isinstance(x, str) for row in first["basis_change"] for x in row)


def test_search_input_guards():
    with pytest.raises(InputFormatError):
        find_connection(catalog("sl2R"), "A2.1+A1", modes=("bogus",))
    with pytest.raises(InputFormatError):
        find_connection(catalog("sl2R"), "gE")
    with pytest.raises(InputFormatError):
        find_connection(catalog("sl2R"), "A2.1+A1",
                        pre_change=[[0, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert set(DD_BY_LABEL) == {"3A1", "A2.1+A1", "A3.1", "A3.2", "A3.3",
                                "A3.4", "A3.5", "sl2R", "so3"}


def test_pre_change_does_not_affect_canonical_source():
    base = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2)
    via = find_connection(catalog("sl2R"), "A2.1+A1", max_order=2,
                          pre_change=[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert via == base


def test_connectivity_matrix():
    rep = connectivity_matrix(["sl2R", "A2.1+A1", "A3.3"], max_order=2)
    edges = rep["edges"]
    for lab in rep["labels"]:
        assert edges[(lab, lab)]["found"], lab
    assert edges[("sl2R", "A2.1+A1")]["found"]
    assert edges[("sl2R", "A3.3")]["found"]
    assert edges[("A2.1+A1", "A3.3")]["found"]
    assert edges[("A3.3", "A2.1+A1")]["found"]
    assert not edges[("A2.1+A1", "sl2R")]["found"]
    assert not edges[("A3.3", "sl2R")]["found"]
    assert edges[("sl2R", "A2.1+A1")]["witness"]["semigroup_name"] == "S2"

    single = connectivity_matrix(["sl2R"], max_order=1)
    assert single["edges"][("sl2R", "sl2R")]["found"]

    rep2 = connectivity_matrix(["sl2R", "A3.2"], max_order=2)
    assert not rep2["edges"][("sl2R", "A3.2")]["found"]
    assert not rep2["edges"][("A3.2", "sl2R")]["found"]


def test_connectivity_report_formats():
    rep = connectivity_matrix(["sl2R", "A2.1+A1"], max_order=2)
    blob = connectivity_to_json(rep)
    assert blob["labels"] == ["sl2R", "A2.1+A1"]
    assert len(blob["edges"]) == 4
    assert {e["from"] for e in blob["edges"]} == {"sl2R", "A2.1+A1"}
    dot = connectivity_to_dot(rep)
    assert dot.startswith("digraph connections {")
    assert dot.rstrip().endswith("}")
    assert '"sl2R" -> "A2.1+A1" [label="S2/subalgebra"];' in dot
    assert '"A2.1+A1" -> "sl2R"' not in dot
    assert '"sl2R" -> "sl2R"' not in dot
