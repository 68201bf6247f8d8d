"""Classification of 3-dim algebras with verified basis-change witnesses.

Round trips feed random rational basis changes of every catalog entry back
through the classifier; the witness equation is re-checked here rather than
trusted.  The refusal paths are exercised with inputs whose obstruction is
known in closed form (irrational invariant, non-square discriminant, and an
anisotropic definite form).
"""

import random
from fractions import Fraction as F

import pytest

from liex import linalg
from liex.errors import (
    InputFormatError,
    ParameterNotRationalError,
    RationalFormError,
)
from liex.identify import (
    CARTAN_DIMENSION,
    DEFINITE_SEARCH_BUDGET,
    FRAME_SEARCH_LIMIT,
    are_isomorphic,
    identify3,
    signature,
)
from liex.liealg import StructureTensor, catalog, change_basis, resolve_algebra
from support import rand_invertible

THREE_DIM = [
    ("3A1", None),
    ("A2.1+A1", None),
    ("A3.1", None),
    ("A3.2", None),
    ("A3.3", None),
    ("A3.4", F(1, 2)),
    ("A3.4", F(1, 3)),
    ("A3.4", F(-1)),
    ("A3.5", F(0)),
    ("A3.5", F(2)),
    ("sl2R", None),
    ("so3", None),
]


def entry(name, param):
    if param is None:
        return catalog(name)
    return catalog(name, **{("a" if name == "A3.4" else "b"): param})


def test_catalog_self_identification():
    for name, param in THREE_DIM:
        r = identify3(entry(name, param))
        assert (r.label, r.param) == (name, param)


def test_witness_equation_on_seeded_round_trips():
    rng = random.Random(20)
    for name, param in THREE_DIM:
        c = entry(name, param)
        for _ in range(20):
            u = rand_invertible(rng, 3)
            d = change_basis(c, u)
            r = identify3(d)
            assert (r.label, r.param) == (name, param), (name, param, u)
            assert change_basis(d, r.witness_matrix()) == entry(name, param)


def test_identification_fields():
    r = identify3(entry("A3.4", F(1, 2)))
    assert r.full_label() == "A3.4(a=1/2)"
    assert resolve_algebra(r.full_label()) == entry("A3.4", F(1, 2))
    assert identify3(catalog("sl2R")).full_label() == "sl2R"
    assert len(r.witness) == 3 and all(len(row) == 3 for row in r.witness)


def test_equal_scaling_parameter_is_the_diagonal_class():
    # a = 1 makes the adjoint action on the derived algebra scalar
    r = identify3(catalog("A3.4", a=1))
    assert r.label == "A3.3" and r.param is None


def test_disguised_heisenberg():
    c = StructureTensor.from_brackets(3, {(1, 2): {3: 1}})
    assert identify3(c).label == "A3.1"


def test_denominator_heavy_definite_input():
    u = [[F(1, 2), F(1, 3), F(0)], [F(0), F(1, 5), F(1)], [F(7), F(0), F(2)]]
    d = change_basis(catalog("so3"), u)
    r = identify3(d)
    assert r.label == "so3"
    assert change_basis(d, r.witness_matrix()) == catalog("so3")


def test_irrational_family_parameter_refused():
    c = StructureTensor.from_brackets(
        3, {(1, 3): {1: 1, 2: -1}, (2, 3): {1: 2, 2: 1}})
    with pytest.raises(ParameterNotRationalError) as ei:
        identify3(c)
    assert ei.value.witness["invariant"] == "4/3"


def test_rational_parameter_without_rational_frame_refused():
    # eigenvalues +-sqrt(2): parameter -1, but no rational eigenvectors
    c = StructureTensor.from_brackets(3, {(1, 3): {2: 1}, (2, 3): {1: 2}})
    with pytest.raises(RationalFormError):
        identify3(c)
    # rotation pair +-i*sqrt(3): parameter 0, same obstruction
    c = StructureTensor.from_brackets(3, {(1, 3): {2: 1}, (2, 3): {1: -3}})
    with pytest.raises(RationalFormError):
        identify3(c)


def so_q(q1, q2, q3):
    # antisymmetric matrices for the form q1 x^2 + q2 y^2 + q3 z^2
    return StructureTensor.from_brackets(
        3, {(1, 2): {3: -q1}, (1, 3): {2: q2}, (2, 3): {1: -q3}})


def test_anisotropic_definite_form_refused_with_proof():
    c = so_q(1, 1, 3)
    assert signature(c).killing_signature == (0, 3, 0)
    with pytest.raises(RationalFormError) as ei:
        identify3(c)
    # the obstruction is exact: complement norm 12 = 4*3 is not a sum of
    # two rational squares, so no search bound is involved
    assert ei.value.witness == {"complement_norm": "12"}


def test_nonsplit_indefinite_form_refused_at_bound():
    c = so_q(1, 1, -3)
    assert signature(c).killing_signature == (2, 1, 0)
    with pytest.raises(RationalFormError) as ei:
        identify3(c)
    assert ei.value.witness == {"bound": FRAME_SEARCH_LIMIT}


def test_isotropic_q_form_still_identified():
    r = identify3(so_q(1, 1, 1))
    assert r.label == "so3"
    assert identify3(so_q(1, -1, 1)).label == "sl2R"


def test_are_isomorphic_same_class():
    rng = random.Random(21)
    c = catalog("sl2R")
    c1 = change_basis(c, rand_invertible(rng, 3))
    c2 = change_basis(c, rand_invertible(rng, 3))
    u = are_isomorphic(c1, c2)
    assert u is not None
    assert change_basis(c1, u) == c2


def test_are_isomorphic_against_raw_tensor():
    raw = StructureTensor.from_brackets(3, {(1, 3): {1: 1}, (2, 3): {2: 2}})
    u = are_isomorphic(catalog("A3.4", a=F(1, 2)), raw)
    assert u is not None
    assert change_basis(catalog("A3.4", a=F(1, 2)), u) == raw


def test_catalog_classes_pairwise_distinct():
    entries = [entry(name, param) for name, param in THREE_DIM]
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            assert are_isomorphic(entries[i], entries[j]) is None, (
                THREE_DIM[i], THREE_DIM[j])


def test_signature_fields():
    s = signature(catalog("sl2R"))
    assert s.dim == 3 and s.dim_derived == 3 and s.dim_center == 0
    assert s.unimodular and s.solv_degree is None
    assert s.killing_signature == (2, 1, 0) and s.killing_rank == 3
    assert s.adjoint_parameter is None
    s = signature(catalog("A3.5", b=2))
    assert s.adjoint_parameter == F(16, 5)
    assert not s.unimodular
    s = signature(catalog("A3.4", a=F(1, 2)))
    assert s.adjoint_parameter == F(9, 2)
    s = signature(catalog("A3.3"))
    assert s.adjoint_parameter == F(4)
    assert signature(catalog("3A1")).dim_center == 3


def test_dimension_guards():
    with pytest.raises(InputFormatError):
        identify3(catalog("gF"))
    with pytest.raises(InputFormatError):
        signature(catalog("gE"))
    with pytest.raises(InputFormatError):
        are_isomorphic(catalog("gF"), catalog("gE"))


def test_class_metadata():
    assert CARTAN_DIMENSION["3A1"] == 3
    assert CARTAN_DIMENSION["sl2R"] == 1
    assert set(CARTAN_DIMENSION) == {
        "3A1", "A2.1+A1", "A3.1", "A3.2", "A3.3", "A3.4", "A3.5", "sl2R", "so3"}
    assert DEFINITE_SEARCH_BUDGET >= 10 ** 6
