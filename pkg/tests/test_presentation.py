"""Presentation documents: loading, validation, classification, consistency."""

import os

import pytest

from conftest import ALGEBRA_DIR, algebra_path
from skewpbw.presentation import (
    PresentationError,
    check_pbw_consistency,
    classify,
    load_presentation,
    load_presentation_file,
    presentation_hash,
    serialize_presentation,
)

WITTEN_DOC = """
field: Q
vars: x, y, z
relation: y*x = 2*x*y
relation: z*x = x*z - x
relation: z*y = y*z + 2*y
"""


def test_load_witten_constants(QQ):
    P = load_presentation(WITTEN_DOC)
    assert P.names == ("x", "y", "z")
    r01, r02, r12 = P.relations[(0, 1)], P.relations[(0, 2)], P.relations[(1, 2)]
    assert r01.c == QQ.from_int(2) and r01.is_trivial_lower()
    assert r02.c == QQ.one
    assert r02.linear[0] == QQ.from_int(-1)
    assert r02.linear[1].is_zero() and r02.linear[2].is_zero()
    assert r12.c == QQ.one and r12.linear[1] == QQ.from_int(2)


def test_load_commutative_defaults(QQ):
    P = load_presentation("field: Q\nvars: x, y, z\n")
    assert all(
        rel.c == QQ.one and rel.is_trivial_lower()
        for rel in P.relations.values()
    )
    assert classify(P).quasi_commutative


def test_zero_constant_rejected():
    with pytest.raises(PresentationError, match="nonzero"):
        load_presentation("field: Q\nvars: x, y\nrelation: y*x = 0*x*y + 1\n")


def test_unknown_variable_rejected():
    with pytest.raises(PresentationError):
        load_presentation("field: Q\nvars: x, y\nrelation: y*w = x*y\n")
    with pytest.raises(PresentationError):
        load_presentation("field: Q\nvars: x, y\nrelation: y*x = x*y + w\n")


def test_bad_relation_shape_rejected():
    with pytest.raises(PresentationError):
        load_presentation("field: Q\nvars: x, y\nrelation: y*x = x^2*y\n")
    with pytest.raises(PresentationError):
        load_presentation("field: Q\nvars: x, y\nrelation: x*y = y*x\n")


def test_reserved_symbol_collision():
    with pytest.raises(PresentationError, match="collides"):
        load_presentation("field: Q(i)\nvars: i, y\n")
    # fine over the rationals
    load_presentation("field: Q\nvars: z, w\n")


def test_serialize_roundtrip():
    for name in os.listdir(ALGEBRA_DIR):
        P = load_presentation_file(algebra_path(name))
        Q = load_presentation(serialize_presentation(P))
        assert serialize_presentation(Q) == serialize_presentation(P)
        assert presentation_hash(Q) == presentation_hash(P)
        assert Q.names == P.names and Q.relations == P.relations


def test_classify_examples(witten, qspace3, comm2):
    flags = classify(witten)
    assert not flags.quasi_commutative and flags.bijective
    assert classify(qspace3).quasi_commutative
    assert classify(comm2).quasi_commutative and classify(comm2).bijective


def test_consistency_shipped_algebras():
    for name in os.listdir(ALGEBRA_DIR):
        P = load_presentation_file(algebra_path(name))
        report = check_pbw_consistency(P, 4)
        assert report.consistent, f"{name}: {report.failure}"
        assert classify(P).bijective


def test_consistency_flags_mutated_witten():
    mutated = load_presentation(
        "field: Q\nvars: x, y, z\n"
        "relation: y*x = 2*x*y\n"
        "relation: z*x = x*z - x\n"
        "relation: z*y = y*z + 2*x\n"
    )
    report = check_pbw_consistency(mutated, 4)
    assert not report.consistent
    assert report.failure is not None


def test_consistency_degree_bound_validation(witten):
    with pytest.raises(PresentationError):
        check_pbw_consistency(witten, 2)
