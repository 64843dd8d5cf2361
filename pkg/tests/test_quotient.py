import warnings

import pytest

from nearness import (
    ClosureError,
    CosetSpace,
    InputError,
    PreconditionError,
    build_quotient_ring,
    check_quotient_hypothesis,
    coset_family,
    coset_product,
    coset_sum,
    weak_coset,
)

import oracle
from helpers import as_dicts, cyclic, example, fixture_doc


@pytest.fixture(scope="module")
def doc():
    return example()


@pytest.fixture(scope="module")
def R(doc):
    return doc.structure("R")


@pytest.fixture(scope="module")
def S(doc):
    return doc.subset("S")


def test_coset_members(R, S):
    assert weak_coset("r", S, R).members == {"r", "t"}
    assert weak_coset("t", S, R).members == {"r", "t", "w"}
    assert weak_coset("w", S, R).members == {"t", "w"}
    assert weak_coset("o", S, R).members == {"o", "r", "w"}
    assert str(weak_coset("o", S, R)) == "o+S"


def test_coset_input_errors(R, S):
    with pytest.raises(InputError):
        weak_coset("p", S, R)
    with pytest.raises(InputError):
        weak_coset("r", {"p"}, R)


def test_families(R, S):
    fam = coset_family(R, S)
    assert fam.representatives == ["r", "t", "w"]
    ext = coset_family(R, S, extended=True)
    assert ext.representatives == ["o", "r", "t", "w"]
    assert ext.coset("o").members == {"o", "r", "w"}
    assert ext.duplicates() == []
    with pytest.warns(UserWarning):
        coset_family(R, {"t"}, sub_name="T")


def test_coset_operations(R, S):
    space = CosetSpace(R, S)
    r, t, w = (space.coset(x) for x in "rtw")
    assert coset_sum(r, t) == space.coset("w")
    assert coset_product(t, t) == space.coset("o")
    with pytest.raises(ClosureError):
        coset_sum(space.coset("p"), space.coset("o"))


def test_representative_arithmetic(R, S):
    space = CosetSpace(R, S)
    for x in R.upper_order:
        for y in R.upper_order:
            for op, combine in ((R.add, coset_sum), (R.mul, coset_product)):
                z = op(x, y)
                if z in R.upper:
                    got = combine(space.coset(x), space.coset(y))
                    assert got.members == weak_coset(z, S, R).members
    for c in space.objects:
        assert c.members <= R.carrier | {c.representative}


def test_quotient_hypothesis(R, S):
    rep = check_quotient_hypothesis(R, S)
    assert rep.ok
    assert rep.witnesses["pairings"]["o+S"] == {"near": "r+S", "shared": [("a1", "b2")]}


def test_quotient_hypothesis_failure():
    doc = fixture_doc("hypothesis_fails.json")
    R = doc.structure("R")
    rep = check_quotient_hypothesis(R, doc.subset("S"))
    assert rep.verdicts["inclusion"] == "fail"
    assert rep.counterexamples[0].elements[0].label == "u+S"
    with pytest.raises(PreconditionError):
        build_quotient_ring(R, doc.subset("S"))


def test_hypothesis_with_whole_carrier(R):
    assert check_quotient_hypothesis(R, R.carrier).ok


def test_quotient_tables(doc, R, S):
    q = build_quotient_ring(R, S)
    expected = doc.expected_tables["quotients"]["R/S"]
    assert q.labels == ["r+S", "t+S", "w+S"]
    assert q.label_table("add") == expected["add"]
    assert q.label_table("mul") == expected["mul"]
    assert q.report.ok
    assert q.report.witnesses["zero"].label == "o+S"
    assert q.report.witnesses["label"] == "R/_wS"
    assert not q.report.anomalies


def test_quotient_powerset_candidates(R, S):
    q = build_quotient_ring(R, S, candidates="powerset")
    assert q.report.ok
    assert q.label_table("add")[0] == ["t+S", "w+S", "o+S"]


def test_quotient_by_whole_carrier(R):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        q = build_quotient_ring(R, R.carrier, sub_name="R")
    assert q.report.ok


@pytest.mark.parametrize("n,ideal", [(4, {0, 2}), (6, {0, 3}), (6, {0, 2, 4}), (8, {0, 4}), (8, {0, 2, 4, 6})])
def test_classical_quotients(n, ideal):
    R = cyclic(n)
    q = build_quotient_ring(R, ideal)
    assert q.report.ok
    add, mul = as_dicts(R)
    classes, qadd, qmul = q.collapsed()
    classical = {oracle.weak_coset(x, ideal, R.carrier, add) for x in R.carrier}
    assert set(classes) == classical
    assert len(classes) == n // len(ideal)
    for i, a in enumerate(classes):
        for j, b in enumerate(classes):
            x, y = min(a), min(b)
            assert classes[qadd[i][j]] == oracle.weak_coset(add[x, y], ideal, R.carrier, add)
            assert classes[qmul[i][j]] == oracle.weak_coset(mul[x, y], ideal, R.carrier, add)
