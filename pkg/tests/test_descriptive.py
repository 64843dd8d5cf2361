import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nearness import (
    FeatureSystem,
    ResourceError,
    descriptive_intersection,
    family_upper_approx,
    is_descriptively_near,
    nearness_collection,
    set_description,
)
from nearness.descriptive import near_pairing, powerset

import oracle
from helpers import example


@pytest.fixture(scope="module")
def system():
    return example().system


def test_set_description(system):
    assert set_description(system, {"r"}) == {("a1", "b2")}
    assert set_description(system, {"o", "r", "w"}) == {("a1", "b2"), ("a4", "b1")}
    assert set_description(system, set()) == set()


def test_descriptive_intersection(system):
    assert descriptive_intersection(system, {"r"}, {"t"}) == {"r", "t"}
    assert descriptive_intersection(system, {"o"}, {"p"}) == set()
    assert descriptive_intersection(system, {"o", "p"}, {"o", "p"}) == {"o", "p"}


def test_nearness(system):
    assert is_descriptively_near(system, {"r"}, {"o", "r", "w"})
    assert is_descriptively_near(system, {"v"}, {"v"})
    assert not is_descriptively_near(system, {"o"}, {"p"})


def test_nearness_collection(system):
    coll = nearness_collection(system, {"r"}, [{"r"}, {"t"}, {"o"}, {"o", "r", "w"}])
    assert coll.members == {frozenset("r"), frozenset("t"), frozenset("orw")}
    everything = nearness_collection(system, {"o"})
    assert frozenset("o") in everything.members
    assert len(everything.members) == 2 ** 8 - 2 ** 6


def test_near_pairing(system):
    partner, shared = near_pairing(system, {"o", "r", "w"}, [{"p"}, {"r", "t"}])
    assert partner == {"r", "t"} and shared == {("a1", "b2")}
    assert near_pairing(system, {"o"}, [{"p"}]) is None


def test_powerset_bound(monkeypatch):
    fs = FeatureSystem(range(5), {"f": dict.fromkeys(range(5), 0)})
    assert len(powerset(fs)) == 32
    monkeypatch.setenv("NEARNESS_POWERSET_MAX", "4")
    with pytest.raises(ResourceError):
        powerset(fs)
    with pytest.raises(ResourceError):
        family_upper_approx(fs, [{0}])


@st.composite
def cases(draw):
    n = draw(st.integers(1, 6))
    k = draw(st.integers(1, 2))
    features = {f"f{i}": {x: draw(st.integers(0, 2)) for x in range(n)} for i in range(k)}
    subsets = st.frozensets(st.integers(0, n - 1))
    A, B = draw(subsets), draw(subsets)
    family = draw(st.lists(subsets, max_size=3))
    bigger = family + draw(st.lists(subsets, max_size=2))
    return list(range(n)), features, A, B, family, bigger


@settings(max_examples=120, deadline=None)
@given(cases())
def test_properties_against_oracle(case):
    objs, features, A, B, family, bigger = case
    fs = FeatureSystem(objs, features)
    assert is_descriptively_near(fs, A, B) == is_descriptively_near(fs, B, A)
    assert is_descriptively_near(fs, A, B) == oracle.near(features, A, B)
    if A:
        assert is_descriptively_near(fs, A, A)
    assert descriptive_intersection(fs, A, A) == A
    every = oracle.powerset(objs)
    assert family_upper_approx(fs, family) == oracle.family_upper(objs, features, family, every)
    assert family_upper_approx(fs, family, every) <= family_upper_approx(fs, bigger, every)
