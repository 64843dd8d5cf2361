import pytest

from nearness import (
    NA,
    PASS,
    BinaryOpTable,
    FeatureSystem,
    InputError,
    StructuralAnomaly,
    StructureCandidate,
    check_element_props,
    check_ideal,
    check_intersection_theorem,
    check_near_group,
    check_near_semigroup,
    check_nearness_ring,
    check_subnearness_ring,
    classify_units,
)
from nearness.structures import additive_identity, closed_in_upper, is_groupoid, negative

from helpers import cyclic, example, table_structure


@pytest.fixture(scope="module")
def doc():
    return example()


@pytest.fixture(scope="module")
def R(doc):
    return doc.structure("R")


def test_tables_match_printed_restrictions(doc):
    for name, tables in doc.expected_tables["restrictions"].items():
        sub = doc.structure(name)
        for which, want in tables.items():
            assert [[str(c) for c in row] for row in sub.op(which).to_matrix(sub.order)] == want


def test_table_three_keeps_repeated_entries(doc):
    add = doc.table("add")
    assert add("v", "s") == "p" and add("v", "t") == "p"


def test_universe_is_not_a_group(doc):
    rep = check_near_group(doc.structure("O"), "add")
    assert rep.verdicts["NG2"] == "fail"
    assoc = [c for c in rep.failures("NG2") if c.kind == "equality"]
    assert len(assoc) == 26
    assert assoc[0].elements == ("p", "t", "s")
    rss = next(c for c in assoc if c.elements == ("r", "s", "s"))
    assert rss.values == ("p", "o")
    assert rep.audit["NG2"] == {"equality": "fail", "membership": "pass"}


def test_first_mode_stops_early(doc):
    rep = check_near_group(doc.structure("O"), "add", first=True)
    assert len(rep.counterexamples) == 1
    assert rep.counterexamples[0].elements == ("p", "t", "s")


def test_near_group_on_R(R):
    rep = check_near_group(R, "add")
    assert rep.ok and rep.passed("abelian")
    assert rep.witnesses["identity"] == "o"
    assert rep.witnesses["inverses"] == {"r": "w", "t": "t", "w": "r"}


def test_near_group_on_cyclic_group():
    rep = check_near_group(cyclic(2), "add")
    assert rep.ok and rep.witnesses["identity"] == 0


def test_singleton_near_semigroup(doc):
    rep = check_near_semigroup(doc.structure("O").restrict({"o"}), "add")
    assert rep.ok


def test_identity_anomaly_raised():
    fs = FeatureSystem([0, 1], {"f": {0: "x", 1: "x"}})
    add = BinaryOpTable("+", {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 1})
    G = StructureCandidate(fs, {0}, add, None, "G")
    with pytest.raises(StructuralAnomaly):
        check_near_group(G)
    rep = check_near_group(G, anomalies="report")
    assert rep.ok and rep.anomalies


def test_nearness_ring(R):
    rep = check_nearness_ring(R)
    assert [rep.verdicts[k] for k in ("NR1", "NR2", "NR3", "NR4", "NR5")] == [
        PASS, PASS, PASS, PASS, "fail"]
    assert rep.ok
    assert rep.witnesses["zero"] == "o"
    assert rep.witnesses["upper"] == ["o", "r", "t", "w"]
    assert rep.audit["NR3"] == {"equality": PASS, "membership": PASS}


def test_ring_requires_both_tables(doc):
    R = doc.structure("R")
    with pytest.raises(InputError):
        check_nearness_ring(StructureCandidate(R.space, R.carrier, R.add, None))


def test_additive_helpers(R):
    assert additive_identity(R) == "o"
    assert negative(R, "r") == "w" and negative(R, "t") == "t"
    assert closed_in_upper(R, "mul").ok
    assert is_groupoid(R.upper, R.add)


def test_subring_and_ideal(doc, R):
    S = doc.subset("S")
    sub = check_subnearness_ring(S, R, "S")
    assert sub.verdicts["subring"] == PASS
    assert sub.children["cross_check"].ok and not sub.anomalies
    ideal = check_ideal(S, R, "both", "S")
    assert ideal.ok and set(ideal.verdicts) == {"difference", "left", "right"}
    assert check_ideal(S, R, "left", "S").ok


def test_subring_not_applicable(doc, R):
    rep = check_subnearness_ring({"t"}, R, "T")
    assert rep.verdicts["subring"] == NA
    assert rep.counterexamples[0].elements == ("r", "t")


def test_subset_validation(R):
    with pytest.raises(InputError):
        check_subnearness_ring({"p"}, R)
    with pytest.raises(InputError):
        check_ideal(set(), R)
    with pytest.raises(InputError):
        check_ideal({"r"}, R, side="middle")


def test_element_props_not_applicable(R):
    rep = check_element_props(R)
    assert set(rep.verdicts.values()) == {NA}


def test_element_props_on_ordinary_ring():
    rep = check_element_props(cyclic(4))
    assert rep.ok and len(rep.verdicts) == 3


def test_units():
    z4 = classify_units(cyclic(4))
    assert z4.witnesses["units"] == [1, 3]
    assert z4.verdicts["division_ring"] == "fail"
    z2 = classify_units(cyclic(2))
    assert z2.passed("division_ring") and z2.passed("field")
    assert classify_units(cyclic(5)).passed("field")


def test_units_not_applicable(R):
    rep = classify_units(R)
    assert rep.verdicts == {"division_ring": NA, "field": NA}
    assert rep.witnesses["units"] == []


def test_intersection_theorem(doc, R):
    assert check_intersection_theorem([R.carrier, doc.subset("S")], R).passed("intersection")
    assert check_intersection_theorem([{"r"}, {"w"}], R).verdicts["intersection"] == NA
    z4 = cyclic(4)
    rep = check_intersection_theorem([{0, 2}, {0, 1, 2, 3}], z4, "ideal")
    assert rep.passed("intersection")


def test_ideal_implies_subring_in_discrete_z4():
    for I in ({0}, {0, 2}, {0, 1, 2, 3}, {1, 3}):
        R = cyclic(4)
        if check_ideal(I, R).ok:
            assert check_subnearness_ring(I, R).ok


def test_ideal_need_not_be_subring():
    # one indiscernibility class: upper(I) is everything, yet -0 = 1 is outside I
    add = [[1, 2, 0, 0], [2, 0, 1, 1], [0, 1, 2, 2], [0, 0, 3, 3]]
    mul = [[0, 1, 2, 1], [1, 0, 2, 0], [2, 2, 2, 3], [0, 2, 1, 1]]
    R = table_structure(range(4), add, mul, {"f": dict.fromkeys(range(4), 0)}, {0, 1, 2})
    assert check_nearness_ring(R).ok
    assert check_ideal({0, 2}, R).ok
    assert check_subnearness_ring({0, 2}, R).verdicts["subring"] == "fail"


def test_report_serialises(R):
    data = check_nearness_ring(R).to_dict()
    assert data["verdicts"]["NR5"] == "fail"
    assert data["children"]["NR1"]["witnesses"]["identity"] == "o"


def test_table_validation():
    with pytest.raises(InputError) as info:
        BinaryOpTable.from_matrix("add", "ab", [["a", "b"], ["a"]])
    assert info.value.path == "operations.add[1]"
    with pytest.raises(InputError) as info:
        BinaryOpTable.from_matrix("add", "ab", [["a", "b"], ["a", "c"]])
    assert info.value.path == "operations.add[1][1]"
    with pytest.raises(InputError):
        table_structure([0], [[0]], [[0]], {"f": {0: 0}}, set())
