import pytest

from fusionlim.descriptors import load, parse_descriptor
from fusionlim.errors import ValidationError
from fusionlim.suites import (SUITES, SuiteResult, complementary_splits, invariant_intervals, run_suite,
                              setups_for, suite_les, suite_olijm)
from fusionlim.library import setup as named_setup


def test_suite_names():
    assert list(SUITES) == ["olijm", "quadnorm", "les", "glawc", "oddquadratic", "oddthompson", "ntlim",
                            "thompson2", "replacement", "nooveroffenders", "solitary", "wellplaced",
                            "rigid", "normquot", "restinj"]


def test_unknown_suite():
    with pytest.raises(ValidationError):
        run_suite("nope")


# -- the result type -------------------------------------------------------------

def test_result_needs_a_check_that_ran():
    res = SuiteResult("x")
    assert not res.passed
    res.add("skipped", None)
    assert not res.passed
    res.add("ran", True)
    assert res.passed
    res.add("broke", False, {"why": 1})
    assert not res.passed and [c.label for c in res.failures] == ["broke"]


def test_result_labels_are_unique():
    res = SuiteResult("x")
    for _ in range(3):
        res.add("same", True)
    assert [c.label for c in res.checks] == ["same", "same #2", "same #3"]
    data = res.to_json()
    assert data["suite"] == "x" and data["passed"] and len(data["checks"]) == 3


# -- setups and splits -------------------------------------------------------------

def test_setups_from_subgroup_lines():
    pairs = setups_for(load("a6"))
    assert [label for label, _ in pairs] == ["a6.grp:V4a", "a6.grp:V4b"]
    assert [st.Gamma.order for _, st in pairs] == [24, 24]


def test_setups_need_prime_and_setup():
    with pytest.raises(ValidationError):
        setups_for(parse_descriptor("degree 3\ngen (1 2 3)\n"))
    with pytest.raises(ValidationError):
        setups_for(parse_descriptor("degree 3\ngen (1 2 3)\nprime 3\n"))


@pytest.mark.parametrize("name,splits,intervals", [("s4", 3, 3), ("a6-v4a", 3, 3), ("2^2:s3", 3, 3)])
def test_split_counts(name, splits, intervals):
    st = named_setup(name)
    assert len(complementary_splits(st)) == splits
    assert len(invariant_intervals(st)) == intervals


# -- suites not covered by the acceptance run ------------------------------------------

@pytest.mark.parametrize("name", ["quadnorm", "oddquadratic", "oddthompson", "normquot", "restinj", "ntlim"])
def test_suite_passes(name):
    res = run_suite(name)
    assert res.passed, [c.to_json() for c in res.failures]
    labels = [c.label for c in res.checks]
    assert len(labels) == len(set(labels))


def test_ntlim_applies_to_two_setups():
    res = run_suite("ntlim")
    ran = [c.label for c in res.checks if c.ok is not None]
    assert ran == ["2^4:a5: L^2(R) = 0", "2^3:sl3(2): L^2(R) = 0"]


def test_thompson2_suite():
    res = run_suite("thompson2")
    assert res.passed, [c.to_json() for c in res.failures]
    assert sum(c.ok is True for c in res.checks) >= 7


def test_suites_on_descriptors():
    assert suite_olijm(load("s4")).passed
    res = suite_les(load("a6"))
    assert res.passed and all(c.label.startswith("a6.grp:") for c in res.checks)


def test_module_suite_on_group_descriptor():
    with pytest.raises(ValidationError):
        run_suite("replacement", descriptor=load("s4"))
