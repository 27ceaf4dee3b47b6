import pytest

import oracles
from fusionlim.errors import ValidationError
from fusionlim.library import GLAWC_INSTANCES, module_action, subgroup_of
from fusionlim.modaction import PAbelianGroup, linear_action
from fusionlim.normarg import (check_glawc, check_glawc2, is_weakly_closed_in, normcond_failures,
                               quadnorm_cases)
from fusionlim.offenders import natural_module_action, offender_collections
from fusionlim.permgroup import cyclic_subgroup, sylow_subgroup, symmetric_group, trivial_group


def brute_fixed(act, H):
    mats = [act.matrix(g) for g in H.gens]
    return set(oracles.fixed_vectors(mats, act.module.cyclic_orders))


def library_check(name, theorem):
    act = module_action(name)
    S = sylow_subgroup(act.group, act.prime)
    cols = offender_collections(act)
    if theorem == "glawc":
        collection = [A for A in cols.minimal if A <= S]
        return act, collection, check_glawc(act, collection, S)
    collection = [A for A in cols.control_collection if A <= S]
    return act, collection, check_glawc2(act, collection, S)


def test_library_has_enough_instances():
    assert len(GLAWC_INSTANCES) >= 10
    assert {t for _, t in GLAWC_INSTANCES} == {"glawc", "glawc2"}


@pytest.mark.parametrize("name,theorem", GLAWC_INSTANCES)
def test_library_instance(name, theorem):
    act, collection, report = library_check(name, theorem)
    assert collection
    assert report.hypotheses, report.failures
    assert report.conclusion
    # the conclusion again, with fixed points found by enumeration
    assert brute_fixed(act, report.H) == brute_fixed(act, act.group)
    assert all(A <= report.J for A in collection)


@pytest.mark.parametrize("name,J,H", [
    ("sl2(3)", 3, 6), ("gl2(3)", 3, 12), ("sl2(5)", 5, 20),
    ("sl3(2)", 4, 24), ("sl2(4)", 4, 12), ("a6-even", 4, 24), ("s6-even", 8, 48),
])
def test_library_subgroup_orders(name, J, H):
    theorem = dict(GLAWC_INSTANCES)[name]
    _, _, report = library_check(name, theorem)
    assert (report.J.order, report.H.order) == (J, H)


def test_transpositions_fail_the_hypotheses():
    # in S5 on its natural module the transposition subgroups of S are not weakly closed
    # and the norm condition fails; the conclusion fails too
    act = natural_module_action(5)
    S = sylow_subgroup(act.group, 2)
    ts = [cyclic_subgroup(x) for x in S.sorted_elements if x.order() == 2 and len(x.cycles()) == 1]
    assert len(ts) == 2
    for check in (check_glawc, check_glawc2):
        report = check(act, ts, S)
        assert not report.hypotheses and report.failures
        assert not report.conclusion
        assert brute_fixed(act, report.H) != brute_fixed(act, act.group)


def test_weak_closure():
    G = symmetric_group(4)
    S = sylow_subgroup(G, 2)
    assert is_weakly_closed_in(G, S, S)
    t = next(x for x in S.sorted_elements if len(x.cycles()) == 1 and x.order() == 2)
    assert not is_weakly_closed_in(G, S, cyclic_subgroup(t))
    # the normal four group is weakly closed
    V = subgroup_of(4, "(1,2)(3,4)", "(1,3)(2,4)")
    assert is_weakly_closed_in(G, S, V)


def test_norm_condition_holds_for_the_sylow_itself():
    act = module_action("sl2(3)")
    S = sylow_subgroup(act.group, 3)
    # A = S: the intersection with a different Sylow is trivial and the norm is the full trace
    fails = normcond_failures(act, [S], S)
    assert fails == []


def test_check_errors():
    act = module_action("sl2(3)")
    S = sylow_subgroup(act.group, 3)
    with pytest.raises(ValidationError):
        check_glawc(act, [], S)
    with pytest.raises(ValidationError):
        check_glawc2(act, [S], S)
    # the minimal offenders in another Sylow 3-subgroup
    other = next(A for A in offender_collections(act).minimal if not A <= S)
    with pytest.raises(ValidationError):
        check_glawc(act, [other], S)
    act2 = module_action("sl3(2)")
    S2 = sylow_subgroup(act2.group, 2)
    coll = [A for A in offender_collections(act2).control_collection if A <= S2]
    with pytest.raises(ValidationError):
        check_glawc2(act2, coll, S2, H=trivial_group(act2.group.degree))


# -- quadratic norms ----------------------------------------------------------------

@pytest.mark.parametrize("name,count", [
    ("sl2(3)", 1), ("gl2(3)", 1), ("sl2(5)", 1), ("borel(5)", 1), ("s3-mod3", 1),
    ("sl3(2)", 7), ("sl2(4)", 4), ("sigmal2(4)", 6), ("a6-even", 6), ("s6-even", 66),
    ("s3-natural", 0),
])
def test_quadnorm_cases(name, count):
    checked, failures = quadnorm_cases(module_action(name))
    assert checked == count
    assert failures == []


def test_quadnorm_needs_elementary_module():
    D = PAbelianGroup(2, (4,))
    act = linear_action(D, [[[3]]])
    with pytest.raises(ValidationError):
        quadnorm_cases(act)
