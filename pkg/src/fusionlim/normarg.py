"""Hypothesis checkers for the norm arguments controlling fixed points.

Both theorems conclude that a p-local subgroup H controls the fixed points
of G on D, i.e. C_D(H) = C_D(G).  The checkers below evaluate every
hypothesis by brute force and report the conclusion separately, so a
caller can see whether a theorem applies and whether its conclusion holds.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .modaction import (composition_series, fixed_points, is_quadratic, norm_is_trivial_on_section,
                        omega1, right_coset_reps)
from .permgroup import Group, intersection, join, normalizer, subgroups_of_pgroup, sylow_subgroup


@dataclass
class NormCheck:
    hypotheses: bool
    conclusion: bool
    J: Group
    H: Group
    failures: list = field(default_factory=list)


def is_weakly_closed_in(G, S, J):
    """J^g <= S implies J^g = J, for every g in G."""
    N = normalizer(G, J)
    for g in right_coset_reps(G, N):
        K = J.conjugate(g)
        if K <= S and K != J:
            return False
    return True


def _generated(collection, degree):
    J = None
    for A in collection:
        J = A if J is None else join(J, A)
    return J


def composition_factors(act):
    series = composition_series(act)
    return [(series[i], series[i + 1]) for i in range(len(series) - 1)]


def normcond_failures(act, collection, S, factors=None):
    """Violations of: A not in S^g implies the norm from A ∩ S^g to A is 1 on every factor."""
    G = act.group
    if factors is None:
        factors = composition_factors(act)
    out = []
    reps = right_coset_reps(G, S)
    for A in collection:
        for g in reps:
            K = intersection(A, S.conjugate(g))
            if K == A:
                continue
            for i, (lower, upper) in enumerate(factors):
                if not norm_is_trivial_on_section(act, K, A, lower, upper):
                    out.append((A, g, i))
    return out


def normcond2_failures(act, collection, H):
    """Violations of: A not in H^g implies the norm from A ∩ H^g to A is 1 on Omega_1(D)."""
    G = act.group
    V = omega1(act.module, act._elements)
    zero = frozenset([act.module.zero])
    out = []
    for g in right_coset_reps(G, H):
        Hg = H.conjugate(g)
        for A in collection:
            K = intersection(A, Hg)
            if K == A:
                continue
            if not norm_is_trivial_on_section(act, K, A, zero, V):
                out.append((A, g))
    return out


def check_glawc(act, collection, S=None):
    """Hypotheses and conclusion C_D(N_G(J)) = C_D(G) for J = <collection>."""
    G = act.group
    if S is None:
        S = sylow_subgroup(G, act.prime)
    if not collection:
        raise ValidationError("the collection must be nonempty")
    if any(not A <= S for A in collection):
        raise ValidationError("every member of the collection must lie in S")
    J = _generated(collection, G.degree)
    failures = []
    if not is_weakly_closed_in(G, S, J):
        failures.append("J is not weakly closed in S")
    for A, g, i in normcond_failures(act, collection, S):
        failures.append(f"norm from A ∩ S^g to A is nontrivial on factor {i} (A of order {A.order}, g={g})")
    H = normalizer(G, J)
    conclusion = fixed_points(act, H) == fixed_points(act, G)
    return NormCheck(not failures, conclusion, J, H, failures)


def check_glawc2(act, collection, S=None, H=None, general=False):
    """The p = 2 form: V = Omega_1(D), any H containing N_G(J); conclusion C_D(H) = C_D(G).

    With ``general=True`` the norm condition is checked for J itself instead
    of for each member of the collection.
    """
    G = act.group
    if act.prime != 2:
        raise ValidationError("this form of the norm argument is for p = 2")
    if S is None:
        S = sylow_subgroup(G, 2)
    if not collection:
        raise ValidationError("the collection must be nonempty")
    if any(not A <= S for A in collection):
        raise ValidationError("every member of the collection must lie in S")
    J = _generated(collection, G.degree)
    NJ = normalizer(G, J)
    if H is None:
        H = NJ
    if not NJ <= H:
        raise ValidationError("H does not contain N_G(J)")
    failures = []
    if not is_weakly_closed_in(G, S, J):
        failures.append("J is not weakly closed in S")
    members = [J] if general else collection
    for A, g in normcond2_failures(act, members, H):
        failures.append(f"norm from A ∩ H^g to A is nontrivial on Omega_1(D) (A of order {A.order}, g={g})")
    conclusion = fixed_points(act, H) == fixed_points(act, G)
    return NormCheck(not failures, conclusion, J, H, failures)


def quadnorm_cases(act, S=None):
    """Check the quadratic norm vanishing statements on all pairs A0 <= A <= S.

    Returns (checked, failures) where failures lists (A, A0, case).
    """
    if not act.module.is_elementary():
        raise ValidationError("module must be elementary abelian")
    p = act.prime
    G = act.group
    if S is None:
        S = sylow_subgroup(G, p)
    zero = frozenset([act.module.zero])
    V = frozenset(act._elements)
    checked = 0
    failures = []
    for A in subgroups_of_pgroup(S):
        quad = is_quadratic(act, A)
        CA = fixed_points(act, A)
        for A0 in subgroups_of_pgroup(A):
            index = A.order // A0.order
            cases = []
            if p != 2 and quad and index > 1:
                cases.append("odd-quadratic")
            if p == 2 and index >= 2 and fixed_points(act, A0) == CA:
                cases.append("same-fixed")
            if p == 2 and index >= 4 and quad:
                cases.append("index4-quadratic")
            if not cases:
                continue
            checked += 1
            if not norm_is_trivial_on_section(act, A0, A, zero, V):
                failures.extend((A, A0, c) for c in cases)
    return checked, failures
