"""Offenders, Thompson subgroups, and solitary offenders.

Throughout, ``act`` is a faithful action of a finite group G on an abelian
p-group D.  An abelian p-subgroup A of G is an offender when
|A||C_D(A)| >= |D|, and a best offender when |A||C_D(A)| >= |B||C_D(B)|
for every B <= A.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError, ValidationError
from .modaction import (commutator_subgroup, even_subset_action, fixed_points,
                        is_invariant, is_quadratic, omega1, span)
from .permgroup import (Group, conjugacy_class, cyclic_subgroup, generate, intersection,
                        join, pcore, subgroup_class, subgroups_of_pgroup, sylow_subgroup,
                        symmetric_group, trivial_group)

NATURAL_MODULE_CAP = 9


def offender_value(act, A):
    return A.order * len(fixed_points(act, A))


def is_offender(act, A):
    return A.is_abelian() and offender_value(act, A) >= act.module.order


def is_best_offender(act, A):
    if not is_offender(act, A):
        return False
    value = offender_value(act, A)
    return all(value >= offender_value(act, B) for B in subgroups_of_pgroup(A))


def _require_faithful(act):
    if not act.is_faithful():
        raise ValidationError("action is not faithful")


def abelian_p_subgroups(G, p, S=None):
    """All abelian p-subgroups of G, grouped by conjugacy class.

    Returns a list of classes; each class is a list of subgroups in the
    global subgroup order, and the classes are ordered by their first member.
    """
    if S is None:
        S = sylow_subgroup(G, p)
    seen = set()
    classes = []
    for H in subgroups_of_pgroup(S):
        if H.elements in seen or not H.is_abelian():
            continue
        cls = subgroup_class(G, H)
        seen.update(K.elements for K in cls)
        classes.append(cls)
    classes.sort(key=lambda c: c[0].key)
    return classes


@dataclass
class OffenderReport:
    subgroup: Group
    size: int
    fixed_size: int
    defect: Fraction
    best: bool = True
    over: bool = False
    minimal: bool = False
    quadratic: bool = False
    solitary: bool = False
    semisolitary: bool = False

    @property
    def flags(self):
        return {name: getattr(self, name) for name in
                ("best", "over", "minimal", "quadratic", "solitary", "semisolitary")}


def best_offenders(act, with_solitary=True):
    """All nontrivial best offenders with their flags, in the global subgroup order."""
    _require_faithful(act)
    p = act.prime
    G = act.group
    order_D = act.module.order
    S = sylow_subgroup(G, p)
    solitary = set()
    semisolitary = set()
    if with_solitary and p == 2:
        solitary = {T.elements for T in solitary_subgroups(act, S)}
        semisolitary = {T.elements for T in semisolitary_subgroups(act, S)}
    reports = []
    for cls in abelian_p_subgroups(G, p, S):
        rep = cls[0]
        if rep.order == 1 or not is_best_offender(act, rep):
            continue
        fixed = len(fixed_points(act, rep))
        value = rep.order * fixed
        minimal = not any(B.order > 1 and B != rep and is_best_offender(act, B)
                          for B in subgroups_of_pgroup(rep))
        quad = is_quadratic(act, rep)
        for A in cls:
            reports.append(OffenderReport(
                subgroup=A, size=A.order, fixed_size=fixed,
                defect=Fraction(value, order_D), best=True, over=value > order_D,
                minimal=minimal, quadratic=quad,
                solitary=A.elements in solitary, semisolitary=A.elements in semisolitary))
    reports.sort(key=lambda r: r.subgroup.key)
    return reports


@dataclass
class OffenderCollections:
    """The collections of best offenders used in the norm arguments."""
    best: list
    over: list
    minimal: list
    order_two: list
    minimal_over: list

    @property
    def minimal_ge4(self):
        return [A for A in self.minimal if A.order >= 4]

    @property
    def control_collection(self):
        """Minimal best offenders of order >= 4 together with the minimal over-offenders."""
        seen = {}
        for A in self.minimal_ge4 + self.minimal_over:
            seen.setdefault(A.elements, A)
        return sorted(seen.values(), key=lambda A: A.key)


def offender_collections(act):
    reports = best_offenders(act, with_solitary=False)
    best = [r.subgroup for r in reports]
    over = [r.subgroup for r in reports if r.over]
    over_sets = {A.elements for A in over}
    minimal_over = [A for A in over
                    if not any(B.elements in over_sets and B != A for B in subgroups_of_pgroup(A))]
    return OffenderCollections(
        best=best, over=over,
        minimal=[r.subgroup for r in reports if r.minimal],
        order_two=[A for A in best if A.order == 2],
        minimal_over=minimal_over)


def replacement(act, A):
    """A minimal nontrivial B <= A with |B||C_D(B)| >= |A||C_D(A)|.

    Such a B is a quadratic best offender; this is checked before returning.
    """
    if A.order == 1 or not is_offender(act, A):
        raise ValidationError("input is not a nontrivial offender")
    value = offender_value(act, A)
    candidates = [B for B in subgroups_of_pgroup(A)
                  if B.order > 1 and offender_value(act, B) >= value]
    cand_sets = [B.elements for B in candidates]
    minimal = [B for B in candidates
               if not any(C < B.elements for C in cand_sets)]
    B = min(minimal, key=lambda H: H.key)
    if not is_best_offender(act, B) or not is_quadratic(act, B):
        raise ConsistencyError("replacement did not yield a quadratic best offender")
    return B


def check_invariant_collection(collection, G):
    sets = {A.elements for A in collection}
    for A in collection:
        for g in G.gens:
            if frozenset(x ^ g for x in A.elements) not in sets:
                raise ValidationError("collection is not invariant under conjugation")


def thompson_subgroup(collection, H, G=None):
    """J(H) = <A in collection : A <= H>; validates G-invariance when G is given."""
    if G is not None:
        check_invariant_collection(collection, G)
    J = trivial_group(H.degree)
    for A in collection:
        if A <= H:
            J = join(J, A)
    return J


def thompson_preimage(collection, H, quotient):
    """J(H, D): the preimage in H of J(image of H) under Gamma -> Gamma/C(D)."""
    Hbar = quotient.image(H)
    Jbar = thompson_subgroup(collection, Hbar)
    return intersection(H, quotient.preimage(Jbar))


# -- solitary offenders ---------------------------------------------------

def order_two_offenders(act, H):
    """Members of A_D(G)_2 inside H: <a> with a an involution and |D : C_D(a)| = 2."""
    out = []
    target = act.module.order // 2
    for a in H.sorted_elements:
        if a.order() == 2 and len(fixed_points(act, [a])) == target:
            out.append(cyclic_subgroup(a))
    return sorted(out, key=lambda A: A.key)


def _check_order_two_member(act, T, S):
    if act.prime != 2:
        raise ValidationError("solitary offenders are defined for p = 2 only")
    if T.order != 2 or not T <= S:
        raise ValidationError("T must be a subgroup of order 2 inside S")
    if len(fixed_points(act, T)) * 2 != act.module.order:
        raise ValidationError("T is not in A_D(G)_2")


def _generated(degree, groups):
    J = trivial_group(degree)
    for A in groups:
        J = join(J, A)
    return J


@dataclass
class SolitaryWitness:
    T: Group
    L: Group
    J: Group
    complement: Group


def is_solitary(act, T, S):
    """A witness that T is solitary in G relative to the Sylow 2-subgroup S, or None."""
    _check_order_two_member(act, T, S)
    G = act.group
    module = act.module
    A_S = order_two_offenders(act, S)
    J = _generated(G.degree, A_S)
    others = _generated(G.degree, [A for A in A_S if A != T])
    t = T.gens[0]
    for u in sorted(conjugacy_class(G, t)):
        if u == t or (t * u).order() != 3:
            continue
        L = Group(G.degree, generate(G.degree, [t, u]), gens=[t, u])
        if L.order != 6:
            continue
        C = Group(G.degree, [j for j in J.elements if j * t == t * j and j * u == u * j])
        if C.order * 2 != J.order or t in C or C != others:
            continue
        DL = commutator_subgroup(act, L)
        CDL = fixed_points(act, L)
        if len(DL) * len(CDL) != module.order or len(DL & CDL) != 1:
            continue
        if len(commutator_subgroup(act, C, DL)) != 1:
            continue
        return SolitaryWitness(T=T, L=L, J=J, complement=C)
    return None


def _index_two_subgroups(module, C):
    """All subgroups of index 2 in the abelian 2-group C (a set of vectors)."""
    phi = frozenset(module.scale(2, v) for v in C)
    phi = span(module, sorted(phi))
    basis = []
    current = phi
    for v in sorted(C):
        if v not in current:
            basis.append(v)
            current = span(module, [v], start=current)
    out = []
    k = len(basis)
    for mask in range(1, 2 ** k):
        f = [(mask >> i) & 1 for i in range(k)]
        pivot = f.index(1)
        gens = [basis[i] for i in range(k) if not f[i]]
        gens += [module.add(basis[i], basis[pivot]) for i in range(k) if f[i] and i != pivot]
        out.append(span(module, gens, start=phi))
    return out


def is_semisolitary(act, T, S0):
    """Witness subgroups (W, X) of D for semisolitarity of T relative to S0, or None."""
    _check_order_two_member(act, T, S0)
    module = act.module
    G = act.group
    A_S0 = order_two_offenders(act, S0)
    J0 = _generated(G.degree, A_S0)
    J1 = _generated(G.degree, [A for A in A_S0 if A != T])
    t = T.gens[0]
    if t in J1 or J0.order != 2 * J1.order or any(t * x != x * t for x in J1.gens):
        return None
    DT = commutator_subgroup(act, T)
    w0 = next(v for v in DT if any(v))
    CT = fixed_points(act, T)
    complements = None
    seen = set()
    for w in sorted(omega1(module)):
        if w in DT:
            continue
        W = span(module, [w0, w])
        if W in seen:
            continue
        seen.add(W)
        if not is_invariant(act, W, J0):
            continue
        if any(act.act(g, v) != v for g in J1.gens for v in W):
            continue
        if complements is None:
            complements = [X for X in _index_two_subgroups(module, CT) if is_invariant(act, X, J0)]
        for X in complements:
            if len(W & X) == 1:
                return W, X
    return None


def solitary_subgroups(act, S=None):
    """The collection T_D(G): members of A_D(G)_2 solitary relative to some Sylow 2-subgroup."""
    _require_faithful(act)
    if act.prime != 2:
        return []
    G = act.group
    if S is None:
        S = sylow_subgroup(G, 2)
    found = {}
    for T in order_two_offenders(act, S):
        if is_solitary(act, T, S) is not None:
            for K in subgroup_class(G, T):
                found[K.elements] = K
    return sorted(found.values(), key=lambda A: A.key)


def semisolitary_subgroups(act, S=None):
    _require_faithful(act)
    if act.prime != 2:
        return []
    G = act.group
    if S is None:
        S = sylow_subgroup(G, 2)
    found = {}
    for T in order_two_offenders(act, S):
        if is_semisolitary(act, T, S) is not None:
            for K in subgroup_class(G, T):
                found[K.elements] = K
    return sorted(found.values(), key=lambda A: A.key)


@dataclass
class Decomposition:
    factors: list = field(default_factory=list)   # (E_i, m_i, V_i)
    residue: frozenset = frozenset()


def solitary_decomposition(act):
    """Split G into odd symmetric groups generated by blocks of solitary offenders."""
    _require_faithful(act)
    if act.prime != 2:
        raise ValidationError("decomposition is defined for p = 2 only")
    G = act.group
    module = act.module
    if pcore(G, 2).order != 1:
        raise ValidationError("O_2(G) is nontrivial")
    tees = solitary_subgroups(act)
    if _generated(G.degree, tees) != G:
        raise ValidationError("G is not generated by its solitary offenders")
    supports = [commutator_subgroup(act, T) for T in tees]
    parent = list(range(len(tees)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(tees)):
        for j in range(i + 1, len(tees)):
            a, b = tees[i].gens[0], tees[j].gens[0]
            if a * b != b * a or supports[i] == supports[j]:
                parent[find(i)] = find(j)
    blocks = {}
    for i in range(len(tees)):
        blocks.setdefault(find(i), []).append(tees[i])
    factors = []
    for block in sorted(blocks.values(), key=lambda b: (len(b), b[0].key)):
        c = len(block)
        m = (1 + math.isqrt(1 + 8 * c)) // 2
        if m * (m - 1) // 2 != c or m % 2 == 0:
            raise ConsistencyError(f"block of {c} solitary offenders is not a transposition class")
        for i, A in enumerate(block):
            for B in block[i + 1:]:
                a, b = A.gens[0], B.gens[0]
                if a * b != b * a and (a * b).order() != 3:
                    raise ConsistencyError("block members do not behave like transpositions")
        E = _generated(G.degree, block)
        if E.order != math.factorial(m):
            raise ConsistencyError(f"block generates a group of order {E.order}, not {m}!")
        V = commutator_subgroup(act, E)
        if len(V) != 2 ** (m - 1):
            raise ConsistencyError("module support has the wrong order")
        factors.append((E, m, V))
    for i, (E, _, V) in enumerate(factors):
        for j, (F, _, _) in enumerate(factors):
            if i == j:
                continue
            if any(x * y != y * x for x in E.gens for y in F.gens):
                raise ConsistencyError("factors do not commute")
            if len(commutator_subgroup(act, F, V)) != 1:
                raise ConsistencyError("a factor acts on another factor's module")
    if math.prod(E.order for E, _, _ in factors) != G.order:
        raise ConsistencyError("factors do not form a direct product equal to G")
    residue = fixed_points(act, G)
    total = residue
    size = len(residue)
    for _, _, V in factors:
        total = span(module, sorted(V), start=total)
        size *= len(V)
    if size != module.order or len(total) != module.order:
        raise ConsistencyError("module does not split as the direct product of supports")
    return Decomposition(factors=factors, residue=residue)


def natural_module_action(m):
    """S_m on the even-size subsets of {1..m}, for odd m >= 3."""
    if m % 2 == 0 or m < 3 or m > NATURAL_MODULE_CAP:
        raise ValidationError(f"natural module needs odd 3 <= m <= {NATURAL_MODULE_CAP}")
    return even_subset_action(symmetric_group(m), [range(m)])
