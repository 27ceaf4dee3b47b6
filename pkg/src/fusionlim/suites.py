"""Named theorem-check suites.

Each suite evaluates a family of exact statements on desk-scale examples
and returns a SuiteResult listing every individual check.  A check is
``ok=True`` when the statement held, ``ok=False`` when it failed (with the
counterexample in ``detail``) and ``ok=None`` when it was skipped because a
resource cap was hit.  A suite passes when no check failed and at least one
check ran.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded, ValidationError
from .fusion import (FusionSystem, collection_functor, identity_functor, is_conjugation_family,
                     make_setup, normalizer_image_check, offender_interval, overgroup_collection,
                     setup_thompson_functor, thompson_functor, validate_interval, well_placed)
from .library import (GLAWC_INSTANCES, MODULES, SETUPS, module_action, setup as named_setup)
from .modaction import abelian_basis, fixed_points, subgroup_elements
from .normarg import check_glawc, check_glawc2, quadnorm_cases
from .offenders import (abelian_p_subgroups, is_offender, natural_module_action, offender_collections,
                        offender_value, replacement, solitary_decomposition, solitary_subgroups)
from .orbitlim import (DEFAULT_COCHAIN_CAP, admissible_chains, check_rigid_map, higher_limit,
                       inclusion_normalize, is_inclusion_normalized, limit_complex, local_conjugator,
                       locality, rigid_map, verify_les)
from .permgroup import (Group, center, centralizer, cyclic_subgroup, intersection, is_normal,
                        normal_subgroups, normalizer, pcore, subgroups_of_pgroup, sylow_subgroup)

# cochain dimension up to which degree-2 limits are also computed directly
DIRECT_DIM_LIMIT = 1000


@dataclass
class Check:
    label: str
    ok: bool | None
    detail: object = None

    def to_json(self):
        return {"label": self.label, "ok": self.ok, "detail": _jsonable(self.detail)}


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        ran = [c for c in self.checks if c.ok is not None]
        return bool(ran) and all(c.ok for c in ran)

    @property
    def failures(self):
        return [c for c in self.checks if c.ok is False]

    def add(self, label, ok, detail=None):
        used = {c.label for c in self.checks}
        base, n = label, 2
        while label in used:
            label = f"{base} #{n}"
            n += 1
        self.checks.append(Check(label, ok, detail))
        return ok

    def to_json(self):
        return {"suite": self.name, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, Group):
        return [str(g) for g in x.gens] or ["()"]
    return str(x)


# -- shared helpers -------------------------------------------------------

def setups_for(descriptor=None, default=("s4", "a6-v4a", "a6-v4b")):
    """(label, setup) pairs: from a descriptor, or the named defaults.

    A descriptor with a Y line is one setup.  A descriptor with ``subgroup``
    lines yields, for each listed p-subgroup V, the setup N_G(V) with
    Y = O_p(N_G(V)).
    """
    if descriptor is None:
        return [(name, named_setup(name)) for name in default]
    if descriptor.prime is None:
        raise ValidationError("the group file needs a prime line")
    out = []
    if descriptor.Y is not None:
        out.append((descriptor.name, descriptor.setup()))
    for label, V in sorted((descriptor.subgroups or {}).items()):
        Gamma = normalizer(descriptor.group, V)
        Y = pcore(Gamma, descriptor.prime)
        out.append((f"{descriptor.name}:{label}", make_setup(Gamma, descriptor.prime, Y)))
    if not out:
        raise ValidationError("the group file defines no setup (needs Y or subgroup lines)")
    return out


def invariant_factors(H):
    _, orders = abelian_basis(H)
    return sorted(o for o in orders if o > 1)


def class_unions(F, collection):
    """All unions of F-classes of the collection, as (mask, members)."""
    classes = F.f_classes(collection)
    for mask in range(1 << len(classes)):
        yield mask, [P for i, c in enumerate(classes) if mask >> i & 1 for P in c]


def complementary_splits(setup):
    """Splits (Q, R) of S(S)_{>=Y} with Q closed under overgroups and F-invariant."""
    F = setup.fusion
    out = []
    for _, Q in class_unions(F, overgroup_collection(setup)):
        qs = {P.elements for P in Q}
        if any(O.elements not in qs for P in Q for O in F.overgroups(P)):
            continue
        R = [P for P in overgroup_collection(setup) if P.elements not in qs]
        out.append((Q, R))
    return out


def invariant_intervals(setup):
    """F-invariant intervals contained in S(S)_{>=Y}."""
    F = setup.fusion
    out = []
    for _, R in class_unions(F, overgroup_collection(setup)):
        if R and validate_interval(F, R).is_interval:
            out.append(R)
    return out


def _limit(F, R, k, cap, **kw):
    """Invariant factors of L^k(F; R), or None when a cap is hit."""
    try:
        return higher_limit(F, R, k, max_degree=max(k, 1), cap=cap, **kw).invariant_factors
    except CapExceeded:
        return None


def _log(n, p):
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def _degree2_direct_ok(F, R, cap):
    """Whether L^2(F; R) is small enough to compute directly."""
    if not R:
        return True
    try:
        cx = limit_complex(F, R, max_degree=2, cap=cap)
        return cx.dim(2) <= DIRECT_DIM_LIMIT
    except CapExceeded:
        return False


# -- suites ---------------------------------------------------------------

def suite_olijm(descriptor=None, cap=DEFAULT_COCHAIN_CAP, setups=None):
    """L^0(F; S(S)_{>=Y}) is C_{Z(Y)}(Gamma) and L^1 = L^2 = 0."""
    res = SuiteResult("olijm")
    for label, st in setups or setups_for(descriptor, default=("s4",)):
        F = st.fusion
        R = overgroup_collection(st)
        L0 = _limit(F, R, 0, cap)
        C = Group(st.Gamma.degree, [z for z in st.Z.elements if all(z * g == g * z for g in st.Gamma.gens)])
        res.add(f"{label}: L^0 = C_Z(Y)(Gamma)", None if L0 is None else L0 == invariant_factors(C),
                {"L0": L0, "C_Z(Y)(Gamma)": invariant_factors(C)})
        for k in (1, 2):
            if k == 2 and not _degree2_direct_ok(F, R, cap):
                res.add(f"{label}: L^2 = 0", None, "cochain dimension above the direct limit")
                continue
            L = _limit(F, R, k, cap)
            res.add(f"{label}: L^{k} = 0", None if L is None else L == [], {"factors": L})
    return res


def suite_quadnorm(descriptor=None, cap=None, modules=None):
    """Norms vanish in the quadratic situations, over all pairs A0 <= A <= S."""
    res = SuiteResult("quadnorm")
    acts = _module_list(descriptor, modules or [n for n in MODULES if n not in ("s5-natural",)])
    for name, act in acts:
        if not act.module.is_elementary():
            continue
        checked, failures = quadnorm_cases(act)
        res.add(f"{name}: {checked} pairs", not failures,
                [(str(A.gens), str(A0.gens), case) for A, A0, case in failures[:5]])
    return res


def suite_les(descriptor=None, cap=DEFAULT_COCHAIN_CAP, setups=None, k_max=2):
    """Exactness through degree k_max and |C_D(Gamma*)| = |C_D(Gamma)||L^1(R)| on every split."""
    res = SuiteResult("les")
    for label, st in setups or setups_for(descriptor, default=("s4", "a6-v4a", "a6-v4b")):
        F = st.fusion
        for Q, R in complementary_splits(st):
            tag = f"{label}: |Q|={len(Q)} |R|={len(R)}"
            try:
                rep = verify_les(F, Q, R, k_max=k_max, cap=cap)
            except CapExceeded as exc:
                res.add(tag + " exact", None, str(exc))
                continue
            res.add(tag + " exact", rep.exact,
                    {"nodes": rep.nodes, "orders": {f"L^{k}({n})": v for (n, k), v in rep.orders.items()}})
            if Q:
                loc = locality(st, Q)
                lhs = len(fixed_points(st.action, Group(st.Gamma.degree, loc.gamma_star)))
                rhs = len(fixed_points(st.action, st.Gamma)) * st.prime ** rep.orders[("R", 1)]
                res.add(tag + " fixed points on Gamma*", lhs == rhs, {"C_D(Gamma*)": lhs, "rhs": rhs})
    return res


def suite_glawc(descriptor=None, cap=None, instances=None):
    """On every library instance: hypotheses hold and C_D(H) = C_D(G)."""
    res = SuiteResult("glawc")
    for name, theorem in instances or GLAWC_INSTANCES:
        act = module_action(name)
        G = act.group
        S = sylow_subgroup(G, act.prime)
        cols = offender_collections(act)
        if theorem == "glawc":
            collection = [A for A in cols.minimal if A <= S]
            report = check_glawc(act, collection, S)
        else:
            collection = [A for A in cols.control_collection if A <= S]
            report = check_glawc2(act, collection, S)
        res.add(f"{name} ({theorem}) hypotheses", report.hypotheses, report.failures)
        res.add(f"{name} ({theorem}) conclusion", report.conclusion,
                {"|J|": report.J.order, "|H|": report.H.order})
    return res


def _odd_setups(descriptor):
    if descriptor is not None:
        return [(l, s) for l, s in setups_for(descriptor) if s.prime != 2]
    return [(n, named_setup(n)) for n in ("3^2:sl2(3)", "3^2:gl2(3)")]


def _two_setups(descriptor, reduced_only=False):
    if descriptor is not None:
        found = [(l, s) for l, s in setups_for(descriptor) if s.prime == 2]
    else:
        found = [(n, named_setup(n)) for n in ("s4", "a6-v4a", "a6-v4b", "s6-v4", "2^2:s3",
                                               "2^4:a5", "2^3:sl3(2)")]
    return [(l, s) for l, s in found if s.reduced or not reduced_only]


def _interval_tag(R):
    orders = sorted({P.order for P in R})
    return f"|R|={len(R)} orders {orders}"


def _collections(st):
    """Offender collections of G = Gamma/C_Gamma(D) on D."""
    return offender_collections(st.faithful)


def _thompson_condition(st, R, collection):
    """For each Q >= Y: Q in R iff J_collection(Q) in R."""
    from .fusion import _thompson_in_setup
    rs = {P.elements for P in R}
    for Q in overgroup_collection(st):
        J = _thompson_in_setup(st, collection, Q)
        if (Q.elements in rs) != (J.elements in rs):
            return False
    return True


def suite_odd_quadratic(descriptor=None, cap=DEFAULT_COCHAIN_CAP):
    """Odd p, quadratic collection A, Y in R, J_A(S) not in R: L^1(F;R) = 0."""
    from .fusion import _thompson_in_setup
    from .modaction import is_quadratic
    res = SuiteResult("oddquadratic")
    for label, st in _odd_setups(descriptor):
        F = st.fusion
        collection = _collections(st).minimal
        quad = all(is_quadratic(st.faithful, A) for A in collection)
        res.add(f"{label}: collection acts quadratically", quad, {"size": len(collection)})
        J = _thompson_in_setup(st, collection, st.S)
        for R in invariant_intervals(st):
            rs = {P.elements for P in R}
            if st.Y.elements not in rs or J.elements in rs:
                continue
            L1 = _limit(F, R, 1, cap)
            res.add(f"{label}: {_interval_tag(R)} L^1 = 0", None if L1 is None else L1 == [], {"factors": L1})
    return res


def suite_odd_thompson(descriptor=None, cap=DEFAULT_COCHAIN_CAP):
    """Odd p, R defined through J_{A_D(G)}: L^k(F;R) = 0 for k >= 1 (k = 1, and k = 2 when small)."""
    res = SuiteResult("oddthompson")
    for label, st in _odd_setups(descriptor):
        F = st.fusion
        best = _collections(st).best
        for R in invariant_intervals(st):
            if not _thompson_condition(st, R, best):
                continue
            L1 = _limit(F, R, 1, cap)
            res.add(f"{label}: {_interval_tag(R)} L^1 = 0", None if L1 is None else L1 == [], {"factors": L1})
            if _degree2_direct_ok(F, R, cap):
                L2 = _limit(F, R, 2, cap)
                res.add(f"{label}: {_interval_tag(R)} L^2 = 0", None if L2 is None else L2 == [], {"factors": L2})
    return res


def _second_limit_vanishes(st, R, cap):
    """L^2(F;R) = 0, through L^1 of the complement (isomorphic to it) and directly when small.

    Returns (ok, detail).
    """
    F = st.fusion
    rs = {P.elements for P in R}
    Q = [P for P in overgroup_collection(st) if P.elements not in rs]
    detail = {}
    ok = None
    qs = {P.elements for P in Q}
    if Q and all(O.elements in qs for P in Q for O in F.overgroups(P)):
        L1Q = _limit(F, Q, 1, cap)
        detail["L^1(Q)"] = L1Q
        if L1Q is not None:
            ok = L1Q == []
    elif not Q:
        # R is all of S(S)_{>=Y}
        pass
    if _degree2_direct_ok(F, R, cap):
        L2 = _limit(F, R, 2, cap)
        detail["L^2(R)"] = L2
        if L2 is not None:
            ok = (L2 == []) if ok is None else (ok and L2 == [])
    return ok, detail


def suite_ntlim(descriptor=None, cap=DEFAULT_COCHAIN_CAP):
    """Reduced 2-setups with B = A - T nonempty: L^2(F;R) = 0 for R = {P : J_A(P) = Y}."""
    res = SuiteResult("ntlim")
    for label, st in _two_setups(descriptor, reduced_only=True):
        cols = _collections(st)
        seen = {}
        for A in cols.minimal + cols.minimal_over:
            seen.setdefault(A.elements, A)
        collection = sorted(seen.values(), key=lambda A: A.key)
        tees = {T.elements for T in solitary_subgroups(st.faithful)}
        others = [A for A in collection if A.elements not in tees]
        if not others:
            res.add(f"{label}: B is empty", None, "hypothesis fails; not applicable")
            continue
        R = offender_interval(st, collection)
        ok, detail = _second_limit_vanishes(st, R, cap)
        detail.update({"|A|": len(collection), "|B|": len(others), "|R|": len(R)})
        res.add(f"{label}: L^2(R) = 0", ok, detail)
    return res


def suite_thompson2(descriptor=None, cap=DEFAULT_COCHAIN_CAP):
    """p = 2, R defined through J_{A_D(G)}: L^2(F;R) = 0."""
    res = SuiteResult("thompson2")
    for label, st in _two_setups(descriptor):
        best = _collections(st).best
        for R in invariant_intervals(st):
            if not _thompson_condition(st, R, best):
                continue
            ok, detail = _second_limit_vanishes(st, R, cap)
            res.add(f"{label}: {_interval_tag(R)} L^2 = 0", ok, detail)
    return res


def _brute_value(act, B):
    fixed = [v for v in act._elements if all(act.act(g, v) == v for g in B.gens)]
    return B.order * len(fixed)


def _brute_quadratic(act, B):
    module = act.module
    comms = {module.sub(act.act(g, v), v) for v in act._elements for g in B.sorted_elements}
    if comms == {module.zero}:
        return False
    return all(act.act(g, w) == w for w in comms for g in B.gens)


def suite_replacement(descriptor=None, cap=None, modules=None):
    """Every nontrivial offender contains a quadratic best offender of at least its value."""
    res = SuiteResult("replacement")
    names = modules or ["sl2(3)", "gl2(3)", "sl2(5)", "borel(5)", "s3-mod3", "sl3(2)", "sl2(4)",
                        "sigmal2(4)", "a6-even", "s3-natural", "s5-natural", "sl2(3)+trivial"]
    for name, act in _module_list(descriptor, names):
        count = 0
        bad = []
        for cls in abelian_p_subgroups(act.group, act.prime):
            for A in cls:
                if A.order == 1 or not is_offender(act, A):
                    continue
                count += 1
                B = replacement(act, A)
                value = _brute_value(act, B)
                best = all(value >= _brute_value(act, C) for C in subgroups_of_pgroup(B))
                if not (B <= A and B.order > 1 and value >= _brute_value(act, A)
                        and best and _brute_quadratic(act, B)):
                    bad.append(str(A.gens))
        res.add(f"{name}: {count} offenders", not bad, bad[:5])
    return res


def suite_nooveroffenders(descriptor=None, cap=None, modules=None):
    """Order-two best offenders when there are no over-offenders: conclusions (a)-(d)."""
    from .modaction import commutator_subgroup, is_quadratic
    from .permgroup import join
    res = SuiteResult("nooveroffenders")
    names = modules or ["s3-natural", "s5-natural", "sl3(2)", "sl2(4)", "sigmal2(4)", "a6-even",
                        "s6-even", "s3-natural+trivial"]
    for name, act in _module_list(descriptor, names):
        if act.prime != 2:
            continue
        cols = offender_collections(act)
        if cols.over:
            continue
        A2 = cols.order_two
        bad = {"a": [], "b": [], "c": [], "d": []}
        for i, A in enumerate(A2):
            for B in A2[i:]:
                a, b = A.gens[0], B.gens[0]
                commute = a * b == b * a
                L = join(A, B)
                if commute and A != B:
                    if fixed_points(act, A) == fixed_points(act, B) or not is_quadratic(act, L):
                        bad["a"].append((str(a), str(b)))
                if L.order & (L.order - 1) == 0 and not commute:
                    bad["b"].append((str(a), str(b)))
                if not commute:
                    DL = commutator_subgroup(act, L)
                    CL = fixed_points(act, L)
                    if not (L.order == 6 and (a * b).order() == 3 and len(DL) == 4
                            and all(act.module.scale(2, v) == act.module.zero for v in DL)
                            and len(DL) * len(CL) == act.module.order and len(DL & CL) == 1):
                        bad["d"].append((str(a), str(b)))
        S = sylow_subgroup(act.group, 2)
        J = None
        for A in A2:
            if A <= S:
                J = A if J is None else join(J, A)
        if J is not None:
            elementary = J.is_abelian() and all((x * x).is_identity() for x in J.elements)
            if not elementary:
                bad["c"].append(str(J.gens))
        pairs = len(A2) * (len(A2) + 1) // 2
        for part in "abcd":
            res.add(f"{name} ({part}), {pairs} pairs", not bad[part], bad[part][:5])
    return res


def suite_solitary(descriptor=None, cap=None):
    """Solitary offenders of natural modules are the transposition subgroups."""
    res = SuiteResult("solitary")
    if descriptor is not None and descriptor.action is not None:
        act = descriptor.action
        tees = solitary_subgroups(act)
        res.add(f"{descriptor.name}: solitary offenders", True, {"count": len(tees)})
        return res
    for m in (3, 5, 7):
        act = natural_module_action(m)
        found = {T.elements for T in solitary_subgroups(act)}
        transpositions = {cyclic_subgroup(g).elements for g in act.group.elements
                          if g.order() == 2 and len(g.cycles()) == 1}
        res.add(f"S{m} natural: solitary = transpositions", found == transpositions,
                {"solitary": len(found), "transpositions": len(transpositions)})
    act = module_action("sl3(2)")
    res.add("SL3(2) natural: none solitary", solitary_subgroups(act) == [])
    from .descriptors import load
    act = load("s3xs5").action
    dec = solitary_decomposition(act)
    degrees = sorted(m for _, m, _ in dec.factors)
    res.add("S3 x S5: decomposition", len(dec.factors) == 2 and degrees == [3, 5],
            {"r": len(dec.factors), "m": degrees, "|V_i|": [len(V) for _, _, V in dec.factors]})
    return res


def suite_wellplaced(descriptor=None, cap=None, setups=None):
    """Well-placed subgroups form a conjugation family."""
    res = SuiteResult("wellplaced")
    for label, st in setups or setups_for(descriptor, default=("s4", "a6-v4a", "a6-v4b")):
        F = st.fusion
        cols = _collections(st)
        functors = [identity_functor(F),
                    setup_thompson_functor(st, cols.best, name="J_A")]
        abelian = [H for H in F.subgroups() if H.is_abelian() and H.order > 1]
        top = max(H.order for H in abelian)
        functors.append(collection_functor(F, [H for H in abelian if H.order == top], name="J"))
        for W in functors:
            try:
                placed = well_placed(W)
            except ValidationError as exc:
                res.add(f"{label}: {W.name}", None, f"not a conjugacy functor: {exc}")
                continue
            res.add(f"{label}: {W.name}", is_conjugation_family(F, placed), {"well-placed": len(placed)})
    if setups is None and descriptor is None:
        from .permgroup import alternating_group
        F = FusionSystem.from_group(alternating_group(6), 2)
        for W in (identity_functor(F), thompson_functor(F)):
            placed = well_placed(W)
            res.add(f"A6: {W.name}", is_conjugation_family(F, placed), {"well-placed": len(placed)})
    return res


def a6_rigid_data(cap=DEFAULT_COCHAIN_CAP):
    """The A6 centric complex with its inclusion-normalized L^1 representatives."""
    from .permgroup import alternating_group
    F = FusionSystem.from_group(alternating_group(6), 2)
    collection = F.centric_collection()
    result = higher_limit(F, collection, 1, cap=cap)
    functor = result.complex.functor
    return F, collection, result, [inclusion_normalize(functor, t) for t in result.witnesses]


def suite_rigid(descriptor=None, cap=DEFAULT_COCHAIN_CAP, chain_length=3):
    """Rigid maps of L^1 representatives: identity on S, multiplicative, locally inner."""
    res = SuiteResult("rigid")
    F, collection, result, normalized = a6_rigid_data(cap)
    cx = result.complex
    functor = cx.functor
    loc = locality(F, collection)
    chains = admissible_chains(F, collection, loc, chain_length)
    for i, (t, tn) in enumerate(zip(result.witnesses, normalized)):
        res.add(f"witness {i}: inclusion-normalized", is_inclusion_normalized(functor, tn, collection))
        diff = (cx.to_vector(1, t) - cx.to_vector(1, tn)) % cx.ring.q
        res.add(f"witness {i}: cohomologous to the original", cx.is_coboundary(1, diff))
        tau = rigid_map(F, collection, tn, functor=functor)
        res.add(f"witness {i}: identity on S and multiplicative on {len(chains)} chains",
                check_rigid_map(tau, chains))
        for Q in functor.category.objects:
            z = local_conjugator(F, Q, tau)
            res.add(f"witness {i}: local conjugator at |Q|={Q.order}", z in center(F.normalizer_in_S(Q)),
                    {"z": str(z)})
    return res


def suite_normquot(descriptor=None, cap=None, setups=None):
    """N_Gamma(Q) maps onto the normalizer of its image in Gamma/C_Gamma(D)."""
    res = SuiteResult("normquot")
    for label, st in setups or setups_for(descriptor, default=tuple(SETUPS)):
        CSD = centralizer(st.S, st.Z)
        subs = [Q for Q in subgroups_of_pgroup(st.S) if CSD <= Q]
        ok = all(normalizer_image_check(st, Q) for Q in subs)
        res.add(f"{label}: {len(subs)} subgroups", ok)
    return res


def suite_restinj(descriptor=None, cap=DEFAULT_COCHAIN_CAP, setups=None):
    """Restriction of L^1 to a normal subgroup containing Y is injective."""
    from .orbitlim import restriction_injectivity_check
    res = SuiteResult("restinj")
    for label, st in setups or setups_for(descriptor, default=("s4", "s6-v4", "a6-v4a", "2^2:s3")):
        F = st.fusion
        normals = [N for N in normal_subgroups(st.Gamma) if st.Y <= N]
        for Q, _ in complementary_splits(st):
            if not Q:
                continue
            qs = {P.elements for P in Q}
            for N in normals:
                if any(intersection(P, N).elements not in qs for P in Q):
                    continue
                try:
                    ok = restriction_injectivity_check(st, N, Q, cap=cap)
                except CapExceeded as exc:
                    res.add(f"{label}: |Q|={len(Q)} |Gamma0|={N.order}", None, str(exc))
                    continue
                L1 = higher_limit(F, Q, 1, cap=cap).invariant_factors
                res.add(f"{label}: |Q|={len(Q)} |Gamma0|={N.order}", ok, {"L^1(Q)": L1})
    return res


def _module_list(descriptor, names):
    if descriptor is not None:
        if descriptor.action is None:
            raise ValidationError("this suite needs a module descriptor (orders and mat lines)")
        return [(descriptor.name, descriptor.action)]
    return [(n, module_action(n)) for n in names]


SUITES = {
    "olijm": suite_olijm,
    "quadnorm": suite_quadnorm,
    "les": suite_les,
    "glawc": suite_glawc,
    "oddquadratic": suite_odd_quadratic,
    "oddthompson": suite_odd_thompson,
    "ntlim": suite_ntlim,
    "thompson2": suite_thompson2,
    "replacement": suite_replacement,
    "nooveroffenders": suite_nooveroffenders,
    "solitary": suite_solitary,
    "wellplaced": suite_wellplaced,
    "rigid": suite_rigid,
    "normquot": suite_normquot,
    "restinj": suite_restinj,
}


def run_suite(name, descriptor=None, cap=DEFAULT_COCHAIN_CAP):
    if name not in SUITES:
        raise ValidationError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return SUITES[name](descriptor=descriptor, cap=cap)
