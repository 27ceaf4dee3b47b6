"""Fusion systems F_S(Gamma) of permutation groups, setups and conjugacy functors."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, ValidationError
from .modaction import internal_action, right_coset_reps
from .offenders import thompson_preimage
from .permgroup import (Group, center, centralizer, is_normal, is_pgroup, join, normalizer,
                        pcore, subgroups_of_pgroup, sylow_subgroup, transporter, trivial_group)


class Hom:
    """The conjugation map x -> x^g restricted to ``source``, landing in ``target``."""

    __slots__ = ("source", "target", "element", "images")

    def __init__(self, source, target, element):
        self.source = source
        self.target = target
        self.element = element
        self.images = tuple(x ^ element for x in source.gens)

    def __call__(self, x):
        return x ^ self.element

    def image(self):
        return self.source.conjugate(self.element)

    @property
    def key(self):
        return (self.source.elements, self.images)

    def __eq__(self, other):
        return isinstance(other, Hom) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<Hom order {self.source.order} via {self.element}>"


class FusionSystem:
    """F_S(Gamma): subgroups of S with the maps induced by conjugation in Gamma."""

    def __init__(self, Gamma, S, pgroup_cap=512):
        if not S <= Gamma:
            raise ValidationError("S is not a subgroup of Gamma")
        n = S.order
        p = min((d for d in range(2, n + 1) if n % d == 0), default=None)
        if p is not None and (not is_pgroup(S, p) or (Gamma.order // n) % p == 0):
            raise ValidationError("S is not a Sylow subgroup of Gamma")
        self.Gamma = Gamma
        self.S = S
        self.prime = p
        self.pgroup_cap = pgroup_cap
        self._subgroups = None
        self._transporters = {}
        self._homs = {}
        self._classes = {}
        self._centric = {}

    @classmethod
    def from_group(cls, Gamma, p):
        return cls(Gamma, sylow_subgroup(Gamma, p))

    def subgroups(self):
        if self._subgroups is None:
            self._subgroups = subgroups_of_pgroup(self.S, cap=self.pgroup_cap)
        return self._subgroups

    def overgroups(self, P):
        return subgroups_of_pgroup(self.S, cap=self.pgroup_cap, containing=P)

    def transporter(self, P, Q):
        key = (P.elements, Q.elements)
        T = self._transporters.get(key)
        if T is None:
            T = transporter(self.Gamma, P, Q)
            self._transporters[key] = T
        return T

    def hom_set(self, P, Q):
        """All distinct maps c_g|_P with P^g <= Q, in a deterministic order."""
        key = (P.elements, Q.elements)
        homs = self._homs.get(key)
        if homs is None:
            seen = {}
            for g in sorted(self.transporter(P, Q)):
                h = Hom(P, Q, g)
                seen.setdefault(h.images, h)
            homs = sorted(seen.values(), key=lambda h: h.images)
            self._homs[key] = homs
        return homs

    def aut(self, P):
        return self.hom_set(P, P)

    def f_class(self, P):
        """All subgroups of S that are Gamma-conjugate to P."""
        cls = self._classes.get(P.elements)
        if cls is None:
            N = normalizer(self.Gamma, P)
            found = {}
            for g in right_coset_reps(self.Gamma, N):
                Q = P.conjugate(g)
                if Q <= self.S:
                    found.setdefault(Q.elements, Q)
            cls = sorted(found.values(), key=lambda Q: Q.key)
            for Q in cls:
                self._classes[Q.elements] = cls
        return cls

    def normalizer_in_S(self, P):
        return normalizer(self.S, P)

    def is_fully_normalized(self, P):
        n = self.normalizer_in_S(P).order
        return all(n >= self.normalizer_in_S(Q).order for Q in self.f_class(P))

    def is_centric(self, P):
        val = self._centric.get(P.elements)
        if val is None:
            val = all(centralizer(self.S, Q) <= Q for Q in self.f_class(P))
            for Q in self.f_class(P):
                self._centric[Q.elements] = val
        return val

    def representative(self, P):
        """Fully normalized member of P's class: max |N_S|, ties by the global order."""
        cls = self.f_class(P)
        return min(cls, key=lambda Q: (-self.normalizer_in_S(Q).order, Q.key))

    def centric_collection(self):
        return [P for P in self.subgroups() if self.is_centric(P)]

    def f_classes(self, collection):
        """Partition a collection into F-classes; each class starts with its representative."""
        members = {P.elements for P in collection}
        done = set()
        classes = []
        for P in sorted(collection, key=lambda H: H.key):
            if P.elements in done:
                continue
            cls = self.f_class(P)
            for Q in cls:
                if Q.elements not in members:
                    raise ValidationError("collection is not F-invariant")
                done.add(Q.elements)
            rep = self.representative(P)
            classes.append([rep] + [Q for Q in cls if Q != rep])
        classes.sort(key=lambda c: c[0].key)
        return classes

    def f_closure(self, collection):
        found = {}
        for P in collection:
            for Q in self.f_class(P):
                found.setdefault(Q.elements, Q)
        return sorted(found.values(), key=lambda H: H.key)


def is_weakly_closed(F, J):
    """J^g <= S implies J^g = J for all g in Gamma."""
    return F.f_class(J) == [J]


# -- intervals ------------------------------------------------------------

@dataclass
class Interval:
    members: list
    is_interval: bool
    f_invariant: bool
    contains_S: bool
    closed_under_overgroups: bool

    def __contains__(self, P):
        return P.elements in self._sets

    def __post_init__(self):
        self._sets = {P.elements for P in self.members}

    def __len__(self):
        return len(self.members)


def validate_interval(F, R):
    members = sorted({P.elements: P for P in R}.values(), key=lambda H: H.key)
    sets = {P.elements for P in members}
    for P in members:
        if not P <= F.S:
            raise ValidationError("interval member not contained in S")
    is_int = True
    for P1 in members:
        for P2 in members:
            if P1 < P2 and is_int:
                for P in subgroups_of_pgroup(P2, cap=F.pgroup_cap, containing=P1):
                    if P.elements not in sets:
                        is_int = False
                        break
    f_inv = all(Q.elements in sets for P in members for Q in F.f_class(P))
    contains_S = F.S.elements in sets
    closed = all(Q.elements in sets for P in members for Q in F.overgroups(P))
    return Interval(members, is_int, f_inv, contains_S, closed)


# -- setups ---------------------------------------------------------------

@dataclass
class GeneralSetup:
    Gamma: Group
    prime: int
    S: Group
    Y: Group
    Z: Group            # Z(Y) as a subgroup of Gamma
    action: object      # Gamma acting on Z(Y)
    faithful: object    # G = Gamma / C_Gamma(Z(Y)) acting faithfully
    quotient: object    # Gamma -> G (None when C_Gamma(Z(Y)) = 1)
    reduced: bool
    fusion: FusionSystem

    @property
    def module(self):
        return self.action.module

    def bar(self, H):
        return self.quotient.image(H) if self.quotient is not None else H


def make_setup(Gamma, p, Y, S=None):
    if not Y <= Gamma or not is_normal(Gamma, Y):
        raise ValidationError("Y is not a normal subgroup of Gamma")
    if Y.order == 1 or not is_pgroup(Y, p):
        raise ValidationError(f"Y is not a nontrivial {p}-group")
    if not centralizer(Gamma, Y) <= Y:
        raise ValidationError("C_Gamma(Y) is not contained in Y")
    if S is None:
        S = sylow_subgroup(Gamma, p)
    if not Y <= S:
        raise ConsistencyError("a normal p-subgroup lies in every Sylow subgroup")
    Z = center(Y)
    act = internal_action(Gamma, Z)
    faithful, quotient = act.faithful_quotient()
    G = faithful.group
    reduced = (centralizer(S, Z) == Y) and pcore(G, p).order == 1
    return GeneralSetup(Gamma=Gamma, prime=p, S=S, Y=Y, Z=Z, action=act, faithful=faithful,
                        quotient=quotient, reduced=reduced, fusion=FusionSystem(Gamma, S))


def overgroup_collection(setup):
    """S(S)_{>=Y}: all subgroups of S containing Y."""
    return setup.fusion.overgroups(setup.Y)


def offender_interval(setup, collection):
    """{P >= Y : J(P, D) = Y}, for a G-invariant collection of subgroups of G."""
    out = []
    for P in overgroup_collection(setup):
        J = _thompson_in_setup(setup, collection, P)
        if J == setup.Y:
            out.append(P)
    return out


def _thompson_in_setup(setup, collection, P):
    if setup.quotient is None:
        J = trivial_group(P.degree)
        for A in collection:
            if A <= P:
                J = join(J, A)
        return J
    return thompson_preimage(collection, P, setup.quotient)


def normalizer_image_check(setup, Q):
    """Image of N_Gamma(Q) in Gamma/C_Gamma(D) equals the normalizer of the image of Q."""
    S = setup.S
    if not Q <= S:
        raise ValidationError("Q is not contained in S")
    CSD = centralizer(S, setup.Z)
    if not CSD <= Q:
        raise ValidationError("C_S(D) is not contained in Q")
    if setup.quotient is None:
        return True
    q = setup.quotient
    lhs = {q.project(g) for g in normalizer(setup.Gamma, Q).elements}
    Qbar = q.image(Q)
    rhs = set(normalizer(q.group, Qbar).elements)
    return lhs == rhs


# -- conjugacy functors ---------------------------------------------------

class ConjugacyFunctor:
    """A subgroup mapping W on the subgroups of S, with the axioms checkable."""

    def __init__(self, F, mapping, name="W"):
        self.F = F
        self._mapping = mapping
        self.name = name
        self._cache = {}

    def __call__(self, P):
        val = self._cache.get(P.elements)
        if val is None:
            val = self._mapping(P)
            self._cache[P.elements] = val
        return val

    def validate(self):
        F = self.F
        for P in F.subgroups():
            W = self(P)
            if not W <= P:
                raise ValidationError(f"{self.name}(P) is not contained in P")
            if P.order > 1 and W.order == 1:
                raise ValidationError(f"{self.name}(P) is trivial for nontrivial P")
            for g in F.transporter(P, F.S):
                if W.conjugate(g) != self(P.conjugate(g)):
                    raise ValidationError(f"{self.name} is not compatible with conjugation")
        return True


def identity_functor(F):
    return ConjugacyFunctor(F, lambda P: P, name="identity")


def collection_functor(F, collection, name="J"):
    """W(P) = <A in collection : A <= P>, or P itself when no member lies in P."""
    def mapping(P):
        J = None
        for A in collection:
            if A <= P:
                J = A if J is None else join(J, A)
        return P if J is None else J

    return ConjugacyFunctor(F, mapping, name=name)


def thompson_functor(F):
    """Classical Thompson subgroup: generated by the abelian subgroups of maximal order."""
    def mapping(P):
        subs = [H for H in subgroups_of_pgroup(P) if H.is_abelian()]
        top = max(H.order for H in subs)
        J = trivial_group(P.degree)
        for H in subs:
            if H.order == top:
                J = join(J, H)
        return J

    return ConjugacyFunctor(F, mapping, name="thompson")


def setup_thompson_functor(setup, collection, name="J_A"):
    """W(P) = J(P, D) for P >= Y and W(P) = P otherwise."""
    Y = setup.Y

    def mapping(P):
        if not Y <= P:
            return P
        return _thompson_in_setup(setup, collection, P)

    return ConjugacyFunctor(setup.fusion, mapping, name=name)


def well_placed_sequence(W, P):
    """W_1(P) = P, W_i(P) = W(N_S(W_{i-1}(P))), until the sequence repeats."""
    F = W.F
    seq = [P]
    seen = {P.elements}
    while True:
        nxt = W(F.normalizer_in_S(seq[-1]))
        if nxt.elements in seen:
            return seq
        seq.append(nxt)
        seen.add(nxt.elements)


def well_placed(W, F=None):
    F = W.F if F is None else F
    W.validate()
    out = [P for P in F.subgroups()
           if all(F.is_fully_normalized(Q) for Q in well_placed_sequence(W, P))]
    placed = {P.elements for P in out}
    for P in F.subgroups():
        if not any(Q.elements in placed for Q in F.f_class(P)):
            raise ConsistencyError("a subgroup is not conjugate to a well-placed subgroup")
    return out


def is_conjugation_family(F, C):
    """Whether restrictions of F-automorphisms of members of C generate all of F."""
    autos = []
    for T in C:
        autos.append((T, [h.element for h in F.aut(T)]))
    for P in F.subgroups():
        expected = len(F.transporter(P, F.S)) // centralizer(F.Gamma, P).order
        start = F.Gamma.identity
        reached = {tuple(P.gens): start}
        frontier = [(P, start)]
        while frontier:
            new = []
            for image, g in frontier:
                for T, elems in autos:
                    if not image <= T:
                        continue
                    for h in elems:
                        gh = g * h
                        key = tuple(x ^ gh for x in P.gens)
                        if key not in reached:
                            reached[key] = gh
                            new.append((image.conjugate(h), gh))
            frontier = new
        if len(reached) != expected:
            return False
    return True


def burnside_fuse(F, J, X, Y):
    """An element of N_Gamma(J) conjugating X to Y (J abelian and weakly closed)."""
    if not J.is_abelian():
        raise ValidationError("J is not abelian")
    if not J <= F.S:
        raise ValidationError("J is not contained in S")
    if not is_weakly_closed(F, J):
        raise ValidationError("J is not weakly closed in S")
    if not (X <= J and Y <= J):
        raise ValidationError("X and Y must lie in J")
    if not F.transporter(X, Y) or X.order != Y.order:
        raise ValidationError("X and Y are not conjugate in Gamma")
    for n in normalizer(F.Gamma, J).sorted_elements:
        if X.conjugate(n) == Y:
            return n
    raise ConsistencyError("no conjugating element in N(J)")
