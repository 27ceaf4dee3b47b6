"""Permutation groups with full element enumeration.

Permutations act on the right: ``x * y`` means "apply x, then y", and
conjugation is ``x ^ g = g^-1 x g``.  Points are 0-based internally and
1-based in cycle notation.
"""
from __future__ import annotations

import math
import re
from itertools import combinations

from .errors import CapExceeded, ValidationError

DEFAULT_ORDER_CAP = 10**6
DEFAULT_PGROUP_CAP = 512
DEFAULT_SUBGROUP_COUNT_CAP = 10**5


class Permutation(tuple):
    """A permutation of {0..n-1} stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"not a bijection: {images}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree):
        return cls._raw(range(degree))

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build from 1-based cycles, e.g. [(1, 2, 3), (4, 5)]."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValidationError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValidationError(f"point {pt} repeated in cycles")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b - 1
        return cls._raw(images)

    @classmethod
    def parse(cls, text, degree):
        """Parse cycle notation such as ``(1 2 3)(4 5)`` or ``()``."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)+", text):
            raise ValidationError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            pts = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
            if pts:
                cycles.append(tuple(pts))
        return cls.from_cycles(degree, cycles)

    @property
    def degree(self):
        return len(self)

    def __mul__(self, other):
        return Permutation._raw(map(other.__getitem__, self))

    def inverse(self):
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._raw(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __xor__(self, g):
        """Conjugate: self ^ g = g^-1 self g."""
        res = [0] * len(self)
        for j, xj in enumerate(self):
            res[g[j]] = g[xj]
        return Permutation._raw(res)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self))

    def cycles(self):
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self[nxt]
            if len(cyc) > 1:
                out.append(tuple(p + 1 for p in cyc))
        return out

    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self})"


def commutator(x, y):
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() * y.inverse() * x * y


def generate(degree, gens, cap=DEFAULT_ORDER_CAP, start=None):
    """Closure of ``start`` (default: identity) under right multiplication by gens."""
    ident = Permutation.identity(degree)
    elements = set(start) if start else {ident}
    elements.add(ident)
    frontier = list(elements)
    gens = [g for g in gens if not g.is_identity()]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        if len(elements) > cap:
            raise CapExceeded(f"group order exceeds cap {cap}")
        frontier = new
    return frozenset(elements)


class Group:
    """A finite permutation group with its full element set.

    Subgroups are Groups as well; containment is checked with ``<=``.
    """

    __slots__ = ("degree", "elements", "_gens", "_sorted", "name")

    def __init__(self, degree, elements, gens=None, name=None):
        self.degree = degree
        self.elements = frozenset(elements)
        self._gens = list(gens) if gens is not None else None
        self._sorted = None
        self.name = name

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.sorted_elements)

    def __contains__(self, x):
        return x in self.elements

    def __eq__(self, other):
        return isinstance(other, Group) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other):
        return self.elements <= other.elements

    def __lt__(self, other):
        return self.elements < other.elements

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    @property
    def sorted_elements(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    @property
    def key(self):
        """Deterministic global order: by order, then sorted element list."""
        return (len(self.elements), self.sorted_elements)

    @property
    def gens(self):
        """A small generating set, greedily chosen in element order."""
        if self._gens is None:
            gens = []
            current = {self.identity}
            for x in self.sorted_elements:
                if x not in current:
                    gens.append(x)
                    current = set(generate(self.degree, gens))
                    if len(current) == len(self.elements):
                        break
            self._gens = gens
        return self._gens

    def is_abelian(self):
        gs = self.gens
        return all(a * b == b * a for a, b in combinations(gs, 2))

    def conjugate(self, g):
        return Group(self.degree, (x ^ g for x in self.elements),
                     gens=[x ^ g for x in self.gens])

    def __repr__(self):
        label = self.name or "Group"
        return f"<{label} degree={self.degree} order={self.order}>"


def group_from_generators(degree, gens, cap=DEFAULT_ORDER_CAP, name=None):
    for g in gens:
        if len(g) != degree:
            raise ValidationError(f"generator {g} has degree {len(g)}, expected {degree}")
    gens = [Permutation(g) for g in gens]
    return Group(degree, generate(degree, gens, cap), gens=gens, name=name)


def trivial_group(degree):
    return Group(degree, [Permutation.identity(degree)], gens=[])


def subgroup(G, gens):
    """Subgroup of G generated by gens; they must lie in G."""
    for g in gens:
        if g not in G:
            raise ValidationError(f"{g} is not an element of the group")
    return Group(G.degree, generate(G.degree, gens), gens=list(gens))


def join(H, K):
    if K <= H:
        return H
    if H <= K:
        return K
    gens = list(H.gens) + list(K.gens)
    return Group(H.degree, generate(H.degree, gens, start=H.elements), gens=gens)


def intersection(H, K):
    return Group(H.degree, H.elements & K.elements)


def cyclic_subgroup(x):
    elems = [Permutation.identity(len(x))]
    y = x
    while not y.is_identity():
        elems.append(y)
        y = y * x
    return Group(len(x), elems, gens=[x] if len(elems) > 1 else [])


def _check_sub(G, H):
    if not H <= G:
        raise ValidationError("subgroup is not contained in the group")


def is_normal(G, H):
    return all((h ^ g) in H for g in G.gens for h in H.gens)


def normalizer(G, P):
    _check_sub(G, P)
    pg = P.gens
    elems = [g for g in G.sorted_elements if all((x ^ g) in P for x in pg)]
    return Group(G.degree, elems)


def centralizer(G, X):
    """Centralizer in G of a subgroup, an element, or an iterable of elements."""
    if isinstance(X, Group):
        xs = X.gens
    elif isinstance(X, Permutation):
        xs = [X]
    else:
        xs = list(X)
    elems = [g for g in G.sorted_elements if all(g * x == x * g for x in xs)]
    return Group(G.degree, elems)


def center(G):
    return centralizer(G, G)


def transporter(G, P, Q):
    """All g in G with P^g <= Q, scanned one right coset of C_G(P) at a time."""
    C = centralizer(G, P)
    pg = P.gens
    covered = set()
    result = set()
    for g in G.sorted_elements:
        if g in covered:
            continue
        coset = [c * g for c in C.elements]
        covered.update(coset)
        if all((x ^ g) in Q for x in pg):
            result.update(coset)
    return frozenset(result)


def conjugacy_class(G, x):
    return frozenset(x ^ g for g in G.elements)


def subgroup_class(G, H):
    """All G-conjugates of H."""
    seen = {H.elements: H}
    frontier = [H]
    while frontier:
        new = []
        for K in frontier:
            for g in G.gens:
                L = K.conjugate(g)
                if L.elements not in seen:
                    seen[L.elements] = L
                    new.append(L)
        frontier = new
    return sorted(seen.values(), key=lambda K: K.key)


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def is_pgroup(G, p):
    n = G.order
    return p_part(n, p) == n


def sylow_subgroup(G, p):
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    target = p_part(G.order, p)
    P = trivial_group(G.degree)
    while P.order < target:
        N = normalizer(G, P)
        for g in N.sorted_elements:
            if g not in P and (g ** p) in P:
                P = join(P, cyclic_subgroup(g))
                break
        else:  # pragma: no cover - Sylow theory guarantees progress
            raise AssertionError("no p-element found in N(P)/P")
    return P


def pcore(G, p):
    """O_p(G): the intersection of all Sylow p-subgroups."""
    S = sylow_subgroup(G, p)
    core = set(S.elements)
    for T in subgroup_class(G, S):
        core &= T.elements
    return Group(G.degree, core)


def subgroups_of_pgroup(S, cap=DEFAULT_PGROUP_CAP, containing=None,
                        count_cap=DEFAULT_SUBGROUP_COUNT_CAP):
    """All subgroups of the p-group S (optionally only those containing a given one).

    Every subgroup is a join of cyclic subgroups, so closing the starting set
    under joins with cyclic subgroups reaches all of them.
    """
    n = S.order
    if n > cap:
        raise CapExceeded(f"|S| = {n} exceeds subgroup enumeration cap {cap}")
    if n > 1:
        p = min(d for d in range(2, n + 1) if n % d == 0)
        if p_part(n, p) != n:
            raise ValidationError("not a p-group")
    start = containing if containing is not None else trivial_group(S.degree)
    if not start <= S:
        raise ValidationError("starting subgroup not contained in S")
    cyclics = {}
    for x in S.sorted_elements:
        if x not in start:
            C = cyclic_subgroup(x)
            cyclics.setdefault(C.elements, C)
    cyclics = sorted(cyclics.values(), key=lambda C: C.key)
    found = {start.elements: start}
    frontier = [start]
    while frontier:
        new = []
        for H in frontier:
            for C in cyclics:
                if C <= H:
                    continue
                J = join(H, C)
                if J.elements not in found:
                    found[J.elements] = J
                    new.append(J)
                    if len(found) > count_cap:
                        raise CapExceeded(f"more than {count_cap} subgroups")
        frontier = new
    return sorted(found.values(), key=lambda H: H.key)


def normal_subgroups(G):
    """All normal subgroups, as joins of normal closures of elements."""
    closures = {}
    for x in G.sorted_elements:
        N = Group(G.degree, generate(G.degree, sorted(conjugacy_class(G, x))))
        closures.setdefault(N.elements, N)
    closures = list(closures.values())
    found = {trivial_group(G.degree).elements: trivial_group(G.degree)}
    frontier = list(found.values())
    while frontier:
        new = []
        for H in frontier:
            for N in closures:
                J = join(H, N)
                if J.elements not in found:
                    found[J.elements] = J
                    new.append(J)
        frontier = new
    return sorted(found.values(), key=lambda H: H.key)


class Quotient:
    """G/K as a permutation group on the right cosets of K.

    Cosets are ordered by their minimal element; ``section`` returns that
    minimal element.
    """

    def __init__(self, G, K):
        if not K <= G:
            raise ValidationError("kernel is not a subgroup of G")
        if not is_normal(G, K):
            raise ValidationError("subgroup is not normal")
        self.source = G
        self.kernel = K
        reps = []
        index = {}
        for g in G.sorted_elements:
            if g not in index:
                i = len(reps)
                reps.append(g)
                for k in K.elements:
                    index[k * g] = i
        self.reps = reps
        self._index = index
        m = len(reps)
        self._images = {}
        gens = [self._perm(g) for g in G.gens]
        self.group = Group(m, generate(m, gens), gens=gens)
        self._section = {}
        for r in reps:
            self._section[self.project(r)] = r

    def _perm(self, g):
        return Permutation._raw(self._index[r * g] for r in self.reps)

    def project(self, g):
        img = self._images.get(g)
        if img is None:
            img = self._perm(g)
            self._images[g] = img
        return img

    def section(self, q):
        return self._section[q]

    def image(self, H):
        gens = [self.project(h) for h in H.gens]
        return Group(self.group.degree, generate(self.group.degree, gens), gens=gens)

    def preimage(self, Hbar):
        elems = [g for g in self.source.sorted_elements if self.project(g) in Hbar]
        return Group(self.source.degree, elems)


def quotient_action(G, K):
    return Quotient(G, K)


# -- named groups ---------------------------------------------------------

def symmetric_group(n):
    if n == 1:
        return trivial_group(1)
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return group_from_generators(n, gens, name=f"S{n}")


def alternating_group(n):
    if n < 3:
        return trivial_group(n)
    gens = [Permutation.from_cycles(n, [(1, 2, k)]) for k in range(3, n + 1)]
    return group_from_generators(n, gens, name=f"A{n}")


def cyclic_group(n):
    return group_from_generators(n, [Permutation.from_cycles(n, [tuple(range(1, n + 1))])],
                                 name=f"C{n}")


def dihedral_group(n):
    """Dihedral group of order 2n acting on n points."""
    rot = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    refl = Permutation.from_cycles(n, [(i, n + 1 - i) for i in range(1, n // 2 + 1)])
    return group_from_generators(n, [rot, refl], name=f"D{2 * n}")


def shift(g, offset, degree):
    """Embed a permutation into a larger degree, moving its points by offset."""
    images = list(range(degree))
    for i, j in enumerate(g):
        images[i + offset] = j + offset
    return Permutation._raw(images)


def direct_product(*groups):
    """External direct product acting on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        gens.extend(shift(g, offset, degree) for g in G.gens)
        offset += G.degree
    return group_from_generators(degree, gens)


def parse_generator_list(text, degree):
    """Parse ``(1 2)(3 4), (1 3)(2 4)`` into permutations (comma or ; separated)."""
    parts = [s for s in re.split(r"[;,]\s*(?=\()", text.strip()) if s.strip()]
    return [Permutation.parse(s, degree) for s in parts]
