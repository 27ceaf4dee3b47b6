"""Finite abelian p-groups with a group acting by automorphisms.

Module elements are integer tuples; the i-th entry is taken mod
``cyclic_orders[i]``.  Groups act on the right through matrices: the image
of ``v`` under ``g`` is ``v . M_g`` and ``M_{gh} = M_g M_h``.  Module
subgroups are frozensets of vectors.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import ConsistencyError, ValidationError
from .permgroup import (Group, Permutation, centralizer, cyclic_subgroup, generate,
                        is_normal, is_prime, quotient_action)


@dataclass(frozen=True)
class PAbelianGroup:
    prime: int
    cyclic_orders: tuple
    _strides: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = self.prime
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
        orders = tuple(int(q) for q in self.cyclic_orders)
        for q in orders:
            e = q
            while e % p == 0:
                e //= p
            if e != 1 or q < p:
                raise ValidationError(f"cyclic order {q} is not a positive power of {p}")
        object.__setattr__(self, "cyclic_orders", orders)
        strides = []
        s = 1
        for q in reversed(orders):
            strides.append(s)
            s *= q
        object.__setattr__(self, "_strides", tuple(reversed(strides)))

    @property
    def rank(self):
        return len(self.cyclic_orders)

    @property
    def order(self):
        n = 1
        for q in self.cyclic_orders:
            n *= q
        return n

    @property
    def exponent(self):
        return max(self.cyclic_orders, default=1)

    @property
    def zero(self):
        return (0,) * self.rank

    def elements(self):
        return [tuple(v) for v in itertools.product(*(range(q) for q in self.cyclic_orders))]

    def index(self, v):
        return sum(a * s for a, s in zip(v, self._strides))

    def reduce(self, v):
        return tuple(a % q for a, q in zip(v, self.cyclic_orders))

    def add(self, u, v):
        return tuple((a + b) % q for a, b, q in zip(u, v, self.cyclic_orders))

    def sub(self, u, v):
        return tuple((a - b) % q for a, b, q in zip(u, v, self.cyclic_orders))

    def scale(self, k, v):
        return tuple((k * a) % q for a, q in zip(v, self.cyclic_orders))

    def element_order(self, v):
        n = 1
        while any(v):
            v = self.scale(self.prime, v)
            n *= self.prime
        return n

    def is_elementary(self):
        return all(q == self.prime for q in self.cyclic_orders)


def span(module, vectors, start=None):
    """Subgroup generated by the given vectors (plus an optional starting subgroup)."""
    elems = set(start) if start else {module.zero}
    elems.add(module.zero)
    gens = [v for v in vectors if any(v)]
    frontier = list(elems)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = module.add(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return frozenset(elems)


def omega1(module, within=None):
    """Elements of order dividing p (inside ``within`` if given)."""
    pool = within if within is not None else module.elements()
    return frozenset(v for v in pool if not any(module.scale(module.prime, v)))


def _matmul(A, B, orders):
    r = len(orders)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(r)) % orders[j]
                       for j in range(r)) for i in range(r))


def check_matrix(module, M):
    """Validate that M defines an endomorphism: p^{e_i} M[i][j] = 0 mod p^{e_j}."""
    orders = module.cyclic_orders
    r = len(orders)
    if len(M) != r or any(len(row) != r for row in M):
        raise ValidationError(f"matrix shape does not match rank {r}")
    for i in range(r):
        for j in range(r):
            if (orders[i] * M[i][j]) % orders[j]:
                raise ValidationError(
                    f"entry ({i},{j}) incompatible with cyclic orders {orders[i]}, {orders[j]}")
    return tuple(tuple(int(x) % orders[j] for j, x in enumerate(row)) for row in M)


class Action:
    """A finite permutation group acting on a PAbelianGroup by automorphisms."""

    def __init__(self, group, module, gen_matrices, to_vector=None, to_element=None):
        self.group = group
        self.module = module
        gens = group.gens
        if len(gen_matrices) != len(gens):
            raise ValidationError("need one matrix per group generator")
        mats = [check_matrix(module, M) for M in gen_matrices]
        orders = module.cyclic_orders
        r = module.rank
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        table = {group.identity: ident}
        frontier = [group.identity]
        while frontier:
            new = []
            for x in frontier:
                Mx = table[x]
                for g, Mg in zip(gens, mats):
                    y = x * g
                    My = _matmul(Mx, Mg, orders)
                    old = table.get(y)
                    if old is None:
                        table[y] = My
                        new.append(y)
                    elif old != My:
                        raise ValidationError("matrices do not define a group action")
            frontier = new
        self._mat = table
        self._perm_cache = {}
        self._elements = module.elements()
        for g, M in zip(gens, mats):
            if len(set(self._vector_perm(g))) != module.order:
                raise ValidationError(f"matrix for {g} is not invertible")
        # coordinate maps for actions arising from conjugation on a subgroup
        self.to_vector = to_vector
        self.to_element = to_element
        self._kernel = None

    @classmethod
    def _from_table(cls, group, module, table, to_vector=None, to_element=None):
        obj = cls.__new__(cls)
        obj.group = group
        obj.module = module
        obj._mat = table
        obj._perm_cache = {}
        obj._elements = module.elements()
        obj.to_vector = to_vector
        obj.to_element = to_element
        obj._kernel = None
        return obj

    @property
    def prime(self):
        return self.module.prime

    def matrix(self, g):
        return self._mat[g]

    def act(self, g, v):
        M = self._mat[g]
        orders = self.module.cyclic_orders
        r = len(orders)
        return tuple(sum(v[i] * M[i][j] for i in range(r)) % orders[j] for j in range(r))

    def _vector_perm(self, g):
        perm = self._perm_cache.get(g)
        if perm is None:
            idx = self.module.index
            perm = tuple(idx(self.act(g, v)) for v in self._elements)
            self._perm_cache[g] = perm
        return perm

    def fixed_indices(self, gens):
        fixed = None
        for g in gens:
            perm = self._vector_perm(g)
            here = {i for i, j in enumerate(perm) if i == j}
            fixed = here if fixed is None else fixed & here
        if fixed is None:
            return set(range(self.module.order))
        return fixed

    @property
    def kernel(self):
        if self._kernel is None:
            r = self.module.rank
            ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
            self._kernel = Group(self.group.degree,
                                 [g for g in self.group.sorted_elements if self._mat[g] == ident])
        return self._kernel

    def is_faithful(self):
        return self.kernel.order == 1

    def restrict(self, H):
        if not H <= self.group:
            raise ValidationError("subgroup not contained in the acting group")
        table = {h: self._mat[h] for h in H.elements}
        return Action._from_table(H, self.module, table, self.to_vector, self.to_element)

    def faithful_quotient(self):
        """The induced faithful action of G/ker, with the Quotient used (None if faithful)."""
        if self.is_faithful():
            return self, None
        q = quotient_action(self.group, self.kernel)
        table = {x: self._mat[q.section(x)] for x in q.group.elements}
        return Action._from_table(q.group, self.module, table), q


def abelian_basis(D):
    """Independent generators of an abelian permutation group, with their orders.

    Repeatedly take an element whose image in D/<chosen> has maximal order, then
    move it inside its coset to an element of exactly that order.
    """
    if not D.is_abelian():
        raise ValidationError("subgroup is not abelian")
    ident = D.identity
    basis = []
    spanned = {ident}
    while len(spanned) < D.order:
        best, best_ord = None, 0
        for x in D.sorted_elements:
            if x in spanned:
                continue
            k, y = 1, x
            while y not in spanned:
                y = y * x
                k += 1
            if k > best_ord:
                best, best_ord = x, k
        for s in sorted(spanned):
            y = best * s
            if (y ** best_ord).is_identity():
                break
        else:
            raise ConsistencyError("basis peeling failed to find a lift")
        basis.append(y)
        spanned = set(generate(D.degree, basis))
    orders = [b.order() for b in basis]
    size = 1
    for q in orders:
        size *= q
    if size != D.order:
        raise ConsistencyError("peeled basis is not independent")
    return basis, orders


def coordinates(D, basis, orders):
    """Map each element of D to its coordinate vector w.r.t. the basis."""
    to_vector = {}
    for coeffs in itertools.product(*(range(q) for q in orders)):
        x = D.identity
        for b, c in zip(basis, coeffs):
            x = x * (b ** c)
        to_vector[x] = tuple(coeffs)
    if len(to_vector) != D.order:
        raise ConsistencyError("coordinates are not a bijection")
    return to_vector


def internal_action(Gamma, D):
    """Conjugation action of Gamma on an abelian normal p-subgroup D."""
    if not D <= Gamma:
        raise ValidationError("D is not a subgroup of Gamma")
    if not D.is_abelian():
        raise ValidationError("D is not abelian")
    if not is_normal(Gamma, D):
        raise ValidationError("D is not normal in Gamma")
    n = D.order
    if n == 1:
        raise ValidationError("D is trivial")
    p = min(d for d in range(2, n + 1) if n % d == 0)
    m = n
    while m % p == 0:
        m //= p
    if m != 1:
        raise ValidationError("D is not a p-group")
    basis, orders = abelian_basis(D)
    to_vector = coordinates(D, basis, orders)
    to_element = {v: x for x, v in to_vector.items()}
    module = PAbelianGroup(p, tuple(orders))
    mats = [[to_vector[b ^ g] for b in basis] for g in Gamma.gens]
    act = Action(Gamma, module, mats, to_vector=to_vector, to_element=to_element)
    kernel = centralizer(Gamma, D)
    if act.kernel != kernel:
        raise ConsistencyError("action kernel differs from the centralizer")
    return act


def subgroup_elements(act, H):
    return H.elements if isinstance(H, Group) else H


def fixed_points(act, H, within=None):
    """C_D(H), or C_U(H) for a module subgroup U."""
    gens = H.gens if isinstance(H, Group) else list(H)
    elems = act._elements
    fixed = frozenset(elems[i] for i in act.fixed_indices(gens))
    if within is not None:
        fixed = fixed & frozenset(within)
    return fixed


def commutator_subgroup(act, A, U=None):
    """[U, A]: generated by v^{-1} v^a for v in U, a in A."""
    module = act.module
    pool = act._elements if U is None else sorted(U)
    elems = A.elements if isinstance(A, Group) else A
    gens = {module.sub(act.act(a, v), v) for a in elems for v in pool}
    return span(module, sorted(gens))


def commutator_series(act, A, depth):
    if depth < 1:
        raise ValidationError("depth must be at least 1")
    U = None
    for _ in range(depth):
        U = commutator_subgroup(act, A, U)
    return U


def is_quadratic(act, A):
    first = commutator_subgroup(act, A)
    if len(first) == 1:
        return False
    return len(commutator_subgroup(act, A, first)) == 1


def is_invariant(act, U, H):
    gens = H.gens if isinstance(H, Group) else list(H)
    return all(act.act(g, v) in U for g in gens for v in U)


def right_coset_reps(K, H):
    """Minimal element of each right coset Hg of H in K."""
    covered = set()
    reps = []
    for g in K.sorted_elements:
        if g in covered:
            continue
        reps.append(g)
        covered.update(h * g for h in H.elements)
    return reps


def norm_map(act, H, v, K=None, reps=None):
    """The norm from H to K (default: the acting group) applied to v in C_D(H)."""
    K = act.group if K is None else K
    if not H <= K:
        raise ValidationError("H is not contained in K")
    if any(act.act(h, v) != v for h in H.gens):
        raise ValidationError("vector is not fixed by H")
    if reps is None:
        reps = right_coset_reps(K, H)
    module = act.module
    total = module.zero
    for r in reps:
        total = module.add(total, act.act(r, v))
    if any(act.act(g, total) != total for g in K.gens):
        raise ConsistencyError("norm is not fixed by the larger group")
    return total


@dataclass(frozen=True)
class Transversal:
    base_set: frozenset
    reps: tuple

    def __post_init__(self):
        products = {x * y for x in self.base_set for y in self.reps}
        if len(products) != len(self.base_set) * len(self.reps):
            raise ValidationError("product map X x Y -> G is not injective")

    def check_covers(self, G):
        products = {x * y for x in self.base_set for y in self.reps}
        if products != set(G.elements):
            raise ValidationError("product map X x Y -> G is not surjective")
        return True


def find_transversal(X, G):
    """A set Y with X x Y -> G bijective; exact-cover backtracking in element order."""
    X = sorted(X)
    n = G.order
    if n % len(X):
        raise ValidationError("|X| does not divide |G|")
    elems = G.sorted_elements
    X_inv = [x.inverse() for x in X]

    def extend(covered, chosen):
        if len(covered) == n:
            return list(chosen)
        target = next(g for g in elems if g not in covered)
        for xi in X_inv:
            y = xi * target
            block = {x * y for x in X}
            if block & covered:
                continue
            chosen.append(y)
            found = extend(covered | block, chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    reps = extend(frozenset(), [])
    if reps is None:
        raise ValidationError("no transversal exists for X in G")
    T = Transversal(frozenset(X), tuple(reps))
    T.check_covers(G)
    return T


def norm_map_transversal(act, transversal, v):
    """v -> sum over y in Y of v^y, for v fixed by every element of X."""
    if any(act.act(x, v) != v for x in transversal.base_set):
        raise ValidationError("vector is not fixed by X")
    module = act.module
    total = module.zero
    for y in transversal.reps:
        total = module.add(total, act.act(y, v))
    return total


# -- constructors ---------------------------------------------------------

def trivial_action(G, module):
    r = module.rank
    ident = [[int(i == j) for j in range(r)] for i in range(r)]
    return Action(G, module, [ident for _ in G.gens])


def direct_sum(first, second):
    """Same group acting on the direct sum of two modules."""
    if first.group != second.group or first.prime != second.prime:
        raise ValidationError("direct sum needs the same group and prime")
    G = first.group
    module = PAbelianGroup(first.prime, first.module.cyclic_orders + second.module.cyclic_orders)
    r1, r2 = first.module.rank, second.module.rank
    mats = []
    for g in G.gens:
        A, B = first.matrix(g), second.matrix(g)
        M = [list(row) + [0] * r2 for row in A] + [[0] * r1 + list(row) for row in B]
        mats.append(M)
    return Action(G, module, mats)


def even_subset_action(G, blocks):
    """G acting on the even-size subsets of each block (blocks must be G-invariant).

    For a block of odd size m, the even subsets form an F2-space of dimension
    m - 1; coordinates are the memberships of all but the last point.
    """
    blocks = [sorted(b) for b in blocks]
    for b in blocks:
        if len(b) % 2 == 0 or len(b) < 3:
            raise ValidationError("blocks must have odd size at least 3")
    offsets = []
    r = 0
    for b in blocks:
        offsets.append(r)
        r += len(b) - 1
    module = PAbelianGroup(2, (2,) * r)

    def coords(subset):
        v = [0] * r
        for b, off in zip(blocks, offsets):
            inside = subset & set(b)
            if len(inside) % 2:
                raise ValidationError("permutation does not preserve the blocks")
            for i, pt in enumerate(b[:-1]):
                v[off + i] = int(pt in inside)
        return v

    mats = []
    for g in G.gens:
        rows = []
        for b in blocks:
            for pt in b[:-1]:
                image = {g[pt], g[b[-1]]}
                rows.append(coords(image))
        mats.append(rows)
    return Action(G, module, mats)


def linear_action(module, mats, name=None):
    """The group generated by the given automorphisms, as permutations of D - {0}."""
    mats = [check_matrix(module, M) for M in mats]
    elements = [v for v in module.elements() if any(v)]
    pos = {v: i for i, v in enumerate(elements)}
    orders = module.cyclic_orders
    r = module.rank

    def apply(M, v):
        return tuple(sum(v[i] * M[i][j] for i in range(r)) % orders[j] for j in range(r))

    perms = []
    for M in mats:
        images = [pos[apply(M, v)] for v in elements]
        perms.append(Permutation(images))
    degree = len(elements)
    G = Group(degree, generate(degree, perms), gens=perms, name=name)
    act = Action(G, module, mats)
    if not act.is_faithful():
        raise ConsistencyError("linear action should be faithful")
    return act


def semidirect_product(act):
    """D : G as affine permutations of the elements of D.

    Returns (Gamma, translations) where translations is the normal subgroup D.
    """
    module = act.module
    elems = module.elements()
    pos = {v: i for i, v in enumerate(elems)}
    G = act.group
    degree = len(elems)
    gens = []
    for g in G.gens:
        gens.append(Permutation([pos[act.act(g, v)] for v in elems]))
    basis = []
    for i in range(module.rank):
        e = tuple(int(j == i) for j in range(module.rank))
        basis.append(Permutation([pos[module.add(v, e)] for v in elems]))
    Gamma = Group(degree, generate(degree, gens + basis), gens=gens + basis)
    translations = Group(degree, generate(degree, basis), gens=basis)
    return Gamma, translations


def composition_series(act):
    """0 = M_0 < M_1 < ... < M_k = D, each M_{i+1}/M_i a minimal invariant section."""
    module = act.module
    G = act.group
    chain = [frozenset([module.zero])]
    full = frozenset(act._elements)
    while chain[-1] != full:
        M = chain[-1]
        best = None
        for v in act._elements:
            if v in M or module.scale(module.prime, v) not in M:
                continue
            orbit = {v}
            frontier = [v]
            while frontier:
                new = []
                for w in frontier:
                    for g in G.gens:
                        u = act.act(g, w)
                        if u not in orbit:
                            orbit.add(u)
                            new.append(u)
                frontier = new
            N = span(module, sorted(orbit), start=M)
            if best is None or len(N) < len(best):
                best = N
        chain.append(best)
    return chain


def norm_is_trivial_on_section(act, K, A, lower, upper):
    """Whether the norm from K to A kills the K-fixed points of upper/lower."""
    module = act.module
    reps = right_coset_reps(A, K)
    lower = frozenset(lower)
    for v in upper:
        if v in lower:
            continue
        if any(module.sub(act.act(k, v), v) not in lower for k in K.gens):
            continue
        total = module.zero
        for r in reps:
            total = module.add(total, act.act(r, v))
        if total not in lower:
            return False
    return True


def parse_module_lines(lines, group):
    """Parse ``prime``, ``orders`` and ``mat`` lines for the group's generators."""
    prime = orders = None
    mats = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        if word == "prime":
            prime = int(rest)
        elif word == "orders":
            orders = tuple(int(x) for x in rest.split())
        elif word == "mat":
            mats.append([int(x) for x in re.split(r"[\s,]+", rest.strip()) if x])
    if prime is None or orders is None:
        raise ValidationError("module description needs prime and orders lines")
    module = PAbelianGroup(prime, orders)
    r = module.rank
    shaped = []
    for flat in mats:
        if len(flat) != r * r:
            raise ValidationError(f"mat line needs {r * r} entries, got {len(flat)}")
        shaped.append([flat[i * r:(i + 1) * r] for i in range(r)])
    return Action(group, module, shaped)
