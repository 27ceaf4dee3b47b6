"""Orbit categories, the center functor and higher limits over it.

Morphisms of the orbit category are classes of conjugation maps modulo
Inn(Q); a map c_g: P -> Q (P^g <= Q) determines the double coset
C_Gamma(P) g Q of the transporter, and these double cosets are exactly the
morphism classes.  Cochains are normalized: they live on tuples of
composable non-identity morphisms.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .errors import CapExceeded, ConsistencyError, ValidationError
from .fusion import FusionSystem, validate_interval
from .linalg import Ring, image_log_order, kernel_with_order, subquotient
from .modaction import abelian_basis, coordinates, fixed_points
from .permgroup import Group, center, centralizer, normalizer

DEFAULT_COCHAIN_CAP = 10 ** 6
DEFAULT_MAX_DEGREE = 3
# dense matrix assembly limit (entries); beyond this the computation is refused
DENSE_ENTRY_CAP = 4 * 10 ** 7


class Morphism:
    __slots__ = ("src", "tgt", "index", "rep", "is_identity")

    def __init__(self, src, tgt, index, rep, is_identity):
        self.src = src
        self.tgt = tgt
        self.index = index
        self.rep = rep
        self.is_identity = is_identity

    @property
    def key(self):
        return (self.src, self.tgt, self.index)

    def __repr__(self):
        return f"[c_{self.rep}: {self.src}->{self.tgt}]"


class OrbitCategory:
    """Orbit category on a collection of subgroups of S.

    With ``skeletal=True`` the objects are the fully normalized class
    representatives; otherwise every member of the collection is an object.
    """

    def __init__(self, F, collection, skeletal=True):
        self.F = F
        self.skeletal = skeletal
        classes = F.f_classes(collection)
        if skeletal:
            objs = [c[0] for c in classes]
        else:
            objs = sorted((P for c in classes for P in c), key=lambda H: H.key)
        self.objects = objs
        self.index = {P.elements: i for i, P in enumerate(objs)}
        self.morphisms = {}
        self._lookup = {}
        Gamma = F.Gamma
        for i, P in enumerate(objs):
            C = centralizer(Gamma, P).elements
            for j, Q in enumerate(objs):
                T = F.transporter(P, Q)
                table = {}
                mors = []
                for g in sorted(T):
                    if g in table:
                        continue
                    m = Morphism(i, j, len(mors), g, False)
                    cls = {c * g * x for c in C for x in Q.elements}
                    if not cls <= T:
                        raise ConsistencyError("double coset leaves the transporter")
                    for h in cls:
                        table[h] = m
                    mors.append(m)
                if i == j:
                    ident = table[Gamma.identity]
                    ident.is_identity = True
                self.morphisms[(i, j)] = mors
                self._lookup[(i, j)] = table
        self.out = [[m for j in range(len(objs)) for m in self.morphisms[(i, j)]
                     if not m.is_identity] for i in range(len(objs))]

    def __len__(self):
        return len(self.objects)

    def mor(self, i, j):
        return self.morphisms[(i, j)]

    def identity(self, i):
        return self._lookup[(i, i)][self.F.Gamma.identity]

    def compose(self, m1, m2):
        """m1 followed by m2."""
        if m1.tgt != m2.src:
            raise ConsistencyError("morphisms are not composable")
        return self._lookup[(m1.src, m2.tgt)][m1.rep * m2.rep]

    def classify(self, i, j, g):
        """Class of c_g from object i to object j."""
        return self._lookup[(i, j)][g]

    def check_associative(self, limit=None):
        n = 0
        for i in range(len(self)):
            for j in range(len(self)):
                for m1 in self.mor(i, j):
                    for k in range(len(self)):
                        for m2 in self.mor(j, k):
                            m12 = self.compose(m1, m2)
                            for l in range(len(self)):
                                for m3 in self.mor(k, l):
                                    a = self.compose(m12, m3)
                                    b = self.compose(m1, self.compose(m2, m3))
                                    if a is not b:
                                        return False
                                    n += 1
                                    if limit is not None and n >= limit:
                                        return True
        return True

    def chains(self, k, sources):
        """Normalized k-chains (source, m1, ..., mk) whose source is in ``sources``."""
        out = []
        for s in sorted(sources):
            if k == 0:
                out.append((s,))
                continue
            stack = [((s,), s)]
            while stack:
                chain, last = stack.pop()
                for m in reversed(self.out[last]):
                    c = chain + (m,)
                    if len(c) == k + 1:
                        out.append(c)
                    else:
                        stack.append((c, m.tgt))
        return out


def build_orbit_category(F, collection, skeletal=True):
    for P in collection:
        if not F.is_centric(P):
            raise ValidationError("collection contains a non-centric subgroup")
    cat = OrbitCategory(F, collection, skeletal=skeletal)
    return cat


def up_closure(F, members):
    found = {}
    for P in members:
        for Q in F.overgroups(P):
            found.setdefault(Q.elements, Q)
    return sorted(found.values(), key=lambda H: H.key)


class CenterFunctor:
    """P -> Z(P) for P in R, trivial otherwise; [c_g]: Z(Q) -> Z(P), z -> g z g^-1."""

    def __init__(self, category, R):
        self.category = category
        rset = {P.elements for P in R}
        self.support = [i for i, P in enumerate(category.objects) if P.elements in rset]
        self.in_support = [False] * len(category)
        p = category.F.prime
        self.prime = p
        self.basis = {}
        self.exps = {}
        self.coords = {}
        for i in self.support:
            self.in_support[i] = True
            Z = center(category.objects[i])
            basis, orders = abelian_basis(Z)
            self.basis[i] = basis
            self.exps[i] = [_log(o, p) for o in orders]
            self.coords[i] = coordinates(Z, basis, orders)
        self.N = max((e for es in self.exps.values() for e in es), default=1)
        self._mats = {}

    def rank(self, i):
        return len(self.basis.get(i, ()))

    def act(self, m, z):
        cat = self.category
        if not self.in_support[m.src]:
            return cat.F.Gamma.identity
        if not self.in_support[m.tgt]:
            return cat.F.Gamma.identity
        g = m.rep
        return g * z * g.inverse()

    def matrix(self, m):
        """Integer matrix of [m] from coordinates of Z(tgt) to those of Z(src)."""
        M = self._mats.get(m.key)
        if M is None:
            r0, r1 = self.rank(m.src), self.rank(m.tgt)
            M = np.zeros((r0, r1), dtype=np.int64)
            if r0 and r1:
                g = m.rep
                ginv = g.inverse()
                for j, b in enumerate(self.basis[m.tgt]):
                    try:
                        M[:, j] = self.coords[m.src][g * b * ginv]
                    except KeyError:
                        raise ConsistencyError("center is not mapped into the center") from None
            self._mats[m.key] = M
        return M

    def element(self, i, coeffs):
        x = self.category.F.Gamma.identity
        for b, c in zip(self.basis.get(i, ()), coeffs):
            x = x * (b ** int(c))
        return x

    def check_functorial(self):
        cat = self.category
        for i in range(len(cat)):
            for j in range(len(cat)):
                for m1 in cat.mor(i, j):
                    for k in range(len(cat)):
                        for m2 in cat.mor(j, k):
                            m12 = cat.compose(m1, m2)
                            for z in _center_elems(self, k):
                                if self.act(m12, z) != self.act(m1, self.act(m2, z)):
                                    return False
        return True


def _center_elems(functor, i):
    if not functor.in_support[i]:
        return [functor.category.F.Gamma.identity]
    return list(functor.coords[i])


def _log(n, p):
    k = 0
    while n > 1:
        if n % p:
            raise ValidationError(f"{n} is not a power of {p}")
        n //= p
        k += 1
    return k


class Cochain:
    """Normalized cochain: chain -> element of the functor value at the source."""

    def __init__(self, degree, values=None):
        self.degree = degree
        self.values = dict(values or {})
        self._identity = None

    def __call__(self, chain, identity):
        return self.values.get(chain, identity)

    def is_trivial(self):
        return all(v.is_identity() for v in self.values.values())

    def table(self, functor):
        """Morphism-tuple identifiers mapped to coordinates, for dumps."""
        out = {}
        for chain, v in self.values.items():
            if v.is_identity():
                continue
            ident = [chain[0]] + [list(m.key) for m in chain[1:]]
            out[repr(ident)] = list(functor.coords[chain[0]][v])
        return out


def coboundary(functor, t):
    """The alternating bar differential written multiplicatively."""
    cat = functor.category
    one = cat.F.Gamma.identity
    k = t.degree
    out = {}
    for c in cat.chains(k + 1, functor.support):
        s, ms = c[0], c[1:]
        first = (ms[0].tgt,) + ms[1:]
        val = functor.act(ms[0], t(first, one))
        for i in range(1, k + 1):
            comp = cat.compose(ms[i - 1], ms[i])
            if comp.is_identity:
                continue
            x = t((s,) + ms[:i - 1] + (comp,) + ms[i + 1:], one)
            val = val * (x.inverse() if i % 2 else x)
        last = t((s,) + ms[:-1], one)
        val = val * (last.inverse() if (k + 1) % 2 else last)
        if not val.is_identity():
            out[c] = val
    return Cochain(k + 1, out)


class CochainComplex:
    """The normalized cochain complex of a center functor, embedded in free Z/p^N-modules."""

    def __init__(self, functor, max_degree=DEFAULT_MAX_DEGREE, cap=DEFAULT_COCHAIN_CAP, N=None):
        self.functor = functor
        self.max_degree = max_degree
        self.cap = cap
        self.ring = Ring(functor.prime, N or functor.N)
        self._chains = {}
        self._offsets = {}
        self._matrices = {}
        self._results = {}

    def chains(self, k):
        if k not in self._chains:
            if k > self.max_degree + 1:
                raise ValidationError(f"degree {k} exceeds the configured maximum")
            cs = self.functor.category.chains(k, self.functor.support)
            offs = {}
            n = 0
            for c in cs:
                offs[c] = n
                n += self.functor.rank(c[0])
                if n > self.cap:
                    raise CapExceeded(f"cochain space in degree {k} exceeds {self.cap} coordinates")
            self._chains[k] = cs
            self._offsets[k] = (offs, n)
        return self._chains[k]

    def dim(self, k):
        self.chains(k)
        return self._offsets[k][1]

    def offset(self, k, chain):
        self.chains(k)
        return self._offsets[k][0].get(chain)

    def exponents(self, k):
        out = []
        for c in self.chains(k):
            out.extend(self.functor.exps[c[0]])
        return np.array(out, dtype=np.int64)

    def embedding(self, k):
        p, N = self.ring.p, self.ring.N
        return np.array([p ** (N - e) for e in self.exponents(k)], dtype=np.int64)

    def sparse(self, k):
        """d: C^k -> C^{k+1} as a sparse matrix; columns are generator
        coordinates, rows embedded coordinates."""
        if k in self._matrices:
            return self._matrices[k]
        f = self.functor
        cat = f.category
        cols, rows = self.dim(k), self.dim(k + 1)
        q = self.ring.q
        emb = self.embedding(k + 1)
        offs_k = self._offsets[k][0]
        offs_k1 = self._offsets[k + 1][0]
        ri, ci, vals = [], [], []

        def block(row, col, M):
            r, c = np.nonzero(M)
            ri.extend((row + r).tolist())
            ci.extend((col + c).tolist())
            vals.extend(M[r, c].tolist())

        def diagonal(row, col, r0, sign):
            ri.extend(range(row, row + r0))
            ci.extend(range(col, col + r0))
            vals.extend([sign] * r0)

        for c in self.chains(k + 1):
            s, ms = c[0], c[1:]
            r0 = f.rank(s)
            row = offs_k1[c]
            col = offs_k.get((ms[0].tgt,) + ms[1:])
            if col is not None:
                block(row, col, f.matrix(ms[0]))
            for i in range(1, k + 1):
                comp = cat.compose(ms[i - 1], ms[i])
                if comp.is_identity:
                    continue
                face = (s,) + ms[:i - 1] + (comp,) + ms[i + 1:]
                diagonal(row, offs_k[face], r0, 1 if i % 2 == 0 else -1)
            diagonal(row, offs_k[(s,) + ms[:-1]], r0, 1 if (k + 1) % 2 == 0 else -1)
        A = sparse.coo_matrix((np.array(vals, dtype=np.int64), (ri, ci)),
                              shape=(rows, cols)).tocsr()
        A.sum_duplicates()
        A = sparse.diags(emb) @ A
        A.data %= q
        A.eliminate_zeros()
        self._matrices[k] = A
        return A

    def matrix(self, k):
        """Dense form of the differential out of degree k."""
        cols, rows = self.dim(k), self.dim(k + 1)
        if rows * cols > DENSE_ENTRY_CAP:
            raise CapExceeded(f"differential in degree {k} is too large ({rows} x {cols})")
        return self.sparse(k).toarray() % self.ring.q

    def to_vector(self, k, t):
        """Embedded coordinate vector of a cochain."""
        f = self.functor
        one = f.category.F.Gamma.identity
        v = np.zeros(self.dim(k), dtype=np.int64)
        for c in self.chains(k):
            x = t(c, one)
            if x.is_identity():
                continue
            off = self.offset(k, c)
            v[off:off + f.rank(c[0])] = f.coords[c[0]][x]
        return v * self.embedding(k) % self.ring.q

    def to_cochain(self, k, v):
        f = self.functor
        emb = self.embedding(k)
        if np.any(np.asarray(v) % emb):
            raise ConsistencyError("vector is not in the embedded cochain module")
        coeffs = np.asarray(v) // emb
        vals = {}
        for c in self.chains(k):
            off = self.offset(k, c)
            x = f.element(c[0], coeffs[off:off + f.rank(c[0])])
            if not x.is_identity():
                vals[c] = x
        return Cochain(k, vals)

    def apply(self, k, v):
        """d applied to an embedded vector of C^k."""
        emb = self.embedding(k)
        coeffs = np.asarray(v) // emb
        return self.sparse(k) @ coeffs % self.ring.q

    def cocycles(self, k):
        if self.dim(k) == 0:
            return np.zeros((0, 0), dtype=np.int64)
        K, _ = kernel_with_order(self.ring, self.sparse(k))
        return self.embedding(k)[:, None] * K % self.ring.q

    def coboundaries(self, k):
        if k == 0:
            return np.zeros((self.dim(0), 0), dtype=np.int64)
        return self.matrix(k - 1)

    def cohomology(self, k):
        if k not in self._results:
            Z = self.cocycles(k)
            B = self.coboundaries(k)
            self._results[k] = subquotient(self.ring, Z, B)
        return self._results[k]

    def boundary_log_order(self, k):
        """log_p of the order of the coboundaries in degree k."""
        if k == 0 or self.dim(k - 1) == 0:
            return 0
        key = ("B", k)
        if key not in self._results:
            self._results[key] = image_log_order(self.ring, self.sparse(k - 1))
        return self._results[key]

    def image_log_order(self, k, vecs):
        """log_p of the order of the image of the given cocycles in H^k."""
        vecs = [np.asarray(v, dtype=np.int64) % self.ring.q for v in vecs]
        vecs = [v for v in vecs if np.any(v)]
        if not vecs:
            return 0
        V = sparse.csr_matrix(np.stack(vecs, axis=1))
        if k == 0 or self.dim(k - 1) == 0:
            return image_log_order(self.ring, V)
        M = sparse.hstack([V, self.sparse(k - 1)], format="csr")
        return image_log_order(self.ring, M) - self.boundary_log_order(k)

    def is_coboundary(self, k, v):
        return self.image_log_order(k, [v]) == 0


@dataclass
class CohomologyResult:
    k: int
    invariant_factors: list
    witnesses: list = field(default_factory=list)
    cochain_dims: list = field(default_factory=list)
    complex: object = None

    @property
    def order(self):
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def to_json(self):
        return {"k": self.k, "invariant_factors": list(self.invariant_factors),
                "cochain_dims": list(self.cochain_dims)}


def limit_complex(F, R, max_degree=DEFAULT_MAX_DEGREE, cap=DEFAULT_COCHAIN_CAP,
                  skeletal=True, objects=None):
    """Cochain complex computing L^*(F; R) for an F-invariant interval R of centrics."""
    info = validate_interval(F, R)
    if R and not info.is_interval:
        raise ValidationError("R is not an interval")
    if R and not info.f_invariant:
        raise ValidationError("R is not F-invariant")
    if objects is None:
        objects = up_closure(F, R)
    cat = build_orbit_category(F, objects, skeletal=skeletal)
    return CochainComplex(CenterFunctor(cat, R), max_degree=max_degree, cap=cap)


def higher_limit(F, R, k, max_degree=DEFAULT_MAX_DEGREE, cap=DEFAULT_COCHAIN_CAP,
                 skeletal=True, complex=None):
    if k < 0 or k > max_degree:
        raise ValidationError(f"k must lie between 0 and {max_degree}")
    if not R:
        return CohomologyResult(k, [], [], [0] * (k + 2))
    cx = complex or limit_complex(F, R, max_degree=max_degree, cap=cap, skeletal=skeletal)
    H = cx.cohomology(k)
    witnesses = []
    for w in H.witnesses:
        t = cx.to_cochain(k, w)
        if not coboundary(cx.functor, t).is_trivial():
            raise ConsistencyError("witness is not a cocycle")
        if cx.is_coboundary(k, w):
            raise ConsistencyError("witness is a coboundary")
        witnesses.append(t)
    dims = [cx.dim(j) for j in range(k + 2)]
    return CohomologyResult(k, list(H.invariant_factors), witnesses, dims, cx)


# -- cocycles on the full category ---------------------------------------

class FullCocycle:
    """Evaluate a skeletal 1-cocycle on arbitrary maps c_g: P -> Q between objects.

    Each subgroup P is moved to its representative by a fixed a_P with
    P^{a_P} = rep(P); the value at c_g is t at the class of
    c_{a_P^-1 g a_Q}, transported back to Z(P) by a_P.
    """

    def __init__(self, functor, t):
        if t.degree != 1:
            raise ValidationError("expected a 1-cochain")
        self.functor = functor
        self.t = t
        self.cat = functor.category
        self.one = self.cat.F.Gamma.identity
        self._alpha = {}

    def alpha(self, P):
        a = self._alpha.get(P.elements)
        if a is None:
            F = self.cat.F
            rep = F.representative(P)
            i = self.cat.index.get(rep.elements)
            if i is None:
                raise ValidationError("subgroup is not an object of the category")
            a = min(F.transporter(P, rep))
            self._alpha[P.elements] = (a, i)
            a = (a, i)
        return a

    def __call__(self, P, g, Q):
        aP, i = self.alpha(P)
        aQ, j = self.alpha(Q)
        m = self.cat.classify(i, j, aP.inverse() * g * aQ)
        if m.is_identity:
            return self.one
        v = self.t((i, m), self.one)
        return aP * v * aP.inverse()

    def inclusion(self, P, Q):
        return self(P, self.one, Q)


def inclusion_normalize(functor, t):
    """t'(c_g: P -> Q) = t(c_g) * u(Q)^(c_g^-1) * u(P)^-1 with u(P) = t([incl_P^S])."""
    if not coboundary(functor, t).is_trivial():
        raise ValidationError("t is not a cocycle")
    cat = functor.category
    S = cat.F.S
    full = FullCocycle(functor, t)
    one = full.one
    u = {i: full.inclusion(cat.objects[i], S) for i in functor.support}
    vals = {}
    for i in functor.support:
        for m in cat.out[i]:
            uQ = u.get(m.tgt, one)
            x = t((i, m), one) * (m.rep * uQ * m.rep.inverse()) * u[i].inverse()
            if not x.is_identity():
                vals[(i, m)] = x
    return Cochain(1, vals)


def is_inclusion_normalized(functor, t, subgroups):
    """t vanishes on every inclusion P <= Q between the given subgroups."""
    full = FullCocycle(functor, t)
    for P in subgroups:
        for Q in subgroups:
            if P <= Q and not full.inclusion(P, Q).is_identity():
                return False
    return True


# -- localities and rigid maps --------------------------------------------

@dataclass
class Locality:
    gamma_star: list
    Q: list

    def __contains__(self, g):
        return g in self._set

    def __post_init__(self):
        self._set = frozenset(self.gamma_star)


def _as_fusion(setup_or_F):
    return setup_or_F if isinstance(setup_or_F, FusionSystem) else setup_or_F.fusion


def locality(setup, Q):
    F = _as_fusion(setup)
    qsets = {P.elements for P in Q}
    if F.S.elements not in qsets:
        raise ValidationError("S is not in Q")
    S = F.S
    star = []
    for g in F.Gamma.sorted_elements:
        Pg = frozenset(x for x in S.elements if x ^ g in S.elements)
        if Pg in qsets:
            star.append(g)
    return Locality(star, list(Q))


def fixed_points_on_locality(setup, loc):
    return fixed_points(setup.action, Group(setup.Gamma.degree, loc.gamma_star))


class RigidMap:
    """g -> t([c_g]) g on Gamma*, for an inclusion-normalized 1-cocycle t of Z^Q."""

    def __init__(self, functor, t, loc):
        self.functor = functor
        self.full = FullCocycle(functor, t)
        self.loc = loc
        F = functor.category.F
        self.F = F
        self._groups = {}
        self._cache = {}

    def source(self, g):
        S = self.F.S
        key = frozenset(x for x in S.elements if x ^ g in S.elements)
        P = self._groups.get(key)
        if P is None:
            P = Group(S.degree, key)
            self._groups[key] = P
        return P

    def __call__(self, g):
        val = self._cache.get(g)
        if val is None:
            if g not in self.loc:
                raise ValidationError("element is not in Gamma*")
            P = self.source(g)
            S = self.F.S
            x = self.full(P, g, S) * self.full.inclusion(P, S).inverse()
            val = x * g
            self._cache[g] = val
        return val


def rigid_map(setup, Q, t, functor=None):
    F = _as_fusion(setup)
    if functor is None:
        raise ValidationError("a center functor for Q is required")
    loc = locality(F, Q)
    if not coboundary(functor, t).is_trivial():
        raise ValidationError("t is not a cocycle")
    if not is_inclusion_normalized(functor, t, functor.category.objects):
        raise ValidationError("t is not inclusion-normalized")
    return RigidMap(functor, t, loc)


def admissible_chains(F, Q, loc, length):
    """Tuples (g1..gn), n <= length, with S ∩ S^(g1^-1) ∩ ... ∩ S^((g1..gn)^-1) in Q."""
    qsets = {P.elements for P in Q}
    S = F.S
    out = []
    start = [((), F.Gamma.identity, S.elements)]
    frontier = start
    for _ in range(length):
        nxt = []
        for chain, prod, X in frontier:
            for g in loc.gamma_star:
                h = prod * g
                Y = frozenset(x for x in X if x ^ h in S.elements)
                if Y in qsets:
                    nxt.append((chain + (g,), h, Y))
        out.extend(c for c, _, _ in nxt)
        frontier = nxt
    return out


def check_rigid_map(tau, chains):
    """Identity on S and multiplicative on the given admissible chains."""
    F = tau.F
    if any(tau(s) != s for s in F.S.elements):
        return False
    for chain in chains:
        prod = F.Gamma.identity
        img = F.Gamma.identity
        for g in chain:
            prod = prod * g
            img = img * tau(g)
        if tau(prod) != img:
            return False
    return True


def local_conjugator(setup, Q, tau):
    F = _as_fusion(setup)
    if not F.is_fully_normalized(Q):
        raise ValidationError("Q is not fully normalized")
    N = normalizer(F.Gamma, Q)
    Z = center(F.normalizer_in_S(Q))
    for z in Z.sorted_elements:
        if all(tau(g) == g ^ z for g in N.sorted_elements):
            return z
    raise ConsistencyError("no element of Z(N_S(Q)) realizes the rigid map")


# -- long exact sequence --------------------------------------------------

@dataclass
class LESReport:
    orders: dict            # (name, k) -> log_p |L^k|
    nodes: list             # (node label, exact?)
    exact: bool


def _complement_check(F, Q, R):
    qs = {P.elements for P in Q}
    rs = {P.elements for P in R}
    if qs & rs:
        raise ValidationError("Q and R intersect")
    for X, name in ((Q, "Q"), (R, "R")):
        info = validate_interval(F, X)
        if X and not (info.is_interval and info.f_invariant):
            raise ValidationError(f"{name} is not an F-invariant interval")
    union = list(Q) + list(R)
    if union and not validate_interval(F, union).is_interval:
        raise ValidationError("Q ∪ R is not an interval")
    for A in Q:
        for B in R:
            if A <= B:
                raise ValidationError("a member of Q lies below a member of R")


def verify_les(F, Q, R, k_max=2, cap=DEFAULT_COCHAIN_CAP):
    """Check exactness of L^k(R) -> L^k(Q∪R) -> L^k(Q) -> L^{k+1}(R) through degree k_max."""
    _complement_check(F, Q, R)
    union = list(Q) + list(R)
    objs = up_closure(F, union)
    cat = build_orbit_category(F, objs)
    fB = CenterFunctor(cat, union)
    N = fB.N
    cxs = {name: CochainComplex(CenterFunctor(cat, X), max_degree=k_max + 1, cap=cap, N=N)
           for name, X in (("R", R), ("QR", union), ("Q", Q))}
    ring = cxs["QR"].ring
    big = cxs["QR"]

    def coord_map(name, k):
        # positions of name's coordinates inside the big complex
        cx = cxs[name]
        idx = []
        for c in cx.chains(k):
            off = big.offset(k, c)
            idx.extend(range(off, off + cx.functor.rank(c[0])))
        return np.array(idx, dtype=np.int64)

    def include(k, v):
        out = np.zeros(big.dim(k), dtype=np.int64)
        out[coord_map("R", k)] = v
        return out

    def project(k, v):
        return np.asarray(v)[coord_map("Q", k)]

    def lift(k, v):
        out = np.zeros(big.dim(k), dtype=np.int64)
        out[coord_map("Q", k)] = v
        return out

    def delta(k, v):
        w = big.apply(k, lift(k, v))
        if np.any(project(k + 1, w)):
            raise ConsistencyError("connecting map: lifted cocycle fails to land in R")
        return w[coord_map("R", k + 1)]

    H = {(name, k): cxs[name].cohomology(k) for name in cxs for k in range(k_max + 1)}
    orders = {key: h.log_size for key, h in H.items()}

    def image(target, k, vecs):
        # log-order of the image of the given cocycles in H^k(target)
        return cxs[target].image_log_order(k, vecs)

    def composite_zero(target, k, vecs):
        return cxs[target].image_log_order(k, vecs) == 0

    # maps out of each node, in sequence order
    seq = []
    for k in range(k_max + 1):
        seq.append((("R", k), ("QR", k), lambda v, k=k: include(k, v)))
        seq.append((("QR", k), ("Q", k), lambda v, k=k: project(k, v)))
        if k < k_max:
            seq.append((("Q", k), ("R", k + 1), lambda v, k=k: delta(k, v)))
    # the last node's outgoing map is delta into degree k_max + 1
    seq.append((("Q", k_max), ("R", k_max + 1), lambda v: delta(k_max, v)))

    nodes = []
    ok = True
    prev_img = 0
    for idx, (src, tgt, fmap) in enumerate(seq):
        gens = H[src].witnesses
        imgs = [fmap(w) for w in gens]
        out_img = image(tgt[0], tgt[1], imgs)
        if idx > 0:
            psrc, ptgt, pmap = seq[idx - 1]
            pimgs = [pmap(w) for w in H[psrc].witnesses]
            comp = composite_zero(tgt[0], tgt[1], [fmap(v) for v in pimgs])
        else:
            comp = True
        exact = comp and (prev_img + out_img == orders[src])
        nodes.append((f"L^{src[1]}({src[0]})", exact))
        ok = ok and exact
        prev_img = out_img
    return LESReport(orders, nodes, ok)


# -- restriction ----------------------------------------------------------

def restriction_injectivity_check(setup, Gamma0, Q, cap=DEFAULT_COCHAIN_CAP):
    """Whether restriction L^1(F; Q) -> L^1(F0; Q0) is injective."""
    from .permgroup import intersection, is_normal

    F = setup.fusion
    Gamma = setup.Gamma
    if not Gamma0 <= Gamma or not is_normal(Gamma, Gamma0):
        raise ValidationError("Gamma0 is not a normal subgroup")
    if not setup.Y <= Gamma0:
        raise ValidationError("Gamma0 does not contain Y")
    qsets = {P.elements for P in Q}
    if F.S.elements not in qsets:
        raise ValidationError("S is not in Q")
    for P in Q:
        if not setup.Y <= P:
            raise ValidationError("Q contains a subgroup not containing Y")
        if intersection(P, Gamma0).elements not in qsets:
            raise ValidationError("Q is not closed under intersection with Gamma0")
    S0 = intersection(F.S, Gamma0)
    F0 = FusionSystem(Gamma0, S0)
    Q0 = [P for P in Q if P <= Gamma0]
    cx = limit_complex(F, Q, max_degree=2, cap=cap)
    H = cx.cohomology(1)
    if H.log_size == 0:
        return True
    cx0 = limit_complex(F0, Q0, max_degree=2, cap=cap, objects=up_closure(F0, Q0))
    cx0 = CochainComplex(cx0.functor, max_degree=2, cap=cap, N=max(cx.ring.N, cx0.ring.N))
    f0 = cx0.functor
    cat0 = f0.category
    images = []
    for w in H.witnesses:
        t = cx.to_cochain(1, w)
        full = FullCocycle(cx.functor, t)
        vals = {}
        for i in f0.support:
            P = cat0.objects[i]
            for m in cat0.out[i]:
                x = full(P, m.rep, cat0.objects[m.tgt])
                if not x.is_identity():
                    vals[(i, m)] = x
        r = Cochain(1, vals)
        if not coboundary(f0, r).is_trivial():
            raise ConsistencyError("restricted cochain is not a cocycle")
        images.append(cx0.to_vector(1, r))
    img = cx0.image_log_order(1, images)
    # sizes are compared as p-logs; the source lives over a possibly smaller N
    return img == H.log_size
