"""Linear algebra over Z/p^N.

Every finite abelian p-group of exponent dividing p^N embeds in a free
Z/p^N-module, so submodules, kernels and quotients can be handled with a
Smith normal form whose pivots are entries of minimal p-adic valuation.
Matrices are numpy int64 arrays whose columns are vectors.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import CapExceeded, ConsistencyError

# largest column count handed to the dense Smith form
SMITH_COLUMN_CAP = 3000


class Ring:
    """Z/p^N with a lookup table of valuations."""

    def __init__(self, p, N):
        self.p = p
        self.N = N
        self.q = p ** N
        vals = np.full(self.q, N, dtype=np.int64)
        for x in range(1, self.q):
            v, y = 0, x
            while y % p == 0:
                y //= p
                v += 1
            vals[x] = v
        self.vals = vals

    def zeros(self, m, n):
        return np.zeros((m, n), dtype=np.int64)


@dataclass
class Smith:
    """R A C = diag(p^a_0, ..., p^a_{r-1}, 0, ...), with R^-1 kept when requested."""
    valuations: list
    R: np.ndarray = None
    Rinv: np.ndarray = None
    C: np.ndarray = None


def smith(ring, A, want_R=False, want_Rinv=False, want_C=False):
    p, q, N = ring.p, ring.q, ring.N
    A = np.array(A, dtype=np.int64) % q
    m, n = A.shape
    R = np.eye(m, dtype=np.int64) if want_R else None
    # column operations are kept as row operations on the transposes
    RinvT = np.eye(m, dtype=np.int64) if want_Rinv else None
    CT = np.eye(n, dtype=np.int64) if want_C else None
    # reductions mod q are deferred: each step adds at most q^2 to |entries|
    budget = (1 << 62) // (q * q) - 1
    since = 0
    vals = []
    level = 0  # pivot valuations never decrease
    t = 0
    while t < min(m, n):
        if since >= budget:
            A[t:, t:] %= q
            for M in (R, CT):
                if M is not None:
                    M %= q
            since = 0
        # rows >= t vanish left of column t and row t-1 vanishes right of it,
        # so all work happens in the block A[t:, t:]
        A[t:, t] %= q
        col = ring.vals[A[t:, t]]
        i = int(np.argmin(col))
        j = 0
        a = int(col[i])
        if a > level:
            A[t:, t:] %= q
            V = ring.vals[A[t:, t:]]
            idx = int(np.argmin(V))
            i, j = divmod(idx, n - t)
            a = int(V[i, j])
            if a >= N:
                break
            level = a
        i += t
        j += t
        if i != t:
            A[[t, i], t:] = A[[i, t], t:]
            if R is not None:
                R[[t, i]] = R[[i, t]]
            if RinvT is not None:
                RinvT[[t, i]] = RinvT[[i, t]]
        if j != t:
            A[t:, [t, j]] = A[t:, [j, t]]
            if CT is not None:
                CT[[t, j]] = CT[[j, t]]
        pa = p ** a
        A[t, t:] %= q
        u = int(A[t, t]) // pa
        if R is not None:
            R[t] %= q
        if CT is not None:
            CT[t] %= q
        if u != 1:
            uinv = pow(u, -1, q)
            A[t, t:] = A[t, t:] * uinv % q
            if R is not None:
                R[t] = R[t] * uinv % q
            if RinvT is not None:
                RinvT[t] = RinvT[t] * u % q
        f = A[t + 1:, t] // pa
        if f.any():
            A[t + 1:, t:] -= np.outer(f, A[t, t:])
            if R is not None:
                R[t + 1:] -= np.outer(f, R[t])
            if RinvT is not None:
                RinvT[t] = (RinvT[t] + f @ RinvT[t + 1:]) % q
        g = A[t, t + 1:] // pa
        if CT is not None and g.any():
            CT[t + 1:] -= np.outer(g, CT[t])
        A[t, t + 1:] = 0
        vals.append(a)
        since += 1
        t += 1
    return Smith(vals,
                 R % q if R is not None else None,
                 RinvT.T.copy() if RinvT is not None else None,
                 (CT % q).T.copy() if CT is not None else None)


def log_order(ring, M):
    """log_p of the order of the submodule spanned by the columns of M."""
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return sum(ring.N - a for a in smith(ring, M).valuations)


def kernel(ring, A, n=None):
    """Generators (as columns) of {x : A x = 0} over Z/p^N."""
    A = np.asarray(A, dtype=np.int64)
    if n is None:
        n = A.shape[1]
    if A.shape[0] == 0 or n == 0:
        return np.eye(n, dtype=np.int64)
    return _kernel_from_smith(ring, smith(ring, A, want_C=True), n)


def _kernel_from_smith(ring, sm, n):
    cols = []
    for i, a in enumerate(sm.valuations):
        if a > 0:
            cols.append(sm.C[:, i] * ring.p ** (ring.N - a) % ring.q)
    for i in range(len(sm.valuations), n):
        cols.append(sm.C[:, i])
    if not cols:
        return np.zeros((n, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def kernel_with_order(ring, X, seed=0):
    """Generators of ker X and log_p |ker X| for a dense or sparse matrix X.

    Tall matrices are first compressed by a random left multiplication
    R X with a few more rows than columns.  ker(R X) always contains ker X;
    the reverse inclusion is then checked exactly (X K = 0), and a larger
    compression is tried if the check fails.
    """
    q = ring.q
    m, n = X.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64), 0
    if n > SMITH_COLUMN_CAP:
        raise CapExceeded(f"kernel computation with {n} unknowns exceeds the cap")
    if m <= 2 * n + 32:
        D = X.toarray() if sparse.issparse(X) else np.asarray(X)
        if m == 0:
            return np.eye(n, dtype=np.int64), n * ring.N
        sm = smith(ring, D % q, want_C=True)
        return _kernel_from_smith(ring, sm, n), sum(sm.valuations) + ring.N * (n - len(sm.valuations))
    Xs = sparse.csr_matrix(X, dtype=np.int64)
    Xt = Xs.T.tocsr()
    rng = np.random.default_rng(seed)
    c = n + 16
    for _ in range(6):
        compressed = np.zeros((n, c), dtype=np.int64)
        step = 4096
        for start in range(0, m, step):
            stop = min(m, start + step)
            block = rng.integers(0, q, size=(stop - start, c), dtype=np.int64)
            compressed = (compressed + Xt[:, start:stop] @ block) % q
        RX = compressed.T
        sm = smith(ring, RX, want_C=True)
        K = _kernel_from_smith(ring, sm, n)
        if K.shape[1] == 0 or not np.any((Xs @ K) % q):
            return K, sum(sm.valuations) + ring.N * (n - len(sm.valuations))
        c *= 2
    raise ConsistencyError("random compression failed to preserve the kernel")


def image_log_order(ring, X, seed=0):
    """log_p of the order of the image of X on the free module of its column count."""
    n = X.shape[1]
    _, klog = kernel_with_order(ring, X, seed=seed)
    return n * ring.N - klog


def contains(ring, M, v):
    """Whether v lies in the column span of M."""
    if len(v) == 0:
        return True
    base = log_order(ring, M)
    both = np.concatenate([np.asarray(M).reshape(len(v), -1), np.asarray(v).reshape(-1, 1)], axis=1)
    return log_order(ring, both) == base


@dataclass
class Subquotient:
    """Z/B for submodules B <= Z of a free module, with a cyclic decomposition."""
    invariant_factors: list      # orders of cyclic summands, each > 1
    witnesses: list              # vectors generating the summands, same order
    Z: np.ndarray
    B: np.ndarray
    log_size: int


def subquotient(ring, Z, B):
    p, N, q = ring.p, ring.N, ring.q
    Z = np.asarray(Z, dtype=np.int64) % q
    n = Z.shape[0]
    if n == 0 or Z.shape[1] == 0:
        return Subquotient([], [], Z, np.zeros((n, 0), dtype=np.int64), 0)
    B = np.asarray(B, dtype=np.int64).reshape(n, -1) % q
    sm = smith(ring, Z, want_R=True, want_Rinv=True)
    basis, exps, rows = [], [], []
    for i, a in enumerate(sm.valuations):
        if a < N:
            basis.append(sm.Rinv[:, i] * p ** a % q)
            exps.append(N - a)
            rows.append((i, a))
    if not basis:
        return Subquotient([], [], Z, B, 0)
    basis = np.stack(basis, axis=1)
    r = len(rows)
    RB = sm.R @ B % q if B.shape[1] else np.zeros((n, 0), dtype=np.int64)
    coords = np.zeros((r, B.shape[1]), dtype=np.int64)
    for k, (i, a) in enumerate(rows):
        if np.any(RB[i] % p ** a):
            raise ValueError("B is not contained in Z")
        coords[k] = (RB[i] // p ** a) % p ** exps[k]
    for i in range(len(sm.valuations), n):
        if np.any(RB[i]):
            raise ValueError("B is not contained in Z")
    relations = [coords] if coords.shape[1] else []
    relations.append(np.diag([p ** e for e in exps]).astype(np.int64))
    M = np.concatenate(relations, axis=1) % q
    sm2 = smith(ring, M, want_Rinv=True)
    factors, witnesses = [], []
    vals2 = sm2.valuations + [N] * (r - len(sm2.valuations))
    for j, b in enumerate(vals2):
        if b > 0:
            factors.append(p ** b)
            c = sm2.Rinv[:, j]
            witnesses.append(basis @ c % q)
    order = list(zip(factors, witnesses))
    order.sort(key=lambda fw: fw[0])
    log_size = sum(vals2)
    return Subquotient([f for f, _ in order], [w for _, w in order], Z, B, log_size)
