import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import sparse

import oracles
from fusionlim.errors import CapExceeded
from fusionlim.linalg import (SMITH_COLUMN_CAP, Ring, contains, image_log_order, kernel,
                              kernel_with_order, log_order, smith, subquotient)

rings = st.sampled_from([(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])


@st.composite
def matrices(draw, max_rows=7, max_cols=7):
    p, N = draw(rings)
    q = p ** N
    m = draw(st.integers(0, max_rows))
    n = draw(st.integers(1, max_cols))
    # bias towards entries of high valuation
    entry = st.one_of(st.integers(0, q - 1), st.sampled_from([p ** k % q for k in range(N + 1)]))
    rows = draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=m, max_size=m))
    A = np.array(rows, dtype=np.int64).reshape(m, n)
    return Ring(p, N), A


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_form(data):
    ring, A = data
    q = ring.q
    sm = smith(ring, A, want_R=True, want_Rinv=True, want_C=True)
    m, n = A.shape
    D = sm.R @ A % q @ sm.C % q
    expected = np.zeros((m, n), dtype=np.int64)
    for i, a in enumerate(sm.valuations):
        expected[i, i] = ring.p ** a % q
    assert np.array_equal(D, expected)
    assert np.array_equal(sm.R @ sm.Rinv % q, np.eye(m, dtype=np.int64))
    assert sm.valuations == sorted(sm.valuations)
    assert all(a < ring.N for a in sm.valuations)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_span_order_matches_hand_elimination(data):
    ring, A = data
    exps = [ring.N] * A.shape[0]
    if not exps:
        return
    brute = oracles.span_order([list(c) for c in A.T], ring.p, exps)
    assert log_order(ring, A) == oracles.log_p(brute, ring.p)


@settings(max_examples=80, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_kernel_size_matches_enumeration(data):
    ring, A = data
    if ring.q ** A.shape[1] > 4096:
        return
    K, klog = kernel_with_order(ring, A)
    count = oracles.kernel_size_brute(A.tolist(), ring.q, A.shape[1])
    assert ring.p ** klog == count
    assert not np.any(A @ K % ring.q)
    # the columns generate the whole kernel
    assert log_order(ring, K) == klog if K.size else klog == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), rings)
def test_tall_sparse_kernel(seed, pn):
    # tall matrices go through random compression; the result must be exact
    p, N = pn
    ring = Ring(p, N)
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 8))
    base = rng.integers(0, ring.q, size=(3, n))
    mix = rng.integers(0, ring.q, size=(2 * n + 40, 3))
    X = (mix @ base) % ring.q
    X[rng.random(X.shape) < 0.5] = 0
    K1, log1 = kernel_with_order(ring, sparse.csr_matrix(X))
    sm = smith(ring, X)
    log2 = sum(sm.valuations) + ring.N * (n - len(sm.valuations))
    assert log1 == log2
    assert not np.any(X @ K1 % ring.q)
    assert image_log_order(ring, X) == n * ring.N - log2


def test_kernel_of_zero_columns():
    ring = Ring(2, 2)
    K = kernel(ring, np.zeros((0, 3), dtype=np.int64))
    assert K.shape == (3, 3)


def test_kernel_column_cap():
    ring = Ring(2, 1)
    X = sparse.csr_matrix((1, SMITH_COLUMN_CAP + 1), dtype=np.int64)
    with pytest.raises(CapExceeded):
        kernel_with_order(ring, X)


def test_contains():
    ring = Ring(3, 2)
    M = np.array([[3], [0]])
    assert contains(ring, M, np.array([6, 0]))
    assert not contains(ring, M, np.array([1, 0]))


def test_subquotient_cyclic():
    # Z = (Z/4)^1, B = 2Z -> Z/B = Z/2
    ring = Ring(2, 2)
    H = subquotient(ring, np.array([[1]]), np.array([[2]]))
    assert H.invariant_factors == [2] and H.log_size == 1
    assert H.witnesses[0][0] % 2 == 1


@settings(max_examples=80, deadline=None)
@given(matrices(max_rows=5, max_cols=5), st.data())
def test_subquotient_order(data, draw):
    ring, Z = data
    if Z.shape[0] == 0:
        return
    coeffs = draw.draw(st.lists(st.lists(st.integers(0, ring.q - 1), min_size=Z.shape[1],
                                         max_size=Z.shape[1]), min_size=0, max_size=3))
    B = (Z @ np.array(coeffs, dtype=np.int64).T % ring.q) if coeffs else np.zeros((Z.shape[0], 0), dtype=np.int64)
    H = subquotient(ring, Z, B)
    exps = [ring.N] * Z.shape[0]
    zo = oracles.span_order([list(c) for c in Z.T], ring.p, exps)
    bo = oracles.span_order([list(c) for c in B.T], ring.p, exps) if B.shape[1] else 1
    assert ring.p ** H.log_size == zo // bo
    prod = 1
    for f in H.invariant_factors:
        prod *= f
    assert prod == zo // bo
    assert H.invariant_factors == sorted(H.invariant_factors)
    # each witness has exactly the claimed order modulo B
    for f, w in zip(H.invariant_factors, H.witnesses):
        base = log_order(ring, B) if B.shape[1] else 0
        both = np.concatenate([B, w.reshape(-1, 1)], axis=1)
        assert ring.p ** (log_order(ring, both) - base) == f
