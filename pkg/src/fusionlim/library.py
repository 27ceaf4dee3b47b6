"""Named desk-scale examples: groups, module actions and setups."""
from __future__ import annotations

from functools import lru_cache

from .errors import ValidationError
from .fusion import make_setup
from .modaction import Action, PAbelianGroup, direct_sum, linear_action, semidirect_product, trivial_action
from .offenders import natural_module_action
from .permgroup import (Permutation, alternating_group, dihedral_group, group_from_generators,
                        normalizer, pcore, symmetric_group)


def perm(text, degree):
    return Permutation.parse(text, degree)


def subgroup_of(degree, *gens):
    return group_from_generators(degree, [perm(g, degree) for g in gens])


# -- linear groups --------------------------------------------------------

def elementary(p, n):
    return PAbelianGroup(p, (p,) * n)


def sl2(p):
    return linear_action(elementary(p, 2), [[[1, 1], [0, 1]], [[1, 0], [1, 1]]], name=f"SL2({p})")


def gl2_3():
    return linear_action(elementary(3, 2), [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[2, 0], [0, 1]]],
                         name="GL2(3)")


def s3_mod3():
    """S3 as upper unitriangular matrices extended by diag(-1, 1) over F3."""
    return linear_action(elementary(3, 2), [[[1, 1], [0, 1]], [[2, 0], [0, 1]]], name="S3")


def borel_5():
    """The Borel subgroup of GL2(5) fixing a line pointwise: order 20."""
    return linear_action(elementary(5, 2), [[[1, 1], [0, 1]], [[2, 0], [0, 1]]], name="5:4")


def sl3_2():
    e12 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    e23 = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
    e31 = [[1, 0, 0], [0, 1, 0], [1, 0, 1]]
    return linear_action(elementary(2, 3), [e12, e23, e31], name="SL3(2)")


# F4 = F2[w]/(w^2 + w + 1); an element a + b w is the pair (a, b)
def _f4_mul(x, y):
    a, b = x
    c, d = y
    # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, with w^2 = w + 1
    return ((a * c + b * d) % 2, (a * d + b * c + b * d) % 2)


def _f4_matrix(M, frobenius=False):
    """The F2-matrix (basis 1, w of each coordinate) of v -> v^sigma . M."""
    rows = []
    for i in range(2):
        for basis_elt in ((1, 0), (0, 1)):
            x = basis_elt
            if frobenius:
                # x -> x^2 fixes 1 and sends w to w + 1
                x = (1, 0) if x == (1, 0) else (1, 1)
            row = []
            for j in range(2):
                row.extend(_f4_mul(x, M[i][j]))
            rows.append(row)
    return rows


def _f4_identity():
    return [[(1, 0), (0, 0)], [(0, 0), (1, 0)]]


def sl2_4(semilinear=False):
    one, w = (1, 0), (0, 1)
    zero = (0, 0)
    mats = [_f4_matrix([[one, one], [zero, one]]), _f4_matrix([[one, w], [zero, one]]),
            _f4_matrix([[one, zero], [one, one]]), _f4_matrix([[one, zero], [w, one]])]
    name = "SL2(4)"
    if semilinear:
        mats.append(_f4_matrix(_f4_identity(), frobenius=True))
        name = "SigmaL2(4)"
    return linear_action(elementary(2, 4), mats, name=name)


def even_set_module(G, n):
    """G <= S_n (n even) on even subsets of {1..n} modulo the full set, dimension n - 2.

    Classes are represented by the subset avoiding point n; coordinates are
    memberships of points 2..n-1.
    """
    if n % 2:
        raise ValidationError("n must be even")
    full = frozenset(range(n))
    r = n - 2

    def coords(subset):
        if n - 1 in subset:
            subset = full - subset
        return [int(pt in subset) for pt in range(1, n - 1)]

    mats = []
    for g in G.gens:
        rows = []
        for pt in range(1, n - 1):
            rows.append(coords(frozenset({g[0], g[pt]})))
        mats.append(rows)
    return Action(G, PAbelianGroup(2, (2,) * r), mats)


# -- named groups ---------------------------------------------------------

A6_V4A = ("(1,2)(3,4)", "(1,3)(2,4)")
A6_V4B = ("(1,2)(3,4)", "(1,2)(5,6)")


def named_group(name):
    builders = {
        "a6": lambda: alternating_group(6),
        "s4": lambda: symmetric_group(4),
        "s5": lambda: symmetric_group(5),
        "s6": lambda: symmetric_group(6),
        "d16": lambda: dihedral_group(8),
    }
    if name not in builders:
        raise ValidationError(f"unknown group {name!r}")
    return builders[name]()


# -- module instances -----------------------------------------------------

def _with_trivial(act, rank=1):
    return direct_sum(act, trivial_action(act.group, PAbelianGroup(act.prime, (act.prime,) * rank)))


MODULES = {
    "sl2(3)": lambda: sl2(3),
    "gl2(3)": gl2_3,
    "sl2(5)": lambda: sl2(5),
    "borel(5)": borel_5,
    "s3-mod3": s3_mod3,
    "sl2(3)+trivial": lambda: _with_trivial(sl2(3)),
    "gl2(3)+trivial": lambda: _with_trivial(gl2_3()),
    "sl3(2)+trivial": lambda: _with_trivial(sl3_2()),
    "sl3(2)": sl3_2,
    "sl2(4)": sl2_4,
    "sigmal2(4)": lambda: sl2_4(semilinear=True),
    "a6-even": lambda: even_set_module(alternating_group(6), 6),
    "s6-even": lambda: even_set_module(symmetric_group(6), 6),
    "s3-natural": lambda: natural_module_action(3),
    "s5-natural": lambda: natural_module_action(5),
    "s3-natural+trivial": lambda: _with_trivial(natural_module_action(3)),
}


@lru_cache(maxsize=None)
def module_action(name):
    if name not in MODULES:
        raise ValidationError(f"unknown module {name!r}")
    return MODULES[name]()


# norm-argument library: (module name, theorem) with the collection chosen by the suite
GLAWC_INSTANCES = [
    ("sl2(3)", "glawc"),
    ("gl2(3)", "glawc"),
    ("sl2(5)", "glawc"),
    ("borel(5)", "glawc"),
    ("s3-mod3", "glawc"),
    ("sl2(3)+trivial", "glawc"),
    ("gl2(3)+trivial", "glawc"),
    ("sl3(2)+trivial", "glawc2"),
    ("sl3(2)", "glawc2"),
    ("sl2(4)", "glawc2"),
    ("sigmal2(4)", "glawc2"),
    ("a6-even", "glawc2"),
    ("s6-even", "glawc2"),
]


# -- setups ---------------------------------------------------------------

def _affine_setup(act):
    Gamma, D = semidirect_product(act)
    return make_setup(Gamma, act.prime, D)


def _normalizer_setup(G, p, gens):
    V = subgroup_of(G.degree, *gens)
    Gamma = normalizer(G, V)
    return make_setup(Gamma, p, pcore(Gamma, p))


SETUPS = {
    "s4": lambda: make_setup(symmetric_group(4), 2, subgroup_of(4, *A6_V4A)),
    "a6-v4a": lambda: _normalizer_setup(alternating_group(6), 2, A6_V4A),
    "a6-v4b": lambda: _normalizer_setup(alternating_group(6), 2, A6_V4B),
    "s6-v4": lambda: _normalizer_setup(symmetric_group(6), 2, A6_V4A),
    "3^2:sl2(3)": lambda: _affine_setup(sl2(3)),
    "3^2:gl2(3)": lambda: _affine_setup(gl2_3()),
    "2^3:sl3(2)": lambda: _affine_setup(sl3_2()),
    "2^4:a5": lambda: _affine_setup(sl2_4()),
    "2^2:s3": lambda: _affine_setup(natural_module_action(3)),
}


@lru_cache(maxsize=None)
def setup(name):
    if name not in SETUPS:
        raise ValidationError(f"unknown setup {name!r}")
    return SETUPS[name]()
