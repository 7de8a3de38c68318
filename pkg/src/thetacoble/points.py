"""GIT invariants of point configurations: binary invariants of 6 points on
P^1 (tableaux, Segre cubic, Igusa quartic) and bracket invariants of 7 points
on P^2 (G_F and G_P).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

from .characteristics import enumerate_characteristics
from .theta import DEFAULT_TOL, PeriodMatrix, PhasePoint, theta


@dataclass(frozen=True)
class Tableau:
    """A 2 x 3 filling ((i1, i2, i3), (j1, j2, j3)) of the indices 1..6."""

    top: tuple[int, int, int]
    bottom: tuple[int, int, int]

    def __post_init__(self):
        i1, i2, i3 = self.top
        j1, j2, j3 = self.bottom
        if sorted(self.top + self.bottom) != [1, 2, 3, 4, 5, 6]:
            raise ValueError("tableau must use each of 1..6 exactly once")
        if not (i1 < i2 < i3 and i1 < j1 and i2 < j2 and i3 < j3):
            raise ValueError("invalid tableau ordering")

    @property
    def is_standard(self) -> bool:
        j1, j2, j3 = self.bottom
        return j1 < j2 < j3


# The five standard tableaux in the conventional listing order T_0 .. T_4.
STANDARD_TABLEAUX = (
    Tableau((1, 3, 5), (2, 4, 6)),
    Tableau((1, 2, 5), (3, 4, 6)),
    Tableau((1, 3, 4), (2, 5, 6)),
    Tableau((1, 2, 4), (3, 5, 6)),
    Tableau((1, 2, 3), (4, 5, 6)),
)


def tableau_invariant(n: Tableau, xs) -> complex:
    """B(N) = (x_i1 - x_j1)(x_i2 - x_j2)(x_i3 - x_j3)."""
    xs = list(xs)
    if len(xs) != 6:
        raise ValueError("need 6 point coordinates")
    out = 1.0 + 0.0j
    for i, j in zip(n.top, n.bottom):
        out *= xs[i - 1] - xs[j - 1]
    return complex(out)


def standard_invariants(xs) -> np.ndarray:
    """(T_0(x), ..., T_4(x))."""
    return np.array([tableau_invariant(t, xs) for t in STANDARD_TABLEAUX])


def segre_eval(t) -> complex:
    """The Segre cubic T1 T2 T4 - T3 (T0 T4 + T1 T2 - T0 T1 - T0 T2 + T0^2)."""
    t0, t1, t2, t3, t4 = t
    return complex(t1 * t2 * t4 - t3 * (t0 * t4 + t1 * t2 - t0 * t1 - t0 * t2 + t0 * t0))


def segre_scale(t) -> float:
    """Max monomial magnitude, for residual normalization."""
    t0, t1, t2, t3, t4 = t
    mons = (t1 * t2 * t4, t3 * t0 * t4, t3 * t1 * t2, t3 * t0 * t1, t3 * t0 * t2, t3 * t0 * t0)
    return max(abs(m) for m in mons)


def igusa_eval(x) -> complex:
    """The Igusa quartic (X0X1 + X0X2 + X1X2 - X3X4)^2
    - 4 X0X1X2 (X0 + X1 + X2 + X3 + X4)."""
    x0, x1, x2, x3, x4 = x
    return complex(
        (x0 * x1 + x0 * x2 + x1 * x2 - x3 * x4) ** 2
        - 4 * x0 * x1 * x2 * (x0 + x1 + x2 + x3 + x4)
    )


def igusa_scale(x) -> float:
    x0, x1, x2, x3, x4 = x
    head = max(abs(x0 * x1), abs(x0 * x2), abs(x1 * x2), abs(x3 * x4)) ** 2
    tail = 4 * abs(x0 * x1 * x2) * max(abs(v) for v in x)
    return max(head, tail)


def _theta4_values(tau: PeriodMatrix, tol: float) -> list[complex]:
    z0 = PhasePoint.zero(2)
    return [theta(tau, z0, m, tol) ** 4 for m in enumerate_characteristics(2, "even")]


def igusa_tuple_search(taus, tol: float = 1e-8, theta_tol: float = DEFAULT_TOL):
    """First (lexicographic) ordered 5-tuple of distinct even genus-2
    characteristics whose fourth-power theta constants satisfy the Igusa
    quartic at every sample tau."""
    taus = list(taus)
    if len(taus) < 3:
        raise ValueError("need at least 3 sample period matrices")
    values = [_theta4_values(tau, theta_tol) for tau in taus]
    evens = list(enumerate_characteristics(2, "even"))
    for tup in permutations(range(10), 5):
        ok = True
        for v in values:
            x = [v[i] for i in tup]
            if abs(igusa_eval(x)) / igusa_scale(x) >= tol:
                ok = False
                break
        if ok:
            return tuple(evens[i] for i in tup)
    raise RuntimeError("no characteristic tuple satisfies the Igusa quartic")


# ---------------------------------------------------------------------------
# seven points on P^2


def bracket(cfg, i: int, j: int, k: int) -> complex:
    """(ijk) = det(v_i, v_j, v_k) on 1-based indices."""
    if len({i, j, k}) != 3:
        raise ValueError("indices must be distinct")
    vs = np.asarray(cfg)
    if vs.shape != (7, 3):
        raise ValueError("need 7 vectors in C^3")
    return complex(np.linalg.det(vs[[i - 1, j - 1, k - 1]]))


def g_fano(cfg, triples) -> complex:
    """Product of the 7 brackets of a Fano-plane family of index triples."""
    from .gopel import _validate_fano_family

    _validate_fano_family(triples)
    out = 1.0 + 0.0j
    for (i, j, k) in triples:
        out *= bracket(cfg, i, j, k)
    return complex(out)


def g_pascal(cfg, spec) -> complex:
    """The Pascal bracket polynomial, generalized from the reference family
    by relabeling: with common index c and pairs {a_i, b_i},

    G_P = (c a1 b1)(c a2 b2)(c a3 b3)
          (prod over even choices - prod over odd choices)

    where a choice picks one element from each pair and its parity counts the
    b picks; each product multiplies the four brackets of the chosen triples.
    """
    from .gopel import _parse_pascal_family

    common, pairs = _parse_pascal_family(spec)
    out = 1.0 + 0.0j
    for (a, b) in pairs:
        out *= bracket(cfg, common, a, b)
    even_prod = 1.0 + 0.0j
    odd_prod = 1.0 + 0.0j
    for choice in product((0, 1), repeat=3):
        tri = tuple(pairs[t][choice[t]] for t in range(3))
        val = bracket(cfg, *tri)
        if sum(choice) % 2 == 0:
            even_prod *= val
        else:
            odd_prod *= val
    return complex(out * (even_prod - odd_prod))


def fano_plane_families() -> tuple[tuple[tuple[int, int, int], ...], ...]:
    """All 30 families of 7 triples on {1..7} pairwise meeting in one point
    (the labelled Fano planes), in lexicographic order."""
    all_triples = list(combinations(range(1, 8), 3))
    out = []

    def extend(chosen, start):
        if len(chosen) == 7:
            out.append(tuple(chosen))
            return
        for t in range(start, len(all_triples)):
            cand = all_triples[t]
            if all(len(set(cand) & set(c)) == 1 for c in chosen):
                chosen.append(cand)
                extend(chosen, t + 1)
                chosen.pop()

    extend([], 0)
    return tuple(out)


def pascal_families() -> tuple[tuple, ...]:
    """All P-shaped families: a common index plus a partition of the other
    six indices into three pairs."""
    out = []
    for c in range(1, 8):
        rest = [i for i in range(1, 8) if i != c]

        def pairings(items):
            if not items:
                yield []
                return
            a = items[0]
            for k in range(1, len(items)):
                b = items[k]
                for tail in pairings([x for x in items[1:] if x != b]):
                    yield [(a, b)] + tail

        for ps in pairings(rest):
            fam = tuple(
                [(c,) + p for p in ps] + [(c,)] + [tuple(p) for p in ps]
            )
            out.append(fam)
    return tuple(out)


def bracket_value_matrix(cfgs) -> np.ndarray:
    """Rows: configurations; columns: the 30 G_F then the 105 G_P values."""
    fanos = fano_plane_families()
    pascals = pascal_families()
    rows = []
    for cfg in cfgs:
        row = [g_fano(cfg, f) for f in fanos] + [g_pascal(cfg, p) for p in pascals]
        rows.append(row)
    return np.array(rows)
