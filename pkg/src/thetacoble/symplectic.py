"""The symplectic group Sp(2g, F_2): bit-matrix arithmetic, the affine action
on theta characteristics, full enumeration for g <= 3, and the 135 cosets of
the parabolic subgroup {C = 0} for g = 3.

Matrices are tuples of row integers; within a row the leftmost column is the
most significant bit, matching the characteristic encoding.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from .characteristics import Characteristic, _check_genus

# ---------------------------------------------------------------------------
# bit-matrix helpers (rows as integers, width bits per row)


def bm_identity(n: int) -> tuple[int, ...]:
    return tuple(1 << (n - 1 - i) for i in range(n))


def bm_zero(n: int) -> tuple[int, ...]:
    return (0,) * n


def bm_transpose(rows: tuple[int, ...], width: int) -> tuple[int, ...]:
    n = len(rows)
    out = []
    for j in range(width):
        col = 0
        for i in range(n):
            col = (col << 1) | ((rows[i] >> (width - 1 - j)) & 1)
        out.append(col)
    return tuple(out)


def bm_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Product over F_2; a is n x k (k = len(b)), b is k x width."""
    k = len(b)
    out = []
    for row in a:
        acc = 0
        for j in range(k):
            if (row >> (k - 1 - j)) & 1:
                acc ^= b[j]
        out.append(acc)
    return tuple(out)


def bm_matvec(rows: tuple[int, ...], v: int) -> int:
    """Apply to a column vector packed as an int (leftmost entry = msb)."""
    out = 0
    for row in rows:
        out = (out << 1) | ((row & v).bit_count() & 1)
    return out


def bm_diag(rows: tuple[int, ...]) -> int:
    n = len(rows)
    out = 0
    for i, row in enumerate(rows):
        out = (out << 1) | ((row >> (n - 1 - i)) & 1)
    return out


def bm_block(tl, tr, bl, br, n: int) -> tuple[int, ...]:
    """Assemble a 2n x 2n matrix from four n x n blocks."""
    top = tuple((tl[i] << n) | tr[i] for i in range(n))
    bot = tuple((bl[i] << n) | br[i] for i in range(n))
    return top + bot


def bm_unblock(rows: tuple[int, ...], n: int):
    mask = (1 << n) - 1
    tl = tuple(r >> n for r in rows[:n])
    tr = tuple(r & mask for r in rows[:n])
    bl = tuple(r >> n for r in rows[n:])
    br = tuple(r & mask for r in rows[n:])
    return tl, tr, bl, br


def symplectic_j(n: int) -> tuple[int, ...]:
    """The standard form matrix J = (0 I; I 0) over F_2."""
    return bm_block(bm_zero(n), bm_identity(n), bm_identity(n), bm_zero(n), n)


def is_symplectic(rows: tuple[int, ...]) -> bool:
    """True iff the 2n x 2n bit matrix preserves the standard pairing."""
    m = len(rows)
    if m % 2 or m > 6:
        raise ValueError("need a square even-dimension matrix of size <= 6")
    n = m // 2
    j = symplectic_j(n)
    return bm_mul(bm_mul(bm_transpose(rows, m), j), rows) == j


@dataclass(frozen=True)
class SymplecticMatF2:
    """An element of Sp(2g, F_2) in block form (A B; C D)."""

    g: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_genus(self.g)
        if len(self.rows) != 2 * self.g:
            raise ValueError("row count does not match genus")
        if not is_symplectic(self.rows):
            raise ValueError("matrix is not symplectic over F_2")

    @classmethod
    def from_blocks(cls, g, a, b, c, d) -> "SymplecticMatF2":
        return cls(g, bm_block(a, b, c, d, g))

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatF2":
        return cls(g, bm_identity(2 * g))

    @classmethod
    def j(cls, g: int) -> "SymplecticMatF2":
        return cls(g, symplectic_j(g))

    @property
    def blocks(self):
        return bm_unblock(self.rows, self.g)

    def __mul__(self, other: "SymplecticMatF2") -> "SymplecticMatF2":
        if self.g != other.g:
            raise ValueError("genus mismatch")
        return SymplecticMatF2(self.g, bm_mul(self.rows, other.rows))

    def inverse(self) -> "SymplecticMatF2":
        # over F_2: M^{-1} = J M^t J since J^2 = I
        j = symplectic_j(self.g)
        return SymplecticMatF2(
            self.g, bm_mul(bm_mul(j, bm_transpose(self.rows, 2 * self.g)), j)
        )

    def packed(self) -> int:
        w = 2 * self.g
        out = 0
        for r in self.rows:
            out = (out << w) | r
        return out

    @classmethod
    def from_packed(cls, g: int, packed: int) -> "SymplecticMatF2":
        w = 2 * g
        mask = (1 << w) - 1
        rows = tuple((packed >> (w * (w - 1 - i))) & mask for i in range(w))
        return cls(g, rows)

    def to_bitrows(self) -> list[str]:
        w = 2 * self.g
        return [format(r, f"0{w}b") for r in self.rows]

    def act(self, m: Characteristic) -> Characteristic:
        return act_on_characteristic(self, m)


def act_on_characteristic(gamma: SymplecticMatF2, m: Characteristic) -> Characteristic:
    """The affine action (D -C; -B A)(m'; m'') + (diag(C D^t); diag(A B^t))."""
    if gamma.g != m.g:
        raise ValueError("genus mismatch")
    g = gamma.g
    a, b, c, d = gamma.blocks
    lin = bm_block(d, c, b, a, g)  # signs vanish mod 2
    bt = bm_transpose(b, g)
    dt = bm_transpose(d, g)
    offset = (bm_diag(bm_mul(c, dt)) << g) | bm_diag(bm_mul(a, bt))
    return Characteristic(g, bm_matvec(lin, m.idx) ^ offset)


def act_linear_idx(gamma: SymplecticMatF2, idx: int) -> int:
    """Linear part of the action on characteristic indices (no offset)."""
    g = gamma.g
    a, b, c, d = gamma.blocks
    return bm_matvec(bm_block(d, c, b, a, g), idx)


def translation_generators(g: int):
    """All matrices (I S; 0 I) with S symmetric over F_2."""
    pairs = [(i, j) for i in range(g) for j in range(i, g)]
    gens = []
    for mask in range(1, 1 << len(pairs)):
        s = [0] * g
        for t, (i, j) in enumerate(pairs):
            if (mask >> t) & 1:
                s[i] |= 1 << (g - 1 - j)
                s[j] |= 1 << (g - 1 - i)
        gens.append(
            SymplecticMatF2.from_blocks(g, bm_identity(g), tuple(s), bm_zero(g), bm_identity(g))
        )
    return gens


def group_generators(g: int):
    return [SymplecticMatF2.j(g)] + translation_generators(g)


SP_ORDERS = {1: 6, 2: 720, 3: 1451520}


class GroupEnumeration:
    """The full enumeration of Sp(2g, F_2), in BFS discovery order.

    Elements are stored packed as (2g)^2-bit integers in a numpy uint64 array;
    a sorted copy supports O(log n) membership tests.
    """

    def __init__(self, g: int, packed: np.ndarray):
        self.g = g
        self.packed = packed
        self.sorted_packed = np.sort(packed)

    def __len__(self) -> int:
        return len(self.packed)

    def __contains__(self, gamma: SymplecticMatF2) -> bool:
        p = np.uint64(gamma.packed())
        i = int(np.searchsorted(self.sorted_packed, p))
        return i < len(self.sorted_packed) and self.sorted_packed[i] == p

    def element(self, i: int) -> SymplecticMatF2:
        return SymplecticMatF2.from_packed(self.g, int(self.packed[i]))


def _rowmap(gen_rows: tuple[int, ...], w: int) -> np.ndarray:
    """Lookup table r -> r * G for all 2^w row values."""
    table = np.zeros(1 << w, dtype=np.uint64)
    for r in range(1 << w):
        acc = 0
        for j in range(w):
            if (r >> (w - 1 - j)) & 1:
                acc ^= gen_rows[j]
        table[r] = acc
    return table


def _bfs_closure(g: int) -> np.ndarray:
    """Breadth-first closure from {J} and the translation matrices."""
    w = 2 * g
    gens = group_generators(g)
    tables = [_rowmap(gen.rows, w) for gen in gens]
    shifts = np.array([w * (w - 1 - i) for i in range(w)], dtype=np.uint64)

    def pack(states: np.ndarray) -> np.ndarray:
        return (states.astype(np.uint64) << shifts).sum(axis=1, dtype=np.uint64)

    ident = np.array([bm_identity(w)], dtype=np.uint64)
    visited = pack(ident)
    order = [visited.copy()]
    frontier = ident
    while len(frontier):
        new_packed = None
        for table in tables:
            cand = table[frontier]
            cp = np.unique(pack(cand))
            pos = np.searchsorted(visited, cp)
            pos[pos >= len(visited)] = 0
            fresh = cp[visited[pos] != cp] if len(visited) else cp
            if new_packed is None:
                new_packed = fresh
            else:
                new_packed = np.union1d(new_packed, fresh)
        if new_packed is None or not len(new_packed):
            break
        order.append(new_packed)
        visited = np.union1d(visited, new_packed)
        frontier = np.column_stack(
            [(new_packed >> np.uint64(s)) & np.uint64((1 << w) - 1) for s in shifts]
        )
    return np.concatenate(order)


_ENUM_CACHE: dict[int, GroupEnumeration] = {}
_ENUM_LOCK = threading.Lock()


def enumerate_group(g: int) -> GroupEnumeration:
    """Enumerate Sp(2g, F_2); built once per process and cached."""
    _check_genus(g)
    with _ENUM_LOCK:
        if g not in _ENUM_CACHE:
            enum = GroupEnumeration(g, _bfs_closure(g))
            if len(enum) != SP_ORDERS[g]:
                raise AssertionError(
                    f"|Sp({2*g}, F2)| = {len(enum)}, expected {SP_ORDERS[g]}"
                )
            _ENUM_CACHE[g] = enum
        return _ENUM_CACHE[g]


def has_zero_c_block(gamma: SymplecticMatF2) -> bool:
    return all(r == 0 for r in gamma.blocks[2])


def _complete_to_symplectic_basis(g: int, lag_basis: list[int]) -> SymplecticMatF2:
    """Build gamma in Sp(2g, F2) whose linear action maps {m'=0} onto the
    Lagrangian spanned by lag_basis (packed 2g-bit vectors)."""
    from .characteristics import _pairing_idx

    w = 2 * g
    span_w = set(lag_basis)

    def pair_bit(a: int, b: int) -> int:
        return 1 if _pairing_idx(g, a, b) == -1 else 0

    # greedily pick u_i with <u_i, w_j> = delta_ij, <u_i, u_k> = 0
    us: list[int] = []
    for i in range(g):
        found = None
        for v in range(1, 1 << w):
            if all(pair_bit(v, wv) == (1 if j == i else 0) for j, wv in enumerate(lag_basis)) and all(
                pair_bit(v, u) == 0 for u in us
            ):
                found = v
                break
        if found is None:
            raise AssertionError("failed to complete symplectic basis")
        us.append(found)
    cols = us + lag_basis
    n_rows = tuple(
        sum(((cols[j] >> (w - 1 - i)) & 1) << (w - 1 - j) for j in range(w))
        for i in range(w)
    )
    # N = (D C; B A) must be symplectic; recover gamma = (A B; C D)
    d, c, b, a = bm_unblock(n_rows, g)
    return SymplecticMatF2.from_blocks(g, a, b, c, d)


def parabolic_cosets(g: int = 3) -> list[SymplecticMatF2]:
    """Representatives of Sp(6,F2) / {C = 0}; one per Lagrangian subspace.

    The representative for the Lagrangian {m' = 0} is the identity; each rep
    maps {m' = 0} onto its Lagrangian under the linearized action.
    """
    if g != 3:
        raise ValueError("parabolic cosets implemented for g = 3")
    from .gopel import enumerate_lagrangian_subspaces

    reps = []
    l0 = frozenset(range(1 << g))  # idx of {m'=0} members
    for lag in enumerate_lagrangian_subspaces(g):
        if lag == l0:
            reps.insert(0, SymplecticMatF2.identity(g))
            continue
        basis = _subspace_basis(lag)
        reps.append(_complete_to_symplectic_basis(g, basis))
    return reps


def _subspace_basis(subspace: frozenset) -> list[int]:
    """A basis of a linear subspace of F_2^w given as a set of packed ints."""
    basis: list[int] = []
    span = {0}
    for v in sorted(subspace):
        if v and v not in span:
            basis.append(v)
            span |= {s ^ v for s in span}
    return basis


def lagrangian_image(gamma: SymplecticMatF2) -> frozenset:
    """Image of the Lagrangian {m' = 0} under the linearized action."""
    g = gamma.g
    return frozenset(act_linear_idx(gamma, v) for v in range(1 << g))
