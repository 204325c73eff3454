"""Static root-system data: Cartan matrices, duality, compact-dual invariants.

Index convention: the Cartan matrix entry C[j][i] (0-based rows/columns for
1-based node labels j, i) is the coefficient in s_i(alpha_j) = alpha_j -
C[j][i] alpha_i.  Fixed orientations: G2 has C[0][1] = -1, C[1][0] = -3;
B_l puts its short root at node 1, so the -2 sits at entry (2,1)
(B2 = [[2,-1],[-2,2]]), and C_l is the transpose of B_l.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .intmat import Matrix, det, transpose

_FAMILIES = "ABCDEFG"
_TYPE_RE = re.compile(r"^([A-G])(\d+)$")

# Orders of the exceptional Weyl groups and positive-root counts, used for
# cap checks before any enumeration happens.
_EXC_ORDER = {"G": 12, "F": 1152, ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        l = self.rank
        ok = {
            "A": l >= 1,
            "B": l >= 2,
            "C": l >= 2,  # the tables start at 3; rank 2 maps to the even formulas
            "D": l >= 4,
            "E": l in (6, 7, 8),
            "F": l == 4,
            "G": l == 2,
        }[self.family]
        if not ok:
            raise ValueError(f"invalid rank {l} for family {self.family}")

    @classmethod
    def parse(cls, text) -> "LieType":
        if isinstance(text, LieType):
            return text
        m = _TYPE_RE.match(str(text).strip())
        if not m:
            raise ValueError(f"cannot parse Lie type from {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanMatrix:
    entries: Matrix

    def __post_init__(self):
        c = self.entries
        l = len(c)
        assert all(len(row) == l for row in c)
        assert all(c[i][i] == 2 for i in range(l))
        assert all(c[j][i] <= 0 for j in range(l) for i in range(l) if i != j)
        assert all((c[j][i] == 0) == (c[i][j] == 0) for j in range(l) for i in range(l))
        assert det(c) != 0

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, j: int):
        return self.entries[j]

    def transposed(self) -> "CartanMatrix":
        return CartanMatrix(transpose(self.entries))


def _chain_edges(l: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(l - 1)]


def _diagram_edges(t: LieType) -> list[tuple[int, int]]:
    l = t.rank
    if t.family in "ABC":
        return _chain_edges(l)
    if t.family == "D":
        return _chain_edges(l - 1)[:-1] + [(l - 3, l - 2), (l - 3, l - 1)]
    if t.family == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-l with node 2 hanging off node 4.
        chain = [(0, 2)] + [(i, i + 1) for i in range(2, l - 1)]
        return chain + [(1, 3)]
    if t.family == "F":
        return _chain_edges(4)
    return [(0, 1)]  # G2


@lru_cache(maxsize=None)
def cartan_matrix(t) -> CartanMatrix:
    """Standard Cartan matrix for the type, with the fixed orientations above."""
    t = LieType.parse(t)
    l = t.rank
    c = [[2 * int(i == j) for i in range(l)] for j in range(l)]
    for a, b in _diagram_edges(t):
        c[a][b] = c[b][a] = -1
    if t.family == "B":
        c[1][0] = -2
    elif t.family == "C":
        c[0][1] = -2
    elif t.family == "F":
        c[1][2] = -2
    elif t.family == "G":
        c[1][0] = -3
    return CartanMatrix(tuple(tuple(row) for row in c))


def dual_type(t) -> LieType:
    """B_l and C_l swap; every other simple type is self-dual."""
    t = LieType.parse(t)
    if t.family == "B":
        return LieType("C", t.rank)
    if t.family == "C":
        return LieType("B", t.rank)
    return t


def same_up_to_relabeling(a: Matrix, b: Matrix) -> bool:
    """Whether two Cartan matrices agree after renumbering diagram nodes.

    Transposition reverses arrows, so e.g. G2's transpose equals G2 only
    after swapping the two nodes.
    """
    if a == b:
        return True
    from itertools import permutations

    n = len(a)
    return any(
        all(a[p[j]][p[i]] == b[j][i] for j in range(n) for i in range(n))
        for p in permutations(range(n))
    )


def weyl_order(t) -> int:
    """Order of the Weyl group from the classical product formulas."""
    t = LieType.parse(t)
    l = t.rank
    fact = 1
    for k in range(2, l + 2):
        fact *= k
    if t.family == "A":
        return fact
    fact //= l + 1
    if t.family in "BC":
        return fact << l
    if t.family == "D":
        return fact << (l - 1)
    return _EXC_ORDER[(t.family, l) if t.family == "E" else t.family]


def positive_root_count(t) -> int:
    t = LieType.parse(t)
    l = t.rank
    if t.family == "A":
        return l * (l + 1) // 2
    if t.family in "BC":
        return l * l
    if t.family == "D":
        return l * (l - 1)
    if t.family == "E":
        return {6: 36, 7: 63, 8: 120}[l]
    return 24 if t.family == "F" else 6


@dataclass(frozen=True)
class DualCompactData:
    """Invariants of the compact subgroup attached to the transposed type."""

    name: str
    degrees: tuple[int, ...]
    g: int
    r: int
    dim: int


def _dual_degrees(t: LieType) -> tuple[int, ...]:
    l = t.rank
    if t.family == "A":
        if l % 2 == 0:
            return tuple(range(2, l + 1, 2))
        return tuple(sorted(tuple(range(2, l, 2)) + ((l + 1) // 2,)))
    if t.family == "B":
        return tuple(range(1, l + 1))
    if t.family == "C":
        if l % 2 == 0:
            pairs = tuple(d for k in range(2, l - 1, 2) for d in (k, k))
            return tuple(sorted(pairs + (l, l // 2)))
        pairs = tuple(d for k in range(2, l, 2) for d in (k, k))
        return tuple(sorted(pairs + ((l + 1) // 2,)))
    if t.family == "D":
        if l % 2 == 0:
            return tuple(sorted(tuple(d for k in range(2, l - 1, 2) for d in (k, k)) + (l // 2, l // 2)))
        return tuple(d for k in range(2, l, 2) for d in (k, k))
    if t.family == "E":
        return {6: (2, 4, 6, 8), 7: (2, 3, 4, 5, 6, 7, 8), 8: (2, 4, 6, 8, 8, 10, 12, 14)}[l]
    if t.family == "F":
        return (2, 2, 4, 6)
    return (2, 2)  # G2


def _dual_name(t: LieType) -> str:
    l = t.rank
    return {
        "A": f"SO({l + 1})",
        "B": f"U({l})",
        "C": f"SO({l})xSO({l + 1})",
        "D": f"SO({l})xSO({l})",
        "E": {6: "Sp(4)", 7: "SU(8)", 8: "SO(16)"}.get(l, ""),
        "F": "Sp(1)xSp(3)",
        "G": "SU(2)xSU(2)",
    }[t.family]


@lru_cache(maxsize=None)
def compact_dual_data(t) -> DualCompactData:
    """Degrees d_i, rank g, q-exponent r and dimension of the compact dual."""
    t = LieType.parse(t)
    degrees = _dual_degrees(t)
    dim = sum(2 * d - 1 for d in degrees)
    return DualCompactData(
        name=_dual_name(t),
        degrees=degrees,
        g=len(degrees),
        r=dim - sum(degrees),
        dim=dim,
    )
