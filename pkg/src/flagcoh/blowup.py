"""Sign dynamics of the Toda flow: blow-up counts, their tables and p_eps(q).

A sign vector eps in {+,-}^l records sgn(a_i).  A simple reflection s_i
flips component j exactly when C[j][i] is odd and eps_i is minus (only the
parity of the Cartan entry matters).  Walking a reduced word of w from eps
and counting the letters hit while their component is minus gives the
blow-up count; the final vector of the walk is w^{-1} eps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanMatrix, LieType, cartan_matrix
from .qpoly import QPoly
from .weyl import WeylElement, WeylGroup, enumerate_group, longest_element

Signs = tuple[int, ...]  # entries are +1 or -1

_CHAR = {"+": 1, "-": -1}


def sign_vector(spec, rank: int | None = None) -> Signs:
    """Normalize '-+-' strings or +-1 sequences into a sign tuple."""
    if isinstance(spec, str):
        try:
            eps = tuple(_CHAR[ch] for ch in spec.strip())
        except KeyError:
            raise ValueError(f"sign vector may only contain '+'/'-': {spec!r}") from None
    else:
        eps = tuple(int(x) for x in spec)
        if any(x not in (1, -1) for x in eps):
            raise ValueError(f"sign entries must be +1/-1: {spec!r}")
    if rank is not None and len(eps) != rank:
        raise ValueError(f"sign vector {format_signs(eps)!r} has length {len(eps)}, expected {rank}")
    return eps


def format_signs(eps: Signs) -> str:
    return "".join("+" if x > 0 else "-" for x in eps)


def all_minus(l: int) -> Signs:
    return (-1,) * l


def all_sign_vectors(l: int):
    """All 2^l sign vectors, all-minus first, in deterministic order."""
    out = []
    for bits in range(1 << l):
        out.append(tuple(-1 if bits & (1 << k) == 0 else 1 for k in range(l)))
    return sorted(out)


def reflect_signs(i: int, eps: Signs, cartan: CartanMatrix) -> Signs:
    """Action of s_i on signs: eps_j -> eps_j * eps_i^{C[j][i]}."""
    k = i - 1
    if eps[k] == 1:
        return eps
    return tuple(-x if cartan[j][k] % 2 else x for j, x in enumerate(eps))


def _word_of(w) -> tuple[int, ...]:
    return w.word if isinstance(w, WeylElement) else tuple(w)


def blowup_count(w, eps, cartan: CartanMatrix) -> int:
    """Blow-ups along a reduced word of w, walked left to right from eps."""
    eps = sign_vector(eps, cartan.rank)
    count = 0
    for i in _word_of(w):
        if eps[i - 1] == -1:
            count += 1
        eps = reflect_signs(i, eps, cartan)
    return count


def accumulated_signs(w, eps, cartan: CartanMatrix) -> Signs:
    """Final vector of the walk, i.e. w^{-1} eps."""
    eps = sign_vector(eps, cartan.rank)
    for i in _word_of(w):
        eps = reflect_signs(i, eps, cartan)
    return eps


def dual_blowup_count(w, eps, cartan: CartanMatrix) -> int:
    """Blow-up count for the transposed Cartan matrix (the dual system)."""
    return blowup_count(w, eps, cartan.transposed())


@dataclass
class BlowupTable:
    """Blow-up counts and accumulated sign vectors for every group element."""

    group: WeylGroup
    eps: Signs
    counts: tuple[int, ...]
    final_signs: tuple[Signs, ...]

    def __getitem__(self, w) -> int:
        return self.counts[self.group.element_index(w)]

    def final(self, w) -> Signs:
        return self.final_signs[self.group.element_index(w)]

    @property
    def max_value(self) -> int:
        return max(self.counts)

    def value_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.counts))


def _coerce_group(group_or_type, cap=None) -> WeylGroup:
    if isinstance(group_or_type, WeylGroup):
        return group_or_type
    return enumerate_group(group_or_type, cap)


def blowup_table(group_or_type, eps) -> BlowupTable:
    """Counts for all elements at once, by the BFS recurrence
    count(w s_i) = count(w) + [ (w^{-1} eps)_i = - ]."""
    group = _coerce_group(group_or_type)
    eps = sign_vector(eps, group.rank)
    cartan = group.cartan
    n = group.order
    counts = [0] * n
    signs: list[Signs] = [eps] * n
    for idx in range(1, n):
        p = group.parent[idx]
        i = group.parent_gen[idx]
        sig = signs[p]
        counts[idx] = counts[p] + (sig[i - 1] == -1)
        signs[idx] = reflect_signs(i, sig, cartan)
    return BlowupTable(group, eps, tuple(counts), tuple(signs))


def blowup_poly(group_or_type, eps) -> QPoly:
    """Alternating sum (-1)^{l(w*)} sum_w (-1)^{l(w)} q^{count(w)}."""
    group = _coerce_group(group_or_type)
    table = blowup_table(group, eps)
    top = group.longest.length
    coeffs: dict[int, int] = {}
    for w, c in zip(group.elements, table.counts):
        s = -1 if (top + w.length) % 2 else 1
        coeffs[c] = coeffs.get(c, 0) + s
    return QPoly(coeffs)


def restricted_blowup_poly(group_or_type, eps=None) -> QPoly:
    """Same alternating sum taken only over the sign-stable elements."""
    group = _coerce_group(group_or_type)
    eps = all_minus(group.rank) if eps is None else sign_vector(eps, group.rank)
    table = blowup_table(group, eps)
    top = group.longest.length
    coeffs: dict[int, int] = {}
    for w, c, sig in zip(group.elements, table.counts, table.final_signs):
        if sig != eps:
            continue
        s = -1 if (top + w.length) % 2 else 1
        coeffs[c] = coeffs.get(c, 0) + s
    return QPoly(coeffs)


def minus_stable_elements(group_or_type) -> list[WeylElement]:
    """Elements whose sign walk returns all-minus to all-minus (the set W^-)."""
    group = _coerce_group(group_or_type)
    eps = all_minus(group.rank)
    table = blowup_table(group, eps)
    return [w for w, sig in zip(group.elements, table.final_signs) if sig == eps]


def longest_blowups(t, eps=None) -> int:
    """Blow-up count at the longest element, via the greedy word only.

    Works for every type including E8, where full enumeration is off the
    table; for all-minus this is the degree of p(q).
    """
    t = LieType.parse(t)
    cartan = cartan_matrix(t)
    eps = all_minus(t.rank) if eps is None else sign_vector(eps, t.rank)
    return blowup_count(longest_element(t), eps, cartan)
