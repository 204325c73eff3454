"""Integer cochain complexes over incidence graphs and their cohomology.

Graph edges become matrix entries +-2.  Signs are solved over GF(2) so
that consecutive differentials compose to zero: every complete diamond
(the two cover paths through a length-2 Bruhat interval) contributes one
parity equation, and a spanning forest of the graph is gauged to +.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blowup import Signs, format_signs, sign_vector
from .errors import DiamondViolation, Unsolvable
from .graph import IncidenceGraph, build_graph
from .snf import smith_diagonal
from .weyl import WeylGroup


@dataclass
class ChainComplex:
    group: WeylGroup
    eps: Signs
    degree_elements: tuple[tuple[int, ...], ...]  # element indices per length
    diffs: tuple[tuple[tuple[int, ...], ...], ...]  # diffs[k]: C^k -> C^{k+1}

    @property
    def top_degree(self) -> int:
        return len(self.degree_elements) - 1

    def dims(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.degree_elements)


@dataclass
class CohomologyGroups:
    """Free rank and elementary divisors > 1, one pair per degree."""

    groups: tuple[tuple[int, tuple[int, ...]], ...]

    def free_ranks(self) -> tuple[int, ...]:
        return tuple(f for f, _ in self.groups)

    def torsion(self) -> tuple[tuple[int, ...], ...]:
        return tuple(t for _, t in self.groups)

    def describe(self) -> list[str]:
        out = []
        for free, tors in self.groups:
            parts = ["Z"] * free + [f"Z/{d}" for d in tors]
            out.append(" + ".join(parts) if parts else "0")
        return out


def _diamonds(graph: IncidenceGraph):
    """Per length-2 interval (bottom, top): the two-edge cover paths and how
    many of them lie entirely in the graph."""
    group = graph.group
    up = group.covers_up()
    edge_set = set(graph.edges)
    paths: dict[tuple[int, int], list[tuple[tuple[int, int], tuple[int, int], bool]]] = {}
    for i, mids in up.items():
        for j in mids:
            for k in up.get(j, ()):
                complete = (i, j) in edge_set and (j, k) in edge_set
                paths.setdefault((i, k), []).append(((i, j), (j, k), complete))
    return paths


def diamond_check(graph: IncidenceGraph) -> tuple[tuple[int, int], ...]:
    """Length-2 intervals whose complete in-graph path count is not 0 or 2."""
    bad = []
    for (i, k), plist in sorted(_diamonds(graph).items()):
        complete = sum(1 for _, _, c in plist if c)
        if complete not in (0, 2):
            bad.append((i, k))
    return tuple(bad)


def _eliminate_gf2(equations) -> dict[int, tuple[int, int]] | None:
    """Row echelon over GF(2): pivot column -> (mask, rhs); None if inconsistent."""
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in equations:
        while mask:
            col = mask.bit_length() - 1
            got = pivots.get(col)
            if got is None:
                pivots[col] = (mask, rhs)
                break
            mask ^= got[0]
            rhs ^= got[1]
        else:
            if rhs:
                return None
    return pivots


def _solve_gf2(equations, nvars: int) -> list[int] | None:
    """One solution of the system, with free variables set to 0."""
    pivots = _eliminate_gf2(equations)
    if pivots is None:
        return None
    solution = [0] * nvars
    # each pivot mask has its pivot as the TOP bit, so ascending order
    # guarantees the lower bits are already final
    for col in sorted(pivots):
        mask, rhs = pivots[col]
        acc = rhs
        rest = mask & ~(1 << col)
        while rest:
            b = rest & -rest
            acc ^= solution[b.bit_length() - 1]
            rest ^= b
        solution[col] = acc
    return solution


def _kernel_basis_gf2(equations, nvars: int) -> list[int]:
    """Basis masks of the homogeneous solution space, one per free variable."""
    pivots = _eliminate_gf2([(m, 0) for m, _ in equations])
    basis = []
    for free in range(nvars):
        if free in pivots:
            continue
        vec = 1 << free
        for col in sorted(pivots):
            mask, _ = pivots[col]
            rest = mask & ~(1 << col)
            acc = 0
            while rest:
                b = rest & -rest
                acc ^= (vec >> (b.bit_length() - 1)) & 1
                rest ^= b
            if acc:
                vec |= 1 << col
        basis.append(vec)
    return basis


def assign_signs(graph: IncidenceGraph, gauge: str = "forward") -> ChainComplex:
    """Pick +-2 per edge so the differential squares to zero, then verify.

    gauge picks the spanning-forest orientation ("forward" or "reverse"
    canonical edge order); any valid gauge must yield the same cohomology.
    """
    bad = diamond_check(graph)
    if bad:
        raise DiamondViolation(bad)
    els = graph.group.elements
    edges = sorted(graph.edges, key=lambda e: (els[e[0]].length, els[e[0]].mat, els[e[1]].mat))
    if gauge == "reverse":
        edges = list(reversed(edges))
    elif gauge != "forward":
        raise ValueError(f"unknown gauge {gauge!r}")
    pos = {e: k for k, e in enumerate(edges)}

    equations = []
    # spanning forest over the undirected graph: tree edges are forced to +
    parent = list(range(graph.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        ri, rj = find(e[0]), find(e[1])
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
            equations.append((1 << pos[e], 0))
    # one parity equation per interval with both paths complete
    for (_, _), plist in sorted(_diamonds(graph).items()):
        complete = [(e1, e2) for e1, e2, c in plist if c]
        if complete:
            (a1, a2), (b1, b2) = complete
            mask = (1 << pos[a1]) ^ (1 << pos[a2]) ^ (1 << pos[b1]) ^ (1 << pos[b2])
            equations.append((mask, 1))

    bits = _solve_gf2(equations, len(edges))
    if bits is None:
        raise Unsolvable(
            f"no consistent sign assignment for {graph.group.lie_type} "
            f"eps={format_signs(graph.eps)}"
        )
    bits = _align_layer_ranks(graph, edges, equations, bits)

    layers = graph.group.by_length()
    layer_pos = [{v: a for a, v in enumerate(layer)} for layer in layers]
    top = len(layers) - 1
    diffs = []
    for k in range(top):
        rows = [[0] * len(layers[k]) for _ in layers[k + 1]]
        diffs.append(rows)
    for e, bit in zip(edges, bits):
        i, j = e
        k = els[i].length
        diffs[k][layer_pos[k + 1][j]][layer_pos[k][i]] = -2 if bit else 2
    diffs = tuple(tuple(tuple(r) for r in m) for m in diffs)

    cc = ChainComplex(graph.group, graph.eps, tuple(tuple(l) for l in layers), diffs)
    _verify_square_zero(cc)
    return cc


def _f2_rank(masks) -> int:
    pivots: dict[int, int] = {}
    for m in masks:
        while m:
            c = m.bit_length() - 1
            if c not in pivots:
                pivots[c] = m
                break
            m ^= pivots[c]
    return len(pivots)


def _rational_rank(rows) -> int:
    a = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    col = 0
    while rank < len(a) and col < ncols:
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        for i in range(rank + 1, len(a)):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        col += 1
    return rank


def _align_layer_ranks(graph: IncidenceGraph, edges, equations, bits):
    """Flip solution-space directions until each layer's rational rank equals
    the GF(2) rank of its (sign-free) support.

    The diamond equations never see a cycle that stays between two adjacent
    length layers, so its sign product is a free invariant; the underlying
    cell structure has exponent-2 torsion, which forces the rational rank of
    every differential down to the mod-2 rank.  Greedy over the kernel basis
    (then pairs) is enough at enumerable scale; a leftover excess is a
    genuine inconsistency and is surfaced.
    """
    els = graph.group.elements
    nlayers = graph.group.longest.length + 1
    layer_edges: list[list[int]] = [[] for _ in range(nlayers - 1)]
    for pos, (i, _) in enumerate(edges):
        layer_edges[els[i].length].append(pos)
    layer_pos = [
        {v: a for a, v in enumerate(layer)} for layer in graph.group.by_length()
    ]

    def layer_rows(k: int, bits) -> list[list[int]]:
        rows = [
            [0] * len(layer_pos[k])
            for _ in range(len(layer_pos[k + 1]))
        ]
        for pos in layer_edges[k]:
            i, j = edges[pos]
            rows[layer_pos[k + 1][j]][layer_pos[k][i]] = -1 if (bits >> pos) & 1 else 1
        return rows

    packed = 0
    for pos, b in enumerate(bits):
        if b:
            packed |= 1 << pos
    active = [k for k in range(nlayers - 1) if layer_edges[k]]
    targets = {}
    for k in active:
        rows = layer_rows(k, 0)
        targets[k] = _f2_rank(
            [sum(1 << c for c, x in enumerate(row) if x) for row in rows]
        )

    layer_of_pos = {}
    for k in active:
        for pos in layer_edges[k]:
            layer_of_pos[pos] = k

    def touched_layers(mask: int) -> set[int]:
        out = set()
        while mask:
            bit = mask & -mask
            out.add(layer_of_pos[bit.bit_length() - 1])
            mask ^= bit
        return out

    def reranked(base: dict[int, int], bits_packed: int, layers) -> dict[int, int]:
        r = dict(base)
        for k in layers:
            r[k] = _rational_rank(layer_rows(k, bits_packed))
        return r

    current = reranked({}, packed, active)
    excess = sum(current[k] - targets[k] for k in active)
    if excess == 0:
        return bits
    kernel = [v for v in _kernel_basis_gf2(equations, len(edges)) if v]
    supports = [touched_layers(v) for v in kernel]
    improved = True
    while excess > 0 and improved:
        improved = False
        for va, sup in zip(kernel, supports):
            cand = packed ^ va
            r = reranked(current, cand, sup)
            e = sum(r[k] - targets[k] for k in active)
            if e < excess:
                packed, current, excess, improved = cand, r, e, True
                break
        if improved or excess == 0:
            continue
        for a in range(len(kernel)):
            for b in range(a + 1, len(kernel)):
                cand = packed ^ kernel[a] ^ kernel[b]
                r = reranked(current, cand, supports[a] | supports[b])
                e = sum(r[k] - targets[k] for k in active)
                if e < excess:
                    packed, current, excess, improved = cand, r, e, True
                    break
            if improved:
                break
    if excess > 0:
        raise Unsolvable(
            f"sign assignment for {graph.group.lie_type} "
            f"eps={format_signs(graph.eps)} cannot reach the mod-2 ranks"
        )
    return [(packed >> pos) & 1 for pos in range(len(edges))]


def _verify_square_zero(cc: ChainComplex) -> None:
    for k in range(len(cc.diffs) - 1):
        a, b = cc.diffs[k + 1], cc.diffs[k]
        if not a or not b:
            continue
        for row in a:
            acc = [0] * len(b[0])
            for x, brow in zip(row, b):
                if x:
                    acc = [p + x * q for p, q in zip(acc, brow)]
            if any(acc):
                raise Unsolvable("differential does not square to zero after solving")


def complex_for(group_or_type, eps, gauge: str = "forward") -> ChainComplex:
    from .blowup import _coerce_group

    group = _coerce_group(group_or_type)
    return assign_signs(build_graph(group, sign_vector(eps, group.rank)), gauge)


def cohomology_of_complex(cc: ChainComplex) -> CohomologyGroups:
    dims = cc.dims()
    top = cc.top_degree
    snf = [smith_diagonal(m) if m else [] for m in cc.diffs]
    ranks = [len([d for d in s if d]) for s in snf]
    groups = []
    for k in range(top + 1):
        r_out = ranks[k] if k < top else 0
        r_in = ranks[k - 1] if k > 0 else 0
        free = dims[k] - r_out - r_in
        tors = tuple(sorted(d for d in (snf[k - 1] if k > 0 else []) if d > 1))
        groups.append((free, tors))
    return CohomologyGroups(tuple(groups))


def integral_cohomology(group_or_type, eps, gauge: str = "forward") -> CohomologyGroups:
    """Cohomology of the signed complex: free rank + divisors per degree."""
    return cohomology_of_complex(complex_for(group_or_type, eps, gauge))


def rational_betti(group_or_type, eps) -> tuple[int, ...]:
    return integral_cohomology(group_or_type, eps).free_ranks()


def mod2_dims(group_or_type, eps=None) -> tuple[int, ...]:
    """GF(2) dimensions: all differentials vanish mod 2, so these are the
    length-distribution counts."""
    from .blowup import _coerce_group

    group = _coerce_group(group_or_type)
    return tuple(group.length_distribution())
