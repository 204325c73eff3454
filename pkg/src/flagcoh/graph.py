"""Incidence graphs on Weyl group vertices, built from blow-up data.

An edge w1 => w2 requires all four conditions: Bruhat cover, length step
one, equal blow-up count, equal accumulated sign vector.  Connectivity is
taken on the underlying undirected graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .blowup import Signs, all_minus, blowup_table, format_signs, sign_vector
from .weyl import WeylGroup


@dataclass
class IncidenceGraph:
    group: WeylGroup
    eps: Signs
    counts: tuple[int, ...]
    final_signs: tuple[Signs, ...]
    edges: tuple[tuple[int, int], ...]
    # cover pairs where conditions a), b), d) held but c) failed
    cond_c_failures: tuple[tuple[int, int], ...]

    @property
    def vertex_count(self) -> int:
        return self.group.order

    def vertex_order(self) -> list[int]:
        """Canonical vertex order: by (length, matrix key)."""
        els = self.group.elements
        return sorted(range(len(els)), key=lambda i: (els[i].length, els[i].mat))

    def edge_words(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        els = self.group.elements
        return [(els[i].word, els[j].word) for i, j in self.edges]


def build_graph(group_or_type, eps) -> IncidenceGraph:
    from .blowup import _coerce_group

    group = _coerce_group(group_or_type)
    eps = sign_vector(eps, group.rank)
    table = blowup_table(group, eps)
    edges = []
    failures = []
    for i, j in group.cover_pairs():
        if table.final_signs[i] != table.final_signs[j]:
            continue
        if table.counts[i] == table.counts[j]:
            edges.append((i, j))
        else:
            failures.append((i, j))
    return IncidenceGraph(
        group, eps, table.counts, table.final_signs, tuple(edges), tuple(failures)
    )


def components(graph: IncidenceGraph) -> list[tuple[int, ...]]:
    """Undirected connected components, each a sorted vertex tuple."""
    parent = list(range(graph.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in graph.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    buckets: dict[int, list[int]] = {}
    for v in range(graph.vertex_count):
        buckets.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(vs)) for vs in buckets.values())


def negative_components(graph: IncidenceGraph) -> int:
    """Components of the subgraph induced on the all-minus-stable vertices."""
    minus = all_minus(graph.group.rank)
    inside = [v for v in range(graph.vertex_count) if graph.final_signs[v] == minus]
    keep = set(inside)
    pos = {v: k for k, v in enumerate(inside)}
    parent = list(range(len(inside)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in graph.edges:
        if i in keep and j in keep:
            ri, rj = find(pos[i]), find(pos[j])
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return len({find(k) for k in range(len(inside))})


def _word_label(word) -> str:
    return "e" if not word else "".join(str(i) for i in word)


def export_graph(graph: IncidenceGraph, fmt: str) -> str:
    """Serialize as 'dot' or 'json'; vertex order is (length, matrix key)."""
    order = graph.vertex_order()
    els = graph.group.elements
    pos = {v: k for k, v in enumerate(order)}
    edges = sorted((pos[i], pos[j]) for i, j in graph.edges)
    if fmt == "dot":
        lines = ["digraph incidence {"]
        for v in order:
            w = els[v]
            label = f"{_word_label(w.word)} | l={w.length} | eta={graph.counts[v]}"
            lines.append(f'  n{pos[v]} [label="{label}"];')
        for a, b in edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "type": str(graph.group.lie_type),
            "eps": format_signs(graph.eps),
            "vertices": [
                {
                    "word": list(els[v].word),
                    "length": els[v].length,
                    "eta": graph.counts[v],
                    "sign": format_signs(graph.final_signs[v]),
                }
                for v in order
            ],
            "edges": [list(e) for e in edges],
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown export format {fmt!r} (want 'dot' or 'json')")


def graph_from_json(text: str, group: WeylGroup) -> IncidenceGraph:
    """Rebuild a graph exported with export_graph(..., 'json')."""
    payload = json.loads(text)
    if payload["type"] != str(group.lie_type):
        raise ValueError("type mismatch between payload and group")
    eps = sign_vector(payload["eps"], group.rank)
    from .weyl import word_matrix

    idx = [
        group.element_index(word_matrix(tuple(v["word"]), group.cartan))
        for v in payload["vertices"]
    ]
    counts = [0] * group.order
    signs: list[Signs] = [eps] * group.order
    for v, i in zip(payload["vertices"], idx):
        counts[i] = v["eta"]
        signs[i] = sign_vector(v["sign"], group.rank)
    edges = tuple(sorted((idx[a], idx[b]) for a, b in payload["edges"]))
    return IncidenceGraph(group, eps, tuple(counts), tuple(signs), edges, ())
