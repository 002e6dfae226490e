"""Complex-graph connectivity: linkage classes, strong linkage classes, shapes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Literal

if TYPE_CHECKING:
    from .model import Network

Shape = Literal["forest", "single_cycle", "other"]


@dataclass(frozen=True)
class ComplexGraph:
    """Directed graph on complexes; one edge per reaction."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_network(cls, net: Network, reactions: Iterable[int] | None = None) -> ComplexGraph:
        js = range(net.r) if reactions is None else reactions
        return cls(net.n, tuple((net.reactions[j].reactant, net.reactions[j].product) for j in js))

    def successors(self) -> list[list[int]]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            out[a].add(b)
        return [sorted(s) for s in out]


@dataclass(frozen=True)
class ComponentLabeling:
    linkage: tuple[int, ...] | None = None
    strong: tuple[int, ...] | None = None
    terminal: frozenset[int] | None = None

    @property
    def l(self) -> int:
        return len(set(self.linkage)) if self.linkage is not None else 0

    @property
    def sl(self) -> int:
        return len(set(self.strong)) if self.strong is not None else 0

    @property
    def t(self) -> int:
        return len(self.terminal) if self.terminal is not None else 0


def _relabel(raw: list[int]) -> tuple[int, ...]:
    # class ids numbered by smallest member vertex
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in raw)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def linkage_classes(g: ComplexGraph) -> ComponentLabeling:
    uf = _UnionFind(g.n)
    for a, b in g.edges:
        uf.union(a, b)
    return ComponentLabeling(linkage=_relabel([uf.find(v) for v in range(g.n)]))


def strong_components(g: ComplexGraph) -> ComponentLabeling:
    """Tarjan's algorithm (iterative) plus the terminal-class flags."""
    succ = g.successors()
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    comp = [-1] * g.n
    counter = 0
    ncomp = 0
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for k in range(i, len(succ[v])):
                w = succ[v][k]
                if index[w] == -1:
                    work.append((v, k + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    strong = _relabel(comp)
    leaving = {strong[a] for a, b in g.edges if strong[a] != strong[b]}
    terminal = frozenset(c for c in set(strong) if c not in leaving)
    return ComponentLabeling(strong=strong, terminal=terminal)


def label_components(g: ComplexGraph) -> ComponentLabeling:
    sc = strong_components(g)
    return ComponentLabeling(linkage=linkage_classes(g).linkage,
                             strong=sc.strong, terminal=sc.terminal)


def is_weakly_reversible(g: ComplexGraph) -> bool:
    labels = label_components(g)
    return labels.l == labels.sl


def shape_of_subnetwork(reactions: Iterable[int], net: Network) -> Shape:
    """Classify the undirected multigraph spanned by a reaction set.

    Parallel edges count, so a two-edge cycle between the same pair of
    complexes is ``other`` rather than ``single_cycle``.
    """
    js = list(reactions)
    if not js:
        raise ValueError("shape of an empty reaction set is undefined")
    edges = [(net.reactions[j].reactant, net.reactions[j].product) for j in js]
    vertices = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(vertices)}
    uf = _UnionFind(len(vertices))
    acyclic = all(uf.union(pos[a], pos[b]) for a, b in edges)
    if acyclic:
        return "forest"
    trees = len({uf.find(i) for i in range(len(vertices))})
    degree = Counter(v for e in edges for v in e)
    if (trees == 1 and len(edges) == len(vertices) and len(vertices) >= 3
            and all(degree[v] == 2 for v in vertices)):
        return "single_cycle"
    return "other"
