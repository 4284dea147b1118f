"""Translation graph and bounded elementary cycle enumeration.

The graph has one node per distinct word of either language and one
undirected edge per translation pair.  Nodes are numbered in ``(lang,
surface)`` order, so comparing two node indices is the same as comparing the
words lexicographically; every L1 node sorts before every L2 node.

Cycles are returned as tuples of node indices in canonical form: the smallest
node first, then its smaller neighbour on the cycle.  That fixes one
representative per undirected cycle (out of ``2 * len`` rotations and
reflections of the same closed walk).
"""

from __future__ import annotations

import numbers
from bisect import bisect_left
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyInput, GraphTooLarge, InvalidBound
from .lexicon import Lang, Languages, TranslationPair, Word

__all__ = [
    "TranslationGraph",
    "build_graph",
    "check_bound",
    "enumerate_cycles",
    "enumerate_cycles_bruteforce",
    "BRUTEFORCE_NODE_LIMIT",
]

BRUTEFORCE_NODE_LIMIT = 16

# above this bound the search switches from plain DFS to lock-based blocking
DFS_MAX_BOUND = 8


@dataclass(frozen=True, eq=False)
class TranslationGraph:
    nodes: tuple
    adjacency: tuple
    index: dict = field(repr=False)
    n_edges: int = 0

    def __len__(self):
        return len(self.nodes)

    def node_id(self, lang: Lang, surface: str) -> int:
        return self.index[Word(lang, surface)]

    def edges(self):
        """Yield every edge once as ``(i, j)`` with ``i < j``."""
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if j > i:
                    yield i, j

    def has_edge(self, i: int, j: int) -> bool:
        nbrs = self.adjacency[i]
        # adjacency lists are sorted
        k = bisect_left(nbrs, j)
        return k < len(nbrs) and nbrs[k] == j

    def dump_edges(self, languages: Languages = Languages()) -> str:
        """Sorted ``lang:word<TAB>lang:word`` edge list, L1 endpoint first."""
        lines = []
        for i, j in self.edges():
            a, e = self.nodes[i], self.nodes[j]
            lines.append(
                f"{languages.label(a.lang)}:{a.surface}\t{languages.label(e.lang)}:{e.surface}\n"
            )
        return "".join(sorted(lines))

    def format_cycle(self, cycle, languages: Languages = Languages()) -> str:
        return " ".join(
            f"{languages.label(self.nodes[i].lang)}:{self.nodes[i].surface}" for i in cycle
        )


def build_graph(pairs: Iterable[TranslationPair]) -> TranslationGraph:
    """Build the bipartite translation graph of a set of pairs.

    >>> g = build_graph([TranslationPair("a1", "e1")])
    >>> len(g), g.n_edges
    (2, 1)
    """
    pairs = set(pairs)
    if not pairs:
        raise EmptyInput("pair set")
    words = set()
    for a, e in pairs:
        words.add(Word(Lang.L1, a))
        words.add(Word(Lang.L2, e))
    nodes = tuple(sorted(words))
    index = {w: i for i, w in enumerate(nodes)}
    neighbours = [[] for _ in nodes]
    for a, e in pairs:
        i, j = index[Word(Lang.L1, a)], index[Word(Lang.L2, e)]
        neighbours[i].append(j)
        neighbours[j].append(i)
    adjacency = tuple(tuple(sorted(n)) for n in neighbours)
    return TranslationGraph(nodes, adjacency, index, len(pairs))


def check_bound(k_max) -> int:
    if (
        isinstance(k_max, bool)
        or not isinstance(k_max, numbers.Integral)
        or k_max < 4
        or k_max % 2
    ):
        raise InvalidBound(k_max)
    return int(k_max)


def _root_cycles_dfs(adjacency, root, k_max):
    """All canonical cycles whose smallest node is ``root``, by bounded DFS."""
    found = []
    path = [root]
    on_path = {root}
    stack = [iter(adjacency[root])]
    while stack:
        for w in stack[-1]:
            if w == root:
                if len(path) >= 4 and path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > root and w not in on_path and len(path) < k_max:
                path.append(w)
                on_path.add(w)
                stack.append(iter(adjacency[w]))
                break
        else:
            stack.pop()
            on_path.discard(path.pop())
    return found


def _root_cycles_blocking(adjacency, root, k_max):
    """Same contract as :func:`_root_cycles_dfs`, with length-aware blocking.

    Each node carries a lock: it may only be pushed while the path is shorter
    than its lock.  A node that closes no cycle within the bound keeps the
    lock it got when pushed, so it is retried only from shorter prefixes;
    when some node turns out to reach the root in ``d`` steps its lock is
    raised to ``k_max - d + 1`` and the raise propagates backwards through
    the nodes that were waiting on it (bounded blocking, after Gupta and
    Suzumura's bounded variant of Johnson's circuit search).
    """
    found = []
    path = [root]
    lock = {root: 0}
    waiting = defaultdict(set)
    stack = [iter(adjacency[root])]
    # shortest known distance back to the root from each node on the path
    dist = [k_max]
    while stack:
        for w in stack[-1]:
            if w == root:
                if len(path) >= 4 and path[1] < path[-1]:
                    found.append(tuple(path))
                dist[-1] = 1
            elif w > root and len(path) < lock.get(w, k_max):
                stack.append(iter(adjacency[w]))
                dist.append(k_max)
                path.append(w)
                lock[w] = len(path)
                break
        else:
            stack.pop()
            v = path.pop()
            d = dist.pop()
            if dist:
                # deliberately not d + 1: an underestimate only unblocks more
                dist[-1] = min(dist[-1], d)
            if d < k_max:
                on_path = set(path)
                pending = [(d, v)]
                while pending:
                    d, u = pending.pop()
                    if lock.get(u, k_max) < k_max - d + 1:
                        lock[u] = k_max - d + 1
                        pending.extend((d + 1, x) for x in waiting[u] if x not in on_path)
            else:
                for x in adjacency[v]:
                    if x > root:
                        waiting[x].add(v)
    return found


_STRATEGIES = {"dfs": _root_cycles_dfs, "blocking": _root_cycles_blocking}


def enumerate_cycles(
    graph: TranslationGraph, k_max: int, threads: int = 1, strategy: str = "auto"
) -> list:
    """Enumerate every elementary cycle with 4 to ``k_max`` nodes.

    The search is Johnson-style: cycles are grown from each root in turn
    over nodes that sort after the root, so every cycle is found from its
    smallest node only.  A partial path stops growing when it closes back
    on the root, when its frontier has no unvisited translation left, or
    when it already holds ``k_max`` nodes.

    Parameters
    ----------
    graph : TranslationGraph
    k_max : int
        Maximum number of nodes on a cycle; even and at least 4.
    threads : int
        Roots are distributed over this many worker threads.  The output does
        not depend on it.
    strategy : {"auto", "dfs", "blocking"}
        ``"dfs"`` is a plain depth-bounded search with an on-path set,
        ``"blocking"`` adds length-aware blocking (worthwhile for long bounds).
        ``"auto"`` picks ``"dfs"`` for ``k_max <= 8``.

    Returns
    -------
    list of tuple of int
        Canonical cycles, sorted.
    """
    k_max = check_bound(k_max)
    if strategy == "auto":
        strategy = "dfs" if k_max <= DFS_MAX_BOUND else "blocking"
    try:
        search = _STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}") from None

    adjacency = graph.adjacency
    # a root must have at least two larger neighbours to start a cycle
    roots = [r for r, nbrs in enumerate(adjacency) if sum(1 for w in nbrs if w > r) >= 2]
    if threads is None or threads <= 1 or len(roots) < 2:
        per_root = [search(adjacency, r, k_max) for r in roots]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_root = list(pool.map(lambda r: search(adjacency, r, k_max), roots))
    cycles = [c for chunk in per_root for c in chunk]
    cycles.sort()
    return cycles


def _canonical(seq) -> tuple:
    n = len(seq)
    variants = []
    for s in (list(seq), list(reversed(seq))):
        for shift in range(n):
            variants.append(tuple(s[shift:] + s[:shift]))
    return min(variants)


def enumerate_cycles_bruteforce(graph: TranslationGraph, k_max: int) -> list:
    """Reference enumeration for small graphs; same output as :func:`enumerate_cycles`.

    Walks every simple path from every start node, closes it whenever the
    last node touches the start, and keeps one closing per undirected cycle
    (checked against the smallest of all its rotations and reflections).  Exponential; refuses graphs with more
    than 16 nodes.
    """
    k_max = check_bound(k_max)
    n = len(graph.nodes)
    if n > BRUTEFORCE_NODE_LIMIT:
        raise GraphTooLarge(n, BRUTEFORCE_NODE_LIMIT)
    adjacency = graph.adjacency
    seen = set()
    for start in range(n):
        path = [start]
        visited = 1 << start
        stack = [iter(adjacency[start])]
        while stack:
            for w in stack[-1]:
                if w == start:
                    # each undirected cycle closes 2 * len times; keep the
                    # closing that already reads in canonical form
                    if len(path) >= 3 and start == min(path) and path[1] < path[-1]:
                        seen.add(_canonical(path))
                elif not visited >> w & 1 and len(path) < k_max:
                    path.append(w)
                    visited |= 1 << w
                    stack.append(iter(adjacency[w]))
                    break
            else:
                stack.pop()
                visited &= ~(1 << path.pop())
    return sorted(seen)
