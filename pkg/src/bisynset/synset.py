"""From cycles to bilingual synsets.

Every cycle of the translation graph becomes one candidate synset: its L1
nodes on one side, its L2 nodes on the other.  Candidates are then
consolidated by merging groups that a policy declares mergeable, and an
optional fallback covers dictionary words that lie on no cycle.
"""

from __future__ import annotations

import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import EmptyInput, MalformedLine, UnknownPolicy
from .graph import TranslationGraph, build_graph, enumerate_cycles
from .lexicon import (
    WORD_SEPARATOR,
    Lang,
    Source,
    TranslationPair,
    _decode,
    _lines,
    _read_bytes,
)

logger = logging.getLogger(__name__)

TRIVIAL_PAIR = "trivial_pair"


@dataclass(frozen=True)
class BilingualSynset:
    """``l1_words = l2_words``: two word sets asserted to share one meaning.

    Equality and hashing only look at the two word sets.  ``provenance``
    holds the indices of the cycles the synset was built from, or
    :data:`TRIVIAL_PAIR` for fallback synsets; ``pairs`` holds the dictionary
    pairs that support it (the cycle edges, or the fallback pairs).
    """

    l1_words: frozenset
    l2_words: frozenset
    provenance: frozenset = field(default=frozenset(), compare=False)
    pairs: frozenset = field(default=frozenset(), compare=False, repr=False)

    @property
    def source(self) -> str:
        return TRIVIAL_PAIR if TRIVIAL_PAIR in self.provenance else "cycles"

    def key(self):
        return (tuple(sorted(self.l1_words)), tuple(sorted(self.l2_words)))

    def words(self):
        return {(Lang.L1, w) for w in self.l1_words} | {(Lang.L2, w) for w in self.l2_words}


def _merge(group) -> BilingualSynset:
    return BilingualSynset(
        frozenset().union(*(s.l1_words for s in group)),
        frozenset().union(*(s.l2_words for s in group)),
        frozenset().union(*(s.provenance for s in group)),
        frozenset().union(*(s.pairs for s in group)),
    )


def deduplicate(synsets: Iterable[BilingualSynset]) -> list:
    """Merge synsets with equal word sets (provenance is unioned); sort by words."""
    groups = defaultdict(list)
    for s in synsets:
        groups[s.key()].append(s)
    return [_merge(groups[k]) if len(groups[k]) > 1 else groups[k][0] for k in sorted(groups)]


def cycles_to_candidates(cycles, graph: TranslationGraph) -> list:
    """One candidate synset per cycle, exact duplicates merged."""
    candidates = []
    nodes = graph.nodes
    for cycle_id, cycle in enumerate(cycles):
        words = [nodes[i] for i in cycle]
        l1 = frozenset(w.surface for w in words if w.lang is Lang.L1)
        l2 = frozenset(w.surface for w in words if w.lang is Lang.L2)
        edges = set()
        for u, v in zip(words, words[1:] + words[:1]):
            a, e = (u, v) if u.lang is Lang.L1 else (v, u)
            edges.add(TranslationPair(a.surface, e.surface))
        candidates.append(BilingualSynset(l1, l2, frozenset([cycle_id]), frozenset(edges)))
    return deduplicate(candidates)


# -- consolidation -----------------------------------------------------------


SHARED_WORD_EACH_SIDE = "shared-word-each-side"
SHARED_PAIR = "shared-pair"
JACCARD = "jaccard"


@dataclass(frozen=True)
class ConsolidationPolicy:
    """When two candidates should be merged.

    ``shared-word-each-side``
        they have an L1 word in common and an L2 word in common (default);
    ``shared-pair``
        some dictionary pair supports both;
    ``jaccard``
        the Jaccard similarity of their combined word sets is at least
        ``theta``.
    """

    kind: str = SHARED_WORD_EACH_SIDE
    theta: Optional[float] = None

    def __post_init__(self):
        if self.kind not in (SHARED_WORD_EACH_SIDE, SHARED_PAIR, JACCARD):
            raise UnknownPolicy(self.kind)
        if self.kind == JACCARD:
            if self.theta is None or not 0.0 < self.theta <= 1.0:
                raise ValueError(f"jaccard threshold must lie in (0, 1], got {self.theta!r}")
        elif self.theta is not None:
            raise ValueError(f"policy {self.kind!r} takes no threshold")

    @classmethod
    def parse(cls, text: str, theta: Optional[float] = None) -> "ConsolidationPolicy":
        """Accepts ``shared-word-each-side``, ``shared-pair``, ``jaccard`` or ``jaccard:0.5``."""
        name = text.strip().lower().replace("_", "-")
        if name.startswith(JACCARD + ":"):
            name, value = name.split(":", 1)
            theta = float(value)
        return cls(name, theta)

    def __str__(self):
        return f"{self.kind}:{self.theta:g}" if self.kind == JACCARD else self.kind


DEFAULT_POLICY = ConsolidationPolicy()


class _DisjointSet:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller index wins, keeps roots deterministic
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx
            return True
        return False


def _union_by_keys(ds, keyed):
    """Union every group of indices that share a key; ``keyed`` yields (index, keys)."""
    first = {}
    merged = False
    for i, keys in keyed:
        for k in keys:
            j = first.setdefault(k, i)
            if j != i:
                merged |= ds.union(i, j)
    return merged


def _link(synsets, policy, ds) -> bool:
    if policy.kind == SHARED_WORD_EACH_SIDE:
        # sharing a word on each side == sharing an element of l1 x l2
        return _union_by_keys(
            ds, ((i, ((a, e) for a in s.l1_words for e in s.l2_words)) for i, s in enumerate(synsets))
        )
    if policy.kind == SHARED_PAIR:
        return _union_by_keys(ds, ((i, s.pairs) for i, s in enumerate(synsets)))

    word_sets = [s.words() for s in synsets]
    by_word = defaultdict(list)
    for i, ws in enumerate(word_sets):
        for w in ws:
            by_word[w].append(i)
    merged = False
    for i, ws in enumerate(word_sets):
        others = {j for w in ws for j in by_word[w] if j > i}
        for j in sorted(others):
            inter = len(ws & word_sets[j])
            if inter / (len(ws) + len(word_sets[j]) - inter) >= policy.theta:
                merged |= ds.union(i, j)
    return merged


def consolidate(candidates: Iterable[BilingualSynset], policy: ConsolidationPolicy = DEFAULT_POLICY) -> list:
    """Merge candidates into connected components of the policy's merge relation.

    Merging is repeated on the merged synsets until nothing more links, so
    the result is a fixed point: consolidating it again changes nothing.
    The output is sorted by word sets and never longer than the input.

    >>> c1 = BilingualSynset(frozenset({"a1", "a2"}), frozenset({"e1", "e2"}))
    >>> c2 = BilingualSynset(frozenset({"a1", "a3"}), frozenset({"e1", "e3"}))
    >>> [s.key() for s in consolidate([c1, c2])]
    [(('a1', 'a2', 'a3'), ('e1', 'e2', 'e3'))]
    """
    if not isinstance(policy, ConsolidationPolicy):
        raise UnknownPolicy(policy)
    current = deduplicate(candidates)
    while True:
        ds = _DisjointSet(len(current))
        if not _link(current, policy, ds):
            return current
        groups = defaultdict(list)
        for i, s in enumerate(current):
            groups[ds.find(i)].append(s)
        current = deduplicate(_merge(g) for g in groups.values())


# -- fallback for words on no cycle ------------------------------------------


def emit_trivial_pairs(
    pairs: Iterable[TranslationPair], covered: Iterable[BilingualSynset], grouping: str = "star"
) -> list:
    """Synsets for dictionary pairs left out of ``covered``.

    A pair is left out when at least one of its words appears in no covered
    synset.  With ``grouping="pair"`` each such pair becomes ``{a} = {e}``.
    With ``grouping="star"`` (default) the left-out pairs are grouped around
    shared words: a word with several left-out translations yields one
    synset holding the word and all of those translations, and a pair whose
    two words have no other left-out translation yields ``{a} = {e}``.

    >>> [s.key() for s in emit_trivial_pairs([TranslationPair("a1", "e1")], [])]
    [(('a1',), ('e1',))]
    """
    covered = list(covered)
    covered_l1 = set().union(*(s.l1_words for s in covered)) if covered else set()
    covered_l2 = set().union(*(s.l2_words for s in covered)) if covered else set()
    loose = sorted(p for p in set(pairs) if p.source not in covered_l1 or p.target not in covered_l2)
    marker = frozenset([TRIVIAL_PAIR])

    if grouping == "pair":
        return deduplicate(
            BilingualSynset(frozenset([p.source]), frozenset([p.target]), marker, frozenset([p]))
            for p in loose
        )
    if grouping != "star":
        raise ValueError(f"unknown grouping {grouping!r}")

    by_l1, by_l2 = defaultdict(list), defaultdict(list)
    for p in loose:
        by_l1[p.source].append(p)
        by_l2[p.target].append(p)
    out = []
    for a, star in by_l1.items():
        if len(star) > 1:
            out.append(
                BilingualSynset(frozenset([a]), frozenset(p.target for p in star), marker, frozenset(star))
            )
    for e, star in by_l2.items():
        if len(star) > 1:
            out.append(
                BilingualSynset(frozenset(p.source for p in star), frozenset([e]), marker, frozenset(star))
            )
    for p in loose:
        if len(by_l1[p.source]) == 1 and len(by_l2[p.target]) == 1:
            out.append(BilingualSynset(frozenset([p.source]), frozenset([p.target]), marker, frozenset([p])))
    return deduplicate(out)


# -- end-to-end extraction ---------------------------------------------------


@dataclass
class Extraction:
    graph: TranslationGraph
    cycles: list
    candidates: list
    synsets: list
    trivial: list

    @property
    def cycle_synsets(self):
        return [s for s in self.synsets if s.source != TRIVIAL_PAIR]

    def summary(self) -> dict:
        return {
            "pairs": self.graph.n_edges,
            "nodes": len(self.graph.nodes),
            "cycles": len(self.cycles),
            "candidates": len(self.candidates),
            "trivial": len(self.trivial),
            "final": len(self.synsets),
        }


def extract_synsets(
    pairs,
    k_max: int = 6,
    policy: ConsolidationPolicy = DEFAULT_POLICY,
    consolidate_candidates: bool = True,
    trivial_pairs: bool = False,
    threads: int = 1,
    grouping: str = "star",
) -> Extraction:
    """Run cycle extraction, consolidation and the optional fallback on a dictionary."""
    pairs = frozenset(pairs)
    if not pairs:
        raise EmptyInput("pair set")
    graph = build_graph(pairs)
    cycles = enumerate_cycles(graph, k_max, threads=threads)
    candidates = cycles_to_candidates(cycles, graph)
    synsets = consolidate(candidates, policy) if consolidate_candidates else candidates
    trivial = emit_trivial_pairs(pairs, synsets, grouping) if trivial_pairs else []
    final = deduplicate(list(synsets) + trivial)
    return Extraction(graph, cycles, candidates, final, trivial)


# -- file formats ------------------------------------------------------------


def _join(words) -> str:
    for w in words:
        if WORD_SEPARATOR in w:
            raise ValueError(f"word {w!r} contains the separator {WORD_SEPARATOR!r}")
    return WORD_SEPARATOR.join(sorted(words))


def format_synsets(synsets: Iterable[BilingualSynset], fmt: str = "tsv") -> str:
    """Serialize synsets, sorted by word sets, with ids ``s1``, ``s2``, ...

    ``tsv`` lines are ``id<TAB>l1|...<TAB>l2|...<TAB>provenance_count``;
    ``jsonl`` lines are objects with ``id``, ``l1``, ``l2`` and ``source``.
    """
    ordered = sorted(synsets, key=BilingualSynset.key)
    lines = []
    for n, s in enumerate(ordered, start=1):
        sid = f"s{n}"
        if fmt == "tsv":
            lines.append(f"{sid}\t{_join(s.l1_words)}\t{_join(s.l2_words)}\t{len(s.provenance)}\n")
        elif fmt == "jsonl":
            obj = {"id": sid, "l1": sorted(s.l1_words), "l2": sorted(s.l2_words), "source": s.source}
            lines.append(json.dumps(obj, ensure_ascii=False) + "\n")
        else:
            raise ValueError(f"unknown format {fmt!r}")
    return "".join(lines)


def load_synsets(source: Source) -> list:
    """Read synsets written by :func:`format_synsets` (either format, auto-detected).

    Provenance is not round-tripped beyond the trivial-pair marker.
    """
    text = _decode(_read_bytes(source))
    out = []
    for line_no, line in _lines(text):
        if line is None:
            continue
        if line.lstrip().startswith("{"):
            try:
                obj = json.loads(line)
                l1, l2 = frozenset(obj["l1"]), frozenset(obj["l2"])
                source_tag = obj.get("source", "cycles")
            except (ValueError, KeyError, TypeError) as exc:
                raise MalformedLine(line_no, str(exc)) from None
        else:
            fields = line.split("\t")
            if len(fields) != 4:
                raise MalformedLine(line_no, f"expected 4 TAB-separated fields, got {len(fields)}")
            l1 = frozenset(w for w in fields[1].split(WORD_SEPARATOR) if w)
            l2 = frozenset(w for w in fields[2].split(WORD_SEPARATOR) if w)
            source_tag = "cycles"
        if not l1 or not l2:
            raise MalformedLine(line_no, "synset with an empty side")
        prov = frozenset([TRIVIAL_PAIR]) if source_tag == TRIVIAL_PAIR else frozenset()
        out.append(BilingualSynset(l1, l2, prov))
    return out
