"""
From translation pairs to one bilingual synset
==============================================

Ten Arabic-English pairs around the concept of a forest.  Three Arabic words
and three English words all translate each other, and one Arabic word has an
extra translation (woodland).  We build the translation graph, list its short
cycles, turn each cycle into a candidate synset and merge the candidates.

Run from the repository root::

    python demos/forest_walkthrough.py
"""

from pathlib import Path

from bisynset import (
    Languages,
    build_graph,
    consolidate,
    cycles_to_candidates,
    emit_trivial_pairs,
    enumerate_cycles,
    load_pairs,
)

AR_EN = Languages("ar", "en")
DATA = Path(__file__).resolve().parent.parent / "tests" / "data" / "forest.tsv"

# %%
# Load the dictionary.  Each line is ``arabic<TAB>english``.
pairs, report = load_pairs(DATA)
print(f"{report.records} pairs read, {report.skipped} comment/blank lines skipped")

# %%
# Every word becomes one node, whatever its number of senses.  The graph is
# bipartite: edges only join an Arabic word to an English word.
graph = build_graph(pairs)
print(f"{len(graph)} nodes, {graph.n_edges} edges")
print(graph.dump_edges(AR_EN))

# %%
# Cycles of length 4 and 6.  The K3,3 block gives 9 four-cycles and 6
# six-cycles.  woodland hangs off a single edge, so no cycle reaches it.
cycles = enumerate_cycles(graph, 6)
for cycle in cycles:
    print(graph.format_cycle(cycle, AR_EN))

# %%
# One candidate per distinct word set.  Several cycles share the same words,
# so there are fewer candidates than cycles.
candidates = cycles_to_candidates(cycles, graph)
print(f"{len(cycles)} cycles -> {len(candidates)} candidates")
for c in candidates:
    print(sorted(c.l1_words), sorted(c.l2_words), f"({len(c.provenance)} cycles)")

# %%
# Candidates that share a word on each side are merged until nothing changes.
merged = consolidate(candidates)
for s in merged:
    print("merged:", sorted(s.l1_words), sorted(s.l2_words))

# %%
# The pair left outside every cycle is kept as a small synset of its own.
for s in emit_trivial_pairs(pairs, merged):
    print("fallback:", sorted(s.l1_words), sorted(s.l2_words))
