"""Shared builders for the test suite."""

import random
from pathlib import Path

from hypothesis import strategies as st

from bisynset.lexicon import GoldSynset, TranslationPair

DATA = Path(__file__).parent / "data"

FOREST, WOODS, WOOD, WOODLAND = "forest", "woods", "wood", "woodland"
GHABA, GHAB, ADGHAL = "غابة", "غاب", "أدغال"


def pairs_of(*items):
    return frozenset(TranslationPair(a, e) for a, e in items)


def complete_bipartite(l1, l2):
    return frozenset(TranslationPair(a, e) for a in l1 for e in l2)


def gold(sid, l1, l2):
    return GoldSynset(sid, frozenset(l1), frozenset(l2))


def random_pairs(rng, max_nodes=16, density=None):
    """Random bipartite dictionary on at most ``max_nodes`` words."""
    n = rng.randint(2, max_nodes)
    n1 = rng.randint(1, n - 1)
    p = rng.random() if density is None else density
    return frozenset(
        TranslationPair(f"a{i}", f"e{j}") for i in range(n1) for j in range(n - n1) if rng.random() < p
    )


@st.composite
def bipartite_pair_sets(draw, max_l1=6, max_l2=6):
    n1 = draw(st.integers(1, max_l1))
    n2 = draw(st.integers(1, max_l2))
    cells = [(i, j) for i in range(n1) for j in range(n2)]
    chosen = draw(st.lists(st.sampled_from(cells), min_size=1, unique=True))
    return frozenset(TranslationPair(f"a{i}", f"e{j}") for i, j in chosen)
