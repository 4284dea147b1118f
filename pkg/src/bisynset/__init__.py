"""Bilingual synset extraction from flat translation dictionaries."""

__version__ = "0.1.0"

from .errors import BisynsetError
from .evaluation import (
    MetricsReport,
    cosine,
    evaluate,
    f_measure,
    precision,
    project,
    recall,
    run_experiment,
)
from .graph import TranslationGraph, build_graph, enumerate_cycles, enumerate_cycles_bruteforce
from .lexicon import (
    GoldSynset,
    Lang,
    Languages,
    TranslationPair,
    Word,
    flatten_synsets,
    load_gold_synsets,
    load_pairs,
)
from .synset import (
    DEFAULT_POLICY,
    BilingualSynset,
    ConsolidationPolicy,
    consolidate,
    cycles_to_candidates,
    emit_trivial_pairs,
    extract_synsets,
)
