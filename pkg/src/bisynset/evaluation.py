"""Scoring extracted synsets against a gold inventory.

Each language side is scored on its own.  A synset on one side is a plain
word set, and two word sets are compared with the cosine of their binary
membership vectors, ``|x & y| / sqrt(|x| * |y|)``.  Precision averages, over
the extracted sets, the best cosine each one reaches against any gold set;
recall does the same with the roles swapped.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

import numpy as np
from scipy import sparse

from .errors import EmptyExtracted, EmptyGold, EmptySet
from .lexicon import GoldSynset, Lang, Languages, flatten_synsets
from .synset import DEFAULT_POLICY, ConsolidationPolicy, Extraction, extract_synsets

logger = logging.getLogger(__name__)


def project(synsets, side: Lang) -> list:
    """Word sets of one language side; empties dropped, duplicates merged, sorted."""
    attr = "l1_words" if side is Lang.L1 else "l2_words"
    sets = {frozenset(getattr(s, attr)) for s in synsets}
    sets.discard(frozenset())
    return sorted(sets, key=sorted)


def cosine(x, y) -> float:
    """Cosine of two word sets seen as binary vectors.

    >>> round(cosine({"a", "b"}, {"a", "b", "c"}), 5)
    0.8165
    """
    if not x or not y:
        raise EmptySet("cosine of an empty word set")
    return len(x & y) / math.sqrt(len(x) * len(y))


def _incidence(sets, vocab):
    rows, cols = [], []
    for i, s in enumerate(sets):
        for w in s:
            rows.append(i)
            cols.append(vocab[w])
    data = np.ones(len(rows), dtype=np.int64)
    return sparse.csr_matrix((data, (rows, cols)), shape=(len(sets), len(vocab)))


def best_cosines(queries, targets) -> np.ndarray:
    """For every query set, the largest cosine it reaches against any target set."""
    queries, targets = list(queries), list(targets)
    if any(not s for s in queries) or any(not s for s in targets):
        raise EmptySet("cosine of an empty word set")
    vocab = {}
    for s in queries + targets:
        for w in s:
            vocab.setdefault(w, len(vocab))
    q = _incidence(queries, vocab)
    t = _incidence(targets, vocab)
    overlap = (q @ t.T).tocoo()
    q_size = np.array([len(s) for s in queries], dtype=np.int64)
    t_size = np.array([len(s) for s in targets], dtype=np.int64)
    values = overlap.data / np.sqrt((q_size[overlap.row] * t_size[overlap.col]).astype(np.float64))
    best = np.zeros(len(queries))
    np.maximum.at(best, overlap.row, values)
    return best


def precision(extracted, gold) -> float:
    """Mean over extracted sets of their best cosine against the gold sets."""
    extracted, gold = list(extracted), list(gold)
    if not extracted:
        raise EmptyExtracted()
    if not gold:
        raise EmptyGold()
    # fsum is exact, so the value does not depend on summation order
    return math.fsum(best_cosines(extracted, gold)) / len(extracted)


def recall(extracted, gold) -> float:
    """Mean over gold sets of their best cosine against the extracted sets."""
    extracted, gold = list(extracted), list(gold)
    if not extracted:
        raise EmptyExtracted()
    if not gold:
        raise EmptyGold()
    return math.fsum(best_cosines(gold, extracted)) / len(gold)


def f_measure(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


@dataclass
class MetricsReport:
    precision: float
    recall: float
    f_measure: float
    extracted_count: int
    gold_count: int
    config: dict = field(default_factory=dict)

    def percentages(self):
        return tuple(round(100 * v, 1) for v in (self.precision, self.recall, self.f_measure))

    def to_dict(self):
        return asdict(self)


def score(extracted_sets, gold_sets, config: Optional[dict] = None) -> MetricsReport:
    """Precision, recall and F-measure of two monolingual set families."""
    p = precision(extracted_sets, gold_sets)
    r = recall(extracted_sets, gold_sets)
    return MetricsReport(p, r, f_measure(p, r), len(extracted_sets), len(gold_sets), dict(config or {}))


def evaluate(extracted, gold_sides, languages: Languages = Languages(), config: Optional[dict] = None):
    """Score bilingual synsets per side.

    ``gold_sides`` maps each :class:`Lang` to that side's gold word sets (see
    :func:`gold_sides`).  Returns ``{Lang.L1: report, Lang.L2: report}``.
    """
    reports = {}
    for side in (Lang.L1, Lang.L2):
        cfg = dict(config or {})
        cfg["side"] = languages.label(side)
        reports[side] = score(project(extracted, side), gold_sides[side], cfg)
    return reports


def select_gold(gold: Iterable[GoldSynset], drop_singletons: bool = False):
    """Split gold synsets into bilingual ones and ones with an empty side.

    With ``drop_singletons`` the bilingual synsets holding exactly one word on
    each side are discarded as well.
    """
    bilingual, monolingual = [], []
    for g in gold:
        if g.l1_words and g.l2_words:
            if drop_singletons and len(g.l1_words) == 1 and len(g.l2_words) == 1:
                continue
            bilingual.append(g)
        else:
            monolingual.append(g)
    return bilingual, monolingual


def gold_sides(bilingual, monolingual=()) -> dict:
    every = list(bilingual) + list(monolingual)
    return {side: project(every, side) for side in (Lang.L1, Lang.L2)}


@dataclass
class ExperimentResult:
    reports: dict
    extraction: Extraction
    # same scores computed on cycle-derived synsets only (None when the
    # fallback is off or a side has no cycle synsets)
    cycles_only: Optional[dict] = None
    gold_used: int = 0
    gold_excluded: int = 0


def run_experiment(
    gold: Iterable[GoldSynset],
    k_max: int = 6,
    policy: ConsolidationPolicy = DEFAULT_POLICY,
    consolidate_flag: bool = True,
    trivial_pairs_flag: bool = True,
    threads: int = 1,
    languages: Languages = Languages(),
    keep_monolingual_gold: bool = False,
    drop_singleton_gold: bool = False,
    grouping: str = "star",
) -> ExperimentResult:
    """Rebuild a gold inventory from its own flattened translation pairs.

    The gold synsets are flattened into a dictionary (sense memberships are
    lost), synsets are extracted from that dictionary, and the result is
    scored against the gold per language side.

    Parameters
    ----------
    gold : iterable of GoldSynset
    k_max : int
        Cycle bound in nodes.
    policy, consolidate_flag
        Consolidation policy, and whether to consolidate at all.
    trivial_pairs_flag : bool
        Emit fallback synsets for pairs on no cycle.
    keep_monolingual_gold : bool
        Keep gold synsets with one empty side in the gold families (they are
        never flattened).  By default they are dropped everywhere.
    drop_singleton_gold : bool
        Drop gold synsets with one word on each side.

    Returns
    -------
    ExperimentResult
    """
    gold = list(gold)
    bilingual, monolingual = select_gold(gold, drop_singleton_gold)
    excluded = len(gold) - len(bilingual) - (len(monolingual) if keep_monolingual_gold else 0)
    if excluded:
        logger.warning("excluded %d gold synset(s) from the experiment", excluded)
    if not bilingual:
        raise EmptyGold()
    pairs = flatten_synsets(bilingual)
    extraction = extract_synsets(
        pairs,
        k_max=k_max,
        policy=policy,
        consolidate_candidates=consolidate_flag,
        trivial_pairs=trivial_pairs_flag,
        threads=threads,
        grouping=grouping,
    )
    sides = gold_sides(bilingual, monolingual if keep_monolingual_gold else ())
    config = {
        "k_max": k_max,
        "consolidate": consolidate_flag,
        "policy": str(policy),
        "trivial_pairs": trivial_pairs_flag,
        "grouping": grouping,
        "keep_monolingual_gold": keep_monolingual_gold,
        "drop_singleton_gold": drop_singleton_gold,
    }
    reports = evaluate(extraction.synsets, sides, languages, config)

    cycles_only = None
    if trivial_pairs_flag:
        cyc = extraction.cycle_synsets
        if cyc:
            cycles_only = evaluate(cyc, sides, languages, dict(config, trivial_pairs=False))
    return ExperimentResult(reports, extraction, cycles_only, len(bilingual), excluded)


def row_label(config: dict) -> str:
    k = config.get("k_max")
    label = f"k={k}, " + ("with consolidation" if config.get("consolidate") else "no consolidation")
    if config.get("consolidate") and config.get("policy") not in (None, str(DEFAULT_POLICY)):
        label += f" ({config['policy']})"
    if not config.get("trivial_pairs", True):
        label += ", cycles only"
    return label


def render_table(rows, title: str = "") -> str:
    """Aligned text table of ``(label, MetricsReport)`` rows, scores in percent."""
    rows = list(rows)
    width = max([len("configuration")] + [len(label) for label, _ in rows])
    out = []
    if title:
        out.append(title)
    out.append(f"{'configuration':<{width}}  {'Precision':>9}  {'Recall':>6}  {'F-Measure':>9}")
    for label, rep in rows:
        p, r, f = (100 * v for v in (rep.precision, rep.recall, rep.f_measure))
        out.append(f"{label:<{width}}  {p:>9.1f}  {r:>6.1f}  {f:>9.1f}")
    return "\n".join(out) + "\n"


def reports_to_json(result: ExperimentResult, languages: Languages = Languages()) -> str:
    obj = {
        "reports": {languages.label(s): r.to_dict() for s, r in result.reports.items()},
        "extraction": result.extraction.summary(),
        "gold_used": result.gold_used,
        "gold_excluded": result.gold_excluded,
    }
    if result.cycles_only is not None:
        obj["cycles_only"] = {languages.label(s): r.to_dict() for s, r in result.cycles_only.items()}
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
