"""Batch verification over a configured corpus of (G, T) pairs."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from ..exact import DEFAULT_MAX_LEVEL, factorize
from ..report import Verdict, VerificationReport, worst
from ..verify import ProbeCase
from .build import by_name
from .checks import verify_pair
from .core import FiniteGroup, SubgroupSet
from .lattice import all_subgroups, conjugacy_representatives, enumerate_overgroups

DEFAULT_EXHAUSTIVE_ORDER = 24


@dataclass
class Corpus:
    groups: list[dict]
    exhaustive_order: int = DEFAULT_EXHAUSTIVE_ORDER


@dataclass
class PairResult:
    label: str
    group: str
    order: int
    t_order: int
    index: int
    sub_count: int
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        return worst(r.verdict for r in self.reports)


def _expand(entry: dict) -> list[dict]:
    if "orders" in entry:
        base = {k: v for k, v in entry.items() if k != "orders"}
        return [{**base, "order": n} for n in entry["orders"]]
    if "ranks" in entry:
        base = {k: v for k, v in entry.items() if k != "ranks"}
        return [{**base, "rank": a} for a in entry["ranks"]]
    return [entry]


def load_corpus(path=None) -> Corpus:
    """Read a corpus JSON file; ``None`` loads the bundled default."""
    if path is None:
        text = resources.files("subcount.data").joinpath("default_corpus.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    groups = [g for entry in data.get("groups", []) for g in _expand(entry)]
    return Corpus(groups, data.get("exhaustive_order", DEFAULT_EXHAUSTIVE_ORDER))


def corpus_groups(corpus: Corpus) -> list[FiniteGroup]:
    return [by_name(spec) for spec in corpus.groups]


def subgroups_for(G: FiniteGroup, exhaustive_order: int = DEFAULT_EXHAUSTIVE_ORDER) -> list[SubgroupSet]:
    """All subgroups when ``|G|`` is small, otherwise one per conjugacy class."""
    subs = all_subgroups(G)
    if G.order <= exhaustive_order:
        return list(subs)
    return conjugacy_representatives(G, subs)


def _run_group(args) -> list[PairResult]:
    spec, exhaustive_order, max_level = args
    G = by_name(spec)
    out = []
    for i, T in enumerate(subgroups_for(G, exhaustive_order)):
        reports = verify_pair(G, T, max_level)
        main = reports[0]
        out.append(PairResult(
            label=f"{G.name}/T{i}", group=G.name, order=G.order, t_order=T.order,
            index=G.order // T.order, sub_count=main.witnesses[0]["count"], reports=reports,
        ))
    return out


def run_corpus(corpus: Corpus, workers: int = 1, max_level: int = DEFAULT_MAX_LEVEL) -> list[PairResult]:
    """Check every pair; results come back in corpus order whatever ``workers`` is."""
    jobs = [(spec, corpus.exhaustive_order, max_level) for spec in corpus.groups]
    if workers <= 1 or len(jobs) <= 1:
        chunks = [_run_group(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_group, jobs))
    return [r for chunk in chunks for r in chunk]


def only_pgroups(corpus: Corpus) -> Corpus:
    keep = []
    for spec in corpus.groups:
        if factorize(by_name(spec).order).length <= 1:
            keep.append(spec)
    return Corpus(keep, corpus.exhaustive_order)


def pair_summary(results: list[PairResult], statement: Optional[str] = None) -> list[VerificationReport]:
    reports = []
    for r in results:
        for rep in r.reports:
            if statement is None or rep.statement_id == statement:
                reports.append(rep)
    return reports


def probe_cases(corpus: Corpus):
    """``ProbeCase`` per pair from overgroup counts alone (no bound checks)."""
    cases = []
    for spec in corpus.groups:
        G = by_name(spec)
        for i, T in enumerate(subgroups_for(G, corpus.exhaustive_order)):
            count = enumerate_overgroups(G, T).total
            cases.append(ProbeCase(f"{G.name}/T{i}", count, G.order // T.order))
    return cases
