"""Experiment harness: local search versus exact oracles, plus structural trials.

Config files are line-oriented ``key = value`` pairs. Global keys come
first; each ``[instance]`` line opens a block describing one graph, either
by generator (``kind`` plus its parameters and ``seed``) or by ``file``.

Global keys: ``property`` (``;``-separated, e.g. ``K2; ball:1``), ``c``,
``problems``, ``cutoff``, ``node_limit``, ``time_budget``, ``lemma_r``,
``lemma_m``, ``lemma_trials``, ``seed``, ``jobs``.
"""
from __future__ import annotations

import csv
import io
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, InputError, SparseLSError
from .exact import DEFAULT_NODE_LIMIT, exact_max_packing, exact_min_hitting
from .generators import GeneratorSpec, generate
from .graph import Graph
from .io import read_graph
from .local_search import local_search_hitting, local_search_packing
from .properties import parse_property, is_structural
from .structure import degeneracy_ordering, lemma_trial

logger = logging.getLogger(__name__)

SCHEMA = "sparsels-bench/1"
COLUMNS = [
    "schema", "record", "instance", "graph", "n", "m_edges", "property", "problem", "c",
    "ls_size", "opt_size", "opt_certified", "ratio", "swaps_examined", "certified", "solution",
    "r", "m", "b", "O", "O_rich", "omega_actual", "t_actual", "certificates", "bound_ok", "error",
]
PROBLEMS = ("hitting", "packing", "packing-induced")


@dataclass
class InstanceSpec:
    generator: GeneratorSpec | None = None
    file: str | None = None

    @property
    def label(self) -> str:
        return self.generator.label if self.generator is not None else os.path.basename(self.file)

    def build(self) -> Graph:
        if self.generator is not None:
            return generate(self.generator)
        return read_graph(self.file)


@dataclass
class ExperimentConfig:
    instances: list[InstanceSpec] = field(default_factory=list)
    properties: list[str] = field(default_factory=lambda: ["K2"])
    c_values: list[int] = field(default_factory=lambda: [1, 2, 3])
    problems: list[str] = field(default_factory=lambda: ["hitting", "packing"])
    cutoff: int = 25
    node_limit: int = DEFAULT_NODE_LIMIT
    time_budget: float | None = 60.0
    lemma_r: list[int] = field(default_factory=list)
    lemma_m: list[int] = field(default_factory=list)
    lemma_trials: int = 0
    seed: int = 0
    jobs: int = 1
    timing: bool = False

    def validate(self) -> None:
        if not self.instances:
            raise ConfigurationError("config needs at least one instance")
        if any(c < 1 for c in self.c_values) or not self.c_values:
            raise ConfigurationError("c values must be positive")
        if self.cutoff < 1 or self.node_limit < 1:
            raise ConfigurationError("cutoffs must be positive")
        bad = [p for p in self.problems if p not in PROBLEMS]
        if bad:
            raise ConfigurationError(f"unknown problem(s) {bad}; expected {PROBLEMS}")
        for p in self.properties:
            try:
                parse_property(p)
            except InputError as exc:
                raise ConfigurationError(f"bad property {p!r}: {exc}") from None


def _int_list(value: str) -> list[int]:
    return [int(x) for x in value.replace(" ", "").split(",") if x]


def _number(value: str):
    try:
        return int(value)
    except ValueError:
        return float(value)


def parse_config(text: str, base_dir: str = ".") -> ExperimentConfig:
    cfg = ExperimentConfig()
    blocks: list[dict[str, str]] = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[instance]":
            current = {}
            blocks.append(current)
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigurationError(f"line {lineno}: expected key = value, got {line!r}")
        key, value = key.strip(), value.strip()
        if current is not None:
            current[key] = value
            continue
        try:
            if key == "property":
                cfg.properties = [p.strip() for p in value.split(";") if p.strip()]
            elif key == "c":
                cfg.c_values = _int_list(value)
            elif key == "problems":
                cfg.problems = [p.strip() for p in value.split(",") if p.strip()]
            elif key in ("cutoff", "node_limit", "lemma_trials", "seed", "jobs"):
                setattr(cfg, key, int(value))
            elif key == "time_budget":
                cfg.time_budget = None if value.lower() in ("none", "0") else float(value)
            elif key in ("lemma_r", "lemma_m"):
                setattr(cfg, key, _int_list(value))
            elif key == "timing":
                cfg.timing = value.lower() in ("1", "true", "yes")
            else:
                raise ConfigurationError(f"line {lineno}: unknown key {key!r}")
        except ValueError:
            raise ConfigurationError(f"line {lineno}: bad value for {key}: {value!r}") from None
    for block in blocks:
        block = dict(block)
        if "file" in block:
            path = block["file"]
            cfg.instances.append(InstanceSpec(file=path if os.path.isabs(path) else os.path.join(base_dir, path)))
            continue
        if "kind" not in block:
            raise ConfigurationError("instance block needs 'kind' or 'file'")
        kind = block.pop("kind")
        seed = int(block.pop("seed", 0))
        try:
            params = {k: _number(v) for k, v in block.items()}
        except ValueError as exc:
            raise ConfigurationError(f"bad generator parameter: {exc}") from None
        cfg.instances.append(InstanceSpec(GeneratorSpec(kind, params, seed)))
    cfg.validate()
    return cfg


def read_config(path: str) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read(), os.path.dirname(os.path.abspath(path)))


def default_corpus() -> ExperimentConfig:
    """The pinned benchmark corpus used by ``sparsels bench`` without a config."""
    instances = [
        InstanceSpec(GeneratorSpec("grid", {"w": 3, "h": 3})),
        InstanceSpec(GeneratorSpec("grid", {"w": 4, "h": 4})),
        InstanceSpec(GeneratorSpec("path", {"n": 10})),
        InstanceSpec(GeneratorSpec("cycle", {"n": 12})),
    ] + [InstanceSpec(GeneratorSpec("random-k-degenerate", {"n": 16, "k": 3}, seed)) for seed in (1, 2, 3)]
    return ExperimentConfig(
        instances=instances,
        properties=["K2", "ball:1"],
        c_values=[1, 2, 3],
        problems=["hitting", "packing"],
        cutoff=25,
        lemma_r=[1, 2],
        lemma_m=[1, 2, 4],
        lemma_trials=2,
    )


def _fmt_solution(solution) -> str:
    if solution and isinstance(solution[0], tuple):
        return ";".join(" ".join(map(str, Z)) for Z in solution)
    return " ".join(map(str, solution))


def parse_solution(text: str, problem: str):
    """Inverse of the CSV ``solution`` encoding."""
    if problem == "hitting":
        return tuple(int(x) for x in text.split())
    return tuple(tuple(int(x) for x in part.split()) for part in text.split(";") if part.strip())


def _ratio(ls: int, opt: int) -> str:
    if opt == 0:
        return "1.000000" if ls == 0 else "inf"
    return f"{ls / opt:.6f}"


def _instance_rows(args) -> list[dict]:
    index, inst, cfg = args
    base = {"schema": SCHEMA, "instance": index, "graph": inst.label}
    try:
        G = inst.build()
    except (OSError, SparseLSError, ValueError) as exc:
        logger.warning("instance %s failed: %s", inst.label, exc)
        return [{**base, "record": "error", "error": str(exc)}]
    base.update(n=G.n, m_edges=G.m)
    rows = []
    for prop_text in cfg.properties:
        spec = parse_property(prop_text)
        occurrences = spec.occurrences(G)
        row0 = {**base, "property": spec.label}
        for problem in cfg.problems:
            induced = problem == "packing-induced"
            opt = opt_cert = None
            if G.n <= cfg.cutoff:
                if problem == "hitting":
                    res = exact_min_hitting(G, spec, cfg.node_limit, occurrences)
                else:
                    res = exact_max_packing(G, spec, induced, cfg.node_limit, occurrences)
                opt, opt_cert = res.size, res.optimal
            for c in cfg.c_values:
                t0 = time.perf_counter()
                if problem == "hitting":
                    solution, trace = local_search_hitting(G, spec, c, time_budget=cfg.time_budget,
                                                           occurrences=occurrences)
                else:
                    packing, trace = local_search_packing(G, spec, c, induced, time_budget=cfg.time_budget,
                                                          occurrences=occurrences)
                    solution = packing.elements
                elapsed = time.perf_counter() - t0
                row = {
                    **row0, "record": "solve", "problem": problem, "c": c,
                    "ls_size": len(solution), "swaps_examined": trace.swaps_examined,
                    "certified": int(trace.certified), "solution": _fmt_solution(solution),
                }
                if opt is not None:
                    row.update(opt_size=opt, opt_certified=int(opt_cert), ratio=_ratio(len(solution), opt))
                if cfg.timing:
                    row["wall_time"] = f"{elapsed:.4f}"
                rows.append(row)
        if cfg.lemma_trials and is_structural(spec):
            ordering = degeneracy_ordering(G)
            for r in cfg.lemma_r:
                for m in cfg.lemma_m:
                    for t in range(cfg.lemma_trials):
                        rng = np.random.default_rng([cfg.seed, index, r, m, t])
                        O = [v for v in range(G.n) if rng.random() < 0.3]
                        A = [v for v in range(G.n) if rng.random() < 0.5]
                        diag = lemma_trial(G, ordering, r, m, O, A, occurrences)
                        rows.append({
                            **row0, "record": "lemma",
                            **{k: diag[k] for k in ("r", "m", "b", "O", "O_rich", "omega_actual",
                                                    "t_actual", "certificates")},
                            "bound_ok": int(diag["bound_ok"]),
                        })
    return rows


def run_experiment(cfg: ExperimentConfig) -> str:
    """Run every instance and return the CSV report.

    Rows come out in instance order whatever the worker count, so identical
    configs give byte-identical output unless ``timing`` is on.
    """
    cfg.validate()
    jobs = [(i, inst, cfg) for i, inst in enumerate(cfg.instances)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_instance_rows, jobs))
    else:
        results = [_instance_rows(j) for j in jobs]
    columns = COLUMNS + (["wall_time"] if cfg.timing else [])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", restval="")
    writer.writeheader()
    for rows in results:
        writer.writerows(rows)
    return buf.getvalue()


def read_report(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


__all__ = [
    "ExperimentConfig", "InstanceSpec", "parse_config", "read_config", "default_corpus",
    "run_experiment", "read_report", "parse_solution", "SCHEMA", "COLUMNS",
]
