"""Command-line harness: run, gen, verify and bench."""

from __future__ import annotations

import argparse
import csv
import io
import math
import random
import sys
import time
from dataclasses import dataclass, fields
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from . import workloads
from .engine import DynamicNmc
from .errors import DisconnectedError, GraphError, SizeLimitError
from .kedge import maximal_k_edge_connected
from .mincut import min_cut_report, min_cuts_of_graph
from .oracles import (OracleBudget, oracle_contraction, oracle_k_subgraphs,
                      oracle_min_cut_family)
from .sparsifier import SparsifierParams, build_nmc_per_component
from .stream import (Checkpoint, Delete, Event, Header, Insert, Query,
                     StreamError, parse_stream, write_stream)


@dataclass
class Config:
    n: Optional[int] = None
    c1: float = SparsifierParams.c1
    c2: float = SparsifierParams.c2
    seed: int = 0
    oracle_budget: int = 20

    def params(self, salt: int = 0) -> SparsifierParams:
        return SparsifierParams(c1=self.c1, c2=self.c2, seed=self.seed * 1_000_003 + salt)


def read_config(fh: TextIO) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    types = {f.name: f.type for f in fields(Config)}
    casts = {"n": int, "c1": float, "c2": float, "seed": int, "oracle_budget": int}
    out = {}
    for lineno, raw in enumerate(fh, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in types:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        try:
            out[key] = casts[key](val)
        except ValueError:
            raise ValueError(f"config line {lineno}: bad value {val!r} for {key}") from None
    return out


def make_config(args) -> Config:
    cfg = Config()
    if getattr(args, "config", None):
        with open(args.config) as fh:
            for k, v in read_config(fh).items():
                setattr(cfg, k, v)
    for name in ("n", "c1", "c2", "seed", "oracle_budget"):
        val = getattr(args, name, None)
        if val is not None:
            setattr(cfg, name, val)
    return cfg


class RunError(RuntimeError):
    pass


# -- applying streams ---------------------------------------------------------

class Session:
    """A live engine fed by stream events."""

    def __init__(self, cfg: Config) -> None:
        self.cfg = cfg
        self.engine: Optional[DynamicNmc] = None
        self.queries = 0
        if cfg.n is not None:
            self.engine = DynamicNmc(cfg.n)

    def _need_engine(self, lineno: int) -> DynamicNmc:
        if self.engine is None:
            raise RunError(f"line {lineno}: vertex count unknown (give 'n' header or --n)")
        return self.engine

    def _check_vertex(self, eng: DynamicNmc, x: int, lineno: int) -> None:
        if x >= eng.n:
            raise RunError(f"line {lineno}: vertex {x} out of range 0..{eng.n - 1}")

    def apply(self, lineno: int, ev: Event) -> None:
        if isinstance(ev, Header):
            if self.engine is None:
                self.engine = DynamicNmc(ev.n)
            elif self.engine.n != ev.n:
                raise RunError(f"line {lineno}: header n={ev.n} contradicts configured n={self.engine.n}")
            return
        eng = self._need_engine(lineno)
        if isinstance(ev, (Insert, Delete)):
            self._check_vertex(eng, ev.u, lineno)
            self._check_vertex(eng, ev.v, lineno)
            try:
                if isinstance(ev, Insert):
                    eng.insert(ev.u, ev.v)
                else:
                    eng.delete_pair(ev.u, ev.v)
            except GraphError as exc:
                raise RunError(f"line {lineno}: {exc}") from None

    def counters(self) -> tuple[int, int, int]:
        eng = self.engine
        assert eng is not None
        steps = eng.dcs.msf.steps + eng.dsf.dcs.msf.steps
        return eng.dcs.counters.dcs_ops, eng.dsf.counters.dsf_ops, steps


def _pair(eng: DynamicNmc, eid: int) -> tuple[int, int]:
    e = eng.graph.edges[eid]
    return (e.u, e.v) if e.u < e.v else (e.v, e.u)


def _fmt_pairs(pairs: Iterable[tuple[int, int]]) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(pairs))


def answer_query(sess: Session, q: Query, out: TextIO) -> object:
    """Run one query, write its result block body and return the raw result."""
    eng = sess.engine
    assert eng is not None
    params = sess.cfg.params(sess.queries)
    sess.queries += 1
    if q.kind == "sparsifier":
        outs = build_nmc_per_component(eng, params) if eng.n else []
        out.write(f"sparsifier components {len(outs)}\n")
        for i, o in enumerate(outs):
            out.write(f"component {i} supernodes {o.n_super} edges {o.m}\n")
            for j, mem in enumerate(o.members()):
                out.write(f"s {j} " + " ".join(map(str, mem)) + "\n")
            for (a, b), eid in sorted(zip(o.edges, o.edge_ids), key=lambda t: _pair(eng, t[1])):
                u, v = _pair(eng, eid)
                out.write(f"e {a} {b} {u}-{v}\n")
        return outs
    if q.kind == "mincut":
        comps = eng.graph.components() if eng.n else []
        if len(comps) > 1:
            side = comps[0] if len(comps[0]) <= eng.n - len(comps[0]) else comps[1]
            out.write("mincut value 0\n")
            out.write("side " + " ".join(map(str, side)) + "\ncrossing\n")
            return 0, tuple(side)
        value, cut = min_cut_report(eng, params)
        out.write(f"mincut value {value}\n")
        out.write("side " + " ".join(map(str, cut.side)) + "\n")
        out.write("crossing " + _fmt_pairs(_pair(eng, x) for x in cut.crossing) + "\n")
        return value, cut.side
    if q.kind == "mincuts":
        try:
            fam = min_cuts_of_graph(eng, params, limit_n=sess.cfg.oracle_budget)
        except (DisconnectedError, SizeLimitError) as exc:
            out.write(f"mincuts error {exc}\n")
            return None
        fam.write(out, endpoints=lambda x: _pair(eng, x))
        return fam
    part = maximal_k_edge_connected(eng, q.k, params)  # type: ignore[arg-type]
    part.write(out)
    return part


def run_stream(lines: Iterable[str], cfg: Config, out: TextIO, timing: bool = False) -> int:
    """Apply a stream; returns the number of queries answered."""
    sess = Session(cfg)
    for lineno, ev in parse_stream(lines):
        if isinstance(ev, Query):
            sess._need_engine(lineno)
            out.write(f"query {lineno} {ev.kind}{'' if ev.k is None else ' ' + str(ev.k)}\n")
            before = sess.counters()
            t0 = time.perf_counter()
            answer_query(sess, ev, out)
            wall = (time.perf_counter() - t0) * 1000
            after = sess.counters()
            line = f"ops dcs={after[0] - before[0]} dsf={after[1] - before[1]} msf_steps={after[2] - before[2]}"
            if timing:
                line += f" wall_ms={wall:.1f}"
            out.write(line + "\nend\n")
        elif isinstance(ev, Checkpoint):
            eng = sess._need_engine(lineno)
            out.write(f"checkpoint {ev.label} n {eng.n} m {eng.m}\n")
        else:
            sess.apply(lineno, ev)
    return sess.queries


# -- verification -------------------------------------------------------------

def _edge_rows(eng: DynamicNmc) -> list[tuple[int, int, int]]:
    return [(e.id, e.u, e.v) for e in sorted(eng.graph.edges.values())]


def check_query(sess: Session, q: Query, result: object) -> str:
    """Compare a library answer against the brute-force oracles."""
    eng = sess.engine
    assert eng is not None
    budget = OracleBudget(max_vertices=sess.cfg.oracle_budget)
    if eng.n > budget.max_vertices:
        return "skipped: budget"
    rows = _edge_rows(eng)
    pairs = [(u, v) for _, u, v in rows]
    ids = [eid for eid, _, _ in rows]
    if q.kind == "mincut":
        value, side = result  # type: ignore[misc]
        truth = oracle_min_cut_family(eng.n, pairs, ids, budget).value if eng.n >= 2 else 0
        s = set(side)
        counted = sum((u in s) != (v in s) for u, v in pairs)
        if value == truth == counted:
            return "agree"
        return f"disagree value {value} recount {counted} oracle {truth}"
    if q.kind == "mincuts":
        if result is None:
            return "skipped: not applicable"
        fam = oracle_min_cut_family(eng.n, pairs, ids, budget)
        if fam.value == result.value and fam.sides() == result.sides():  # type: ignore[attr-defined]
            return "agree"
        return f"disagree value {result.value} oracle {fam.value}"  # type: ignore[attr-defined]
    if q.kind == "kmax":
        truth = oracle_k_subgraphs(eng.n, pairs, q.k, budget)  # type: ignore[arg-type]
        return "agree" if truth == result else "disagree partition"
    for o in result:  # type: ignore[attr-defined]
        if o.n_super == 1 and len(o.vertices) == 1:
            continue
        inside = set(o.vertices)
        sub_rows = [r for r in rows if r[1] in inside]
        con = o.plan(eng.graph).edges
        groups, kept = oracle_contraction(eng.n, sub_rows, con)
        mine = frozenset(tuple(m) for m in o.members())
        if mine != frozenset(g for g in groups if g[0] in inside) or set(kept) != set(o.edge_ids):
            return "disagree contraction"
        index = {v: i for i, v in enumerate(o.vertices)}
        local = [(index[u], index[v]) for _, u, v in sub_rows]
        fam = oracle_min_cut_family(len(o.vertices), local, [r[0] for r in sub_rows], budget)
        kept_ids = set(o.edge_ids)
        for c in fam.nontrivial():
            side = {o.vertices[i] for i in c.side}
            if not set(c.crossing) <= kept_ids or any(
                    o.supernode[v] in {o.supernode[x] for x in side} for v in inside - side):
                return "disagree lost a non-trivial minimum cut"
    return "agree"


def verify_stream(lines: Iterable[str], cfg: Config, out: TextIO) -> tuple[int, int, int]:
    """Replay a stream, checking every query; returns (agree, disagree, skipped)."""
    sess = Session(cfg)
    tally = [0, 0, 0]
    for lineno, ev in parse_stream(lines):
        if not isinstance(ev, Query):
            if not isinstance(ev, Checkpoint):
                sess.apply(lineno, ev)
            continue
        sess._need_engine(lineno)
        result = answer_query(sess, ev, io.StringIO())
        verdict = check_query(sess, ev, result)
        tally[0 if verdict == "agree" else 2 if verdict.startswith("skipped") else 1] += 1
        out.write(f"query {lineno} {ev.kind} {verdict}\n")
    out.write(f"summary agree {tally[0]} disagree {tally[1]} skipped {tally[2]}\n")
    return tally[0], tally[1], tally[2]


# -- generation ---------------------------------------------------------------

MODELS = ("er", "near-regular", "planted-cut")


def model_edges(model: str, n: int, rng: random.Random, m: Optional[int] = None,
                p: Optional[float] = None, degree: Optional[int] = None,
                cut: Optional[int] = None) -> list[tuple[int, int]]:
    if model == "er":
        if m is None and p is None:
            raise ValueError("er needs --m or --p")
        return workloads.erdos_renyi(n, rng, p=p, m=m)
    if model == "near-regular":
        if degree is None:
            raise ValueError("near-regular needs --degree")
        return workloads.near_regular(n, degree, rng)
    if model == "planted-cut":
        c = 2 if cut is None else cut
        d = degree if degree is not None else max(c + 2, 4)
        return workloads.planted_cut(n, c, d, rng)
    raise ValueError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")


def gen_events(model: str, n: int, seed: int, m: Optional[int] = None,
               p: Optional[float] = None, degree: Optional[int] = None,
               cut: Optional[int] = None, churn: float = 0.2,
               queries: Sequence[str] = ("mincut",)) -> list[Event]:
    """A build stream for one model graph, with transient edges inserted and deleted."""
    rng = random.Random(seed)
    final = model_edges(model, n, rng, m=m, p=p, degree=degree, cut=cut)
    present = set(final)
    extra: list[tuple[int, int]] = []
    room = n * (n - 1) // 2 - len(final)
    want = min(room, int(round(churn * len(final))))
    while len(extra) < want:
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        e = (min(a, b), max(a, b))
        if e not in present:
            present.add(e)
            extra.append(e)
    inserts = final + extra
    rng.shuffle(inserts)
    pos = {e: i for i, e in enumerate(inserts)}
    deletions: dict[int, list[tuple[int, int]]] = {}
    for e in extra:
        at = rng.randint(pos[e] + 1, len(inserts))
        deletions.setdefault(at, []).append(e)
    events: list[Event] = [Header(n)]
    for i in range(len(inserts) + 1):
        for e in deletions.get(i, ()):
            events.append(Delete(*e))
        if i < len(inserts):
            events.append(Insert(*inserts[i]))
    events.append(Checkpoint("built"))
    for qs in queries:
        toks = qs.split()
        events.append(Query("kmax", int(toks[1])) if toks[0] == "kmax" else Query(toks[0]))
    return events


# -- benchmarking -------------------------------------------------------------

BENCH_COLUMNS = ["n", "m", "updates", "query_dcs_ops", "query_dsf_ops", "query_wall_ms"]


def bench_rows(scales: Sequence[int], m_values: Optional[Sequence[int]] = None,
               exponent: float = 1.5, updates: int = 100, queries: int = 1,
               cfg: Optional[Config] = None) -> Iterator[dict]:
    """One row per query for each (n, m); graphs are near-regular with m close to the target."""
    cfg = cfg or Config()
    for n in scales:
        targets = m_values if m_values else [workloads.power_edges(n, exponent)]
        for m_target in targets:
            rng = random.Random(cfg.seed * 7919 + n * 31 + m_target)
            d = max(2, min(n - 1, round(2 * m_target / n)))
            eng = DynamicNmc(n, workloads.near_regular(n, d, rng))
            done = 0
            while done < updates:
                # swap one edge for a fresh one: two updates
                eid = rng.choice(list(eng.graph.edges)) if done % 2 == 0 else None
                if eid is not None:
                    e = eng.delete(eid)
                    if eng.graph.degree(e.u) < 1 or eng.graph.degree(e.v) < 1:
                        eng.restore_edge(e.id, e.u, e.v)
                        continue
                else:
                    while True:
                        a, b = rng.randrange(n), rng.randrange(n)
                        if a != b and eng.graph.find_edge(a, b) is None:
                            break
                    eng.insert(a, b)
                done += 1
            for qi in range(queries):
                params = cfg.params(qi)
                d0, f0 = eng.dcs.counters.dcs_ops, eng.dsf.counters.dsf_ops
                t0 = time.perf_counter()
                build_nmc_per_component(eng, params)
                wall = (time.perf_counter() - t0) * 1000
                row = {"n": n, "m": eng.m, "updates": updates,
                       "query_dcs_ops": eng.dcs.counters.dcs_ops - d0,
                       "query_dsf_ops": eng.dsf.counters.dsf_ops - f0,
                       "query_wall_ms": round(wall, 1)}
                yield row


def fit_exponent(rows: Sequence[dict]) -> tuple[float, float]:
    """Least-squares slope of log(ops) against log(n), and the constant c of c*n*log^2 n."""
    xs = [math.log(r["n"]) for r in rows]
    ys = [math.log(r["query_dcs_ops"] + r["query_dsf_ops"]) for r in rows]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx if sxx else float("nan")
    cs = [(r["query_dcs_ops"] + r["query_dsf_ops"]) / (r["n"] * math.log2(r["n"]) ** 2) for r in rows]
    return slope, sum(cs) / len(cs)


# -- entry point --------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value file (n, c1, c2, seed, oracle_budget)")
    p.add_argument("--n", type=int)
    p.add_argument("--c1", type=float)
    p.add_argument("--c2", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--oracle-budget", dest="oracle_budget", type=int)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dynnmc", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("run", help="apply a stream and write query results")
    p.add_argument("stream", help="stream file, or - for stdin")
    p.add_argument("-o", "--out", help="results file (default stdout)")
    p.add_argument("--timing", action="store_true", help="add wall-clock times to results")
    _add_common(p)

    p = sub.add_parser("gen", help="generate a random build stream")
    p.add_argument("model", choices=MODELS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--degree", type=int)
    p.add_argument("--cut", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--churn", type=float, default=0.2,
                   help="transient edges, as a fraction of the final edge count")
    p.add_argument("--query", action="append",
                   help="query to append (sparsifier, mincut, mincuts, 'kmax K'); repeatable")
    p.add_argument("-o", "--out")

    p = sub.add_parser("verify", help="replay a stream, checking queries against oracles")
    p.add_argument("stream")
    p.add_argument("-o", "--out")
    _add_common(p)

    p = sub.add_parser("bench", help="measure query cost across graph sizes (CSV)")
    p.add_argument("--scales", default="1000,2000,4000,8000")
    p.add_argument("--m-values", dest="m_values", help="comma list of edge counts (overrides n^exponent)")
    p.add_argument("--exponent", type=float, default=1.5)
    p.add_argument("--updates", type=int, default=100)
    p.add_argument("--queries", type=int, default=1)
    p.add_argument("-o", "--out")
    _add_common(p)
    return ap


def _open_out(path: Optional[str]) -> TextIO:
    return open(path, "w") if path else sys.stdout


def _open_in(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "gen":
            events = gen_events(args.model, args.n, args.seed, m=args.m, p=args.p,
                                degree=args.degree, cut=args.cut, churn=args.churn,
                                queries=args.query or ("mincut",))
            fh = _open_out(args.out)
            write_stream(fh, events)
            if fh is not sys.stdout:
                fh.close()
            return 0
        cfg = make_config(args)
        if args.cmd == "run":
            with _open_in(args.stream) as src:
                fh = _open_out(args.out)
                run_stream(src, cfg, fh, timing=args.timing)
                if fh is not sys.stdout:
                    fh.close()
            return 0
        if args.cmd == "verify":
            with _open_in(args.stream) as src:
                fh = _open_out(args.out)
                _, bad, _ = verify_stream(src, cfg, fh)
                if fh is not sys.stdout:
                    fh.close()
            return 0 if bad == 0 else 3
        scales = [int(x) for x in args.scales.split(",") if x]
        ms = [int(x) for x in args.m_values.split(",")] if args.m_values else None
        fh = _open_out(args.out)
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        for row in bench_rows(scales, ms, args.exponent, args.updates, args.queries, cfg):
            writer.writerow(row)
            fh.flush()
        if fh is not sys.stdout:
            fh.close()
        return 0
    except (StreamError, RunError, ValueError, OSError) as exc:
        print(f"dynnmc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
