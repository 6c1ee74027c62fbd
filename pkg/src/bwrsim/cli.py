"""Experiment runner: simulate, gap, latency, topo, and trace subcommands.

Each run writes delimited output (per-flow CSV, aggregate JSON) plus
rendered figures into the output directory. Options resolve as
flags > --config file > BWRSIM_SEED env (seed only) > built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import plots
from .metrics import (mean_std, normalize_groups, summarize,
                      write_json_report, write_per_flow_csv)
from .routing import SCHEMES, OracleTimeout, optimality_gap, route_bwrh, route_optimal
from .scheduler import POLICIES, run_until
from .topology import BUILTIN_NAMES, NoPathError, load_topology
from .traffic import (DISTRIBUTIONS, TrafficConfig, gen_arrivals, read_trace,
                      rng_for, write_trace)

USAGE_EXIT = 1
RUNTIME_EXIT = 2
ORACLE_NODE_LIMIT = 50  # exact search refuses larger graphs without --force
SEED_ENV = "BWRSIM_SEED"

DEFAULT_LATENCY_LAMBDAS = "1,2,3,4,5,6,7,8,9,10"
DEFAULT_LATENCY_MUS = "5,10,20,50"


class ConfigError(Exception):
    """Invalid or inconsistent configuration (maps to the usage exit code)."""


def _split_list(text):
    return [part.strip() for part in text.split(",") if part.strip()]


def _resolve(args, key, default=None, required=False):
    """Flag value if given, else --config file value, else default."""
    val = getattr(args, key, None)
    if val is None and args._file_config is not None:
        val = args._file_config.get(key)
    if val is None:
        val = default
    if val is None and required:
        raise ConfigError(f"missing required option --{key.replace('_', '-')}")
    return val


def _resolve_seed(args):
    seed = _resolve(args, "seed")
    if seed is None:
        env = os.environ.get(SEED_ENV)
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise ConfigError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    return int(seed) if seed is not None else 0

def _load_file_config(args):
    path = getattr(args, "config", None)
    if path is None:
        args._file_config = None
        return
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    # keys use option names; "lambda" is stored under the lam attribute
    cfg = {("lam" if k == "lambda" else k.replace("-", "_")): v for k, v in cfg.items()}
    args._file_config = cfg


def _load_topologies(spec):
    topos = []
    for name in _split_list(spec):
        try:
            topos.append(load_topology(name))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    if not topos:
        raise ConfigError("no topology given")
    return topos


def _check_choices(values, valid, what):
    for v in values:
        if v not in valid:
            raise ConfigError(f"unknown {what} {v!r}; valid: {', '.join(valid)}")
    return values


def _ensure_outdir(path):
    os.makedirs(path, exist_ok=True)
    return path


def _replica_seed(base, replica):
    # documented split rule: base seed XOR replica index
    return base ^ replica


# --- simulate ----------------------------------------------------------------

def _run_one(topo, events, scheme, policy, seed, horizon):
    router = SCHEMES[scheme]
    rng = rng_for(seed, 1)  # routing stream, distinct from the traffic stream
    return run_until(topo, events, router, policy, horizon=horizon, rng=rng,
                     keep_outcomes=False)


def cmd_simulate(args):
    _load_file_config(args)
    topo = _load_topologies(_resolve(args, "topology", required=True))[0]
    schemes = _check_choices(_split_list(_resolve(args, "scheme", "bwrh")),
                             tuple(SCHEMES), "scheme")
    policies = _check_choices(_split_list(_resolve(args, "policy", "fcfs")),
                              POLICIES, "policy")
    lam = float(_resolve(args, "lam", required=True))
    mu = float(_resolve(args, "mu", required=True))
    dist = _resolve(args, "dist", "exp")
    slots = _resolve(args, "slots")
    arrivals = _resolve(args, "arrivals")
    if (slots is None) == (arrivals is None):
        raise ConfigError("specify exactly one of --slots or --arrivals")
    replicas = int(_resolve(args, "replicas", 1))
    if replicas < 1:
        raise ConfigError("--replicas must be >= 1")
    seed = _resolve_seed(args)
    out = _ensure_outdir(_resolve(args, "out", "results"))

    config = {
        "command": "simulate", "topology": topo.name, "schemes": schemes,
        "policies": policies, "lambda": lam, "mu": mu, "dist": dist,
        "slots": slots, "arrivals": arrivals, "replicas": replicas,
        "seed": seed,
        "replica_seeds": [_replica_seed(seed, r) for r in range(replicas)],
    }
    try:
        rows, runs = _simulate_runs(topo, schemes, policies, lam, mu, dist,
                                    slots, arrivals, replicas, seed, out)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    write_per_flow_csv(os.path.join(out, "per_flow.csv"), rows, config)
    aggregate, norm_mean, norm_p99 = _aggregate_runs(runs, schemes, policies)
    write_json_report(os.path.join(out, "report.json"), {
        "schema": "bwrsim.simulate/1",
        "config": config,
        "runs": runs,
        "aggregate": aggregate,
        "normalized": {
            "mean_fct": {f"{p}/{s}": v for (p, s), v in norm_mean.items()},
            "p99_fct": {f"{p}/{s}": v for (p, s), v in norm_p99.items()},
        },
    })
    plots.fct_comparison_figure(policies, schemes, norm_mean, norm_p99,
                                os.path.join(out, "fct_comparison.png"))
    print(f"simulate: wrote per_flow.csv, report.json, fct_comparison.png to {out}")
    return 0


def _simulate_runs(topo, schemes, policies, lam, mu, dist, slots, arrivals,
                   replicas, seed, out):
    """Paired-trace sweep; returns (per-flow rows, per-run summaries)."""
    traces_dir = _ensure_outdir(os.path.join(out, "traces"))
    rows, runs = [], []
    for replica in range(replicas):
        rep_seed = _replica_seed(seed, replica)
        cfg = TrafficConfig(lam, mu, dist, seed=rep_seed)
        events = gen_arrivals(cfg, topo, slots=slots, arrivals=arrivals)
        write_trace(os.path.join(traces_dir, f"trace_{replica}.csv"), events,
                    {"topology": topo.name, "lambda": lam, "mu": mu,
                     "dist": dist, "seed": rep_seed})
        for scheme in schemes:
            for policy in policies:
                res = _run_one(topo, events, scheme, policy, rep_seed, slots)
                report = summarize(
                    res.flows,
                    latencies=[r.stats.elapsed for r in res.routes])
                for row in report.per_flow:
                    row.update(scheme=scheme, policy=policy, seed=rep_seed)
                    rows.append(row)
                runs.append({
                    "scheme": scheme, "policy": policy, "replica": replica,
                    "seed": rep_seed,
                    "completed": report.completed_count,
                    "incomplete": report.incomplete_count,
                    "mean_fct": report.mean_fct,
                    "p99_fct": report.tail_fct_p99,
                    "max_fct": report.tail_fct_max,
                    "route_latency_mean": report.route_latency_mean,
                    "route_latency_max": report.route_latency_max,
                })
    return rows, runs


def _aggregate_runs(runs, schemes, policies):
    """Cross-replica mean/std per (scheme, policy) plus normalized ratios."""
    aggregate = {}
    cross_mean, cross_p99 = {}, {}
    for scheme in schemes:
        for policy in policies:
            cell = [r for r in runs if r["scheme"] == scheme and r["policy"] == policy]
            means = [r["mean_fct"] for r in cell if r["mean_fct"] is not None]
            p99s = [r["p99_fct"] for r in cell if r["p99_fct"] is not None]
            entry = {"replicas": len(cell),
                     "incomplete_total": sum(r["incomplete"] for r in cell)}
            if means:
                m, s = mean_std(means)
                entry["mean_fct"] = {"mean": m, "std": s}
                cross_mean[(policy, scheme)] = m
            if p99s:
                m, s = mean_std(p99s)
                entry["p99_fct"] = {"mean": m, "std": s}
                cross_p99[(policy, scheme)] = m
            aggregate[f"{policy}/{scheme}"] = entry
    norm_mean = _normalize_by_policy(cross_mean)
    norm_p99 = _normalize_by_policy(cross_p99)
    return aggregate, norm_mean, norm_p99


def _normalize_by_policy(table):
    groups = {}
    for (policy, scheme), value in table.items():
        groups.setdefault(policy, {})[scheme] = value
    normalized = normalize_groups(groups)
    return {(policy, scheme): v
            for policy, members in normalized.items()
            for scheme, v in members.items()}


# --- gap ---------------------------------------------------------------------

def cmd_gap(args):
    _load_file_config(args)
    topos = _load_topologies(_resolve(args, "topology", "gscale,agis,ans"))
    dists = _check_choices(_split_list(_resolve(args, "dist", "exp,pareto")),
                           DISTRIBUTIONS, "distribution")
    policy = _resolve(args, "policy", "fcfs")
    _check_choices([policy], POLICIES, "policy")
    lam = float(_resolve(args, "lam", 10.0))
    mu = float(_resolve(args, "mu", 50.0))
    arrivals = int(_resolve(args, "arrivals", 1000))
    seeds = int(_resolve(args, "seeds", 3))
    seed = _resolve_seed(args)
    oracle_timeout = float(_resolve(args, "oracle_timeout", 60.0))
    force = bool(_resolve(args, "force", False))
    raw = bool(_resolve(args, "raw_oracle", False))
    out = _ensure_outdir(_resolve(args, "out", "gap_results"))

    for topo in topos:
        if topo.num_nodes > ORACLE_NODE_LIMIT and not force:
            raise ConfigError(
                f"topology {topo.name!r} has {topo.num_nodes} nodes; the exact "
                f"search is only tractable on small graphs "
                f"(<= {ORACLE_NODE_LIMIT} nodes). Pass --force to override.")

    config = {"command": "gap",
              "topologies": [t.name for t in topos], "dists": dists,
              "policy": policy, "lambda": lam, "mu": mu, "arrivals": arrivals,
              "seeds": seeds, "seed": seed, "oracle_timeout": oracle_timeout,
              "raw_oracle": raw}
    records, cells = _gap_experiment(topos, dists, policy, lam, mu, arrivals,
                                     seeds, seed, oracle_timeout, raw)
    _write_gap_outputs(out, config, records, cells)
    for (tname, dist), cell in sorted(cells.items()):
        print(f"gap {tname}/{dist}: mean {cell['mean']:.6f} "
              f"max {cell['max']:.6f} timeouts {cell['timeouts']}")
    print(f"gap: wrote gap.csv, gap_report.json, gap_summary.png to {out}")
    return 0


def _gap_experiment(topos, dists, policy, lam, mu, arrivals, seeds, seed,
                    oracle_timeout, raw):
    """Route every arrival with the widening heuristic, audit it against the
    exact search on the same pre-admission snapshot, and record the gaps."""
    records = []
    cells = {}
    for topo in topos:
        for dist in dists:
            cell_gaps, timeouts = [], 0
            t_cell = time.perf_counter()
            for si in range(seeds):
                rep_seed = _replica_seed(seed, si)
                cfg = TrafficConfig(lam, mu, dist, seed=rep_seed)
                events = gen_arrivals(cfg, topo, arrivals=arrivals)
                arrival_idx = 0

                def audit(index, req, result, _ctx=(topo, dist, rep_seed)):
                    nonlocal arrival_idx, timeouts
                    tname, dname, rseed = _ctx
                    try:
                        opt = route_optimal(topo, index, req,
                                            timeout=oracle_timeout, raw=raw)
                    except OracleTimeout:
                        timeouts += 1
                        records.append({"topology": tname, "dist": dname,
                                        "seed": rseed, "arrival": arrival_idx,
                                        "src": req.src, "dst": req.dst,
                                        "volume": req.volume,
                                        "heuristic_weight": result.weight,
                                        "optimal_weight": None, "gap": None})
                        arrival_idx += 1
                        return
                    gap = optimality_gap(result.weight, opt.weight)
                    cell_gaps.append(gap)
                    records.append({"topology": tname, "dist": dname,
                                    "seed": rseed, "arrival": arrival_idx,
                                    "src": req.src, "dst": req.dst,
                                    "volume": req.volume,
                                    "heuristic_weight": result.weight,
                                    "optimal_weight": opt.weight, "gap": gap})
                    arrival_idx += 1

                run_until(topo, events, route_bwrh, policy,
                          rng=rng_for(rep_seed, 1), on_route=audit,
                          keep_outcomes=False)
            m, s = mean_std(cell_gaps) if cell_gaps else (None, None)
            cells[(topo.name, dist)] = {
                "mean": m, "std": s,
                "max": max(cell_gaps) if cell_gaps else None,
                "count": len(cell_gaps), "timeouts": timeouts,
                "elapsed": time.perf_counter() - t_cell,
            }
    return records, cells


def _write_gap_outputs(out, config, records, cells):
    lines = ["# config: " + json.dumps(config, sort_keys=True),
             "topology,dist,seed,arrival,src,dst,volume,heuristic_weight,optimal_weight,gap"]
    for r in records:
        lines.append(",".join("" if r[k] is None else str(r[k])
                              for k in ("topology", "dist", "seed", "arrival",
                                        "src", "dst", "volume",
                                        "heuristic_weight", "optimal_weight",
                                        "gap")))
    with open(os.path.join(out, "gap.csv"), "w") as fh:
        fh.write("\n".join(lines) + "\n")
    write_json_report(os.path.join(out, "gap_report.json"), {
        "schema": "bwrsim.gap/1",
        "config": config,
        "cells": {f"{t}/{d}": cell for (t, d), cell in cells.items()},
    })
    plots.gap_figure(cells, os.path.join(out, "gap_summary.png"))


# --- latency -----------------------------------------------------------------

def cmd_latency(args):
    _load_file_config(args)
    topos = _load_topologies(_resolve(args, "topology", "cogent"))
    dists = _check_choices(_split_list(_resolve(args, "dist", "exp")),
                           DISTRIBUTIONS, "distribution")
    policies = _check_choices(_split_list(_resolve(args, "policy", "fcfs")),
                              POLICIES, "policy")
    lams = [float(x) for x in _split_list(_resolve(args, "lambdas", DEFAULT_LATENCY_LAMBDAS))]
    mus = [float(x) for x in _split_list(_resolve(args, "mus", DEFAULT_LATENCY_MUS))]
    arrivals = int(_resolve(args, "arrivals", 1000))
    seed = _resolve_seed(args)
    out = _ensure_outdir(_resolve(args, "out", "latency_results"))

    config = {"command": "latency", "topologies": [t.name for t in topos],
              "dists": dists, "policies": policies, "lambdas": lams,
              "mus": mus, "arrivals": arrivals, "seed": seed}
    points = []
    for topo in topos:
        for dist in dists:
            for policy in policies:
                for lam in lams:
                    for mu in mus:
                        cfg = TrafficConfig(lam, mu, dist, seed=seed)
                        events = gen_arrivals(cfg, topo, arrivals=arrivals)
                        res = run_until(topo, events, route_bwrh, policy,
                                        rng=rng_for(seed, 1), keep_outcomes=False)
                        lats = [r.stats.elapsed for r in res.routes]
                        points.append({
                            "topology": topo.name, "dist": dist,
                            "policy": policy, "lam": lam, "mu": mu,
                            "arrivals": len(lats),
                            "max_latency": max(lats),
                            "mean_latency": sum(lats) / len(lats),
                        })
    per_point_max = [p["max_latency"] for p in points]
    report = {
        "schema": "bwrsim.latency/1",
        "config": config,
        "points": points,
        "overall_max": max(per_point_max),
        "mean_of_max": sum(per_point_max) / len(per_point_max),
    }
    lines = ["# config: " + json.dumps(config, sort_keys=True),
             "topology,dist,policy,lambda,mu,arrivals,max_latency,mean_latency"]
    for p in points:
        lines.append(f"{p['topology']},{p['dist']},{p['policy']},{p['lam']},"
                     f"{p['mu']},{p['arrivals']},{p['max_latency']:.6f},"
                     f"{p['mean_latency']:.6f}")
    with open(os.path.join(out, "latency.csv"), "w") as fh:
        fh.write("\n".join(lines) + "\n")
    write_json_report(os.path.join(out, "latency_report.json"), report)
    plots.latency_figure(points, os.path.join(out, "latency_summary.png"))
    print(f"latency: max {1000 * report['overall_max']:.2f} ms, "
          f"mean of per-point max {1000 * report['mean_of_max']:.2f} ms")
    print(f"latency: wrote latency.csv, latency_report.json, latency_summary.png to {out}")
    return 0


# --- topo ----------------------------------------------------------------

def cmd_topo(args):
    try:
        topo = load_topology(args.name)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    degrees = [topo.degree(v) for v in topo.nodes] or [0]
    print(f"name: {topo.name}")
    print(f"nodes: {topo.num_nodes}")
    print(f"undirected links: {topo.num_links}")
    print(f"directed edges: {len(topo.dir_edges)}")
    print(f"duplicate links dropped: {topo.dropped_duplicate_links}")
    print(f"self loops dropped: {topo.dropped_self_loops}")
    print(f"degree min/mean/max: {min(degrees)}/"
          f"{sum(degrees) / len(degrees):.2f}/{max(degrees)}")
    comps = topo.components()
    if len(comps) == 1:
        print("connected: yes")
    else:
        print("connected: no")
        print(f"warning: {len(comps)} components: "
              + "; ".join(f"[{c[0]}..{c[-1]}] size {len(c)}" for c in comps))
    return 0


# --- trace ---------------------------------------------------------------

def cmd_trace_export(args):
    _load_file_config(args)
    topo = _load_topologies(_resolve(args, "topology", required=True))[0]
    lam = float(_resolve(args, "lam", required=True))
    mu = float(_resolve(args, "mu", required=True))
    dist = _resolve(args, "dist", "exp")
    slots = _resolve(args, "slots")
    arrivals = _resolve(args, "arrivals")
    if (slots is None) == (arrivals is None):
        raise ConfigError("specify exactly one of --slots or --arrivals")
    seed = _resolve_seed(args)
    out = _resolve(args, "out", "trace.csv")
    try:
        cfg = TrafficConfig(lam, mu, dist, seed=seed)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    events = gen_arrivals(cfg, topo, slots=slots, arrivals=arrivals)
    write_trace(out, events, {"command": "trace export", "topology": topo.name,
                              "lambda": lam, "mu": mu, "dist": dist,
                              "slots": slots, "arrivals": arrivals, "seed": seed})
    print(f"trace export: wrote {len(events)} arrivals to {out}")
    return 0


def cmd_trace_replay(args):
    _load_file_config(args)
    topo = _load_topologies(_resolve(args, "topology", required=True))[0]
    scheme = _resolve(args, "scheme", "bwrh")
    _check_choices([scheme], tuple(SCHEMES), "scheme")
    policy = _resolve(args, "policy", "fcfs")
    _check_choices([policy], POLICIES, "policy")
    slots = _resolve(args, "slots")
    seed = _resolve_seed(args)
    out = _ensure_outdir(_resolve(args, "out", "replay_results"))
    events = read_trace(args.trace)
    res = _run_one(topo, events, scheme, policy, seed,
                   int(slots) if slots is not None else None)
    report = summarize(res.flows,
                       latencies=[r.stats.elapsed for r in res.routes])
    config = {"command": "trace replay", "topology": topo.name,
              "trace": args.trace, "scheme": scheme, "policy": policy,
              "slots": slots, "seed": seed}
    rows = report.per_flow
    for row in rows:
        row.update(scheme=scheme, policy=policy, seed=seed)
    write_per_flow_csv(os.path.join(out, "per_flow.csv"), rows, config)
    payload = report.to_dict()
    payload.pop("per_flow")
    write_json_report(os.path.join(out, "report.json"),
                      {"schema": "bwrsim.replay/1", "config": config,
                       "report": payload})
    print(f"trace replay: {report.completed_count} completed, "
          f"{report.incomplete_count} incomplete; outputs in {out}")
    return 0


# --- parser ----------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--config", help="JSON file with option defaults")
    sub.add_argument("--seed", type=int, help=f"base RNG seed (env {SEED_ENV})")


def _add_traffic_opts(sub):
    sub.add_argument("--lambda", dest="lam", type=float,
                     help="mean arrivals per slot")
    sub.add_argument("--mu", type=float, help="mean flow size in data units")
    sub.add_argument("--dist", choices=DISTRIBUTIONS,
                     help="flow size distribution")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bwrsim",
        description="Flow-level slotted WAN simulator with best worst-case routing")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run scheme x policy scenarios")
    p.add_argument("--topology", help=f"builtin name ({', '.join(BUILTIN_NAMES)}) or file path")
    p.add_argument("--scheme", help="comma list of schemes: " + ",".join(SCHEMES))
    p.add_argument("--policy", help="comma list of policies: " + ",".join(POLICIES))
    _add_traffic_opts(p)
    p.add_argument("--slots", type=int, help="run for a fixed slot horizon")
    p.add_argument("--arrivals", type=int, help="run until N arrivals complete")
    p.add_argument("--replicas", type=int, help="independent seeded replicas")
    p.add_argument("--out", help="output directory")
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("gap", help="audit the heuristic against the exact search")
    p.add_argument("--topology", help="comma list of topologies")
    p.add_argument("--dist", help="comma list of distributions")
    p.add_argument("--policy", help="scheduling policy during the run")
    p.add_argument("--lambda", dest="lam", type=float,
                   help="mean arrivals per slot")
    p.add_argument("--mu", type=float, help="mean flow size in data units")
    p.add_argument("--arrivals", type=int, help="audited arrivals per run")
    p.add_argument("--seeds", type=int, help="number of seeded runs per cell")
    p.add_argument("--oracle-timeout", dest="oracle_timeout", type=float,
                   help="per-arrival exact search timeout in seconds")
    p.add_argument("--force", action="store_const", const=True,
                   help="run the exact search on large topologies anyway")
    p.add_argument("--raw-oracle", dest="raw_oracle", action="store_const",
                   const=True, help="disable pruning in the exact search")
    p.add_argument("--out", help="output directory")
    _add_common(p)
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("latency", help="route-computation latency sweep")
    p.add_argument("--topology", help="comma list of topologies")
    p.add_argument("--dist", help="comma list of distributions")
    p.add_argument("--policy", help="comma list of policies")
    p.add_argument("--lambdas", help="comma list of arrival rates")
    p.add_argument("--mus", help="comma list of mean sizes")
    p.add_argument("--arrivals", type=int, help="arrivals per sweep point")
    p.add_argument("--out", help="output directory")
    _add_common(p)
    p.set_defaults(func=cmd_latency)

    p = sub.add_parser("topo", help="inspect a topology")
    p.add_argument("name", help="builtin name or file path")
    p.set_defaults(func=cmd_topo)

    p = sub.add_parser("trace", help="export or replay arrival traces")
    tsub = p.add_subparsers(dest="trace_command", required=True)

    pe = tsub.add_parser("export", help="generate a trace CSV")
    pe.add_argument("--topology")
    _add_traffic_opts(pe)
    pe.add_argument("--slots", type=int)
    pe.add_argument("--arrivals", type=int)
    pe.add_argument("--out", help="output CSV path")
    _add_common(pe)
    pe.set_defaults(func=cmd_trace_export)

    pr = tsub.add_parser("replay", help="simulate from a trace CSV")
    pr.add_argument("--topology")
    pr.add_argument("--trace", required=True, help="trace CSV to replay")
    pr.add_argument("--scheme")
    pr.add_argument("--policy")
    pr.add_argument("--slots", type=int, help="optional horizon")
    pr.add_argument("--out")
    _add_common(pr)
    pr.set_defaults(func=cmd_trace_replay)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code else 0
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (NoPathError, OSError, RuntimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RUNTIME_EXIT


if __name__ == "__main__":
    sys.exit(main())
