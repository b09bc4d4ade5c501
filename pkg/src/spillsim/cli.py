"""Command-line front end: run scenarios, sweep one knob, evaluate the
closed-form completion model, validate configs, benchmark build flavors."""

import argparse
import json
import os
import sys
import time

from . import analytic, config


def _scenario_path(name):
    if os.path.exists(name):
        return name
    cand = os.path.join(os.path.dirname(__file__), "scenarios", name + ".yaml")
    if os.path.exists(cand):
        return cand
    raise SystemExit("no such scenario file or bundled scenario name: %r" % name)


def _load(args):
    data = config.load_yaml(_scenario_path(args.scenario))
    for ov in getattr(args, "override", None) or []:
        if "=" not in ov:
            raise SystemExit("override must look like block.key=value: %r" % ov)
        key, val = ov.split("=", 1)
        config.apply_override(data, key, val)
    if getattr(args, "seed", None) is not None:
        data["seed"] = args.seed
    return config.from_dict(data)


def _run_one(cfg, outdir):
    from .kernel import FLAVOR
    from .simrun import run_scenario
    from .output import write_outputs
    t0 = time.perf_counter()
    report = run_scenario(cfg)
    wall = time.perf_counter() - t0
    meta = {"wall_s": wall, "flavor": FLAVOR,
            "events_fired": report["events_fired"]}
    if outdir:
        write_outputs(report, outdir, meta)
    return report, meta


def cmd_run(args):
    cfg = _load(args)
    report, meta = _run_one(cfg, args.out)
    s = report["summary"]
    print("variant=%s seed=%d flows=%d events=%d wall=%.1fs"
          % (s["variant"], report["config"]["seed"], s["flows_total"],
             report["events_fired"], meta["wall_s"]))
    lh = s["longhaul"]
    if lh["count"]:
        print("longhaul: max_fct=%.2fms max_slowdown=%s retx_bytes=%d deflected=%d"
              % (lh["max_fct_ms"] or -1,
                 ("%.3f" % lh["max_slowdown"]) if lh["max_slowdown"] else "n/a",
                 lh["retx_bytes"], lh["deflected_pkts"]))
    for w in report["warnings"]:
        print("warning: %s" % w)
    for v in report["violations"]:
        print("VIOLATION: %s" % v, file=sys.stderr)
    if s["flows_unfinished"]:
        print("warning: %d flows unfinished at t_end" % len(s["flows_unfinished"]))
    return 1 if report["violations"] else 0


def cmd_sweep(args):
    if "=" not in args.vary:
        raise SystemExit("--vary must look like block.key=v1,v2,v3")
    key, vals = args.vary.split("=", 1)
    values = vals.split(",")
    index = []
    rc = 0
    for v in values:
        sub_args = argparse.Namespace(
            scenario=args.scenario, seed=args.seed,
            override=(args.override or []) + ["%s=%s" % (key, v)])
        cfg = _load(sub_args)
        sub = os.path.join(args.out, "%s=%s" % (key.replace(".", "_"), v))
        report, meta = _run_one(cfg, sub)
        s = report["summary"]
        row = {"value": v, "dir": sub,
               "max_longhaul_slowdown": s["longhaul"]["max_slowdown"],
               "max_longhaul_fct_ms": s["longhaul"]["max_fct_ms"],
               "dropped": s["counters"]["dropped"],
               "deflections": s["counters"]["deflections_total"],
               "violations": len(report["violations"])}
        index.append(row)
        if report["violations"]:
            rc = 1
        print("%s=%s -> slowdown=%s dropped=%d deflections=%d"
              % (key, v, row["max_longhaul_slowdown"], row["dropped"],
                 row["deflections"]))
    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "sweep_index.json"), "w") as fh:
        json.dump({"vary": key, "runs": index}, fh, sort_keys=True, indent=2)
        fh.write("\n")
    return rc


def cmd_model(args):
    if args.sweep:
        rows = []
        for tok in args.sweep.split(","):
            L = float(tok)
            fct = analytic.fct_model(L, args.alpha, args.Tr, args.Ta)
            rows.append((L, fct, analytic.slowdown(fct, L, args.Tr, args.Ta)))
        if args.json:
            print(json.dumps([{"L_ms": L, "fct_ms": f, "slowdown": s}
                              for L, f, s in rows], indent=2))
        else:
            print("L_ms fct_ms slowdown")
            for L, f, s in rows:
                print("%g %.6g %.6g" % (L, f, s))
    else:
        fct = analytic.fct_model(args.L, args.alpha, args.Tr, args.Ta)
        sd = analytic.slowdown(fct, args.L, args.Tr, args.Ta)
        if args.json:
            print(json.dumps({"L_ms": args.L, "alpha": args.alpha,
                              "Tr_ms": args.Tr, "Ta_ms": args.Ta,
                              "fct_ms": fct, "slowdown": sd}, indent=2))
        else:
            print("fct_ms=%.6g slowdown=%.6g" % (fct, sd))
    return 0


def cmd_validate(args):
    try:
        cfg = _load(args)
    except (config.ConfigError, ValueError) as e:
        print("invalid: %s" % e, file=sys.stderr)
        return 1
    print(json.dumps(config.to_dict(cfg), sort_keys=True, indent=2))
    return 0


def cmd_bench(args):
    from .bench import run_bench
    return run_bench(_scenario_path(args.scenario), args.seed, args.out)


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="spillsim",
        description="packet-level simulator of cross-datacenter RDMA "
                    "collectives with spillway buffering")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_scenario_opts(p, out_required):
        p.add_argument("--scenario", required=True,
                       help="scenario yaml path or bundled name")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--override", action="append", metavar="KEY=VAL",
                       help="config override, e.g. spillway.sticky=false")
        p.add_argument("--out", required=out_required, default=None,
                       help="output directory")

    p = sub.add_parser("run", help="run one scenario")
    add_scenario_opts(p, True)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("sweep", help="run a scenario once per value of one knob")
    add_scenario_opts(p, True)
    p.add_argument("--vary", required=True, metavar="KEY=V1,V2,...")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("model", help="closed-form worst-case completion time")
    p.add_argument("--L", type=float, default=5.0, help="one-way latency, ms")
    p.add_argument("--alpha", type=float, default=1.68, help="RTO multiplier")
    p.add_argument("--Tr", type=float, required=True, help="retransmit burst time, ms")
    p.add_argument("--Ta", type=float, required=True, help="blackout time, ms")
    p.add_argument("--sweep", default=None, metavar="L1,L2,...",
                   help="evaluate at several L values instead of --L")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_model)

    p = sub.add_parser("validate", help="check a scenario file and echo the "
                                        "fully-resolved config")
    p.add_argument("--scenario", required=True)
    p.add_argument("--override", action="append", metavar="KEY=VAL")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("bench", help="compare compiled and pure-python builds")
    p.add_argument("--scenario", default="microbenchmark")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_bench)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
