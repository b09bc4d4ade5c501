"""Run the same scenario under the compiled kernel and the pure-python
kernel in separate interpreters, check the outputs match byte for byte,
and report the speedup. The flavor is fixed at import time, hence the
subprocesses."""

import filecmp
import json
import os
import subprocess
import sys
import tempfile

COMPARED = ("flows.csv", "deflections.csv", "buffers.csv", "cnp_bins.csv",
            "summary.json")


def _child(scenario, seed, outdir, pure):
    env = dict(os.environ)
    if pure:
        env["SPILLSIM_PURE"] = "1"
    else:
        env.pop("SPILLSIM_PURE", None)
    cmd = [sys.executable, "-m", "spillsim.cli", "run",
           "--scenario", scenario, "--seed", str(seed), "--out", outdir]
    r = subprocess.run(cmd, env=env, capture_output=True, text=True)
    if r.returncode != 0:
        sys.stderr.write(r.stdout)
        sys.stderr.write(r.stderr)
        raise SystemExit("bench child failed (pure=%s)" % pure)
    with open(os.path.join(outdir, "run_meta.json")) as fh:
        return json.load(fh)


def run_bench(scenario, seed=1, out=None):
    tmp = None
    if out is None:
        tmp = tempfile.TemporaryDirectory(prefix="spillsim-bench-")
        out = tmp.name
    try:
        d_comp = os.path.join(out, "compiled")
        d_pure = os.path.join(out, "pure")
        meta_c = _child(scenario, seed, d_comp, pure=False)
        meta_p = _child(scenario, seed, d_pure, pure=True)

        if meta_c["flavor"] == meta_p["flavor"]:
            print("note: both runs used the %s kernel; no compiled build "
                  "is available" % meta_c["flavor"])

        mismatched = [f for f in COMPARED
                      if not filecmp.cmp(os.path.join(d_comp, f),
                                         os.path.join(d_pure, f),
                                         shallow=False)]
        print("flavors: %s vs %s" % (meta_c["flavor"], meta_p["flavor"]))
        print("events: %d" % meta_c["events_fired"])
        print("wall: %.2fs vs %.2fs  speedup %.2fx"
              % (meta_c["wall_s"], meta_p["wall_s"],
                 meta_p["wall_s"] / meta_c["wall_s"]))
        if mismatched:
            print("MISMATCH in outputs: %s" % ", ".join(mismatched),
                  file=sys.stderr)
            return 1
        print("outputs byte-identical across flavors")
        return 0
    finally:
        if tmp is not None:
            tmp.cleanup()


if __name__ == "__main__":
    sys.exit(run_bench(sys.argv[1] if len(sys.argv) > 1 else "microbenchmark"))
