"""Result serialization. summary.json and the CSV files are functions of
(config, seed) only, so identical runs produce byte-identical files;
wall-clock and build flavor live in the run_meta.json sidecar."""

import csv
import json
import os

FLOW_COLS = ("fid", "kind", "src", "dst", "cls", "bytes", "npkts", "start_ms",
             "fct_ms", "ideal_ms", "slowdown", "goodput_gbps", "loss_fraction",
             "dropped_pkts", "retx_pkts", "retx_bytes", "retx_dci_bytes",
             "deflected_pkts", "cnp_rx", "rto_margin_ms")

SUMMARY_KEYS = ("config", "topology", "summary", "figure_analogs",
                "deflection_hist", "drops", "spills", "violations",
                "warnings", "sim_end_ms")


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return v


def write_outputs(report, outdir, meta=None):
    os.makedirs(outdir, exist_ok=True)

    with open(os.path.join(outdir, "flows.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(FLOW_COLS)
        for r in report["flows"]:
            w.writerow([_cell(r[c]) for c in FLOW_COLS])

    with open(os.path.join(outdir, "deflections.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(("deflections", "packets", "fraction"))
        hist = report["deflection_hist"]
        total = sum(hist)
        for i, n in enumerate(hist):
            if n > 0:
                w.writerow((i, n, repr(n / total)))

    with open(os.path.join(outdir, "buffers.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(("time_ms", "node", "name", "occ_bytes"))
        names = report["series_names"]
        for nid in sorted(report["series"]):
            for ts, occ in report["series"][nid]:
                w.writerow((repr(ts / 1e9), nid, names[nid], occ))

    with open(os.path.join(outdir, "cnp_bins.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(("fid", "bin", "time_ms", "cnp", "tx_bytes", "rx_bytes"))
        for fid in sorted(report["bins"]):
            b = report["bins"][fid]
            n = max(len(b["cnp"]), len(b["tx_bytes"]), len(b["rx_bytes"]))
            for i in range(n):
                w.writerow((fid, i, repr(i * b["bin_ms"]),
                            b["cnp"][i] if i < len(b["cnp"]) else 0,
                            b["tx_bytes"][i] if i < len(b["tx_bytes"]) else 0,
                            b["rx_bytes"][i] if i < len(b["rx_bytes"]) else 0))

    doc = {k: report[k] for k in SUMMARY_KEYS}
    doc["seed"] = report["config"]["seed"]
    with open(os.path.join(outdir, "summary.json"), "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")

    if meta is not None:
        with open(os.path.join(outdir, "run_meta.json"), "w") as fh:
            json.dump(meta, fh, sort_keys=True, indent=2)
            fh.write("\n")
