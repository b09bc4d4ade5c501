"""Traffic generation: long-haul lossy transfers, per-node lossless
all-to-all bursts, and background UDP, emitted as a plain flow-set dict
that can be serialized to JSON and replayed.

Layout for the two-DC scenarios: the first `alltoall_nodes` nodes of DC1
run the collective and also host the long-haul destinations (GPU i of
the participating block receives long-haul flow i), so arriving
long-haul traffic collides with collective bursts at the destination
leaf ports. Long-haul sources sit on DC0's unused node block by default.
"""

import json

from .kernel import CLS_LOSSLESS, CLS_LOSSY, PS_PER_MS, PS_PER_US, Rng
from .topo import Geometry, gbps_bps, ms_ps, us_ps

UDP_FID_BASE = 1_000_000
JITTER_STREAM = 0x77AD


def generate(cfg):
    """Flow-set dict for the scenario config: {variant, flows, groups, udp}."""
    g = Geometry(cfg.topology)
    w = cfg.workload
    mtu = cfg.classes.mtu_bytes
    rng = Rng(cfg.seed, JITTER_STREAM)
    jitter_ps = us_ps(w.jitter_us)

    def draw_start():
        if jitter_ps <= 0:
            return 0
        return int(rng.below(jitter_ps))

    flows = []
    fid = 0
    n_part_gpus = w.alltoall_nodes * g.gpus_per_node

    if w.longhaul_src == "unused_nodes":
        src_first = n_part_gpus % g.gpus
    else:
        src_first = 0
    for i in range(w.longhaul_flows):
        flows.append({
            "fid": fid,
            "kind": "longhaul",
            "src": g.host_id(0, (src_first + i) % g.gpus),
            "dst": g.host_id(1, i % g.gpus),
            "bytes": int(round(w.longhaul_mb * 1e6)),
            "cls": CLS_LOSSY,
            "start_ps": draw_start(),
            "group": None,
        })
        fid += 1

    groups = []
    if w.variant != "dci_contention" and w.alltoall_nodes > 0:
        pair_bytes = w.alltoall_gb_per_node * 1e9
        k = g.gpus_per_node
        if k > 1:
            per_flow = int(round(pair_bytes / (k * (k - 1))))
            chunk_pkts = max(1, int((w.chunk_mb * 1e6 + mtu - 1) // mtu))
            for node in range(w.alltoall_nodes):
                gid = len(groups)
                members = []
                base = node * k
                for a in range(k):
                    for b in range(k):
                        if a == b:
                            continue
                        flows.append({
                            "fid": fid,
                            "kind": "alltoall",
                            "src": g.host_id(1, base + a),
                            "dst": g.host_id(1, base + b),
                            "bytes": per_flow,
                            "cls": CLS_LOSSLESS,
                            "start_ps": draw_start(),
                            "group": gid,
                        })
                        members.append(fid)
                        fid += 1
                groups.append({
                    "gid": gid,
                    "chunk_pkts": chunk_pkts,
                    "gap_ps": us_ps(w.round_gap_us),
                    "members": members,
                })

    udp = []
    if w.variant == "spine_stress":
        unused = list(range(w.alltoall_nodes, g.nodes_per_dc))
        if not unused:
            raise ValueError("spine_stress needs at least one node outside "
                             "the all-to-all to receive UDP")
        ufid = UDP_FID_BASE
        for node in range(g.nodes_per_dc):
            dst_node = unused[node % len(unused)]
            if dst_node == node:
                dst_node = unused[(node + 1) % len(unused)]
            for gpu in range(g.gpus_per_node):
                udp.append({
                    "fid": ufid,
                    "src": g.host_id(1, node * g.gpus_per_node + gpu),
                    "dst": g.host_id(1, dst_node * g.gpus_per_node + gpu),
                    "size": mtu,
                    "rate_bps": float(gbps_bps(w.udp_gbps)),
                    "start_ps": 0,
                    "stop_ps": ms_ps(w.udp_stop_ms),
                })
                ufid += 1

    return {"variant": w.variant, "flows": flows, "groups": groups, "udp": udp}


def longhaul_bytes(fs):
    return [f["bytes"] for f in fs["flows"] if f["kind"] == "longhaul"]


def to_json(fs, path=None):
    text = json.dumps(fs, indent=2, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def from_json(source):
    """Accepts a JSON string or a file path; light structural checks so a
    hand-edited fixture fails loudly rather than misrouting packets."""
    if "\n" in source or source.lstrip().startswith("{"):
        fs = json.loads(source)
    else:
        with open(source, "r") as fh:
            fs = json.load(fh)
    for part in ("variant", "flows", "groups", "udp"):
        if part not in fs:
            raise ValueError("flow set missing %r" % part)
    seen = set()
    for f in fs["flows"]:
        for key in ("fid", "kind", "src", "dst", "bytes", "cls", "start_ps", "group"):
            if key not in f:
                raise ValueError("flow missing %r: %r" % (key, f))
        if f["fid"] in seen:
            raise ValueError("duplicate fid %d" % f["fid"])
        seen.add(f["fid"])
        if f["bytes"] <= 0 or f["start_ps"] < 0:
            raise ValueError("bad flow sizes: %r" % f)
        if f["src"] == f["dst"]:
            raise ValueError("flow to self: %r" % f)
    for grp in fs["groups"]:
        if grp["chunk_pkts"] < 1 or grp["gap_ps"] < 0 or not grp["members"]:
            raise ValueError("bad group: %r" % grp)
        for m in grp["members"]:
            if m not in seen:
                raise ValueError("group member %d is not a flow" % m)
    return fs
