"""Run report assembly: per-flow completion metrics against a port-aware
ideal, deflection histograms, drop tables, buffer series summaries, and
the conservation walk that fails a run on packet-accounting violations.
"""

from .kernel import (
    CLS_ACK, CLS_DEFLECTED, CLS_DRAINED, CLS_LOSSY,
    CAUSE_NAMES, CLASS_NAMES,
    EV_ARR_HOST, EV_ARR_SPILL, EV_ARR_SW,
    PS_PER_MS, PS_PER_US,
)
from .topo import gbps_bps, ms_ps


def _ms(ps):
    return ps / PS_PER_MS


def conservation_check(net, eng, stats):
    """Every created packet must be delivered, dropped, or demonstrably
    still in flight (heap arrival events, port queues, spillway queues)."""
    violations = []
    data_in = 0
    ctrl_in = 0
    for ev in eng.heap:
        op = ev[2]
        if op == EV_ARR_SW or op == EV_ARR_HOST or op == EV_ARR_SPILL:
            if ev[4].cls <= CLS_ACK:
                ctrl_in += 1
            else:
                data_in += 1

    def scan_port(port):
        nonlocal data_in, ctrl_in
        for ci, q in enumerate(port.queues):
            if ci <= CLS_ACK:
                ctrl_in += len(q)
            else:
                data_in += len(q)
        if sum(port.qb) != port.qbytes:
            violations.append("port byte ledger out of sync at owner %r port %d"
                              % (port.owner, port.pid))

    for sw in net.switches:
        occ_q = 0
        for port in sw.ports:
            scan_port(port)
            occ_q += sum(port.qb)
        if occ_q != sw.occ:
            violations.append("switch %d occupancy %d != queued bytes %d"
                              % (sw.nid, sw.occ, occ_q))
    for h in net.hosts:
        scan_port(h.nic)
    for sp in net.spills:
        scan_port(sp.uplink)
        qbytes = 0
        for q in sp.queues.values():
            data_in += len(q.q)
            qbytes += q.qbytes
            if q.in_pkts != q.out_pkts + len(q.q):
                violations.append("spill %d queue %d: in %d != out %d + held %d"
                                  % (sp.nid, q.key, q.in_pkts, q.out_pkts, len(q.q)))
        if qbytes != sp.occ:
            violations.append("spill %d occupancy %d != queued bytes %d"
                              % (sp.nid, sp.occ, qbytes))

    end = stats.delivered + stats.dropped + data_in
    if stats.created != end:
        violations.append("data conservation: created %d != delivered %d + "
                          "dropped %d + in-flight %d"
                          % (stats.created, stats.delivered, stats.dropped, data_in))
    cend = stats.ctrl_delivered + ctrl_in
    if stats.ctrl_created != cend:
        violations.append("control conservation: created %d != delivered %d + "
                          "in-flight %d"
                          % (stats.ctrl_created, stats.ctrl_delivered, ctrl_in))
    if stats.lossless_violations != 0:
        violations.append("lossless packets admitted past the shared buffer "
                          "cap %d times, PFC should prevent this"
                          % stats.lossless_violations)
    return violations


def flow_rows(cfg, net, fs, flows):
    """Per-flow metric dicts, fid order."""
    t = cfg.topology
    line = float(gbps_bps(t.link_gbps))
    dci_bps = float(gbps_bps(t.dci_gbps))
    dci_lat = ms_ps(t.dci_latency_ms)
    intra_rtt = 4 * int(round(t.link_latency_us * PS_PER_US))
    geo = net.geo

    exit_load = {}
    for fd in fs["flows"]:
        if fd["kind"] == "longhaul":
            kind, dc, ih = geo.kind_of(fd["dst"])
            exit_load[geo.pinned_exit(ih)] = exit_load.get(geo.pinned_exit(ih), 0) + 1

    rows = []
    for fd, f in zip(fs["flows"], flows):
        if fd["kind"] == "longhaul":
            kind, dc, ih = geo.kind_of(fd["dst"])
            share = dci_bps * t.dci_links_per_exit / exit_load[geo.pinned_exit(ih)]
            rate_cap = min(line, share)
            # ideal = T_r + T_a + RTT: fair-share transmission time, plus the
            # span the destination port is held by its local collective, plus
            # one full round trip
            t_r = int(round(fd["bytes"] * 8e12 / rate_cap))
            busy = net.host_port(fd["dst"]).ll_busy
            t_a = busy[-1][1] - busy[0][0] if busy else 0
            ideal_ps = t_r + t_a + 2 * dci_lat
        else:
            ideal_ps = int(round(fd["bytes"] * 8e12 / line)) + intra_rtt
        fct_ps = f.fct_ps if f.done != 0 else -1
        rx = f.rx
        span = rx.last_rx_ps - rx.first_rx_ps if rx.first_rx_ps >= 0 else 0
        rows.append({
            "fid": f.fid,
            "kind": fd["kind"],
            "src": geo.node_name(fd["src"]),
            "dst": geo.node_name(fd["dst"]),
            "cls": CLASS_NAMES[f.cls],
            "bytes": fd["bytes"],
            "npkts": f.npkts,
            "start_ms": _ms(fd["start_ps"]),
            "fct_ms": _ms(fct_ps) if fct_ps >= 0 else None,
            "ideal_ms": _ms(ideal_ps),
            "slowdown": (fct_ps / ideal_ps) if fct_ps >= 0 else None,
            "goodput_gbps": (rx.delivered_bytes * 8.0e3 / span) if span > 0 else None,
            "loss_fraction": f.dropped_first / f.npkts,
            "dropped_pkts": f.dropped_pkts,
            "retx_pkts": f.retx_pkts,
            "retx_bytes": f.retx_bytes,
            "retx_dci_bytes": f.retx_dci_bytes,
            "deflected_pkts": f.deflected_pkts,
            "cnp_rx": f.cnp_rx,
            "rto_margin_ms": _ms(f.min_margin_ps) if f.min_margin_ps < (1 << 62) else None,
        })
    return rows


def build_report(cfg, net, fs, flows, udps, stats, eng, fired, violations, warnings):
    from . import config as configmod
    geo = net.geo
    t = cfg.topology
    rows = flow_rows(cfg, net, fs, flows)

    lh = [r for r in rows if r["kind"] == "longhaul"]
    coll = [r for r in rows if r["kind"] == "alltoall"]
    unfinished = [r["fid"] for r in rows if r["fct_ms"] is None]

    hist = list(stats.deflect_hist)
    hist_total = sum(hist)
    hist_frac = {i: n / hist_total for i, n in enumerate(hist) if n > 0}

    drops = []
    for (node, cause, cls), n in sorted(stats.drops.items()):
        drops.append({"node": node, "name": geo.node_name(node),
                      "cause": CAUSE_NAMES[cause], "cls": CLASS_NAMES[cls],
                      "count": n})

    dst_dc = 1
    dst_dc_longhaul_drops = 0
    src_exit_drops = 0
    for d in drops:
        in_dst = geo.dc_of(d["node"]) == dst_dc
        if in_dst and d["cls"] in ("lossy", "deflected", "drained"):
            dst_dc_longhaul_drops += d["count"]
        kind, dc, idx = geo.kind_of(d["node"])
        if kind == "exit" and dc == 0 and d["cls"] == "lossy":
            src_exit_drops += d["count"]

    # per-class transit accounting over every egress in the network
    tx_bytes_cls = [0] * len(CLASS_NAMES)
    tx_pkts_cls = [0] * len(CLASS_NAMES)
    ports = [p for sw in net.switches for p in sw.ports]
    ports += [h.nic for h in net.hosts] + [sp.uplink for sp in net.spills]
    for p in ports:
        for ci in range(len(CLASS_NAMES)):
            tx_bytes_cls[ci] += p.tx_bytes_cls[ci]
            tx_pkts_cls[ci] += p.tx_pkts_cls[ci]

    spill_nodes = []
    drain_done_ms = []
    spill_cap_total = 0
    for sp in net.spills:
        spill_cap_total += sp.cap
        queues = sorted(sp.queues.values(), key=lambda q: q.key)
        for q in queues:
            if q.in_pkts > 0:
                drain_done_ms.append(_ms(q.last_empty_ps) if len(q.q) == 0 and q.last_empty_ps >= 0 else None)
        if sp.in_pkts > 0 or sp.cap_drops > 0:
            spill_nodes.append({
                "node": sp.nid, "name": geo.node_name(sp.nid),
                "in_pkts": sp.in_pkts, "out_pkts": sp.out_pkts,
                "cap_drops": sp.cap_drops, "peak_bytes": sp.peak_occ,
                "held_pkts": sp.in_pkts - sp.out_pkts,
                "queues": [{"key": q.key, "in": q.in_pkts, "out": q.out_pkts,
                            "returned": q.returned, "probes": q.probes,
                            "held": q.in_pkts - q.out_pkts,
                            "last_empty_ms": _ms(q.last_empty_ps) if q.last_empty_ps >= 0 else None}
                           for q in queues],
            })

    # aggregate spillway occupancy over the destination DC, normalized
    dc1_spills = [sp for sp in net.spills if sp.dc == dst_dc]
    agg_cap = sum(sp.cap for sp in dc1_spills)
    agg_peak = 0
    if dc1_spills and stats.series.get(dc1_spills[0].nid):
        n_samp = min(len(stats.series[sp.nid]) for sp in dc1_spills)
        for i in range(n_samp):
            s = 0
            for sp in dc1_spills:
                s += stats.series[sp.nid][i][1]
            if s > agg_peak:
                agg_peak = s

    spine_peak = [0, 0]
    for sw in net.spines:
        if sw.peak_occ > spine_peak[sw.dc]:
            spine_peak[sw.dc] = sw.peak_occ
    leaf_peak = [0, 0]
    for sw in net.leaves:
        if sw.peak_occ > leaf_peak[sw.dc]:
            leaf_peak[sw.dc] = sw.peak_occ

    # destination-leaf occupancy before the first drop (motivation analog)
    pre_drop_leaf_peak = None
    if lh:
        dst0 = fs["flows"][0]["dst"]
        kind, dc, ih = geo.kind_of(dst0)
        leaf_nid = geo.leaf_id(dc, geo.leaf_of_gpu(ih))
        cutoff = stats.first_drop_ps if stats.first_drop_ps >= 0 else None
        peak = 0
        for ts, occ in stats.series.get(leaf_nid, []):
            if cutoff is not None and ts > cutoff:
                break
            if occ > peak:
                peak = occ
        pre_drop_leaf_peak = peak

    def _agg(rows_, key, fn, default=None):
        vals = [r[key] for r in rows_ if r[key] is not None]
        return fn(vals) if vals else default

    monitored = lh[0] if lh else None
    figure_analogs = {
        "motivation": {
            "longhaul_loss_fraction": _agg(lh, "loss_fraction", max),
            "longhaul_slowdown": _agg(lh, "slowdown", max),
            "dst_leaf_peak_mb_before_drop": (pre_drop_leaf_peak / 1e6
                                             if pre_drop_leaf_peak is not None else None),
        },
        "zero_loss": {
            "dst_dc_longhaul_drops": dst_dc_longhaul_drops,
            "longhaul_retx_bytes": sum(r["retx_bytes"] for r in lh),
            "longhaul_retx_dci_bytes": sum(r["retx_dci_bytes"] for r in lh),
            "max_longhaul_slowdown": _agg(lh, "slowdown", max),
        },
        "selection": {
            "deflection_hist_fraction": hist_frac,
            "deflections_total": stats.deflections_total,
            "spill_path_drops": sum(d["count"] for d in drops if d["cause"] == "spill_path"),
            "spill_capacity_drops": sum(d["count"] for d in drops if d["cause"] == "spill_capacity"),
        },
        "spine_stress": {
            "max_longhaul_slowdown": _agg(lh, "slowdown", max),
            "spine_peak_mb_dc1": spine_peak[1] / 1e6,
        },
        "fast_cnp": {
            "monitored_goodput_gbps": monitored["goodput_gbps"] if monitored else None,
            "monitored_fct_ms": monitored["fct_ms"] if monitored else None,
            "monitored_ideal_ms": monitored["ideal_ms"] if monitored else None,
            "source_exit_lossy_drops": src_exit_drops,
        },
        "utilization": {
            "dst_dc_aggregate_peak_fraction": (agg_peak / agg_cap) if agg_cap else None,
            "dst_dc_aggregate_capacity_bytes": agg_cap,
            "queue_drain_done_ms": sorted((v for v in drain_done_ms if v is not None)),
            "queues_never_drained": sum(1 for v in drain_done_ms if v is None),
        },
    }

    summary = {
        "variant": fs["variant"],
        "seed": cfg.seed,
        "flows_total": len(rows),
        "flows_unfinished": unfinished,
        "longhaul": {
            "count": len(lh),
            "max_slowdown": _agg(lh, "slowdown", max),
            "mean_slowdown": _agg(lh, "slowdown", lambda v: sum(v) / len(v)),
            "max_fct_ms": _agg(lh, "fct_ms", max),
            "loss_fraction_max": _agg(lh, "loss_fraction", max),
            "retx_bytes": sum(r["retx_bytes"] for r in lh),
            "retx_dci_bytes": sum(r["retx_dci_bytes"] for r in lh),
            "deflected_pkts": sum(r["deflected_pkts"] for r in lh),
            "min_rto_margin_ms": _agg(lh, "rto_margin_ms", min),
        },
        "alltoall": {
            "count": len(coll),
            "max_fct_ms": _agg(coll, "fct_ms", max),
        },
        "deflection_overhead": {
            "bytes": tx_bytes_cls[CLS_DEFLECTED] + tx_bytes_cls[CLS_DRAINED],
            "pkt_hops": tx_pkts_cls[CLS_DEFLECTED] + tx_pkts_cls[CLS_DRAINED],
        },
        "counters": {
            "created": stats.created, "delivered": stats.delivered,
            "dropped": stats.dropped, "dup_delivered": stats.dup_delivered,
            "ctrl_created": stats.ctrl_created, "ctrl_delivered": stats.ctrl_delivered,
            "rto_fires": stats.rto_fires, "retx_pkts": stats.retx_pkts,
            "deflections_total": stats.deflections_total,
            "drained_reinjected": stats.drained_reinjected,
            "probes_sent": stats.probes_sent,
            "fast_cnps": stats.fast_cnps, "rx_cnps": stats.rx_cnps,
            "pfc_pauses": stats.pfc_pauses,
            "udp_created": stats.udp_created, "udp_delivered": stats.udp_delivered,
            "first_drop_ms": _ms(stats.first_drop_ps) if stats.first_drop_ps >= 0 else None,
        },
        "tx_bytes_by_class": {CLASS_NAMES[i]: tx_bytes_cls[i] for i in range(len(CLASS_NAMES))},
        "tx_pkts_by_class": {CLASS_NAMES[i]: tx_pkts_cls[i] for i in range(len(CLASS_NAMES))},
        "peaks_mb": {
            "leaf_dc0": leaf_peak[0] / 1e6, "leaf_dc1": leaf_peak[1] / 1e6,
            "spine_dc0": spine_peak[0] / 1e6, "spine_dc1": spine_peak[1] / 1e6,
        },
    }

    bins = {}
    for f in flows:
        if f.monitored != 0 and (f.cnp_bins or f.tx_bins):
            bins[f.fid] = {"cnp": list(f.cnp_bins), "tx_bytes": list(f.tx_bins),
                           "rx_bytes": list(f.rx.rx_bins), "bin_ms": _ms(f.bin_ps)}

    series = {}
    for nid, samples in stats.series.items():
        if samples and max(occ for _, occ in samples) > 0:
            series[nid] = samples

    return {
        "config": configmod.to_dict(cfg),
        "topology": geo.describe(),
        "summary": summary,
        "figure_analogs": figure_analogs,
        "flows": rows,
        "deflection_hist": hist,
        "drops": drops,
        "spills": spill_nodes,
        "series": series,
        "series_names": {nid: geo.node_name(nid) for nid in series},
        "bins": bins,
        "violations": violations,
        "warnings": warnings,
        "events_fired": fired,
        "sim_end_ms": _ms(eng.now),
    }
