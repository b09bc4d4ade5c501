"""Scenario orchestration: build the network, materialize the flow set,
run the engine to completion, then assemble the report."""

import gc

from .kernel import (
    CollectiveGroup, Engine, FlowRx, FlowTx, Stats, Sampler, UdpTx,
)
from . import workload
from .analytic import provisioning_check
from .metrics import build_report, conservation_check
from .topo import Net, gbps_bps, ms_ps, us_ps

LOSSLESS_RTO_PS = 1 << 58  # effectively never; lossless recovery is not modeled
COLLECTIVE_WINDOW_S = 5e-3


def materialize(cfg, net, eng, fs):
    """Instantiate transmit/receive state for every flow in the set."""
    tr = cfg.transport
    cl = cfg.classes
    line = float(gbps_bps(cfg.topology.link_gbps))
    rto_cross = int(round(tr.alpha_rto * 2 * ms_ps(cfg.topology.dci_latency_ms)))

    flows = []
    for fd in fs["flows"]:
        src = net.host_by_id(fd["src"])
        dst = net.host_by_id(fd["dst"])
        f = FlowTx(eng, src, fd["fid"], fd["dst"], dst.dc, fd["cls"],
                   fd["bytes"], cl.mtu_bytes, line)
        f.ctrl_bytes = cl.ctrl_bytes
        rx = FlowRx(f, dst)
        rx.ack_every = tr.ack_every
        rx.ack_wait_ps = us_ps(tr.ack_wait_us)
        rx.cnp_interval = us_ps(tr.cnp_interval_us)
        if fd["kind"] == "longhaul":
            f.monitored = 1
            f.rto_ps = rto_cross
            if tr.dcqcn:
                f.dcqcn = 1
                f.dc_g = tr.dcqcn_g
                f.alpha_timer_ps = us_ps(tr.alpha_timer_us)
                f.rate_timer_ps = us_ps(tr.rate_timer_us)
                f.byte_thresh = int(round(tr.byte_counter_mb * 1e6))
                f.rai = tr.rai_gbps * 1e9
                f.rhai = tr.rhai_gbps * 1e9
                f.fast_stages = tr.fast_stages
                f.min_rate = tr.min_rate_gbps * 1e9
                f.cnp_interval = us_ps(tr.cnp_interval_us)
        else:
            f.window_bytes = int(round(tr.lossless_window_kb * 1e3))
            f.rto_ps = LOSSLESS_RTO_PS
        flows.append(f)

    groups = []
    for gd in fs["groups"]:
        g = CollectiveGroup(eng, gd["chunk_pkts"], gd["gap_ps"])
        for fid in gd["members"]:
            g.attach(flows[fid])
        groups.append(g)
    for g in groups:
        for f in g.flows:
            f.rx.refresh_mark()

    udps = []
    for ud in fs["udp"]:
        u = UdpTx(eng, net.host_by_id(ud["src"]), ud["fid"], ud["dst"],
                  ud["size"], ud["rate_bps"], ud["stop_ps"])
        udps.append(u)
    return flows, groups, udps


def run_scenario(cfg):
    stats = Stats()
    eng = Engine(stats)
    net = Net(cfg, eng)
    fs = workload.generate(cfg)
    flows, groups, udps = materialize(cfg, net, eng, fs)

    warnings = []
    if cfg.spillway.enabled:
        per_dc_cap = net.geo.spills_per_dc * int(cfg.topology.spillway_gb * 1e9)
        required, ok = provisioning_check(
            [fd["bytes"] for fd in fs["flows"] if fd["kind"] == "longhaul"],
            line_rate_bps=float(gbps_bps(cfg.topology.link_gbps)),
            t_coll_s=COLLECTIVE_WINDOW_S,
            capacity_bytes=per_dc_cap)
        if not ok:
            warnings.append(
                "provisioning: worst-case deflectable volume %.3e B exceeds "
                "per-DC spillway capacity %.3e B" % (required, per_dc_cap))

    for fd, f in zip(fs["flows"], flows):
        f.start(fd["start_ps"])
    for ud, u in zip(fs["udp"], udps):
        u.start(ud["start_ps"])

    sampler = Sampler(eng, net.switches, net.spills,
                      us_ps(cfg.sample_interval_us))
    sampler.start()

    gc.disable()
    try:
        fired = eng.run(ms_ps(cfg.t_end_ms))
    finally:
        gc.enable()

    violations = conservation_check(net, eng, stats)
    report = build_report(cfg, net, fs, flows, udps, stats, eng, fired,
                          violations, warnings)
    report["flow_set"] = fs
    return report
