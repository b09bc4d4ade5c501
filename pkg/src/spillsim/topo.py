"""Two-datacenter leaf/spine/exit fabric builder.

Node id space is one flat range covering hosts, switches, spillway nodes
and finally one anycast pseudo-destination per DC, so switch route tables
are plain lists indexed by destination id.

Wiring convention: for every bidirectional link the ingress index a
packet carries at the receiving node equals the index of the receiver's
own port facing the sender. in_rev[i] is then the sender's egress port
behind local port i, which is what a PFC pause must stop.

Cross-DC packets are pinned to exit index (destination host index within
its DC) % n_exits on both directions; intra-DC hops stay per-packet
ECMP. Pinning keeps per-flow exit state (fast CNP pacing) on one switch
and concentrates DCI contention pairwise.
"""

from .kernel import (
    Engine, HostNode, Port, Rng, SwitchNode, SpillwayNode, Stats,
    CLS_LOSSY, CLS_LOSSLESS, CLS_UDP,
    EV_ARR_HOST, EV_ARR_SPILL, EV_ARR_SW,
    POLICY_DROP, POLICY_NEIGHBOR, POLICY_SPILLWAY,
    ROLE_EXIT, ROLE_LEAF, ROLE_SPINE,
    SEL_DC_ANYCAST, SEL_SW_ANYCAST, SEL_UNICAST_HASH,
    PS_PER_MS, PS_PER_US,
)

N_DC = 2

_SEL = {"dc_anycast": SEL_DC_ANYCAST, "sw_anycast": SEL_SW_ANYCAST,
        "unicast_hash": SEL_UNICAST_HASH}


def us_ps(us):
    return int(round(us * PS_PER_US))


def ms_ps(ms):
    return int(round(ms * PS_PER_MS))


def gbps_bps(gbps):
    return int(round(gbps * 1e9))


class Geometry:
    """Pure id arithmetic for one TopologyConfig; shared by the builder,
    the workload generator and the metric labeling."""

    def __init__(self, t):
        self.t = t
        self.gpus = t.gpus_per_dc
        self.leaves = t.leaves
        self.spines = t.spines
        self.exits = t.exits
        self.spills_per_dc = t.exits * t.spillways_per_exit
        self.nodes_per_dc = t.leaves * t.nodes_per_leaf
        if self.gpus % self.nodes_per_dc != 0:
            raise ValueError("gpus_per_dc must divide into node slots")
        self.gpus_per_node = self.gpus // self.nodes_per_dc
        self.gpus_per_leaf = self.gpus // t.leaves

        self.host_base = 0
        self.leaf_base = N_DC * self.gpus
        self.spine_base = self.leaf_base + N_DC * self.leaves
        self.exit_base = self.spine_base + N_DC * self.spines
        self.spill_base = self.exit_base + N_DC * self.exits
        self.anycast_base = self.spill_base + N_DC * self.spills_per_dc
        self.n_route = self.anycast_base + N_DC

    def host_id(self, dc, ih):
        return self.host_base + dc * self.gpus + ih

    def leaf_id(self, dc, il):
        return self.leaf_base + dc * self.leaves + il

    def spine_id(self, dc, isp):
        return self.spine_base + dc * self.spines + isp

    def exit_id(self, dc, ie):
        return self.exit_base + dc * self.exits + ie

    def spill_id(self, dc, isl):
        return self.spill_base + dc * self.spills_per_dc + isl

    def anycast_id(self, dc):
        return self.anycast_base + dc

    def node_of_gpu(self, ih):
        return ih // self.gpus_per_node

    def leaf_of_gpu(self, ih):
        return ih // self.gpus_per_leaf

    def pinned_exit(self, ih):
        return ih % self.exits

    def kind_of(self, nid):
        """(kind, dc, index-within-dc) for any node id."""
        if nid < self.leaf_base:
            return ("gpu",) + divmod(nid, self.gpus)
        if nid < self.spine_base:
            return ("leaf",) + divmod(nid - self.leaf_base, self.leaves)
        if nid < self.exit_base:
            return ("spine",) + divmod(nid - self.spine_base, self.spines)
        if nid < self.spill_base:
            return ("exit",) + divmod(nid - self.exit_base, self.exits)
        if nid < self.anycast_base:
            return ("spill",) + divmod(nid - self.spill_base, self.spills_per_dc)
        return ("anycast", nid - self.anycast_base, 0)

    def dc_of(self, nid):
        return self.kind_of(nid)[1]

    def node_name(self, nid):
        kind, dc, idx = self.kind_of(nid)
        if kind == "anycast":
            return "dc%d.anycast" % dc
        return "dc%d.%s%d" % (dc, kind, idx)

    def describe(self):
        return {
            "dcs": N_DC,
            "gpus_per_dc": self.gpus,
            "gpus_per_node": self.gpus_per_node,
            "nodes_per_dc": self.nodes_per_dc,
            "leaves_per_dc": self.leaves,
            "spines_per_dc": self.spines,
            "exits_per_dc": self.exits,
            "spillways_per_dc": self.spills_per_dc,
            "id_ranges": {
                "gpu": [self.host_base, self.leaf_base],
                "leaf": [self.leaf_base, self.spine_base],
                "spine": [self.spine_base, self.exit_base],
                "exit": [self.exit_base, self.spill_base],
                "spill": [self.spill_base, self.anycast_base],
                "anycast": [self.anycast_base, self.n_route],
            },
        }


class Net:
    """Built network: kernel nodes wired and routed for one scenario."""

    def __init__(self, cfg, eng):
        self.cfg = cfg
        self.eng = eng
        self.geo = Geometry(cfg.topology)
        self.hosts = []      # by (dc * gpus + ih)
        self.leaves = []     # by (dc * leaves + il)
        self.spines = []
        self.exits = []
        self.spills = []
        self.switches = []   # leaves + spines + exits, id order
        _build(self, cfg, eng)

    def host(self, dc, ih):
        return self.hosts[dc * self.geo.gpus + ih]

    def host_by_id(self, nid):
        return self.hosts[nid - self.geo.host_base]

    def leaf_by_id(self, nid):
        return self.leaves[nid - self.geo.leaf_base]

    def host_port(self, hid):
        """The leaf egress port that feeds host hid."""
        kind, dc, ih = self.geo.kind_of(hid)
        assert kind == "gpu"
        leaf = self.leaves[dc * self.geo.leaves + self.geo.leaf_of_gpu(ih)]
        return leaf.ports[ih % self.geo.gpus_per_leaf]


def _link(a, pa, b, pb):
    """Wire switch a's port pa to switch b's port pb, both directions
    already created; fixes ingress indices and PFC reverse ports."""
    a.ports[pa].connect(b, EV_ARR_SW, pb)
    b.ports[pb].connect(a, EV_ARR_SW, pa)
    a.in_rev[pa] = b.ports[pb]
    b.in_rev[pb] = a.ports[pa]


def _build(net, cfg, eng):
    g = net.geo
    t = cfg.topology
    c = cfg.classes
    s = cfg.spillway
    tr = cfg.transport

    bw = gbps_bps(t.link_gbps)
    lat = us_ps(t.link_latency_us)
    dci_bw = gbps_bps(t.dci_gbps)
    dci_lat = ms_ps(t.dci_latency_ms)
    K = t.spillways_per_exit
    D = t.dci_links_per_exit

    if s.enabled:
        policy = POLICY_SPILLWAY
    elif s.neighbor_mode:
        policy = POLICY_NEIGHBOR
    else:
        policy = POLICY_DROP

    def new_switch(nid, dc, role):
        sw = SwitchNode(eng, nid, dc, role, Rng(cfg.seed, nid), g.n_route)
        sw.buf_cap = int(round(c.buffer_mb * 1e6))
        sw.alpha_dt = c.alpha_dt
        sw.ecn_kmin = int(round(c.ecn_kmin_kb * 1e3))
        sw.ecn_kmax = int(round(c.ecn_kmax_kb * 1e3))
        sw.ecn_pmax = c.ecn_pmax
        sw.pfc_xoff = int(round(c.pfc_xoff_kb * 1e3))
        sw.pfc_xon = int(round(c.pfc_xon_kb * 1e3))
        sw.defl_reserve = int(round(c.deflect_reserve_mb * 1e6))
        sw.ll_headroom = int(round(c.lossless_headroom_mb * 1e6))
        sw.policy = policy
        sw.sel_policy = _SEL[s.policy]
        sw.sticky = 1 if s.sticky else 0
        sw.neighbor_budget = s.neighbor_budget
        sw.fast_cnp = 1 if tr.fast_cnp else 0
        sw.cnp_interval = us_ps(tr.cnp_interval_us)
        sw.encap_bytes = c.encap_bytes
        sw.ctrl_bytes = c.ctrl_bytes
        sw.anycast_id = g.anycast_id(dc)
        sw.dc_spills = tuple(g.spill_id(dc, i) for i in range(g.spills_per_dc))
        net.switches.append(sw)
        return sw

    for dc in range(N_DC):
        for ih in range(g.gpus):
            h = HostNode(eng, g.host_id(dc, ih), dc, bw, lat)
            h.udp_cap = int(round(c.host_udp_cap_mb * 1e6))
            net.hosts.append(h)
    for dc in range(N_DC):
        for il in range(g.leaves):
            net.leaves.append(new_switch(g.leaf_id(dc, il), dc, ROLE_LEAF))
    for dc in range(N_DC):
        for isp in range(g.spines):
            net.spines.append(new_switch(g.spine_id(dc, isp), dc, ROLE_SPINE))
    for dc in range(N_DC):
        for ie in range(g.exits):
            net.exits.append(new_switch(g.exit_id(dc, ie), dc, ROLE_EXIT))
    for dc in range(N_DC):
        for isl in range(g.spills_per_dc):
            nid = g.spill_id(dc, isl)
            sp = SpillwayNode(eng, nid, dc, Rng(cfg.seed, nid), bw, lat)
            sp.cap = int(round(t.spillway_gb * 1e9))
            sp.queue_buckets = s.queue_buckets
            sp.quiet_ps = us_ps(s.tau_gap_us)
            sp.quiet_jitter_ps = us_ps(s.jitter_us)
            sp.probe_wait_ps = us_ps(s.probe_wait_us)
            sp.half_window = s.half_window
            sp.deadline_ps = ms_ps(s.deadline_ms)
            sp.drain_backlog = s.drain_backlog_pkts * c.mtu_bytes
            sp.retry_gap_ps = (c.mtu_bytes * 8 * 1_000_000_000_000) // bw
            net.spills.append(sp)

    H = g.gpus_per_leaf
    L, S, E = g.leaves, g.spines, g.exits

    # ports: leaves = hosts then spines; spines = leaves then exits;
    # exits = spines, spillways, dci
    for dc in range(N_DC):
        for il in range(L):
            leaf = net.leaves[dc * L + il]
            for i in range(H + S):
                leaf.add_port(bw, lat)
            leaf.fabric_alt = tuple(range(H, H + S))
        for isp in range(S):
            spine = net.spines[dc * S + isp]
            for i in range(L + E):
                spine.add_port(bw, lat)
            spine.fabric_alt = tuple(range(L + E))
        for ie in range(E):
            ex = net.exits[dc * E + ie]
            for i in range(S):
                ex.add_port(bw, lat)
            for k in range(K):
                ex.add_port(bw, lat)
            for j in range(D):
                p = ex.add_port(dci_bw, dci_lat)
                p.is_dci = 1
            ex.fabric_alt = tuple(range(S))
            ex.member_spills = tuple(g.spill_id(dc, ie * K + k) for k in range(K))
            for k in range(K):
                ex.spill_port[g.spill_id(dc, ie * K + k)] = S + k

    # host <-> leaf
    for dc in range(N_DC):
        for ih in range(g.gpus):
            h = net.hosts[dc * g.gpus + ih]
            leaf = net.leaves[dc * L + g.leaf_of_gpu(ih)]
            pi = ih % H
            h.nic.connect(leaf, EV_ARR_SW, pi)
            leaf.ports[pi].connect(h, EV_ARR_HOST, -1)
            leaf.in_rev[pi] = h.nic
            leaf.ports[pi].track_busy = 1

    # leaf <-> spine, spine <-> exit (full meshes inside a DC)
    for dc in range(N_DC):
        for il in range(L):
            for isp in range(S):
                _link(net.leaves[dc * L + il], H + isp,
                      net.spines[dc * S + isp], il)
        for isp in range(S):
            for ie in range(E):
                _link(net.spines[dc * S + isp], L + ie,
                      net.exits[dc * E + ie], isp)

    # exit <-> spillways
    for dc in range(N_DC):
        for ie in range(E):
            ex = net.exits[dc * E + ie]
            for k in range(K):
                sp = net.spills[dc * g.spills_per_dc + ie * K + k]
                pi = S + k
                ex.ports[pi].connect(sp, EV_ARR_SPILL, -1)
                sp.uplink.connect(ex, EV_ARR_SW, pi)
                ex.in_rev[pi] = sp.uplink

    # dci: exit i of dc0 <-> exit i of dc1, D parallel links
    for ie in range(E):
        a = net.exits[0 * E + ie]
        b = net.exits[1 * E + ie]
        for j in range(D):
            _link(a, S + K + j, b, S + K + j)

    _routes(net)


def _routes(net):
    g = net.geo
    H, L, S, E = g.gpus_per_leaf, g.leaves, g.spines, g.exits
    K = net.cfg.topology.spillways_per_exit
    D = net.cfg.topology.dci_links_per_exit
    spine_up = tuple(range(H, H + S))          # at a leaf
    exit_ports = tuple(range(L, L + E))        # at a spine
    spine_ports = tuple(range(S))              # at an exit
    dci_ports = tuple(range(S + K, S + K + D))  # at an exit

    for dc in range(N_DC):
        far = 1 - dc
        for il in range(L):
            leaf = net.leaves[dc * L + il]
            for odc in range(N_DC):
                for ih in range(g.gpus):
                    hid = g.host_id(odc, ih)
                    if odc == dc and g.leaf_of_gpu(ih) == il:
                        leaf.route[hid] = (ih % H,)
                    else:
                        leaf.route[hid] = spine_up
                for isl in range(g.spills_per_dc):
                    leaf.route[g.spill_id(odc, isl)] = spine_up
                leaf.route[g.anycast_id(odc)] = spine_up

        for isp in range(S):
            spine = net.spines[dc * S + isp]
            for ih in range(g.gpus):
                spine.route[g.host_id(dc, ih)] = (g.leaf_of_gpu(ih),)
                spine.route[g.host_id(far, ih)] = (L + g.pinned_exit(ih),)
            for isl in range(g.spills_per_dc):
                spine.route[g.spill_id(dc, isl)] = (L + isl // K,)
                spine.route[g.spill_id(far, isl)] = (L + isl // K,)
            spine.route[g.anycast_id(dc)] = exit_ports
            spine.route[g.anycast_id(far)] = exit_ports

        for ie in range(E):
            ex = net.exits[dc * E + ie]
            for ih in range(g.gpus):
                ex.route[g.host_id(dc, ih)] = spine_ports
                ex.route[g.host_id(far, ih)] = dci_ports
            for isl in range(g.spills_per_dc):
                sid = g.spill_id(dc, isl)
                if isl // K == ie:
                    ex.route[sid] = (S + isl % K,)
                else:
                    ex.route[sid] = spine_ports
                ex.route[g.spill_id(far, isl)] = dci_ports
            ex.route[g.anycast_id(dc)] = spine_ports
            ex.route[g.anycast_id(far)] = dci_ports
