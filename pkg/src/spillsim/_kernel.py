"""Event-driven simulation core.

Everything on the per-packet hot path lives in this one module so the
compiled build keeps cross-class calls and attribute access at C level.
The file is written in Cython pure-Python mode: plain CPython executes it
unchanged, and the optional extension build compiles the same source.
Semantics must be identical in both flavors, which imposes three rules:

* the clock is integer picoseconds and every quantity stays well below
  2**62 so typed C integers never wrap where Python ints would not,
* RNG state is masked to 64 bits explicitly,
* floats are used only where the modeled quantity is fractional (rates,
  probabilities); IEEE doubles behave the same compiled or not.

Constants that do not fit int32 are declared typed at module level:
inline big literals would silently demote compiled arithmetic to Python
object calls.
"""

import cython
import heapq
from collections import deque

COMPILED = cython.compiled

MASK64 = cython.declare(cython.ulonglong, 0xFFFFFFFFFFFFFFFF)
SM_GAMMA = cython.declare(cython.ulonglong, 0x9E3779B97F4A7C15)
SM_MIX1 = cython.declare(cython.ulonglong, 0xBF58476D1CE4E5B9)
SM_MIX2 = cython.declare(cython.ulonglong, 0x94D049BB133111EB)
DBL_NORM = cython.declare(cython.double, 1.1102230246251565e-16)  # 2**-53

PS_PER_SEC = cython.declare(cython.longlong, 1_000_000_000_000)
PS_PER_US = cython.declare(cython.longlong, 1_000_000)
PS_PER_MS = cython.declare(cython.longlong, 1_000_000_000)
I63_MAX = cython.declare(cython.longlong, 0x7FFFFFFFFFFFFFFF)

# Traffic classes, ints double as strict dequeue priority (0 first).
CLS_CNP = cython.declare(cython.int, 0)
CLS_ACK = cython.declare(cython.int, 1)
CLS_LOSSLESS = cython.declare(cython.int, 2)
CLS_DEFLECTED = cython.declare(cython.int, 3)
CLS_DRAINED = cython.declare(cython.int, 4)
CLS_LOSSY = cython.declare(cython.int, 5)
CLS_UDP = cython.declare(cython.int, 6)
NCLS = cython.declare(cython.int, 7)

CLASS_NAMES = ("cnp", "ack", "lossless", "deflected", "drained", "lossy", "udp")

ECN_NOT = cython.declare(cython.int, 0)
ECN_ECT = cython.declare(cython.int, 1)
ECN_CE = cython.declare(cython.int, 2)

ROLE_LEAF = cython.declare(cython.int, 0)
ROLE_SPINE = cython.declare(cython.int, 1)
ROLE_EXIT = cython.declare(cython.int, 2)

POLICY_DROP = cython.declare(cython.int, 0)
POLICY_SPILLWAY = cython.declare(cython.int, 1)
POLICY_NEIGHBOR = cython.declare(cython.int, 2)

SEL_DC_ANYCAST = cython.declare(cython.int, 0)
SEL_SW_ANYCAST = cython.declare(cython.int, 1)
SEL_UNICAST_HASH = cython.declare(cython.int, 2)

SQ_IDLE = cython.declare(cython.int, 0)
SQ_QUIET = cython.declare(cython.int, 1)
SQ_PROBE = cython.declare(cython.int, 2)
SQ_HALF = cython.declare(cython.int, 3)
SQ_FULL = cython.declare(cython.int, 4)

SQ_STATE_NAMES = ("idle", "quiet_wait", "probe_outstanding", "half_burst", "full_burst")

DROP_BUFFER = cython.declare(cython.int, 0)      # shared-buffer admission failure
DROP_SPILLPATH = cython.declare(cython.int, 1)   # deflected-class queue overflow
DROP_SPILL_CAP = cython.declare(cython.int, 2)   # spillway node out of capacity
DROP_TTL = cython.declare(cython.int, 3)         # in-fabric deflection budget spent
DROP_HOST = cython.declare(cython.int, 4)        # host NIC tail drop (udp only)
NCAUSE = cython.declare(cython.int, 5)

CAUSE_NAMES = ("buffer", "spill_path", "spill_capacity", "deflect_budget", "host_nic")

# Event opcodes. An event is a mutable list [t, ordinal, op, target, arg]
# so cancellation is op <- EV_DEAD in place.
EV_DEAD = cython.declare(cython.int, 0)
EV_ARR_SW = cython.declare(cython.int, 1)
EV_ARR_HOST = cython.declare(cython.int, 2)
EV_ARR_SPILL = cython.declare(cython.int, 3)
EV_TXDONE = cython.declare(cython.int, 4)
EV_EMIT = cython.declare(cython.int, 5)
EV_UDP_EMIT = cython.declare(cython.int, 6)
EV_RTO = cython.declare(cython.int, 7)
EV_ALPHA_T = cython.declare(cython.int, 8)
EV_RATE_T = cython.declare(cython.int, 9)
EV_ACK_T = cython.declare(cython.int, 10)
EV_QUIET = cython.declare(cython.int, 11)
EV_PROBE_CHK = cython.declare(cython.int, 12)
EV_HALF_CHK = cython.declare(cython.int, 13)
EV_DRAIN = cython.declare(cython.int, 14)
EV_SDEADLINE = cython.declare(cython.int, 15)
EV_ROUND = cython.declare(cython.int, 16)
EV_PAUSE = cython.declare(cython.int, 17)
EV_UNPAUSE = cython.declare(cython.int, 18)
EV_SAMPLE = cython.declare(cython.int, 19)
EV_CALL = cython.declare(cython.int, 20)


@cython.ccall
def ser_ps(nbytes: cython.longlong, bw_bps: cython.longlong) -> cython.longlong:
    """Serialization time of nbytes at bw_bps, exact integer picoseconds."""
    return (nbytes * 8 * PS_PER_SEC) // bw_bps


@cython.cfunc
def _mix64(z: cython.ulonglong) -> cython.ulonglong:
    z = (z ^ (z >> 30)) * SM_MIX1 & MASK64
    z = (z ^ (z >> 27)) * SM_MIX2 & MASK64
    return z ^ (z >> 31)


@cython.cclass
class Rng:
    """splitmix64 stream, one per entity so event order perturbations in
    unrelated parts of the model do not shift draws elsewhere."""

    state = cython.declare(cython.ulonglong, visibility="public")

    def __init__(self, seed: cython.ulonglong, stream: cython.ulonglong):
        self.state = _mix64((seed * SM_GAMMA ^ _mix64(stream + SM_GAMMA)) & MASK64)

    @cython.ccall
    def next64(self) -> cython.ulonglong:
        self.state = (self.state + SM_GAMMA) & MASK64
        return _mix64(self.state)

    @cython.ccall
    def uniform(self) -> cython.double:
        return cython.cast(cython.double, self.next64() >> 11) * DBL_NORM

    @cython.ccall
    def below(self, n: cython.longlong) -> cython.longlong:
        # modulo bias is immaterial for the small n used here
        return cython.cast(cython.longlong, self.next64() % cython.cast(cython.ulonglong, n))


@cython.cclass
class Packet:
    flow = cython.declare(object, visibility="public")       # FlowTx or UdpTx
    cls = cython.declare(cython.int, visibility="public")
    size = cython.declare(cython.int, visibility="public")   # payload wire bytes
    encap = cython.declare(cython.int, visibility="public")  # extra bytes while deflected
    idx = cython.declare(cython.int, visibility="public")    # packet index in flow
    dst = cython.declare(cython.int, visibility="public")    # current destination node
    odst = cython.declare(cython.int, visibility="public")   # original destination node
    ecn = cython.declare(cython.int, visibility="public")
    deflections = cython.declare(cython.int, visibility="public")
    spill_id = cython.declare(cython.int, visibility="public")
    is_retx = cython.declare(cython.int, visibility="public")
    ingress = cython.declare(cython.int, visibility="public")  # ingress index at current switch
    serial = cython.declare(cython.longlong, visibility="public")  # unique per data packet, -1 for control
    aux = cython.declare(object, visibility="public")        # ack payload etc

    def __init__(self, flow, cls: cython.int, size: cython.int, idx: cython.int,
                 dst: cython.int, ecn: cython.int):
        self.flow = flow
        self.cls = cls
        self.size = size
        self.encap = 0
        self.idx = idx
        self.dst = dst
        self.odst = dst
        self.ecn = ecn
        self.deflections = 0
        self.spill_id = -1
        self.is_retx = 0
        self.ingress = -1
        self.serial = -1
        self.aux = None

    @cython.ccall
    def wire(self) -> cython.longlong:
        return self.size + self.encap


@cython.cclass
class Stats:
    """Run-wide counters. Packet conservation: every data/udp packet object
    is created once and ends exactly one of delivered / dropped / in flight."""

    created = cython.declare(cython.longlong, visibility="public")
    delivered = cython.declare(cython.longlong, visibility="public")
    dropped = cython.declare(cython.longlong, visibility="public")
    dup_delivered = cython.declare(cython.longlong, visibility="public")
    ctrl_created = cython.declare(cython.longlong, visibility="public")
    ctrl_delivered = cython.declare(cython.longlong, visibility="public")
    lossless_violations = cython.declare(cython.longlong, visibility="public")
    rto_fires = cython.declare(cython.longlong, visibility="public")
    retx_pkts = cython.declare(cython.longlong, visibility="public")
    fast_cnps = cython.declare(cython.longlong, visibility="public")
    rx_cnps = cython.declare(cython.longlong, visibility="public")
    deflections_total = cython.declare(cython.longlong, visibility="public")
    drained_reinjected = cython.declare(cython.longlong, visibility="public")
    probes_sent = cython.declare(cython.longlong, visibility="public")
    udp_created = cython.declare(cython.longlong, visibility="public")
    udp_delivered = cython.declare(cython.longlong, visibility="public")
    pfc_pauses = cython.declare(cython.longlong, visibility="public")
    live_sources = cython.declare(cython.int, visibility="public")
    first_drop_ps = cython.declare(cython.longlong, visibility="public")  # -1 until a drop happens
    drops = cython.declare(dict, visibility="readonly")      # (node, cause, cls) -> n
    deflect_hist = cython.declare(list, visibility="readonly")  # count -> delivered pkts
    series = cython.declare(dict, visibility="readonly")     # node -> [(t, occ), ...]

    def __init__(self):
        self.created = 0
        self.delivered = 0
        self.dropped = 0
        self.dup_delivered = 0
        self.ctrl_created = 0
        self.ctrl_delivered = 0
        self.lossless_violations = 0
        self.rto_fires = 0
        self.retx_pkts = 0
        self.fast_cnps = 0
        self.rx_cnps = 0
        self.deflections_total = 0
        self.drained_reinjected = 0
        self.probes_sent = 0
        self.udp_created = 0
        self.udp_delivered = 0
        self.pfc_pauses = 0
        self.live_sources = 0
        self.first_drop_ps = -1
        self.drops = {}
        self.deflect_hist = []
        self.series = {}

    @cython.ccall
    def drop(self, node: cython.int, cause: cython.int, cls: cython.int,
             now: cython.longlong):
        self.dropped += 1
        if self.first_drop_ps < 0:
            self.first_drop_ps = now
        key = (node, cause, cls)
        d: dict = self.drops
        if key in d:
            d[key] += 1
        else:
            d[key] = 1

    @cython.ccall
    def note_deflections(self, n: cython.int):
        h: list = self.deflect_hist
        while len(h) <= n:
            h.append(0)
        h[n] += 1


@cython.cclass
class Engine:
    """Binary-heap event loop on an integer picosecond clock.

    Events are 5-slot lists [t, ordinal, op, target, arg]; the ordinal
    breaks time ties FIFO and makes runs reproducible. dispatch() casts
    target by opcode, which compiles to direct C calls."""

    now = cython.declare(cython.longlong, visibility="public")
    heap = cython.declare(list, visibility="readonly")
    ordinal = cython.declare(cython.longlong, visibility="readonly")
    fired = cython.declare(cython.longlong, visibility="public")
    stats = cython.declare(Stats, visibility="public")
    trace = cython.declare(object, visibility="public")  # None, or list collecting (t, ordinal, op)

    def __init__(self, stats: Stats):
        self.now = 0
        self.heap = []
        self.ordinal = 0
        self.fired = 0
        self.stats = stats
        self.trace = None

    @cython.ccall
    def schedule(self, t: cython.longlong, op: cython.int, target, arg) -> list:
        if t < self.now:
            raise AssertionError("scheduled into the past: %d < %d op=%d" % (t, self.now, op))
        ev: list = [t, self.ordinal, op, target, arg]
        self.ordinal += 1
        heapq.heappush(self.heap, ev)
        return ev

    @cython.ccall
    def cancel(self, ev: list):
        ev[2] = EV_DEAD

    @cython.ccall
    def run(self, t_end: cython.longlong) -> cython.longlong:
        """Run until the heap empties or the next event is past t_end
        (t_end < 0 means no limit). Returns events fired."""
        heap: list = self.heap
        n0: cython.longlong = self.fired
        ev: list
        op: cython.int
        while heap:
            ev = heap[0]
            if t_end >= 0 and ev[0] > t_end:
                break
            ev = heapq.heappop(heap)
            op = ev[2]
            if op == EV_DEAD:
                continue
            self.now = ev[0]
            self.fired += 1
            if self.trace is not None:
                cython.cast(list, self.trace).append((ev[0], ev[1], op))
            self._dispatch(op, ev[3], ev[4])
        return self.fired - n0

    @cython.cfunc
    def _dispatch(self, op: cython.int, target, arg):
        # ordered roughly by frequency
        if op == EV_TXDONE:
            cython.cast(Port, target).txdone()
        elif op == EV_ARR_SW:
            cython.cast(SwitchNode, target).arrival(cython.cast(Packet, arg))
        elif op == EV_EMIT:
            cython.cast(FlowTx, target).emit()
        elif op == EV_ARR_HOST:
            cython.cast(HostNode, target).arrival(cython.cast(Packet, arg))
        elif op == EV_UDP_EMIT:
            cython.cast(UdpTx, target).emit()
        elif op == EV_ARR_SPILL:
            cython.cast(SpillwayNode, target).arrival(cython.cast(Packet, arg))
        elif op == EV_DRAIN:
            cython.cast(SpillQueue, target).drain_step(arg)
        elif op == EV_ACK_T:
            cython.cast(FlowRx, target).ack_timer()
        elif op == EV_RTO:
            cython.cast(FlowTx, target).rto_fire()
        elif op == EV_ALPHA_T:
            cython.cast(FlowTx, target).alpha_timer()
        elif op == EV_RATE_T:
            cython.cast(FlowTx, target).rate_timer()
        elif op == EV_QUIET:
            cython.cast(SpillQueue, target).quiet_fire()
        elif op == EV_PROBE_CHK:
            cython.cast(SpillQueue, target).probe_check(arg)
        elif op == EV_HALF_CHK:
            cython.cast(SpillQueue, target).half_check(arg)
        elif op == EV_SDEADLINE:
            cython.cast(SpillQueue, target).deadline_fire()
        elif op == EV_ROUND:
            cython.cast(CollectiveGroup, target).advance_round()
        elif op == EV_PAUSE:
            cython.cast(Port, target).set_pause(1)
        elif op == EV_UNPAUSE:
            cython.cast(Port, target).set_pause(0)
        elif op == EV_SAMPLE:
            cython.cast(Sampler, target).sample()
        elif op == EV_CALL:
            target(arg)


ACC_NONE = cython.declare(cython.int, 0)
ACC_SWITCH = cython.declare(cython.int, 1)


@cython.cclass
class Port:
    """Unidirectional egress with 7 strict-priority class queues.

    Owned by a switch, host, or spillway node. Switch-owned ports call
    back into the switch on dequeue for occupancy, PFC and DCI
    accounting; other owners track nothing per packet."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    owner = cython.declare(object, visibility="readonly")
    acc = cython.declare(cython.int, visibility="readonly")
    pid = cython.declare(cython.int, visibility="readonly")   # index at owner
    peer = cython.declare(object, visibility="readonly")
    peer_op = cython.declare(cython.int, visibility="readonly")
    peer_in = cython.declare(cython.int, visibility="readonly")
    bw = cython.declare(cython.longlong, visibility="readonly")
    lat = cython.declare(cython.longlong, visibility="readonly")
    queues = cython.declare(list, visibility="readonly")
    qb = cython.declare(list, visibility="readonly")          # bytes per class
    qbytes = cython.declare(cython.longlong, visibility="readonly")
    busy = cython.declare(cython.int, visibility="readonly")
    paused = cython.declare(cython.int, visibility="readonly")
    is_dci = cython.declare(cython.int, visibility="public")
    track_busy = cython.declare(cython.int, visibility="public")
    ll_busy = cython.declare(list, visibility="readonly")     # merged lossless tx intervals
    tx_pkts = cython.declare(cython.longlong, visibility="readonly")
    tx_bytes = cython.declare(cython.longlong, visibility="readonly")
    tx_bytes_cls = cython.declare(list, visibility="readonly")
    tx_pkts_cls = cython.declare(list, visibility="readonly")

    def __init__(self, eng: Engine, owner, acc: cython.int, pid: cython.int,
                 bw: cython.longlong, lat: cython.longlong):
        self.eng = eng
        self.stats = eng.stats
        self.owner = owner
        self.acc = acc
        self.pid = pid
        self.peer = None
        self.peer_op = EV_DEAD
        self.peer_in = -1
        self.bw = bw
        self.lat = lat
        self.queues = [deque() for _ in range(NCLS)]
        self.qb = [0] * NCLS
        self.qbytes = 0
        self.busy = 0
        self.paused = 0
        self.is_dci = 0
        self.track_busy = 0
        self.ll_busy = []
        self.tx_pkts = 0
        self.tx_bytes = 0
        self.tx_bytes_cls = [0] * NCLS
        self.tx_pkts_cls = [0] * NCLS

    @cython.ccall
    def connect(self, peer, peer_op: cython.int, peer_in: cython.int):
        self.peer = peer
        self.peer_op = peer_op
        self.peer_in = peer_in

    @cython.ccall
    def push(self, p: Packet):
        c: cython.int = p.cls
        w: cython.longlong = p.size + p.encap
        qs: list = self.queues
        qs[c].append(p)
        self.qb[c] += w
        self.qbytes += w
        if self.busy == 0:
            self._start()

    @cython.ccall
    def set_pause(self, on: cython.int):
        self.paused = on
        if on == 0 and self.busy == 0 and self.qbytes > 0:
            self._start()

    @cython.cfunc
    def _start(self):
        qs: list = self.queues
        c: cython.int = -1
        i: cython.int
        for i in range(NCLS):
            if i == CLS_LOSSLESS and self.paused != 0:
                continue
            if len(qs[i]) > 0:
                c = i
                break
        if c < 0:
            return
        p: Packet = qs[c].popleft()
        w: cython.longlong = p.size + p.encap
        self.qb[c] -= w
        self.qbytes -= w
        if self.acc == ACC_SWITCH:
            cython.cast(SwitchNode, self.owner).on_dequeue(p, c, self)
        t: cython.longlong = ser_ps(w, self.bw)
        now: cython.longlong = self.eng.now
        self.busy = 1
        self.tx_pkts += 1
        self.tx_bytes += w
        self.tx_bytes_cls[c] += w
        self.tx_pkts_cls[c] += 1
        if self.track_busy != 0 and c == CLS_LOSSLESS:
            iv: list = self.ll_busy
            if len(iv) > 0 and iv[len(iv) - 1][1] >= now:
                last: list = iv[len(iv) - 1]
                last[1] = now + t
            else:
                iv.append([now, now + t])
        p.ingress = self.peer_in
        self.eng.schedule(now + t, EV_TXDONE, self, None)
        self.eng.schedule(now + t + self.lat, self.peer_op, self.peer, p)

    @cython.ccall
    def txdone(self):
        self.busy = 0
        if self.qbytes > 0:
            self._start()


@cython.cclass
class SwitchNode:
    """Shared-buffer output-queued switch with dynamic-threshold admission
    for loss-tolerant classes, ECN marking, per-ingress PFC for the
    lossless class, and one of three overflow policies for eligible
    cross-datacenter traffic: plain drop, spillway deflection, or
    in-fabric neighbor deflection."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    nid = cython.declare(cython.int, visibility="readonly")
    dc = cython.declare(cython.int, visibility="readonly")
    role = cython.declare(cython.int, visibility="readonly")
    rng = cython.declare(Rng, visibility="readonly")
    ports = cython.declare(list, visibility="readonly")
    buf_cap = cython.declare(cython.longlong, visibility="public")
    occ = cython.declare(cython.longlong, visibility="readonly")
    peak_occ = cython.declare(cython.longlong, visibility="readonly")
    alpha_dt = cython.declare(cython.double, visibility="public")
    ecn_kmin = cython.declare(cython.longlong, visibility="public")
    ecn_kmax = cython.declare(cython.longlong, visibility="public")
    ecn_pmax = cython.declare(cython.double, visibility="public")
    pfc_xoff = cython.declare(cython.longlong, visibility="public")
    pfc_xon = cython.declare(cython.longlong, visibility="public")
    defl_reserve = cython.declare(cython.longlong, visibility="public")
    ll_headroom = cython.declare(cython.longlong, visibility="public")
    policy = cython.declare(cython.int, visibility="public")
    sel_policy = cython.declare(cython.int, visibility="public")
    sticky = cython.declare(cython.int, visibility="public")
    neighbor_budget = cython.declare(cython.int, visibility="public")
    fast_cnp = cython.declare(cython.int, visibility="public")
    cnp_interval = cython.declare(cython.longlong, visibility="public")
    encap_bytes = cython.declare(cython.int, visibility="public")
    ctrl_bytes = cython.declare(cython.int, visibility="public")
    route = cython.declare(list, visibility="readonly")       # dst node -> tuple(port idx)
    in_ll = cython.declare(list, visibility="readonly")       # lossless bytes per ingress
    in_rev = cython.declare(list, visibility="readonly")      # ingress -> peer's return Port
    pfc_sent = cython.declare(list, visibility="readonly")
    fabric_alt = cython.declare(tuple, visibility="public")   # candidate neighbor-deflect egresses
    dc_spills = cython.declare(tuple, visibility="public")    # spillway node ids of this dc
    member_spills = cython.declare(tuple, visibility="public")  # attached spillway ids (exits)
    spill_port = cython.declare(dict, visibility="readonly")  # spillway id -> port idx
    anycast_id = cython.declare(cython.int, visibility="public")
    last_cnp = cython.declare(dict, visibility="readonly")    # flow id -> last fast cnp ps

    def __init__(self, eng: Engine, nid: cython.int, dc: cython.int, role: cython.int,
                 rng: Rng, n_route: cython.int):
        self.eng = eng
        self.stats = eng.stats
        self.nid = nid
        self.dc = dc
        self.role = role
        self.rng = rng
        self.ports = []
        self.buf_cap = 0
        self.occ = 0
        self.peak_occ = 0
        self.alpha_dt = 1.0
        self.ecn_kmin = 0
        self.ecn_kmax = 1
        self.ecn_pmax = 0.0
        self.pfc_xoff = 0
        self.pfc_xon = 0
        self.defl_reserve = 0
        self.ll_headroom = 0
        self.policy = POLICY_DROP
        self.sel_policy = SEL_DC_ANYCAST
        self.sticky = 0
        self.neighbor_budget = 16
        self.fast_cnp = 0
        self.cnp_interval = 0
        self.encap_bytes = 0
        self.ctrl_bytes = 64
        self.route = [None] * n_route
        self.in_ll = []
        self.in_rev = []
        self.pfc_sent = []
        self.fabric_alt = ()
        self.dc_spills = ()
        self.member_spills = ()
        self.spill_port = {}
        self.anycast_id = -1
        self.last_cnp = {}

    @cython.ccall
    def add_port(self, bw: cython.longlong, lat: cython.longlong) -> Port:
        port: Port = Port(self.eng, self, ACC_SWITCH, len(self.ports), bw, lat)
        self.ports.append(port)
        self.in_ll.append(0)
        self.in_rev.append(None)
        self.pfc_sent.append(0)
        return port

    @cython.ccall
    def arrival(self, p: Packet):
        if p.dst == self.anycast_id and self.role == ROLE_EXIT:
            # anycast resolves at the exit: uniform among its own members
            members: tuple = self.member_spills
            p.dst = members[self.rng.below(len(members))]
        cand: tuple = self.route[p.dst]
        pi: cython.int
        if len(cand) > 1:
            pi = cand[self.rng.below(len(cand))]
        else:
            pi = cand[0]
        self.enqueue(p, pi)

    @cython.ccall
    def enqueue(self, p: Packet, pi: cython.int):
        c: cython.int = p.cls
        port: Port = self.ports[pi]
        w: cython.longlong = p.size + p.encap
        if c > CLS_ACK:
            if c == CLS_LOSSLESS:
                if self.occ + w > self.buf_cap:
                    self.stats.lossless_violations += 1
            elif c == CLS_DEFLECTED:
                # deflected rides a provisioned class: a small per-queue
                # reserve carries it through transient squeezes, and past
                # the reserve it competes for shared space like any other
                # class so it cannot pin the buffer
                if self.occ + w > self.buf_cap:
                    self._overflow(p, c, pi)
                    return
                over: cython.longlong = port.qb[c] + w - self.defl_reserve
                if over > 0:
                    dfree: cython.longlong = self.buf_cap - self.ll_headroom - self.occ
                    if dfree < 0:
                        dfree = 0
                    if (cython.cast(cython.double, over)
                            > self.alpha_dt * cython.cast(cython.double, dfree)):
                        self._overflow(p, c, pi)
                        return
            else:
                # the headroom is set aside so lossless bursts always fit
                # under the cap; dynamic-threshold classes share the rest
                free: cython.longlong = self.buf_cap - self.ll_headroom - self.occ
                if free < 0:
                    free = 0
                limit: cython.double = self.alpha_dt * cython.cast(cython.double, free)
                if cython.cast(cython.double, port.qb[c] + w) > limit:
                    self._overflow(p, c, pi)
                    return
            self._mark_and_admit(p, c, port, w)
        else:
            # control is tiny and always admitted
            self.occ += w
            port.push(p)

    @cython.cfunc
    def _mark_and_admit(self, p: Packet, c: cython.int, port: Port, w: cython.longlong):
        if p.ecn != ECN_NOT and (c == CLS_LOSSLESS or c == CLS_LOSSY):
            q0: cython.longlong = port.qb[c]
            if q0 > self.ecn_kmin:
                prob: cython.double
                if q0 >= self.ecn_kmax:
                    prob = self.ecn_pmax
                else:
                    prob = (cython.cast(cython.double, q0 - self.ecn_kmin)
                            / cython.cast(cython.double, self.ecn_kmax - self.ecn_kmin)
                            * self.ecn_pmax)
                if self.rng.uniform() < prob:
                    p.ecn = ECN_CE
        if (self.fast_cnp != 0 and c == CLS_LOSSY and p.ecn == ECN_CE
                and port.is_dci != 0):
            flow: FlowTx = cython.cast(FlowTx, p.flow)
            if flow.src_dc == self.dc:
                self._maybe_fast_cnp(p, flow)
        if c == CLS_LOSSLESS:
            ing: cython.int = p.ingress
            if ing >= 0:
                ll: list = self.in_ll
                ll[ing] += w
                if self.pfc_sent[ing] == 0 and ll[ing] >= self.pfc_xoff:
                    self.pfc_sent[ing] = 1
                    self.stats.pfc_pauses += 1
                    rev: Port = cython.cast(Port, self.in_rev[ing])
                    self.eng.schedule(self.eng.now + rev.lat, EV_PAUSE, rev, None)
        self.occ += w
        if self.occ > self.peak_occ:
            self.peak_occ = self.occ
        port.push(p)

    @cython.cfunc
    def _maybe_fast_cnp(self, p: Packet, flow: "FlowTx"):
        now: cython.longlong = self.eng.now
        d: dict = self.last_cnp
        fid = flow.fid
        prev = d.get(fid)
        if prev is not None and now - cython.cast(cython.longlong, prev) < self.cnp_interval:
            return
        d[fid] = now
        p.ecn = ECN_ECT
        self.stats.fast_cnps += 1
        self.stats.ctrl_created += 1
        cnp: Packet = Packet(flow, CLS_CNP, self.ctrl_bytes, -1, flow.src_id, ECN_NOT)
        self.arrival(cnp)

    @cython.cfunc
    def _overflow(self, p: Packet, c: cython.int, pi: cython.int):
        now: cython.longlong = self.eng.now
        if c == CLS_DEFLECTED:
            self.stats.drop(self.nid, DROP_SPILLPATH, c, now)
            self._count_flow_drop(p)
            return
        if self.policy == POLICY_SPILLWAY and self._eligible(p) != 0:
            self.deflect_to_spillway(p)
            return
        if self.policy == POLICY_NEIGHBOR and self._eligible(p) != 0:
            if p.deflections >= self.neighbor_budget:
                self.stats.drop(self.nid, DROP_TTL, c, now)
                self._count_flow_drop(p)
                return
            if self._neighbor_deflect(p, c, pi) != 0:
                return
        self.stats.drop(self.nid, DROP_BUFFER, c, now)
        self._count_flow_drop(p)

    @cython.cfunc
    def _eligible(self, p: Packet) -> cython.int:
        # deflection applies to cross-dc flow traffic inside its destination dc
        if p.cls != CLS_LOSSY and p.cls != CLS_DRAINED:
            return 0
        flow = p.flow
        if flow is None:
            return 0
        f: FlowTx
        if type(flow) is not FlowTx:
            return 0
        f = cython.cast(FlowTx, flow)
        if f.is_cross == 0 or f.dst_dc != self.dc:
            return 0
        return 1

    @cython.ccall
    def deflect_to_spillway(self, p: Packet):
        p.deflections += 1
        self.stats.deflections_total += 1
        f: FlowTx = cython.cast(FlowTx, p.flow)
        f.deflected_pkts += 1
        p.cls = CLS_DEFLECTED
        p.encap = self.encap_bytes
        sel: cython.int = self.sel_policy
        target: cython.int
        if self.sticky != 0 and p.deflections >= 2 and p.spill_id >= 0:
            target = p.spill_id
        elif sel == SEL_DC_ANYCAST:
            spills: tuple = self.dc_spills
            target = spills[self.rng.below(len(spills))]
        elif sel == SEL_SW_ANYCAST:
            target = self.anycast_id
        else:
            # hash the flow id the way a switch hashes headers; identity
            # modulo over small consecutive ids would never collide
            spills2: tuple = self.dc_spills
            target = spills2[_mix64(cython.cast(cython.ulonglong, f.fid)) % cython.cast(cython.ulonglong, len(spills2))]
        p.dst = target
        self.arrival(p)

    @cython.cfunc
    def _neighbor_deflect(self, p: Packet, c: cython.int, primary: cython.int) -> cython.int:
        # random alternate fabric egress, never the full one or the way back
        alts: tuple = self.fabric_alt
        n: cython.int = len(alts)
        if n == 0:
            return 0
        start: cython.int = cython.cast(cython.int, self.rng.below(n))
        w: cython.longlong = p.size + p.encap
        ing: cython.int = p.ingress
        i: cython.int
        for i in range(n):
            pi: cython.int = alts[(start + i) % n]
            if pi == primary or pi == ing:
                continue
            port: Port = self.ports[pi]
            free: cython.longlong = self.buf_cap - self.occ
            if free < 0:
                free = 0
            if cython.cast(cython.double, port.qb[c] + w) <= self.alpha_dt * cython.cast(cython.double, free):
                p.deflections += 1
                self.stats.deflections_total += 1
                self._mark_and_admit(p, c, port, w)
                return 1
        return 0

    @cython.cfunc
    def _count_flow_drop(self, p: Packet):
        flow = p.flow
        if flow is not None and type(flow) is FlowTx:
            f: FlowTx = cython.cast(FlowTx, flow)
            f.dropped_pkts += 1
            if p.is_retx == 0:
                f.dropped_first += 1

    @cython.ccall
    def on_dequeue(self, p: Packet, c: cython.int, port: Port):
        w: cython.longlong = p.size + p.encap
        self.occ -= w
        if c == CLS_LOSSLESS:
            ing: cython.int = p.ingress
            if ing >= 0:
                ll: list = self.in_ll
                ll[ing] -= w
                if self.pfc_sent[ing] != 0 and ll[ing] <= self.pfc_xon:
                    self.pfc_sent[ing] = 0
                    rev: Port = cython.cast(Port, self.in_rev[ing])
                    self.eng.schedule(self.eng.now + rev.lat, EV_UNPAUSE, rev, None)
        if port.is_dci != 0 and p.is_retx != 0:
            flow = p.flow
            if flow is not None and type(flow) is FlowTx:
                cython.cast(FlowTx, flow).retx_dci_bytes += p.size


@cython.cclass
class HostNode:
    """GPU endpoint: one NIC uplink, demuxes arrivals to flow endpoints."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    nid = cython.declare(cython.int, visibility="readonly")
    dc = cython.declare(cython.int, visibility="readonly")
    nic = cython.declare(Port, visibility="readonly")
    udp_cap = cython.declare(cython.longlong, visibility="public")

    def __init__(self, eng: Engine, nid: cython.int, dc: cython.int,
                 bw: cython.longlong, lat: cython.longlong):
        self.eng = eng
        self.stats = eng.stats
        self.nid = nid
        self.dc = dc
        self.nic = Port(eng, self, ACC_NONE, 0, bw, lat)
        self.udp_cap = 0

    @cython.ccall
    def arrival(self, p: Packet):
        c: cython.int = p.cls
        if c == CLS_ACK:
            self.stats.ctrl_delivered += 1
            cython.cast(FlowTx, p.flow).on_ack(p.aux)
        elif c == CLS_CNP:
            self.stats.ctrl_delivered += 1
            cython.cast(FlowTx, p.flow).on_cnp()
        elif c == CLS_UDP:
            self.stats.delivered += 1
            self.stats.udp_delivered += 1
        else:
            self.stats.delivered += 1
            cython.cast(FlowTx, p.flow).rx.on_data(p)

    @cython.ccall
    def send_ctrl(self, p: Packet):
        self.stats.ctrl_created += 1
        self.nic.push(p)


@cython.cclass
class CollectiveGroup:
    """Round barrier for one node's all-to-all: senders may run one chunk
    ahead of the slowest receiver; rounds are separated by a fixed gap."""

    eng = cython.declare(Engine, visibility="readonly")
    flows = cython.declare(list, visibility="readonly")
    chunk_pkts = cython.declare(cython.int, visibility="readonly")
    gap_ps = cython.declare(cython.longlong, visibility="readonly")
    round_no = cython.declare(cython.int, visibility="readonly")
    done_cnt = cython.declare(cython.int, visibility="readonly")
    nflows = cython.declare(cython.int, visibility="readonly")
    rounds_total = cython.declare(cython.int, visibility="readonly")
    finished = cython.declare(cython.int, visibility="readonly")
    start_ps = cython.declare(cython.longlong, visibility="public")
    end_ps = cython.declare(cython.longlong, visibility="public")

    def __init__(self, eng: Engine, chunk_pkts: cython.int, gap_ps: cython.longlong):
        self.eng = eng
        self.flows = []
        self.chunk_pkts = chunk_pkts
        self.gap_ps = gap_ps
        self.round_no = 0
        self.done_cnt = 0
        self.nflows = 0
        self.rounds_total = 0
        self.finished = 0
        self.start_ps = 0
        self.end_ps = 0

    @cython.ccall
    def attach(self, f):
        flow: FlowTx = cython.cast(FlowTx, f)
        self.flows.append(flow)
        self.nflows += 1
        flow.group = self
        r: cython.int = (flow.npkts + self.chunk_pkts - 1) // self.chunk_pkts
        if r > self.rounds_total:
            self.rounds_total = r
        flow.gate_pkts = min(flow.npkts, self.chunk_pkts)

    @cython.ccall
    def target_for(self, f) -> cython.int:
        flow: FlowTx = cython.cast(FlowTx, f)
        t: cython.int = (self.round_no + 1) * self.chunk_pkts
        if t > flow.npkts:
            t = flow.npkts
        return t

    @cython.ccall
    def note_done(self):
        self.done_cnt += 1
        if self.done_cnt < self.nflows:
            return
        self.done_cnt = 0
        if self.round_no + 1 >= self.rounds_total:
            self.finished = 1
            self.end_ps = self.eng.now
            return
        self.eng.schedule(self.eng.now + self.gap_ps, EV_ROUND, self, None)

    @cython.ccall
    def advance_round(self):
        self.round_no += 1
        i: cython.int
        flows: list = self.flows
        for i in range(len(flows)):
            flow: FlowTx = flows[i]
            gate: cython.int = (self.round_no + 1) * self.chunk_pkts
            if gate > flow.npkts:
                gate = flow.npkts
            flow.gate_pkts = gate
            flow.rx.refresh_mark()
            if flow.done == 0:
                flow.wake()


@cython.cclass
class FlowTx:
    """Sender endpoint: paced emission, DCQCN rate control, retransmission
    timer anchored at the oldest unacked packet's send time."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    host = cython.declare(HostNode, visibility="readonly")
    rx = cython.declare(object, visibility="public")          # FlowRx
    group = cython.declare(object, visibility="public")       # CollectiveGroup or None
    fid = cython.declare(cython.int, visibility="readonly")
    src_id = cython.declare(cython.int, visibility="readonly")
    dst_id = cython.declare(cython.int, visibility="readonly")
    src_dc = cython.declare(cython.int, visibility="readonly")
    dst_dc = cython.declare(cython.int, visibility="readonly")
    is_cross = cython.declare(cython.int, visibility="readonly")
    cls = cython.declare(cython.int, visibility="readonly")
    total_bytes = cython.declare(cython.longlong, visibility="readonly")
    npkts = cython.declare(cython.int, visibility="readonly")
    mtu = cython.declare(cython.int, visibility="readonly")
    last_size = cython.declare(cython.int, visibility="readonly")
    ctrl_bytes = cython.declare(cython.int, visibility="public")
    monitored = cython.declare(cython.int, visibility="public")

    line_rate = cython.declare(cython.double, visibility="readonly")
    rate = cython.declare(cython.double, visibility="readonly")
    target_rate = cython.declare(cython.double, visibility="readonly")
    min_rate = cython.declare(cython.double, visibility="public")
    dcqcn = cython.declare(cython.int, visibility="public")
    alpha = cython.declare(cython.double, visibility="readonly")
    dc_g = cython.declare(cython.double, visibility="public")
    alpha_timer_ps = cython.declare(cython.longlong, visibility="public")
    rate_timer_ps = cython.declare(cython.longlong, visibility="public")
    byte_thresh = cython.declare(cython.longlong, visibility="public")
    rai = cython.declare(cython.double, visibility="public")
    rhai = cython.declare(cython.double, visibility="public")
    fast_stages = cython.declare(cython.int, visibility="public")
    cnp_interval = cython.declare(cython.longlong, visibility="public")
    t_rounds = cython.declare(cython.int, visibility="readonly")
    b_rounds = cython.declare(cython.int, visibility="readonly")
    byte_accum = cython.declare(cython.longlong, visibility="readonly")
    cnp_seen = cython.declare(cython.int, visibility="readonly")
    last_cut_ps = cython.declare(cython.longlong, visibility="readonly")
    alpha_live = cython.declare(cython.int, visibility="readonly")
    rate_live = cython.declare(cython.int, visibility="readonly")

    window_bytes = cython.declare(cython.longlong, visibility="public")
    outstanding = cython.declare(cython.longlong, visibility="readonly")
    gate_pkts = cython.declare(cython.int, visibility="public")
    fresh_next = cython.declare(cython.int, visibility="readonly")
    acked = cython.declare(bytearray, visibility="readonly")
    in_retxq = cython.declare(bytearray, visibility="readonly")
    retxq = cython.declare(object, visibility="readonly")     # deque of idx
    oldest = cython.declare(cython.int, visibility="readonly")
    sent_ps = cython.declare(list, visibility="readonly")
    acked_cnt = cython.declare(cython.int, visibility="readonly")
    rto_ps = cython.declare(cython.longlong, visibility="public")
    rto_live = cython.declare(cython.int, visibility="readonly")
    # timer restarts whenever an ack covers new data; fires rto_ps after
    # the last forward progress, not per-packet deadlines
    rto_anchor_ps = cython.declare(cython.longlong, visibility="readonly")
    chain_live = cython.declare(cython.int, visibility="readonly")
    done = cython.declare(cython.int, visibility="readonly")
    start_ps = cython.declare(cython.longlong, visibility="public")
    fct_ps = cython.declare(cython.longlong, visibility="readonly")

    created_pkts = cython.declare(cython.longlong, visibility="readonly")
    sent_bytes = cython.declare(cython.longlong, visibility="readonly")
    retx_pkts = cython.declare(cython.longlong, visibility="readonly")
    retx_bytes = cython.declare(cython.longlong, visibility="readonly")
    retx_dci_bytes = cython.declare(cython.longlong, visibility="public")
    deflected_pkts = cython.declare(cython.longlong, visibility="public")
    dropped_pkts = cython.declare(cython.longlong, visibility="public")
    dropped_first = cython.declare(cython.longlong, visibility="public")  # first-transmission drops only
    cnp_rx = cython.declare(cython.longlong, visibility="readonly")
    bin_ps = cython.declare(cython.longlong, visibility="public")
    tx_bins = cython.declare(list, visibility="readonly")
    cnp_bins = cython.declare(list, visibility="readonly")
    rate_min_seen = cython.declare(cython.double, visibility="readonly")
    # smallest (send + rto) - ack_time seen; negative means a deadline passed
    min_margin_ps = cython.declare(cython.longlong, visibility="readonly")
    # (fire_ps, oldest_idx, oldest_sent_ps) per timeout that retransmitted
    rto_log = cython.declare(list, visibility="readonly")

    def __init__(self, eng: Engine, host: HostNode, fid: cython.int,
                 dst_id: cython.int, dst_dc: cython.int, cls: cython.int,
                 total_bytes: cython.longlong, mtu: cython.int,
                 line_rate: cython.double):
        self.eng = eng
        self.stats = eng.stats
        self.host = host
        self.rx = None
        self.group = None
        self.fid = fid
        self.src_id = host.nid
        self.dst_id = dst_id
        self.src_dc = host.dc
        self.dst_dc = dst_dc
        self.is_cross = 1 if host.dc != dst_dc else 0
        self.cls = cls
        self.total_bytes = total_bytes
        self.mtu = mtu
        n: cython.int = cython.cast(cython.int, (total_bytes + mtu - 1) // mtu)
        self.npkts = n
        rem: cython.longlong = total_bytes - cython.cast(cython.longlong, n - 1) * mtu
        self.last_size = cython.cast(cython.int, rem)
        self.ctrl_bytes = 64
        self.monitored = 0
        self.line_rate = line_rate
        self.rate = line_rate
        self.target_rate = line_rate
        self.min_rate = 1e9
        self.dcqcn = 0
        self.alpha = 1.0
        self.dc_g = 1.0 / 256.0
        self.alpha_timer_ps = 55 * PS_PER_US
        self.rate_timer_ps = 300 * PS_PER_US
        self.byte_thresh = 10 * 1000 * 1000
        self.rai = 5e9
        self.rhai = 50e9
        self.fast_stages = 5
        self.cnp_interval = 50 * PS_PER_US
        self.t_rounds = 0
        self.b_rounds = 0
        self.byte_accum = 0
        self.cnp_seen = 0
        self.last_cut_ps = -(1 << 60)
        self.alpha_live = 0
        self.rate_live = 0
        self.window_bytes = 0
        self.outstanding = 0
        self.gate_pkts = n
        self.fresh_next = 0
        self.acked = bytearray(n)
        self.in_retxq = bytearray(n)
        self.retxq = deque()
        self.oldest = 0
        self.sent_ps = [0] * n
        self.acked_cnt = 0
        self.rto_ps = 0
        self.rto_live = 0
        self.rto_anchor_ps = 0
        self.chain_live = 0
        self.done = 0
        self.start_ps = 0
        self.fct_ps = -1
        self.created_pkts = 0
        self.sent_bytes = 0
        self.retx_pkts = 0
        self.retx_bytes = 0
        self.retx_dci_bytes = 0
        self.deflected_pkts = 0
        self.dropped_pkts = 0
        self.dropped_first = 0
        self.cnp_rx = 0
        self.bin_ps = PS_PER_MS
        self.tx_bins = []
        self.cnp_bins = []
        self.rate_min_seen = line_rate
        self.min_margin_ps = I63_MAX
        self.rto_log = []

    @cython.ccall
    def size_of(self, idx: cython.int) -> cython.int:
        return self.mtu if idx < self.npkts - 1 else self.last_size

    @cython.ccall
    def start(self, t: cython.longlong):
        self.start_ps = t
        self.stats.live_sources += 1
        self.chain_live = 1
        self.eng.schedule(t, EV_EMIT, self, None)
        if self.dcqcn != 0:
            self.alpha_live = 1
            self.rate_live = 1
            self.eng.schedule(t + self.alpha_timer_ps, EV_ALPHA_T, self, None)
            self.eng.schedule(t + self.rate_timer_ps, EV_RATE_T, self, None)

    @cython.ccall
    def wake(self):
        if self.chain_live == 0 and self.done == 0:
            self.chain_live = 1
            self.eng.schedule(self.eng.now, EV_EMIT, self, None)

    @cython.cfunc
    def _bin_add(self, bins: list, amount: cython.longlong):
        i: cython.longlong = self.eng.now // self.bin_ps
        while len(bins) <= i:
            bins.append(0)
        bins[i] += amount

    @cython.ccall
    def emit(self):
        if self.done != 0:
            self.chain_live = 0
            return
        idx: cython.int = -1
        retx: cython.int = 0
        rq = self.retxq
        while len(rq) > 0:
            j: cython.int = rq.popleft()
            self.in_retxq[j] = 0
            if self.acked[j] == 0:
                idx = j
                retx = 1
                break
        if idx < 0:
            if self.fresh_next < self.gate_pkts:
                sz: cython.int = self.size_of(self.fresh_next)
                if self.window_bytes > 0 and self.outstanding + sz > self.window_bytes:
                    self.chain_live = 0
                    return
                idx = self.fresh_next
                self.fresh_next += 1
                if self.window_bytes > 0:
                    self.outstanding += sz
            else:
                self.chain_live = 0
                return
        size: cython.int = self.size_of(idx)
        now: cython.longlong = self.eng.now
        self.sent_ps[idx] = now
        self.created_pkts += 1
        self.sent_bytes += size
        self.stats.created += 1
        p: Packet = Packet(self, self.cls, size, idx, self.dst_id, ECN_ECT)
        p.serial = self.stats.created
        if retx != 0:
            p.is_retx = 1
            self.retx_pkts += 1
            self.retx_bytes += size
            self.stats.retx_pkts += 1
        if self.monitored != 0:
            self._bin_add(self.tx_bins, size)
        self.host.nic.push(p)
        if self.dcqcn != 0:
            self.byte_accum += size
            if self.byte_accum >= self.byte_thresh:
                self.byte_accum -= self.byte_thresh
                self.b_rounds += 1
                self._increase()
        if self.rto_live == 0 and self.acked_cnt < self.npkts:
            self.rto_live = 1
            self.rto_anchor_ps = now
            self.eng.schedule(now + self.rto_ps, EV_RTO, self, None)
        gap: cython.longlong = cython.cast(cython.longlong,
                                           cython.cast(cython.double, size) * 8.0 * 1e12 / self.rate)
        self.eng.schedule(now + gap, EV_EMIT, self, None)

    @cython.ccall
    def on_ack(self, aux):
        idxs: list = cython.cast(list, aux)
        now: cython.longlong = self.eng.now
        i: cython.int
        progressed: cython.int = 0
        for i in range(len(idxs)):
            j: cython.int = idxs[i]
            if self.acked[j] == 0:
                self.acked[j] = 1
                self.acked_cnt += 1
                progressed = 1
                if self.window_bytes > 0:
                    self.outstanding -= self.size_of(j)
                if self.rto_ps > 0:
                    margin: cython.longlong = cython.cast(cython.longlong, self.sent_ps[j]) + self.rto_ps - now
                    if margin < self.min_margin_ps:
                        self.min_margin_ps = margin
        if progressed != 0:
            self.rto_anchor_ps = now
        if self.acked_cnt >= self.npkts and self.done == 0:
            self.done = 1
            self.fct_ps = self.eng.now - self.start_ps
            self.stats.live_sources -= 1
            return
        if self.chain_live == 0:
            self.wake()

    @cython.ccall
    def on_cnp(self):
        self.cnp_rx += 1
        if self.monitored != 0:
            self._bin_add(self.cnp_bins, 1)
        if self.dcqcn == 0:
            return
        now: cython.longlong = self.eng.now
        if now - self.last_cut_ps < self.cnp_interval:
            return
        self.last_cut_ps = now
        self.cnp_seen = 1
        self.target_rate = self.rate
        self.rate = self.rate * (1.0 - self.alpha / 2.0)
        if self.rate < self.min_rate:
            self.rate = self.min_rate
        if self.rate < self.rate_min_seen:
            self.rate_min_seen = self.rate
        self.alpha = (1.0 - self.dc_g) * self.alpha + self.dc_g
        self.t_rounds = 0
        self.b_rounds = 0
        self.byte_accum = 0

    @cython.ccall
    def alpha_timer(self):
        if self.done != 0 or self.dcqcn == 0:
            self.alpha_live = 0
            return
        if self.cnp_seen == 0:
            self.alpha = (1.0 - self.dc_g) * self.alpha
        self.cnp_seen = 0
        self.eng.schedule(self.eng.now + self.alpha_timer_ps, EV_ALPHA_T, self, None)

    @cython.ccall
    def rate_timer(self):
        if self.done != 0 or self.dcqcn == 0:
            self.rate_live = 0
            return
        self.t_rounds += 1
        self._increase()
        self.eng.schedule(self.eng.now + self.rate_timer_ps, EV_RATE_T, self, None)

    @cython.cfunc
    def _increase(self):
        hi: cython.int = self.t_rounds if self.t_rounds > self.b_rounds else self.b_rounds
        lo: cython.int = self.b_rounds if self.t_rounds > self.b_rounds else self.t_rounds
        if lo > self.fast_stages:
            self.target_rate = self.target_rate + self.rhai
        elif hi > self.fast_stages:
            self.target_rate = self.target_rate + self.rai
        if self.target_rate > self.line_rate:
            self.target_rate = self.line_rate
        self.rate = (self.rate + self.target_rate) / 2.0
        if self.rate > self.line_rate:
            self.rate = self.line_rate
        if self.rate < self.min_rate:
            self.rate = self.min_rate

    @cython.ccall
    def rto_fire(self):
        self.rto_live = 0
        if self.done != 0:
            return
        while self.oldest < self.fresh_next and self.acked[self.oldest] != 0:
            self.oldest += 1
        if self.oldest >= self.fresh_next:
            return
        deadline: cython.longlong = self.rto_anchor_ps + self.rto_ps
        now: cython.longlong = self.eng.now
        if now < deadline:
            self.rto_live = 1
            self.eng.schedule(deadline, EV_RTO, self, None)
            return
        self.stats.rto_fires += 1
        self.rto_log.append((now, self.oldest, self.sent_ps[self.oldest]))
        i: cython.int
        added: cython.int = 0
        for i in range(self.oldest, self.fresh_next):
            if self.acked[i] == 0 and self.in_retxq[i] == 0:
                self.in_retxq[i] = 1
                self.retxq.append(i)
                added += 1
        if added > 0:
            self.wake()
        self.rto_anchor_ps = now
        self.rto_live = 1
        self.eng.schedule(now + self.rto_ps, EV_RTO, self, None)


@cython.cclass
class FlowRx:
    """Receiver endpoint: duplicate filter, coalesced ACKs carrying the
    newly seen packet indices, CNP generation on CE marks."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    flow = cython.declare(FlowTx, visibility="readonly")
    host = cython.declare(HostNode, visibility="readonly")
    seen = cython.declare(bytearray, visibility="readonly")
    got = cython.declare(cython.int, visibility="readonly")
    newly = cython.declare(list, visibility="readonly")
    ack_every = cython.declare(cython.int, visibility="public")
    ack_wait_ps = cython.declare(cython.longlong, visibility="public")
    ack_live = cython.declare(cython.int, visibility="readonly")
    ack_deadline = cython.declare(cython.longlong, visibility="readonly")
    cnp_interval = cython.declare(cython.longlong, visibility="public")
    last_cnp_ps = cython.declare(cython.longlong, visibility="readonly")
    next_mark = cython.declare(cython.int, visibility="readonly")
    delivered_bytes = cython.declare(cython.longlong, visibility="readonly")
    rx_bins = cython.declare(list, visibility="readonly")
    drained_got = cython.declare(cython.longlong, visibility="readonly")
    first_rx_ps = cython.declare(cython.longlong, visibility="readonly")
    last_rx_ps = cython.declare(cython.longlong, visibility="readonly")
    # first-delivery time per index, monitored flows only
    deliver_ps = cython.declare(list, visibility="readonly")

    def __init__(self, flow: FlowTx, host: HostNode):
        self.eng = flow.eng
        self.stats = flow.stats
        self.flow = flow
        self.host = host
        self.seen = bytearray(flow.npkts)
        self.got = 0
        self.newly = []
        self.ack_every = 16
        self.ack_wait_ps = 50 * PS_PER_US
        self.ack_live = 0
        self.ack_deadline = 0
        self.cnp_interval = 50 * PS_PER_US
        self.last_cnp_ps = -(1 << 60)
        self.next_mark = -1
        self.delivered_bytes = 0
        self.rx_bins = []
        self.drained_got = 0
        self.first_rx_ps = -1
        self.last_rx_ps = -1
        self.deliver_ps = []
        flow.rx = self

    @cython.ccall
    def refresh_mark(self):
        g = self.flow.group
        if g is None:
            self.next_mark = -1
            return
        grp: CollectiveGroup = cython.cast(CollectiveGroup, g)
        self.next_mark = grp.target_for(self.flow)
        # a round barrier can already be satisfied by packets in hand
        if self.got >= self.next_mark and self.next_mark > 0:
            self.next_mark = -2
            grp.note_done()

    @cython.ccall
    def on_data(self, p: Packet):
        f: FlowTx = self.flow
        now: cython.longlong = self.eng.now
        if self.first_rx_ps < 0:
            self.first_rx_ps = now
        self.last_rx_ps = now
        if p.ecn == ECN_CE and f.dcqcn != 0:
            # window-limited flows are not rate-controlled; CNPs would be noise
            if now - self.last_cnp_ps >= self.cnp_interval:
                self.last_cnp_ps = now
                self.stats.rx_cnps += 1
                cnp: Packet = Packet(f, CLS_CNP, f.ctrl_bytes, -1, f.src_id, ECN_NOT)
                self.host.send_ctrl(cnp)
        if p.deflections > 0 and p.cls != CLS_UDP:
            self.stats.note_deflections(p.deflections)
        if p.cls == CLS_DRAINED:
            self.drained_got += 1
        idx: cython.int = p.idx
        if self.seen[idx] != 0:
            self.stats.dup_delivered += 1
            return
        self.seen[idx] = 1
        self.got += 1
        self.delivered_bytes += p.size
        if f.monitored != 0:
            if len(self.deliver_ps) == 0:
                self.deliver_ps = [-1] * f.npkts
            self.deliver_ps[idx] = now
            i: cython.longlong = now // f.bin_ps
            bins: list = self.rx_bins
            while len(bins) <= i:
                bins.append(0)
            bins[i] += p.size
        self.newly.append(idx)
        if self.got >= f.npkts:
            self._flush()
        elif len(self.newly) >= self.ack_every:
            self._flush()
        elif self.ack_live == 0:
            self.ack_live = 1
            self.ack_deadline = now + self.ack_wait_ps
            self.eng.schedule(self.ack_deadline, EV_ACK_T, self, None)
        if self.next_mark >= 0 and self.got >= self.next_mark:
            self.next_mark = -2
            cython.cast(CollectiveGroup, f.group).note_done()

    @cython.cfunc
    def _flush(self):
        if len(self.newly) == 0:
            return
        f: FlowTx = self.flow
        ack: Packet = Packet(f, CLS_ACK, f.ctrl_bytes, -1, f.src_id, ECN_NOT)
        ack.aux = self.newly
        self.newly = []
        self.host.send_ctrl(ack)

    @cython.ccall
    def ack_timer(self):
        self.ack_live = 0
        if len(self.newly) > 0:
            self._flush()


@cython.cclass
class UdpTx:
    """Uncontrolled constant-rate datagram source; duck-types the flow
    fields the switch path reads (fid, is_cross)."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    host = cython.declare(HostNode, visibility="readonly")
    fid = cython.declare(cython.int, visibility="readonly")
    is_cross = cython.declare(cython.int, visibility="readonly")
    dst_id = cython.declare(cython.int, visibility="readonly")
    size = cython.declare(cython.int, visibility="readonly")
    gap_ps = cython.declare(cython.longlong, visibility="readonly")
    stop_ps = cython.declare(cython.longlong, visibility="readonly")
    created_pkts = cython.declare(cython.longlong, visibility="readonly")
    live = cython.declare(cython.int, visibility="readonly")

    def __init__(self, eng: Engine, host: HostNode, fid: cython.int,
                 dst_id: cython.int, size: cython.int, rate: cython.double,
                 stop_ps: cython.longlong):
        self.eng = eng
        self.stats = eng.stats
        self.host = host
        self.fid = fid
        self.is_cross = 0
        self.dst_id = dst_id
        self.size = size
        self.gap_ps = cython.cast(cython.longlong,
                                  cython.cast(cython.double, size) * 8.0 * 1e12 / rate)
        self.stop_ps = stop_ps
        self.created_pkts = 0
        self.live = 0

    @cython.ccall
    def start(self, t: cython.longlong):
        self.live = 1
        self.stats.live_sources += 1
        self.eng.schedule(t, EV_UDP_EMIT, self, None)

    @cython.ccall
    def emit(self):
        now: cython.longlong = self.eng.now
        if now >= self.stop_ps:
            self.live = 0
            self.stats.live_sources -= 1
            return
        nic: Port = self.host.nic
        self.stats.created += 1
        self.stats.udp_created += 1
        self.created_pkts += 1
        cap: cython.longlong = self.host.udp_cap
        if cap > 0 and nic.qb[CLS_UDP] + self.size > cap:
            self.stats.drop(self.host.nid, DROP_HOST, CLS_UDP, now)
        else:
            p: Packet = Packet(self, CLS_UDP, self.size, -1, self.dst_id, ECN_NOT)
            p.serial = self.stats.created
            nic.push(p)
        self.eng.schedule(now + self.gap_ps, EV_UDP_EMIT, self, None)


@cython.cclass
class SpillQueue:
    """Per original-destination FIFO inside a spillway node, with the
    probe-then-burst drain state machine. Timers follow a check-on-fire
    pattern: at most one pending event per timer, the stored deadline is
    re-validated when it fires."""

    eng = cython.declare(Engine, visibility="readonly")
    node = cython.declare(object, visibility="readonly")      # SpillwayNode
    key = cython.declare(cython.int, visibility="readonly")   # destination bucket
    q = cython.declare(object, visibility="readonly")         # deque of Packet
    state = cython.declare(cython.int, visibility="readonly")
    epoch = cython.declare(cython.int, visibility="readonly")
    qbytes = cython.declare(cython.longlong, visibility="readonly")
    quiet_deadline = cython.declare(cython.longlong, visibility="readonly")
    quiet_live = cython.declare(cython.int, visibility="readonly")
    burst_left = cython.declare(cython.int, visibility="readonly")
    nonempty_since = cython.declare(cython.longlong, visibility="readonly")
    dl_live = cython.declare(cython.int, visibility="readonly")
    in_pkts = cython.declare(cython.longlong, visibility="readonly")
    out_pkts = cython.declare(cython.longlong, visibility="readonly")
    returned = cython.declare(cython.longlong, visibility="readonly")
    probes = cython.declare(cython.longlong, visibility="readonly")
    last_empty_ps = cython.declare(cython.longlong, visibility="readonly")

    def __init__(self, node, key: cython.int):
        sn: SpillwayNode = cython.cast(SpillwayNode, node)
        self.eng = sn.eng
        self.node = node
        self.key = key
        self.q = deque()
        self.state = SQ_IDLE
        self.epoch = 0
        self.qbytes = 0
        self.quiet_deadline = 0
        self.quiet_live = 0
        self.burst_left = 0
        self.nonempty_since = -1
        self.dl_live = 0
        self.in_pkts = 0
        self.out_pkts = 0
        self.returned = 0
        self.probes = 0
        self.last_empty_ps = -1

    @cython.ccall
    def accept(self, p: Packet, again: cython.int):
        """Buffer a deflected packet; again=1 means it already visited a
        spillway, so it goes back to the head to keep order."""
        sn: SpillwayNode = cython.cast(SpillwayNode, self.node)
        now: cython.longlong = self.eng.now
        if len(self.q) == 0:
            self.nonempty_since = now
            if self.dl_live == 0:
                self.dl_live = 1
                self.eng.schedule(now + sn.deadline_ps, EV_SDEADLINE, self, None)
        if again != 0:
            self.q.appendleft(p)
            self.returned += 1
        else:
            self.q.append(p)
        self.qbytes += p.size
        self.in_pkts += 1
        if sn.log is not None:
            cython.cast(list, sn.log).append(("in", self.key, p.serial, p.deflections, now))
        # any arrival interrupts probing or draining; the epoch bump
        # invalidates probe/drain events still pending from before
        self.epoch += 1
        self.state = SQ_QUIET
        jitter: cython.longlong = cython.cast(cython.longlong,
                                              sn.rng.below(sn.quiet_jitter_ps + 1))
        self.quiet_deadline = now + sn.quiet_ps + jitter
        if self.quiet_live == 0:
            self.quiet_live = 1
            self.eng.schedule(self.quiet_deadline, EV_QUIET, self, None)

    @cython.ccall
    def quiet_fire(self):
        self.quiet_live = 0
        if self.state != SQ_QUIET or len(self.q) == 0:
            return
        now: cython.longlong = self.eng.now
        if now < self.quiet_deadline:
            self.quiet_live = 1
            self.eng.schedule(self.quiet_deadline, EV_QUIET, self, None)
            return
        self._probe()

    @cython.cfunc
    def _probe(self):
        sn: SpillwayNode = cython.cast(SpillwayNode, self.node)
        now: cython.longlong = self.eng.now
        p: Packet = self.q.popleft()
        self.qbytes -= p.size
        if sn.log is not None:
            cython.cast(list, sn.log).append(("probe", self.key, p.serial, p.deflections, now))
        sn.reinject(p)
        self.out_pkts += 1
        self.probes += 1
        sn.stats.probes_sent += 1
        self.state = SQ_PROBE
        self.epoch += 1
        self.eng.schedule(now + sn.probe_wait_ps, EV_PROBE_CHK, self, self.epoch)
        if len(self.q) == 0:
            self.nonempty_since = -1

    @cython.ccall
    def probe_check(self, epoch):
        if self.state != SQ_PROBE or epoch != self.epoch:
            return
        if len(self.q) == 0:
            self.state = SQ_IDLE
            self._note_empty()
            return
        sn: SpillwayNode = cython.cast(SpillwayNode, self.node)
        w: cython.int = sn.half_window
        n: cython.int = len(self.q)
        self.burst_left = w if w < n else n
        self.state = SQ_HALF
        self.eng.schedule(self.eng.now, EV_DRAIN, self, self.epoch)

    @cython.ccall
    def half_check(self, epoch):
        if self.state != SQ_HALF or epoch != self.epoch:
            return
        if len(self.q) == 0:
            self.state = SQ_IDLE
            self._note_empty()
            return
        self.state = SQ_FULL
        self.eng.schedule(self.eng.now, EV_DRAIN, self, self.epoch)

    @cython.ccall
    def drain_step(self, epoch):
        st: cython.int = self.state
        if (st != SQ_HALF and st != SQ_FULL) or epoch != self.epoch:
            return
        sn: SpillwayNode = cython.cast(SpillwayNode, self.node)
        now: cython.longlong = self.eng.now
        if len(self.q) == 0:
            self.state = SQ_IDLE
            self._note_empty()
            return
        up: Port = sn.uplink
        if up.qb[CLS_DRAINED] >= sn.drain_backlog:
            # uplink backlogged with drains; retry one packet time later
            self.eng.schedule(now + sn.retry_gap_ps, EV_DRAIN, self, epoch)
            return
        p: Packet = self.q.popleft()
        self.qbytes -= p.size
        if sn.log is not None:
            cython.cast(list, sn.log).append(("drain", self.key, p.serial, p.deflections, now))
        sn.reinject(p)
        self.out_pkts += 1
        t: cython.longlong = ser_ps(p.size, up.bw)
        if st == SQ_HALF:
            self.burst_left -= 1
            if self.burst_left <= 0:
                # half burst sent at half rate; hold and check for returns
                self.eng.schedule(now + sn.probe_wait_ps, EV_HALF_CHK, self, epoch)
                if len(self.q) == 0:
                    self.nonempty_since = -1
                return
            t = t * 2
        if len(self.q) == 0:
            self.state = SQ_IDLE
            self._note_empty()
            return
        self.eng.schedule(now + t, EV_DRAIN, self, epoch)

    @cython.ccall
    def deadline_fire(self):
        self.dl_live = 0
        if len(self.q) == 0:
            return
        sn: SpillwayNode = cython.cast(SpillwayNode, self.node)
        now: cython.longlong = self.eng.now
        due: cython.longlong = self.nonempty_since + sn.deadline_ps
        if now < due:
            self.dl_live = 1
            self.eng.schedule(due, EV_SDEADLINE, self, None)
            return
        # waited long enough: force a probe regardless of arrival gaps
        self.nonempty_since = now
        self.dl_live = 1
        self.eng.schedule(now + sn.deadline_ps, EV_SDEADLINE, self, None)
        if self.state == SQ_QUIET:
            self._probe()

    @cython.cfunc
    def _note_empty(self):
        self.last_empty_ps = self.eng.now
        self.nonempty_since = -1


@cython.cclass
class SpillwayNode:
    """Disaggregated overflow buffer hanging off one exit switch."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    nid = cython.declare(cython.int, visibility="readonly")
    dc = cython.declare(cython.int, visibility="readonly")
    rng = cython.declare(Rng, visibility="readonly")
    uplink = cython.declare(Port, visibility="readonly")
    cap = cython.declare(cython.longlong, visibility="public")
    occ = cython.declare(cython.longlong, visibility="readonly")
    peak_occ = cython.declare(cython.longlong, visibility="readonly")
    queues = cython.declare(dict, visibility="readonly")      # bucket -> SpillQueue
    queue_buckets = cython.declare(cython.int, visibility="public")  # 0 = exact per-dst
    quiet_ps = cython.declare(cython.longlong, visibility="public")
    quiet_jitter_ps = cython.declare(cython.longlong, visibility="public")
    probe_wait_ps = cython.declare(cython.longlong, visibility="public")
    half_window = cython.declare(cython.int, visibility="public")
    deadline_ps = cython.declare(cython.longlong, visibility="public")
    drain_backlog = cython.declare(cython.longlong, visibility="public")
    retry_gap_ps = cython.declare(cython.longlong, visibility="public")
    in_pkts = cython.declare(cython.longlong, visibility="readonly")
    out_pkts = cython.declare(cython.longlong, visibility="readonly")
    cap_drops = cython.declare(cython.longlong, visibility="readonly")
    log = cython.declare(object, visibility="public")  # None, or list of (tag, key, serial, deflections, t)

    def __init__(self, eng: Engine, nid: cython.int, dc: cython.int, rng: Rng,
                 bw: cython.longlong, lat: cython.longlong):
        self.eng = eng
        self.stats = eng.stats
        self.nid = nid
        self.dc = dc
        self.rng = rng
        self.uplink = Port(eng, self, ACC_NONE, 0, bw, lat)
        self.cap = 0
        self.occ = 0
        self.peak_occ = 0
        self.queues = {}
        self.queue_buckets = 0
        self.quiet_ps = 30 * PS_PER_US
        self.quiet_jitter_ps = 15 * PS_PER_US
        self.probe_wait_ps = 15 * PS_PER_US
        self.half_window = 64
        self.deadline_ps = 5 * PS_PER_MS
        self.drain_backlog = 4 * 4096
        self.retry_gap_ps = ser_ps(4096, bw)
        self.in_pkts = 0
        self.out_pkts = 0
        self.cap_drops = 0
        self.log = None

    @cython.ccall
    def arrival(self, p: Packet):
        if p.cls != CLS_DEFLECTED:
            # probes bounced all the way back arrive as drains only via
            # re-deflection, so anything else here is a wiring bug
            raise AssertionError("non-deflected packet at spillway")
        if self.occ + p.size > self.cap:
            self.stats.drop(self.nid, DROP_SPILL_CAP, CLS_DEFLECTED, self.eng.now)
            self.cap_drops += 1
            flow = p.flow
            if flow is not None and type(flow) is FlowTx:
                f: FlowTx = cython.cast(FlowTx, flow)
                f.dropped_pkts += 1
                if p.is_retx == 0:
                    f.dropped_first += 1
            return
        p.encap = 0  # decapsulated while buffered
        self.occ += p.size
        if self.occ > self.peak_occ:
            self.peak_occ = self.occ
        self.in_pkts += 1
        key: cython.int = p.odst
        if self.queue_buckets > 0:
            key = key % self.queue_buckets
        sq = self.queues.get(key)
        q: SpillQueue
        if sq is None:
            q = SpillQueue(self, key)
            self.queues[key] = q
        else:
            q = cython.cast(SpillQueue, sq)
        q.accept(p, 1 if p.deflections >= 2 else 0)

    @cython.ccall
    def reinject(self, p: Packet):
        self.occ -= p.size
        self.out_pkts += 1
        self.stats.drained_reinjected += 1
        p.cls = CLS_DRAINED
        p.encap = 0
        p.spill_id = self.nid
        p.dst = p.odst
        self.uplink.push(p)


@cython.cclass
class Sampler:
    """Periodic occupancy recorder; stops once no source is live so the
    heap can empty naturally."""

    eng = cython.declare(Engine, visibility="readonly")
    stats = cython.declare(Stats, visibility="readonly")
    switches = cython.declare(list, visibility="readonly")
    spills = cython.declare(list, visibility="readonly")
    interval_ps = cython.declare(cython.longlong, visibility="readonly")

    def __init__(self, eng: Engine, switches: list, spills: list,
                 interval_ps: cython.longlong):
        self.eng = eng
        self.stats = eng.stats
        self.switches = switches
        self.spills = spills
        self.interval_ps = interval_ps
        for sw in switches:
            self.stats.series[cython.cast(SwitchNode, sw).nid] = []
        for sp in spills:
            self.stats.series[cython.cast(SpillwayNode, sp).nid] = []

    @cython.ccall
    def start(self):
        self.eng.schedule(self.eng.now, EV_SAMPLE, self, None)

    @cython.ccall
    def sample(self):
        now: cython.longlong = self.eng.now
        series: dict = self.stats.series
        i: cython.int
        sws: list = self.switches
        for i in range(len(sws)):
            sw: SwitchNode = sws[i]
            series[sw.nid].append((now, sw.occ))
        sps: list = self.spills
        for i in range(len(sps)):
            sp: SpillwayNode = sps[i]
            series[sp.nid].append((now, sp.occ))
        if self.stats.live_sources > 0:
            self.eng.schedule(now + self.interval_ps, EV_SAMPLE, self, None)


# Typed module-level constants become C statics when compiled and are then
# not visible as module attributes; this table carries their values out.
EXPORTED_CONSTANTS = {
    "MASK64": MASK64, "SM_GAMMA": SM_GAMMA, "SM_MIX1": SM_MIX1,
    "SM_MIX2": SM_MIX2, "DBL_NORM": DBL_NORM,
    "PS_PER_SEC": PS_PER_SEC, "PS_PER_US": PS_PER_US, "PS_PER_MS": PS_PER_MS,
    "I63_MAX": I63_MAX,
    "CLS_CNP": CLS_CNP, "CLS_ACK": CLS_ACK, "CLS_LOSSLESS": CLS_LOSSLESS,
    "CLS_DEFLECTED": CLS_DEFLECTED, "CLS_DRAINED": CLS_DRAINED,
    "CLS_LOSSY": CLS_LOSSY, "CLS_UDP": CLS_UDP, "NCLS": NCLS,
    "ECN_NOT": ECN_NOT, "ECN_ECT": ECN_ECT, "ECN_CE": ECN_CE,
    "ROLE_LEAF": ROLE_LEAF, "ROLE_SPINE": ROLE_SPINE, "ROLE_EXIT": ROLE_EXIT,
    "POLICY_DROP": POLICY_DROP, "POLICY_SPILLWAY": POLICY_SPILLWAY,
    "POLICY_NEIGHBOR": POLICY_NEIGHBOR,
    "SEL_DC_ANYCAST": SEL_DC_ANYCAST, "SEL_SW_ANYCAST": SEL_SW_ANYCAST,
    "SEL_UNICAST_HASH": SEL_UNICAST_HASH,
    "SQ_IDLE": SQ_IDLE, "SQ_QUIET": SQ_QUIET, "SQ_PROBE": SQ_PROBE,
    "SQ_HALF": SQ_HALF, "SQ_FULL": SQ_FULL,
    "DROP_BUFFER": DROP_BUFFER, "DROP_SPILLPATH": DROP_SPILLPATH,
    "DROP_SPILL_CAP": DROP_SPILL_CAP, "DROP_TTL": DROP_TTL,
    "DROP_HOST": DROP_HOST, "NCAUSE": NCAUSE,
    "EV_DEAD": EV_DEAD, "EV_ARR_SW": EV_ARR_SW, "EV_ARR_HOST": EV_ARR_HOST,
    "EV_ARR_SPILL": EV_ARR_SPILL, "EV_TXDONE": EV_TXDONE, "EV_EMIT": EV_EMIT,
    "EV_UDP_EMIT": EV_UDP_EMIT, "EV_RTO": EV_RTO, "EV_ALPHA_T": EV_ALPHA_T,
    "EV_RATE_T": EV_RATE_T, "EV_ACK_T": EV_ACK_T, "EV_QUIET": EV_QUIET,
    "EV_PROBE_CHK": EV_PROBE_CHK, "EV_HALF_CHK": EV_HALF_CHK,
    "EV_DRAIN": EV_DRAIN, "EV_SDEADLINE": EV_SDEADLINE, "EV_ROUND": EV_ROUND,
    "EV_PAUSE": EV_PAUSE, "EV_UNPAUSE": EV_UNPAUSE, "EV_SAMPLE": EV_SAMPLE,
    "EV_CALL": EV_CALL,
    "ACC_NONE": ACC_NONE, "ACC_SWITCH": ACC_SWITCH,
}
