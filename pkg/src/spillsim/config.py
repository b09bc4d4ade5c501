"""Scenario configuration: typed blocks with defaults matching the base
experiment setup, YAML loading with unknown-key rejection, and dotted-path
overrides for sweeps.

Times and sizes carry their unit in the field name; conversion to the
integer-picosecond / byte domain happens where the values are consumed.
"""

import dataclasses
from dataclasses import dataclass, field

import yaml

VARIANTS = ("microbenchmark", "motivation", "spine_stress", "dci_contention")
POLICIES = ("dc_anycast", "sw_anycast", "unicast_hash")
LONGHAUL_SRC = ("unused_nodes", "participating_nodes")


class ConfigError(ValueError):
    pass


@dataclass
class TopologyConfig:
    gpus_per_dc: int = 32
    nodes_per_leaf: int = 1
    leaves: int = 4
    spines: int = 8
    exits: int = 8
    link_gbps: float = 400.0
    link_latency_us: float = 1.0
    dci_links_per_exit: int = 2
    dci_gbps: float = 400.0
    dci_latency_ms: float = 5.0
    spillways_per_exit: int = 4
    spillway_gb: float = 16.0


@dataclass
class ClassesConfig:
    buffer_mb: float = 64.0
    alpha_dt: float = 1.0
    ecn_kmin_kb: float = 400.0
    ecn_kmax_kb: float = 1600.0
    ecn_pmax: float = 0.2
    pfc_xoff_kb: float = 512.0
    pfc_xon_kb: float = 256.0
    deflect_reserve_mb: float = 2.0
    lossless_headroom_mb: float = 8.0
    mtu_bytes: int = 4096
    encap_bytes: int = 38
    ctrl_bytes: int = 64
    host_udp_cap_mb: float = 2.0


@dataclass
class SpillwayConfig:
    enabled: bool = True
    neighbor_mode: bool = False
    policy: str = "dc_anycast"
    sticky: bool = True
    tau_gap_us: float = 30.0
    jitter_us: float = 15.0
    probe_wait_us: float = 15.0
    half_window: int = 64
    deadline_ms: float = 5.0
    queue_buckets: int = 0
    drain_backlog_pkts: int = 4
    neighbor_budget: int = 16


@dataclass
class TransportConfig:
    alpha_rto: float = 1.68
    dcqcn: bool = True
    fast_cnp: bool = True
    cnp_interval_us: float = 50.0
    dcqcn_g: float = 1.0 / 256.0
    alpha_timer_us: float = 55.0
    rate_timer_us: float = 300.0
    byte_counter_mb: float = 10.0
    rai_gbps: float = 5.0
    rhai_gbps: float = 50.0
    fast_stages: int = 5
    min_rate_gbps: float = 1.0
    ack_every: int = 16
    ack_wait_us: float = 50.0
    lossless_window_kb: float = 430.0


@dataclass
class WorkloadConfig:
    variant: str = "microbenchmark"
    longhaul_flows: int = 16
    longhaul_mb: float = 250.0
    longhaul_src: str = "unused_nodes"
    alltoall_gb_per_node: float = 4.0
    alltoall_nodes: int = 2
    chunk_mb: float = 8.0
    round_gap_us: float = 110.0
    jitter_us: float = 100.0
    udp_gbps: float = 400.0
    udp_stop_ms: float = 20.0


@dataclass
class ScenarioConfig:
    topology: TopologyConfig = field(default_factory=TopologyConfig)
    classes: ClassesConfig = field(default_factory=ClassesConfig)
    spillway: SpillwayConfig = field(default_factory=SpillwayConfig)
    transport: TransportConfig = field(default_factory=TransportConfig)
    workload: WorkloadConfig = field(default_factory=WorkloadConfig)
    seed: int = 1
    t_end_ms: float = 200.0
    sample_interval_us: float = 10.0


_BLOCKS = {
    "topology": TopologyConfig,
    "classes": ClassesConfig,
    "spillway": SpillwayConfig,
    "transport": TransportConfig,
    "workload": WorkloadConfig,
}
_SCALARS = {"seed": int, "t_end_ms": float, "sample_interval_us": float}


def _coerce(path, want, value):
    if want is bool:
        if isinstance(value, bool):
            return value
        raise ConfigError("%s: expected true/false, got %r" % (path, value))
    if want is int:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError("%s: expected an integer, got %r" % (path, value))
        if isinstance(value, float) and value != int(value):
            raise ConfigError("%s: expected an integer, got %r" % (path, value))
        return int(value)
    if want is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError("%s: expected a number, got %r" % (path, value))
        return float(value)
    if want is str:
        if not isinstance(value, str):
            raise ConfigError("%s: expected a string, got %r" % (path, value))
        return value
    raise ConfigError("%s: unsupported field type %r" % (path, want))


def _fill_block(cls, data, prefix):
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("%s: expected a mapping, got %r" % (prefix or "top level", data))
    types = {f.name: f.type for f in dataclasses.fields(cls)}
    # dataclass field types arrive as strings under from __future__ imports
    # in some tool chains; resolve the few primitives we use
    prim = {"int": int, "float": float, "bool": bool, "str": str,
            int: int, float: float, bool: bool, str: str}
    out = cls()
    for key, value in data.items():
        path = "%s.%s" % (prefix, key) if prefix else str(key)
        if key not in types:
            raise ConfigError("unknown key: %s" % path)
        setattr(out, key, _coerce(path, prim[types[key]], value))
    return out


def from_dict(data):
    """Build a validated ScenarioConfig from a plain (possibly empty) dict."""
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("top level: expected a mapping, got %r" % (data,))
    cfg = ScenarioConfig()
    for key, value in data.items():
        if key in _BLOCKS:
            setattr(cfg, key, _fill_block(_BLOCKS[key], value, key))
        elif key in _SCALARS:
            setattr(cfg, key, _coerce(key, _SCALARS[key], value))
        else:
            raise ConfigError("unknown key: %s" % key)
    validate(cfg)
    return cfg


def load_yaml(path):
    """Raw scenario dict, before overrides and coercion."""
    with open(path, "r") as fh:
        data = yaml.safe_load(fh)
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("%s: expected a mapping at top level" % path)
    return data


def load_config(path):
    return from_dict(load_yaml(path))


def validate(cfg):
    t = cfg.topology
    for name in ("gpus_per_dc", "nodes_per_leaf", "leaves", "spines", "exits",
                 "dci_links_per_exit"):
        if getattr(t, name) < 1:
            raise ConfigError("topology.%s: must be >= 1" % name)
    if t.gpus_per_dc % (t.leaves * t.nodes_per_leaf) != 0:
        raise ConfigError("topology.gpus_per_dc: must divide evenly into "
                          "leaves * nodes_per_leaf node slots")
    for name in ("link_gbps", "link_latency_us", "dci_gbps", "dci_latency_ms",
                 "spillway_gb"):
        if getattr(t, name) <= 0:
            raise ConfigError("topology.%s: must be positive" % name)
    if t.spillways_per_exit < 0:
        raise ConfigError("topology.spillways_per_exit: must be >= 0")

    c = cfg.classes
    if c.ecn_kmin_kb >= c.ecn_kmax_kb:
        raise ConfigError("classes.ecn_kmin_kb: must be below ecn_kmax_kb")
    if not (0.0 <= c.ecn_pmax <= 1.0):
        raise ConfigError("classes.ecn_pmax: must be in [0, 1]")
    if c.pfc_xon_kb > c.pfc_xoff_kb:
        raise ConfigError("classes.pfc_xon_kb: must not exceed pfc_xoff_kb")
    if c.mtu_bytes < 64:
        raise ConfigError("classes.mtu_bytes: must be >= 64")
    if c.buffer_mb <= 0:
        raise ConfigError("classes.buffer_mb: must be positive")
    if not (0.0 <= c.deflect_reserve_mb < c.buffer_mb):
        raise ConfigError("classes.deflect_reserve_mb: must be in [0, buffer_mb)")
    if not (0.0 <= c.lossless_headroom_mb < c.buffer_mb):
        raise ConfigError("classes.lossless_headroom_mb: must be in [0, buffer_mb)")

    s = cfg.spillway
    if s.policy not in POLICIES:
        raise ConfigError("spillway.policy: unknown policy %r (choose from %s)"
                          % (s.policy, ", ".join(POLICIES)))
    if s.enabled and s.neighbor_mode:
        raise ConfigError("spillway.neighbor_mode: enabled and neighbor_mode "
                          "are mutually exclusive overflow policies")
    if s.enabled and s.sticky and s.policy == "unicast_hash":
        raise ConfigError("spillway.sticky: sticky selection requires an "
                          "anycast first hop, not unicast_hash")
    if s.enabled and cfg.topology.spillways_per_exit < 1:
        raise ConfigError("topology.spillways_per_exit: must be >= 1 when "
                          "the spillway is enabled")
    for name in ("tau_gap_us", "probe_wait_us", "deadline_ms"):
        if getattr(s, name) <= 0:
            raise ConfigError("spillway.%s: must be positive" % name)
    if s.jitter_us < 0:
        raise ConfigError("spillway.jitter_us: must be >= 0")
    if s.half_window < 1:
        raise ConfigError("spillway.half_window: must be >= 1")
    if s.queue_buckets < 0:
        raise ConfigError("spillway.queue_buckets: must be >= 0 (0 = exact per-destination)")
    if s.drain_backlog_pkts < 1:
        raise ConfigError("spillway.drain_backlog_pkts: must be >= 1")
    if s.neighbor_budget < 1:
        raise ConfigError("spillway.neighbor_budget: must be >= 1")

    tr = cfg.transport
    if tr.alpha_rto <= 0:
        raise ConfigError("transport.alpha_rto: must be positive")
    if not (0.0 < tr.dcqcn_g <= 1.0):
        raise ConfigError("transport.dcqcn_g: must be in (0, 1]")
    if tr.ack_every < 1:
        raise ConfigError("transport.ack_every: must be >= 1")

    w = cfg.workload
    if w.variant not in VARIANTS:
        raise ConfigError("workload.variant: unknown variant %r (choose from %s)"
                          % (w.variant, ", ".join(VARIANTS)))
    if w.longhaul_src not in LONGHAUL_SRC:
        raise ConfigError("workload.longhaul_src: choose from %s"
                          % ", ".join(LONGHAUL_SRC))
    if w.longhaul_flows < 0:
        raise ConfigError("workload.longhaul_flows: must be >= 0")
    if w.alltoall_nodes < 0:
        raise ConfigError("workload.alltoall_nodes: must be >= 0")
    if w.alltoall_nodes > cfg.topology.leaves * cfg.topology.nodes_per_leaf:
        raise ConfigError("workload.alltoall_nodes: exceeds nodes per DC")
    if w.jitter_us < 0:
        raise ConfigError("workload.jitter_us: must be >= 0")
    if w.round_gap_us < 0:
        raise ConfigError("workload.round_gap_us: must be >= 0")
    if w.chunk_mb <= 0:
        raise ConfigError("workload.chunk_mb: must be positive")

    if cfg.seed < 0:
        raise ConfigError("seed: must be >= 0")
    if cfg.t_end_ms <= 0:
        raise ConfigError("t_end_ms: must be positive")
    if cfg.sample_interval_us <= 0:
        raise ConfigError("sample_interval_us: must be positive")
    return cfg


def to_dict(cfg):
    return dataclasses.asdict(cfg)


def apply_override(data, dotted, raw_value):
    """Set block.key in a raw config dict from a sweep token; the value is
    parsed with YAML scalar rules so '0.5', 'true', 'sw_anycast' all work."""
    parts = dotted.split(".")
    if len(parts) == 1 and parts[0] in _SCALARS:
        data[parts[0]] = yaml.safe_load(raw_value)
        return data
    if len(parts) != 2 or parts[0] not in _BLOCKS:
        raise ConfigError("override path %r: expected block.key or one of %s"
                          % (dotted, ", ".join(sorted(_SCALARS))))
    block = data.setdefault(parts[0], {})
    if not isinstance(block, dict):
        raise ConfigError("override path %r: %s is not a mapping" % (dotted, parts[0]))
    block[parts[1]] = yaml.safe_load(raw_value)
    return data
