"""Closed-form worst-case completion time for a timeout-recovered
transfer over a long link, plus the small helpers built on top of it
(slowdown, iteration extrapolation, the latency/duration grid, and the
buffer provisioning check).

All public time arguments are milliseconds unless the name says
otherwise.  The model considers a transfer whose transmission window
lasts T_r while the far end discards everything for the first T_a; lost
packets are recovered by a retransmission timeout of alpha * 2L.
"""

import math

# grid used by heatmap(): one-way latencies (ms) crossed with the
# microbenchmark-shaped transfer below
HEATMAP_L_MS = (5.0, 10.0, 20.0, 30.0)
HEATMAP_TR_MS = 5.0
HEATMAP_TA_MS = 10.0
HEATMAP_ALPHA = 1.68


def _check_positive(**kw):
    for name, v in kw.items():
        if not (v > 0.0) or math.isinf(v) or math.isnan(v):
            raise ValueError("%s must be positive and finite, got %r" % (name, v))


def fct_model(L_ms, alpha, tr_ms, ta_ms):
    """Worst-case flow completion time, in ms.

    L_ms: one-way link latency.  alpha: timeout as a multiple of 2L.
    tr_ms: time to clock the transfer out at line rate.  ta_ms: how long
    the bottleneck stays blocked from the moment the first packet would
    arrive.
    """
    _check_positive(L_ms=L_ms, alpha=alpha, tr_ms=tr_ms, ta_ms=ta_ms)
    rtt = 2.0 * L_ms
    rto = alpha * rtt
    if rto <= tr_ms:
        # every packet's first retransmission falls inside the original
        # window shadow; the tail packet governs
        return tr_ms + ta_ms + rtt
    r = math.fmod(ta_ms, rto)
    if r < tr_ms:
        # the last timeout tick before the unblock lands mid-window, so
        # part of the window needs one more full timeout
        return ta_ms + rto + rtt
    return math.ceil(ta_ms / rto) * rto + tr_ms + rtt


def slowdown(fct_ms, L_ms, tr_ms, ta_ms):
    """FCT normalized by the loss-free completion of the same transfer."""
    _check_positive(fct_ms=fct_ms, L_ms=L_ms, tr_ms=tr_ms, ta_ms=ta_ms)
    return fct_ms / (tr_ms + ta_ms + 2.0 * L_ms)


def iteration_extrapolate(t_ms, pp, mb):
    """Added time per training iteration when t_ms of extra transfer
    delay hits each of the pipeline sends and microbatch exchanges that
    cannot overlap; the 1.5 factor covers the backward-pass share."""
    _check_positive(t_ms=t_ms)
    if pp < 1 or mb < 1:
        raise ValueError("pipeline and microbatch counts must be >= 1")
    return 1.5 * t_ms * (pp + mb - 1)


def heatmap(alpha=HEATMAP_ALPHA, tr_ms=HEATMAP_TR_MS, ta_ms=HEATMAP_TA_MS):
    """Rows of (L_ms, tr_ms, ta_ms, fct_ms, slowdown) over the latency
    grid, for the model figure and the CLI `model` subcommand."""
    rows = []
    for L in HEATMAP_L_MS:
        fct = fct_model(L, alpha, tr_ms, ta_ms)
        rows.append((L, tr_ms, ta_ms, fct, slowdown(fct, L, tr_ms, ta_ms)))
    return rows


def provisioning_check(flows, line_rate_bps=400e9, t_coll_s=5e-3,
                       safety=1.0, capacity_bytes=None):
    """Required spillway capacity for a set of long-haul flows.

    Each flow contributes what it could push into the fabric while the
    collective blocks its destination: its full size, capped at one
    line-rate-delay product of t_coll_s.  `flows` is an iterable of
    byte counts or of objects with a total_bytes attribute.  Returns
    (required_bytes, ok); ok is None when no capacity is given.
    """
    _check_positive(line_rate_bps=line_rate_bps, t_coll_s=t_coll_s, safety=safety)
    cap = line_rate_bps * t_coll_s / 8.0
    req = 0.0
    for f in flows:
        size = float(getattr(f, "total_bytes", f))
        if size < 0:
            raise ValueError("flow size must be nonnegative")
        req += min(size, cap)
    req *= safety
    if capacity_bytes is None:
        return req, None
    return req, req <= capacity_bytes
