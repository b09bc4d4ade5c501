# cython: language_level=3
"""Time-stepped reference for the loss-window completion model.

Deliberately literal so it can validate the closed form in analytic.py:
time advances in 1 us steps, the sender emits one unit per step, units
arriving while the destination port is blocked are dropped and re-sent
a fixed timeout after their previous send, and from the unblock time the
port serves one unit per step in arrival order. No case analysis, no
modular arithmetic. Compiled when the extension is built; the same file
runs interpreted otherwise.
"""

import cython

COMPILED = cython.compiled

ARR_CAP = cython.declare(cython.longlong, 0)
_arr: list = []


@cython.ccall
def completion_step(send_steps: cython.longlong, block_steps: cython.longlong,
                    rto_steps: cython.longlong) -> cython.longlong:
    """Step index in which the port serves the last unit.

    send_steps: units emitted, one per step starting at step 0.
    block_steps: arrivals before this step are dropped.
    rto_steps: a dropped unit is re-sent this many steps after its
    previous send, repeatedly, until it arrives at or past block_steps.

    The continuous-time completion the closed form predicts corresponds
    to this step plus one (a unit served in step t finishes at t+1).
    """
    if send_steps <= 0 or block_steps < 0 or rto_steps <= 0:
        raise ValueError("send_steps and rto_steps must be positive, block_steps >= 0")
    global _arr, ARR_CAP
    # every retry chain lands within one timeout past the block window
    horizon: cython.longlong = block_steps + rto_steps
    if send_steps > horizon:
        horizon = send_steps
    horizon += send_steps + 2
    if horizon > ARR_CAP:
        _arr = [0] * horizon
        ARR_CAP = horizon
    arr: list = _arr
    t: cython.longlong
    for t in range(horizon):
        arr[t] = 0
    s: cython.longlong
    last_arrival: cython.longlong = 0
    for s in range(send_steps):
        t = s
        while t < block_steps:
            t += rto_steps
        arr[t] += 1
        if t > last_arrival:
            last_arrival = t
    backlog: cython.longlong = 0
    served_last: cython.longlong = -1
    remaining: cython.longlong = send_steps
    t = block_steps
    while remaining > 0:
        if t <= last_arrival:
            backlog += arr[t]
        if backlog > 0:
            backlog -= 1
            remaining -= 1
            served_last = t
        t += 1
    return served_last
