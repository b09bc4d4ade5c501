"""Packet-level simulator of cross-datacenter RDMA traffic sharing a
fabric with local collectives, with spillway deflection buffers, plus
the closed-form completion model the simulator is checked against."""

__version__ = "0.1.0"
