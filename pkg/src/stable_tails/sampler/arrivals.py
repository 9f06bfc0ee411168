"""Poisson arrival streams and deterministic sub-stream seeding."""

from __future__ import annotations

import numpy as np

__all__ = ["make_rng", "ArrivalStream", "ResidualStream"]


def make_rng(seed: int, stream_id: int = 0) -> np.random.Generator:
    """PCG64 generator for sub-stream ``stream_id`` of ``seed``.

    Sub-streams come from ``SeedSequence(seed, spawn_key=(stream_id,))``, so
    any ``(seed, stream_id)`` pair names one statistically independent
    stream regardless of how many other streams exist.
    """
    ss = np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF, spawn_key=(int(stream_id),))
    return np.random.Generator(np.random.PCG64(ss))


class ArrivalStream:
    """Arrival times ``tau_1 < tau_2 < ...`` of a unit-rate Poisson process.

    Single-owner mutable state.  ``rng`` is exposed so that samplers can
    draw the auxiliary variables (signs, Gaussian remainders) from the same
    stream, which keeps a ``(seed, stream_id)`` pair fully reproducible.
    """

    def __init__(self, seed: int = 0, stream_id: int = 0):
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self.rng = make_rng(seed, stream_id)
        self.index = 0
        self.last_arrival = 0.0

    def next_arrival(self) -> float:
        self.last_arrival += float(self.rng.standard_exponential())
        self.index += 1
        return self.last_arrival

    def arrivals(self, k: int) -> np.ndarray:
        """The next ``k`` arrival times as an array."""
        out = self.last_arrival + np.cumsum(self.rng.standard_exponential(k))
        if k:
            self.last_arrival = float(out[-1])
            self.index += k
        return out

    def __repr__(self):
        return f"ArrivalStream(seed={self.seed}, stream_id={self.stream_id}, index={self.index})"


class ResidualStream:
    """Arrivals seen from the first one: ``tau~_i = tau_{i+1} - tau_1``.

    :meth:`first` must be called before :meth:`next_tilde`; it is called
    implicitly if needed.
    """

    def __init__(self, x: float, base: ArrivalStream):
        if not x > 0:
            raise ValueError(f"conditioning point must be positive, got {x}")
        self.x = float(x)
        self.base = base
        self.tau1 = None

    @property
    def rng(self):
        return self.base.rng

    def first(self) -> float:
        if self.tau1 is None:
            self.tau1 = self.base.next_arrival()
        return self.tau1

    def next_tilde(self) -> float:
        tau1 = self.first()
        return self.base.next_arrival() - tau1
