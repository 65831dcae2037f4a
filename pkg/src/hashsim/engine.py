"""Day-by-day stochastic simulation over the 15-day window around the peak.

The update is synchronous by day: every decision on day d reads only state
through day d-1, so user order cannot matter. All randomness comes from the
counter-based streams in hashsim.rng, addressed by (run seed, user, day,
slot); slot 0 is the exposure draw, slot 1 the tweet draw, slot 2 the
retweet-count draw.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import rng
from .behavior import ModelParams, interest
from .network import FollowNetwork

DAY_OFFSETS = np.arange(-7, 8)
N_DAYS = 15
PEAK_INDEX = 7
_NEVER = np.int16(-100)  # "no activity yet"; below every real day offset

PROFILE_CSV_HEADER = "day,activities,distinct_users"


@dataclass(frozen=True)
class ActivityProfile:
    """15-day series of activity counts (tweets + retweets) and distinct users.

    Entries are integers for a single run and real means for ensembles; both
    are stored as float64. Index 7 is the peak day (offset 0).
    """

    activities: np.ndarray
    distinct_users: np.ndarray

    def __post_init__(self):
        acts = np.asarray(self.activities, dtype=float)
        dist = np.asarray(self.distinct_users, dtype=float)
        if acts.shape != (N_DAYS,) or dist.shape != (N_DAYS,):
            raise ValueError(f"profiles must have exactly {N_DAYS} days")
        if np.any(acts < 0) or np.any(dist < 0):
            raise ValueError("profile entries must be nonnegative")
        if np.any(dist > acts):
            raise ValueError("distinct_users cannot exceed activities")
        acts.flags.writeable = False
        dist.flags.writeable = False
        object.__setattr__(self, "activities", acts)
        object.__setattr__(self, "distinct_users", dist)

    @property
    def days(self) -> np.ndarray:
        return DAY_OFFSETS

    @property
    def peak_offset_index(self) -> int:
        return PEAK_INDEX

    @property
    def total_activities(self) -> float:
        return float(self.activities.sum())

    @property
    def peak_day(self) -> int:
        return int(DAY_OFFSETS[int(np.argmax(self.activities))])

    def to_csv(self, dest) -> None:
        lines = [PROFILE_CSV_HEADER]
        for day, a, u in zip(DAY_OFFSETS, self.activities,
                             self.distinct_users):
            lines.append(f"{day},{a:.10g},{u:.10g}")
        payload = "\n".join(lines) + "\n"
        if hasattr(dest, "write"):
            dest.write(payload)
        else:
            with open(os.fspath(dest), "w", encoding="utf-8") as fh:
                fh.write(payload)

    @classmethod
    def from_csv(cls, src) -> "ActivityProfile":
        if hasattr(src, "read"):
            text = src.read()
        else:
            with open(os.fspath(src), "r", encoding="utf-8") as fh:
                text = fh.read()
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].strip() != PROFILE_CSV_HEADER:
            raise ValueError(f"expected header {PROFILE_CSV_HEADER!r}")
        if len(lines) != N_DAYS + 1:
            raise ValueError(f"expected {N_DAYS} data rows")
        acts, dist = [], []
        for expected_day, line in zip(DAY_OFFSETS, lines[1:]):
            fields = line.split(",")
            if len(fields) != 3 or int(fields[0]) != expected_day:
                raise ValueError(f"bad profile row {line!r}")
            acts.append(float(fields[1]))
            dist.append(float(fields[2]))
        return cls(np.array(acts), np.array(dist))


def binomial_count(u, n, p) -> np.ndarray:
    """Inverse-CDF Binomial(n, p) samples, one uniform per entry.

    Returns the smallest k with CDF(k) >= u, i.e. the number of successes
    in n independent trials of probability p realized from a single uniform.
    Deterministic, so results are reproducible across platforms.
    """
    u = np.asarray(u, dtype=float)
    n = np.asarray(n, dtype=np.int64)
    p = np.asarray(p, dtype=float)
    u, n, p = np.broadcast_arrays(u, n, p)
    out = np.zeros(u.shape, dtype=np.int64)
    out[p >= 1.0] = n[p >= 1.0]
    idx = np.nonzero((p > 0.0) & (p < 1.0))
    if idx[0].size == 0:
        return out
    uu, nn, pp = u[idx], n[idx], p[idx]
    ratio = pp / (1.0 - pp)
    pmf = (1.0 - pp) ** nn
    cdf = pmf.copy()
    k = np.zeros(uu.shape, dtype=np.int64)
    active = (uu > cdf) & (k < nn)
    while active.any():
        pmf = np.where(active, pmf * (nn - k) / (k + 1) * ratio, pmf)
        k = np.where(active, k + 1, k)
        cdf = np.where(active, cdf + pmf, cdf)
        active = (uu > cdf) & (k < nn)
    out[idx] = k
    return out


def user_arrays(net: FollowNetwork) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized activeness and hesitancy for every user.

    An edgeless network (f_max == 0) gets all-zero activeness rather than an
    error: no one can ever be exposed.
    """
    f = net.follower_count.astype(float)
    l = net.leader_count.astype(float)
    h = 1.0 / (l + f + 1.0)
    if net.f_max == 0:
        return np.zeros(net.user_count), h
    denom = net.l_max + f
    second = np.where(denom == 0, 1.0, 1.0 - l / np.maximum(denom, 1.0))
    return (f / net.f_max) * second, h


def _simulate_batch(net: FollowNetwork, params: ModelParams, seeds,
                    end_offset: int = 7) -> tuple[np.ndarray, np.ndarray]:
    """Simulate one run per seed; returns (activities, distinct) of shape (runs, 15)."""
    n = net.user_count
    runs = len(seeds)
    a_vec, h_vec = user_arrays(net)
    infl = net.influence
    eta_star = float(params.eta_star)
    sigma = float(params.sigma)

    streams = rng.stream_matrix(seeds, n)
    last = np.full((runs, n), _NEVER, dtype=np.int16)
    acts = np.zeros((runs, N_DAYS))
    dist = np.zeros((runs, N_DAYS))

    edge_leader = net.leader_ids
    edge_follower = net.edge_follower
    edge_f = net.follower_count[edge_leader].astype(float)
    # flat (run, follower) bin index per edge, for per-user segment sums
    if edge_leader.size:
        flat_bins = (np.arange(runs, dtype=np.int64)[:, None] * n
                     + edge_follower[None, :]).ravel()
        edge_f_tiled = np.tile(edge_f, runs)
    any_activity = False

    for day_index, d in enumerate(DAY_OFFSETS):
        if d < -params.delta_t:
            continue
        if d > end_offset:
            break
        tau = interest(float(d), params.lam)
        t_vec = np.clip(sigma * tau - h_vec, 0.0, 1.0)  # tweet == retweet prob
        if not np.any(t_vec > 0.0):
            continue  # nobody can post today; state cannot change

        # exogenous injection
        u_exp = rng.uniforms(streams, day_index, 0)
        u_twt = rng.uniforms(streams, day_index, 1)
        rho = a_vec * params.chi(float(d))
        tweeted = (u_exp < rho) & (u_twt < t_vec)

        # endogenous spreading
        retweets = np.zeros((runs, n), dtype=np.int64)
        if any_activity and edge_leader.size:
            recent = last[:, edge_leader] > last[:, edge_follower]
            recent_flat = recent.ravel().astype(float)
            y = np.bincount(flat_bins, weights=recent_flat * edge_f_tiled,
                            minlength=runs * n).reshape(runs, n)
            eta = np.bincount(flat_bins, weights=recent_flat,
                              minlength=runs * n).reshape(runs, n)
            gate = (y > 0) & (y >= eta_star * infl)
            gi = np.nonzero(gate)
            if gi[0].size:
                y_g, eta_g, infl_g = y[gi], eta[gi], infl[gi[1]]
                with np.errstate(divide="ignore", invalid="ignore"):
                    nu = np.floor(np.sqrt((eta_g / eta_star)
                                          * (y_g / (eta_star * infl_g))))
                nu = np.where(infl_g == 0, 1,
                              np.maximum(nu, 1.0)).astype(np.int64)
                r_total = t_vec[gi[1]]
                r_each = 1.0 - (1.0 - r_total) ** (1.0 / nu)
                u_rt = rng.uniforms(streams, day_index, 2)[gi]
                retweets[gi] = binomial_count(u_rt, nu, r_each)

        acted = tweeted | (retweets > 0)
        acts[:, day_index] = tweeted.sum(axis=1) + retweets.sum(axis=1)
        dist[:, day_index] = acted.sum(axis=1)
        if acted.any():
            last = np.where(acted, np.int16(d), last)
            any_activity = True
    return acts, dist


def run_simulation(net: FollowNetwork, params: ModelParams, seed: int,
                   end_offset: int = 7) -> ActivityProfile:
    """One stochastic run; deterministic for a fixed seed."""
    acts, dist = _simulate_batch(net, params, [seed], end_offset)
    return ActivityProfile(acts[0], dist[0])


def run_ensemble(net: FollowNetwork, params: ModelParams, base_seed: int,
                 runs: int, end_offset: int = 7) -> ActivityProfile:
    """Mean profile over runs with seeds base_seed .. base_seed + runs - 1."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    seeds = [base_seed + k for k in range(runs)]
    acts, dist = _simulate_batch(net, params, seeds, end_offset)
    return ActivityProfile(acts.mean(axis=0), dist.mean(axis=0))
