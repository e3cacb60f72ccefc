"""Synthetic sample streams for both hypotheses and their segmentation.

H0 streams are white Gaussian noise; H1 streams add a non-white
wide-sense-stationary signal (AR(1) or pulse-shaped PAM) at a requested SNR.
All generators are pure functions of an explicit 64-bit seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.signal import lfilter


@dataclass(frozen=True)
class NoiseModel:
    """White Gaussian noise: variance sigma_n2, plus an uncertainty half-width
    in dB used only by the energy-detection baseline."""

    sigma_n2: float = 1.0
    uncertainty_db: float = 0.0

    def __post_init__(self):
        if not self.sigma_n2 > 0:
            raise ValueError(f"sigma_n2 must be positive, got {self.sigma_n2}")
        if self.uncertainty_db < 0:
            raise ValueError(f"uncertainty_db must be >= 0, got {self.uncertainty_db}")


@dataclass(frozen=True)
class PuSignalModel:
    """Primary-user signal model: AR(1) or pulse-shaped M-level PAM.

    Both are zero-mean, wide-sense stationary and correlated (nonzero lag-1
    autocorrelation), which is all the detector relies on.
    """

    kind: str = "ar1"
    ar_coefficient: float = 0.8
    pam_levels: int = 8
    pulse_span: int = 4
    power: float = 1.0

    def __post_init__(self):
        if self.kind not in ("ar1", "shaped_pam"):
            raise ValueError(f"kind must be 'ar1' or 'shaped_pam', got {self.kind!r}")
        if not self.power > 0:
            raise ValueError(f"power must be positive, got {self.power}")
        if self.kind == "ar1" and not (-1.0 < self.ar_coefficient < 1.0):
            raise ValueError(f"ar_coefficient must be in (-1, 1), got {self.ar_coefficient}")
        if self.kind == "shaped_pam":
            if self.pam_levels < 2:
                raise ValueError(f"pam_levels must be >= 2, got {self.pam_levels}")
            if self.pulse_span < 1:
                raise ValueError(f"pulse_span must be >= 1, got {self.pulse_span}")


@dataclass
class SampleStream:
    """A finite real-valued sample record; sample_rate_hz is informational only."""

    samples: np.ndarray
    sample_rate_hz: float = 1.0

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if self.samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if self.samples.size and not np.all(np.isfinite(self.samples)):
            raise ValueError("samples must be finite (no NaN/Inf)")

    def __len__(self) -> int:
        return self.samples.size


@dataclass
class SensingSegment:
    """L x N data matrix whose columns are sensing vectors taken from a stream.

    With stride=1 the columns are maximally overlapping sliding windows
    (adjacent columns share L-1 entries) and the segment consumes N + L - 1
    samples; with stride=L the columns are disjoint blocks consuming N*L
    samples.  In general, samples consumed = (N-1)*stride + L.
    """

    L: int
    N: int
    data: np.ndarray
    stride: int = 1
    samples: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64)
        if self.data.shape != (self.L, self.N):
            raise ValueError(f"data must be {self.L}x{self.N}, got {self.data.shape}")

    @property
    def total_samples(self) -> int:
        return (self.N - 1) * self.stride + self.L


def generate_noise(n: int, noise: NoiseModel, seed: int) -> SampleStream:
    """i.i.d. zero-mean Gaussian samples with variance noise.sigma_n2."""
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    return SampleStream(rng.normal(0.0, np.sqrt(noise.sigma_n2), size=n))


def _shaped_pam(n: int, model: PuSignalModel, rng: np.random.Generator) -> np.ndarray:
    m = model.pam_levels
    span = model.pulse_span
    # symmetric levels ..., -3, -1, 1, 3, ... normalized to unit power
    levels = (2.0 * np.arange(m) - (m - 1)) / np.sqrt((m * m - 1) / 3.0)
    # random symbol-clock phase stationarizes the hold waveform
    phase = int(rng.integers(span))
    n_sym = (n + phase) // span + 2
    held = np.repeat(levels[rng.integers(m, size=n_sym)], span)
    pulse = 0.5 - 0.5 * np.cos(2.0 * np.pi * (np.arange(span) + 1) / (span + 1))
    # analytic output power of (unit-power hold) * pulse, via the hold
    # autocorrelation r(d) = max(0, 1 - |d|/span)
    lags = np.arange(span)[:, None] - np.arange(span)[None, :]
    r_hold = np.maximum(0.0, 1.0 - np.abs(lags) / span)
    p_out = float(pulse @ r_hold @ pulse)
    pulse *= np.sqrt(model.power / p_out)
    shaped = np.convolve(held, pulse)[span - 1 + phase:]
    return shaped[:n]


def generate_pu_signal(n: int, model: PuSignalModel, seed: int) -> SampleStream:
    """Zero-mean WSS signal with average power model.power.

    ar1: stationary first-order autoregression, lag-1 autocorrelation equal to
    the coefficient.  shaped_pam: M-level PAM held for pulse_span samples and
    smoothed by a raised-cosine pulse, with random symbol phase.
    """
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    if model.kind == "ar1":
        a = model.ar_coefficient
        innov = rng.normal(0.0, np.sqrt(model.power * (1.0 - a * a)), size=n)
        x0 = rng.normal(0.0, np.sqrt(model.power))
        out, _ = lfilter([1.0], [1.0, -a], innov, zi=np.array([a * x0]))
        return SampleStream(out)
    return SampleStream(_shaped_pam(n, model, rng))


def mix_at_snr(signal: SampleStream, noise: SampleStream, snr_db: float,
               signal_power: float = 1.0, noise_power: float = 1.0) -> SampleStream:
    """Scale the signal so configured powers meet the requested SNR, then add.

    SNR is per-sample, 10*log10(Ps/Pn) of the configured model powers; the
    noise is left untouched so H0 statistics are identical across SNR points.
    """
    if len(signal) != len(noise):
        raise ValueError(f"length mismatch: signal {len(signal)} vs noise {len(noise)}")
    scale = np.sqrt(10.0 ** (snr_db / 10.0) * noise_power / signal_power)
    return SampleStream(scale * signal.samples + noise.samples,
                        sample_rate_hz=noise.sample_rate_hz)


def make_segment(stream: SampleStream | np.ndarray, L: int, N: int,
                 offset: int = 0, stride: int = 1) -> SensingSegment:
    """Slice a stream into an L x N segment; column j starts at offset + j*stride."""
    samples = stream.samples if isinstance(stream, SampleStream) else np.asarray(stream, dtype=np.float64)
    if L < 1 or N < 1 or stride < 1:
        raise ValueError("L, N and stride must be positive")
    if offset < 0:
        raise ValueError(f"offset must be >= 0, got {offset}")
    needed = offset + (N - 1) * stride + L
    if needed > samples.size:
        raise ValueError(f"insufficient samples: need {needed}, have {samples.size}")
    window = samples[offset:needed]
    data = np.lib.stride_tricks.sliding_window_view(window, L)[::stride].T
    return SensingSegment(L=L, N=N, data=data, stride=stride, samples=window)


def ar1_covariance(L: int, a: float, power: float = 1.0) -> np.ndarray:
    """Exact covariance of a stationary AR(1): R[i, j] = power * a^|i-j|."""
    idx = np.arange(L)
    return power * a ** np.abs(idx[:, None] - idx[None, :])


def load_stream_f32(path) -> SampleStream:
    """Read a headerless little-endian 32-bit float sample file."""
    raw = np.fromfile(path, dtype="<f4")
    if raw.size == 0:
        raise ValueError(f"{path}: empty sample file")
    return SampleStream(raw.astype(np.float64))
