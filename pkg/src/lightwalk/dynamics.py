"""Coherent motion of a two-level atom in a traveling light wave.

One-photon exchange couples the bare states |0,p> and |1,p+hbar*k| in
closed two-dimensional momentum blocks, so the dynamics factorizes over
momentum. Each block is solved exactly by dressing it: with the block
shift d (detuning + Doppler + recoil) and coupling strength W, the
amplitudes rotate at the effective Rabi frequency sqrt(d^2 + W^2) under a
common phase set by the block's frequency trace. Gaussian wavepackets,
their momentum/position expectation values, the dressed band structure
and the strong-coupling closed forms for the light-induced drift all
live here.

All quantities are SI; the only physical constant used is hbar, shared
by both constant sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .catalog import Species
from .constants import HBAR, PAPER_CONSTANTS, PhysicalConstants, mass_to_si, wavenumber
from .errors import DegenerateBlockError, DomainError, GridCoverageError

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class LightField:
    """Traveling wave driving the transition.

    ``wavenumber`` is signed: its sign is the propagation direction along x.
    ``rabi`` is the coupling strength in rad/s (real and non-negative),
    ``detuning`` the light frequency offset from the bare transition in rad/s.
    The coupling may alternatively be derived from a dipole moment and a
    field amplitude via :meth:`from_dipole`.
    """

    wavelength: float
    wavenumber: float
    rabi: float
    detuning: float
    dipole_moment: float | None = None
    field_amplitude: float | None = None

    def __post_init__(self) -> None:
        if not self.wavelength > 0:
            raise DomainError(f"wavelength must be positive, got {self.wavelength}")
        if self.rabi < 0:
            raise DomainError(f"rabi must be non-negative, got {self.rabi}")
        expected = 2.0 * math.pi / self.wavelength
        if not math.isclose(abs(self.wavenumber), expected, rel_tol=1e-12):
            raise DomainError("|wavenumber| must equal 2 pi / wavelength")
        if self.dipole_moment is not None and self.field_amplitude is not None:
            derived = abs(self.dipole_moment) * self.field_amplitude / HBAR
            if not math.isclose(self.rabi, derived, rel_tol=1e-9):
                raise DomainError("rabi inconsistent with dipole moment and field amplitude")

    @classmethod
    def from_wavelength(
        cls,
        wavelength: float,
        rabi: float = 1.0e6,
        detuning: float = 0.0,
        direction: int = 1,
    ) -> "LightField":
        if direction not in (1, -1):
            raise DomainError("direction must be +1 or -1")
        return cls(
            wavelength=wavelength,
            wavenumber=direction * wavenumber(wavelength),
            rabi=rabi,
            detuning=detuning,
        )

    @classmethod
    def from_dipole(
        cls,
        wavelength: float,
        dipole_moment: float,
        field_amplitude: float,
        detuning: float = 0.0,
        direction: int = 1,
    ) -> "LightField":
        if field_amplitude < 0:
            raise DomainError("field amplitude must be non-negative")
        rabi = abs(dipole_moment) * field_amplitude / HBAR
        if direction not in (1, -1):
            raise DomainError("direction must be +1 or -1")
        return cls(
            wavelength=wavelength,
            wavenumber=direction * wavenumber(wavelength),
            rabi=rabi,
            detuning=detuning,
            dipole_moment=dipole_moment,
            field_amplitude=field_amplitude,
        )

    @property
    def recoil_momentum(self) -> float:
        """Signed photon momentum hbar*k in kg m/s."""
        return HBAR * self.wavenumber

    @property
    def period(self) -> float:
        """Rabi period 2 pi / rabi; infinite for an uncoupled field."""
        return 2.0 * math.pi / self.rabi if self.rabi > 0 else math.inf


@dataclass(frozen=True)
class WavepacketSpec:
    """Gaussian initial condition in momentum space.

    Amplitudes go as exp(-(p - center)^2 / (2 width^2)) on both internal
    states, weighted by the complex pair (ground_amp, excited_amp) with
    |ground_amp|^2 + |excited_amp|^2 = 1.
    """

    center_momentum: float
    momentum_width: float
    ground_amp: complex = 1.0 + 0.0j
    excited_amp: complex = 0.0 + 0.0j
    initial_position: float = 0.0

    def __post_init__(self) -> None:
        if not self.momentum_width > 0:
            raise DomainError(f"momentum width must be positive, got {self.momentum_width}")
        total = abs(self.ground_amp) ** 2 + abs(self.excited_amp) ** 2
        if abs(total - 1.0) > _NORM_TOL:
            raise DomainError(f"internal amplitudes must be normalized, got norm {total}")

    @property
    def population_difference(self) -> float:
        """|ground_amp|^2 - |excited_amp|^2, the drift prefactor."""
        return abs(self.ground_amp) ** 2 - abs(self.excited_amp) ** 2


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform grid discretizing the momentum integral."""

    p_min: float
    p_max: float
    n_points: int

    def __post_init__(self) -> None:
        if self.n_points < 2:
            raise DomainError("grid needs at least 2 points")
        if not self.p_max > self.p_min:
            raise DomainError("p_max must exceed p_min")

    @property
    def spacing(self) -> float:
        return (self.p_max - self.p_min) / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.n_points)

    @classmethod
    def for_packet(
        cls, spec: WavepacketSpec, half_span: float = 6.0, n_points: int = 4096
    ) -> "MomentumGrid":
        """Grid centered on the packet, default +-6 widths at 4096 points."""
        span = half_span * spec.momentum_width
        return cls(spec.center_momentum - span, spec.center_momentum + span, n_points)


@dataclass(frozen=True)
class BlockAmplitudes:
    """Amplitude pair of one momentum block.

    ``ground`` multiplies |0,p>, ``excited`` multiplies |1,p+hbar*k>; the
    excited component therefore carries one photon recoil of momentum.
    """

    momentum: float
    ground: complex
    excited: complex

    @property
    def norm_sq(self) -> float:
        return abs(self.ground) ** 2 + abs(self.excited) ** 2


@dataclass(frozen=True)
class DressedBlock:
    """Diagonalized data of one momentum block.

    ``ground_plus``/``ground_minus`` (and the excited pair) are the
    amplitudes of the +/- effective-Rabi frequency components that the
    initial condition projects onto.
    """

    shift: float
    effective_rabi: float
    freq_low: float
    freq_high: float
    ground_plus: complex
    ground_minus: complex
    excited_plus: complex
    excited_minus: complex


@dataclass(frozen=True)
class QuantumState:
    """Wavepacket on a momentum grid at one instant.

    ``ground[i]`` is the amplitude at momentum ``p_i``; ``excited[i]`` the
    amplitude at ``p_i + hbar*k``. Arrays are never mutated.
    """

    grid: MomentumGrid
    ground: np.ndarray
    excited: np.ndarray
    mass_kg: float
    field: LightField
    time: float = 0.0

    def norm(self) -> float:
        dp = self.grid.spacing
        # np.sum is pairwise, so the reduction is order-stable
        return float((np.abs(self.ground) ** 2 + np.abs(self.excited) ** 2).sum() * dp)

    def excited_population(self) -> float:
        return float((np.abs(self.excited) ** 2).sum() * self.grid.spacing)

    def blocks(self) -> Iterator[BlockAmplitudes]:
        for p, g, e in zip(self.grid.points(), self.ground, self.excited):
            yield BlockAmplitudes(float(p), complex(g), complex(e))


@dataclass(frozen=True)
class Trajectory:
    """Observables of a simulated wavepacket, aligned with ``times``."""

    times: np.ndarray
    mean_momentum: np.ndarray
    mean_velocity: np.ndarray
    mean_position: np.ndarray
    norm: np.ndarray
    excited_population: np.ndarray


def kinetic_frequency(p, mass_kg: float):
    """Free kinetic phase rate p^2 / (2 M hbar) in rad/s."""
    if not mass_kg > 0:
        raise DomainError(f"mass must be positive, got {mass_kg}")
    return p * p / (2.0 * mass_kg * HBAR)


def block_detuning(p, field: LightField, mass_kg: float):
    """Shift of one momentum block: detuning + Doppler + photon recoil.

    Equals detuning + p*k/M + hbar*k^2/(2M), i.e. the splitting of the
    block's two bare frequencies. Accepts scalar or array p.
    """
    if not mass_kg > 0:
        raise DomainError(f"mass must be positive, got {mass_kg}")
    k = field.wavenumber
    return field.detuning + p * k / mass_kg + HBAR * k * k / (2.0 * mass_kg)


def effective_rabi(shift, rabi):
    """Dressed splitting sqrt(shift^2 + rabi^2) of one block."""
    return np.hypot(shift, rabi)


def dressed_frequencies(p, field: LightField, mass_kg: float):
    """Dressed eigenfrequency pair (low, high) of the block at momentum p.

    Their sum is the block's frequency trace, their difference the
    effective Rabi frequency. Accepts scalar or array p.
    """
    w_ground = kinetic_frequency(p, mass_kg)
    w_excited = field.detuning + kinetic_frequency(p + field.recoil_momentum, mass_kg)
    trace = w_ground + w_excited
    split = effective_rabi(w_excited - w_ground, field.rabi)
    return 0.5 * (trace - split), 0.5 * (trace + split)


@dataclass(frozen=True)
class BandStructure:
    """Dressed vs bare frequency branches sampled over a momentum grid."""

    p: np.ndarray
    dressed_low: np.ndarray
    dressed_high: np.ndarray
    bare_ground: np.ndarray
    bare_excited: np.ndarray


def band_structure(grid: MomentumGrid, field: LightField, mass_kg: float) -> BandStructure:
    """Sample dressed and bare branches over the grid (plot-ready)."""
    p = grid.points()
    low, high = dressed_frequencies(p, field, mass_kg)
    bare_ground = kinetic_frequency(p, mass_kg)
    bare_excited = field.detuning + kinetic_frequency(p + field.recoil_momentum, mass_kg)
    return BandStructure(p, low, high, bare_ground, bare_excited)


def block_coefficients(
    init: BlockAmplitudes, shift: float, eff_rabi: float, rabi: float
) -> tuple[complex, complex, complex, complex]:
    """Project an initial block onto its +/- frequency components.

    Returns (ground_plus, ground_minus, excited_plus, excited_minus):

        g_pm = [(S +- d) g0 +- W e0] / (2 S)
        e_pm = [(S -+ d) e0 +- W g0] / (2 S)

    with d the block shift, W the coupling and S = sqrt(d^2 + W^2).
    """
    if eff_rabi <= 0:
        raise DegenerateBlockError(
            "block has zero coupling and zero shift; use bare-phase evolution"
        )
    g0, e0 = init.ground, init.excited
    two_s = 2.0 * eff_rabi
    ground_plus = ((eff_rabi + shift) * g0 + rabi * e0) / two_s
    ground_minus = ((eff_rabi - shift) * g0 - rabi * e0) / two_s
    excited_plus = ((eff_rabi - shift) * e0 + rabi * g0) / two_s
    excited_minus = ((eff_rabi + shift) * e0 - rabi * g0) / two_s
    return ground_plus, ground_minus, excited_plus, excited_minus


def dress_block(init: BlockAmplitudes, field: LightField, mass_kg: float) -> DressedBlock:
    """Diagonalize the block containing ``init`` and project onto it."""
    shift = block_detuning(init.momentum, field, mass_kg)
    split = effective_rabi(shift, field.rabi)
    low, high = dressed_frequencies(init.momentum, field, mass_kg)
    gp, gm, ep, em = block_coefficients(init, shift, split, field.rabi)
    return DressedBlock(
        shift=float(shift),
        effective_rabi=float(split),
        freq_low=float(low),
        freq_high=float(high),
        ground_plus=gp,
        ground_minus=gm,
        excited_plus=ep,
        excited_minus=em,
    )


def evolve_block_analytic(
    init: BlockAmplitudes, field: LightField, mass_kg: float, t: float
) -> BlockAmplitudes:
    """Exact amplitudes of one block after time t.

    The +/- components beat at the effective Rabi frequency under the
    common trace phase; the block norm is conserved identically.
    """
    if t < 0:
        raise DomainError(f"time must be non-negative, got {t}")
    dressed = dress_block(init, field, mass_kg)
    half = 0.5 * dressed.effective_rabi * t
    plus, minus = np.exp(1j * half), np.exp(-1j * half)
    trace_phase = np.exp(-0.5j * (dressed.freq_low + dressed.freq_high) * t)
    ground = (dressed.ground_plus * plus + dressed.ground_minus * minus) * trace_phase
    excited = (dressed.excited_plus * plus + dressed.excited_minus * minus) * trace_phase
    return BlockAmplitudes(init.momentum, complex(ground), complex(excited))


def _evolve_arrays(
    ground0: np.ndarray,
    excited0: np.ndarray,
    p: np.ndarray,
    field: LightField,
    mass_kg: float,
    t: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized exact evolution of all blocks by time t.

    Blocks with vanishing effective Rabi frequency reduce to a pure common
    phase (both bare frequencies coincide there), which is the limit the
    safe divisions below implement.
    """
    shift = block_detuning(p, field, mass_kg)
    split = effective_rabi(shift, field.rabi)
    trace = 2.0 * kinetic_frequency(p, mass_kg) + shift
    half = 0.5 * split * t
    cos_h, sin_h = np.cos(half), np.sin(half)
    safe = np.where(split > 0.0, split, 1.0)
    mix_shift = np.where(split > 0.0, shift / safe, 0.0) * sin_h
    mix_coupling = np.where(split > 0.0, field.rabi / safe, 0.0) * sin_h
    phase = np.exp(-0.5j * trace * t)
    ground = phase * ((cos_h + 1j * mix_shift) * ground0 + 1j * mix_coupling * excited0)
    excited = phase * (1j * mix_coupling * ground0 + (cos_h - 1j * mix_shift) * excited0)
    return ground, excited


def evolve_state(state: QuantumState, t: float) -> QuantumState:
    """Evolve a state to absolute time t (t >= state.time), exactly."""
    if t < state.time:
        raise DomainError("cannot evolve backwards in time")
    ground, excited = _evolve_arrays(
        state.ground, state.excited, state.grid.points(), state.field, state.mass_kg,
        t - state.time,
    )
    return QuantumState(state.grid, ground, excited, state.mass_kg, state.field, time=t)


def init_gaussian(
    spec: WavepacketSpec, grid: MomentumGrid, field: LightField, mass_kg: float
) -> QuantumState:
    """Discretize the Gaussian packet on the grid and renormalize.

    Raises :class:`GridCoverageError` when the grid truncates more than
    1e-6 of the packet's norm (grids should span the center +-5 widths).
    """
    if not mass_kg > 0:
        raise DomainError(f"mass must be positive, got {mass_kg}")
    pc, width = spec.center_momentum, spec.momentum_width
    tail = 0.5 * (
        math.erfc((grid.p_max - pc) / width) + math.erfc((pc - grid.p_min) / width)
    )
    if tail > 1e-6:
        raise GridCoverageError(
            f"grid [{grid.p_min:g}, {grid.p_max:g}] truncates {tail:.2e} of the "
            f"packet norm (center {pc:g}, width {width:g})"
        )
    p = grid.points()
    envelope = np.exp(-((p - pc) ** 2) / (2.0 * width**2)).astype(complex)
    norm = math.sqrt(float((np.abs(envelope) ** 2).sum()) * grid.spacing)
    envelope /= norm
    return QuantumState(
        grid=grid,
        ground=spec.ground_amp * envelope,
        excited=spec.excited_amp * envelope,
        mass_kg=mass_kg,
        field=field,
        time=0.0,
    )


def expectation_momentum(state: QuantumState) -> float:
    """Mean momentum; the excited component carries one photon recoil."""
    p = state.grid.points()
    dp = state.grid.spacing
    n_ground = np.abs(state.ground) ** 2
    n_excited = np.abs(state.excited) ** 2
    return float(((n_ground * p).sum() + (n_excited * (p + state.field.recoil_momentum)).sum()) * dp)


def simulate(
    spec: WavepacketSpec,
    grid: MomentumGrid,
    field: LightField,
    mass_kg: float,
    times: Sequence[float],
) -> Trajectory:
    """Propagate the packet to each requested time and record observables.

    Every block is evolved exactly from t=0; the mean position is the
    trapezoid quadrature of mean velocity over ``times``, so sampling
    should resolve the Rabi oscillation (about 200 points per period).
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or len(times) < 2:
        raise DomainError("need at least two sample times")
    if times[0] != 0.0:
        raise DomainError("sample times must start at 0")
    if not np.all(np.diff(times) > 0):
        raise DomainError("sample times must be strictly increasing")

    initial = init_gaussian(spec, grid, field, mass_kg)
    p = grid.points()
    n_t = len(times)
    mean_p = np.empty(n_t)
    norm = np.empty(n_t)
    pop_excited = np.empty(n_t)
    dp = grid.spacing
    recoil = field.recoil_momentum
    for i, t in enumerate(times):
        ground, excited = _evolve_arrays(
            initial.ground, initial.excited, p, field, mass_kg, float(t)
        )
        n_ground = np.abs(ground) ** 2
        n_excited = np.abs(excited) ** 2
        mean_p[i] = ((n_ground * p).sum() + (n_excited * (p + recoil)).sum()) * dp
        norm[i] = (n_ground + n_excited).sum() * dp
        pop_excited[i] = n_excited.sum() * dp
    mean_v = mean_p / mass_kg
    segments = 0.5 * (mean_v[1:] + mean_v[:-1]) * np.diff(times)
    mean_x = spec.initial_position + np.concatenate([[0.0], np.cumsum(segments)])
    return Trajectory(
        times=times,
        mean_momentum=mean_p,
        mean_velocity=mean_v,
        mean_position=mean_x,
        norm=norm,
        excited_population=pop_excited,
    )


def closed_form_displacement(
    t: float, spec: WavepacketSpec, field: LightField, mass_kg: float
) -> float:
    """Strong-coupling mean position: ballistic drift plus coherent walking.

        x(t) = x0 + pc t / M + (n0 - n1) (hbar k / 2M) (t - sin(W t) / W)

    Valid when the coupling dominates every block shift on the packet.
    """
    if t < 0:
        raise DomainError(f"time must be non-negative, got {t}")
    if not mass_kg > 0:
        raise DomainError(f"mass must be positive, got {mass_kg}")
    rabi = field.rabi
    if rabi <= 0:
        raise DomainError("closed-form displacement needs a positive coupling "
                          "(use free flight for an uncoupled atom)")
    drift = spec.population_difference * field.recoil_momentum / (2.0 * mass_kg)
    return (
        spec.initial_position
        + spec.center_momentum * t / mass_kg
        + drift * (t - math.sin(rabi * t) / rabi)
    )


def closed_form_velocity(
    t: float, spec: WavepacketSpec, field: LightField, mass_kg: float
) -> float:
    """Strong-coupling mean velocity, periodic with the Rabi period."""
    if t < 0:
        raise DomainError(f"time must be non-negative, got {t}")
    if not mass_kg > 0:
        raise DomainError(f"mass must be positive, got {mass_kg}")
    drift = spec.population_difference * field.recoil_momentum / (2.0 * mass_kg)
    return spec.center_momentum / mass_kg + drift * (1.0 - math.cos(field.rabi * t))


def average_speed(
    species: Species,
    ground_fraction: float = 1.0,
    excited_fraction: float = 0.0,
    center_momentum: float = 0.0,
    consts: PhysicalConstants = PAPER_CONSTANTS,
) -> float:
    """Rabi-period-averaged drift speed of a species.

    v = pc / M + (n0 - n1) hbar k / (2 M); for a ground-state atom at rest
    this is h / (2 M wavelength).
    """
    if not (0.0 <= ground_fraction <= 1.0 and 0.0 <= excited_fraction <= 1.0):
        raise DomainError("populations must lie in [0, 1]")
    if abs(ground_fraction + excited_fraction - 1.0) > _NORM_TOL:
        raise DomainError("populations must sum to 1")
    mass_kg = mass_to_si(species.mass_u, consts)
    k = wavenumber(species.wavelength_nm * 1e-9)
    return (
        center_momentum / mass_kg
        + (ground_fraction - excited_fraction) * consts.hbar * k / (2.0 * mass_kg)
    )
