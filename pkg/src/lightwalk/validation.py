"""Acceptance suite: self-contained checks behind the ``validate`` command.

Each check returns a :class:`CheckResult`; the CLI prints one PASS/FAIL
line per check and the pytest acceptance module asserts them. Reference
values that the checks compare against (the published speed column, the
figure-scale displacement gaps) live here and nowhere else; the catalog
itself never stores speeds.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .catalog import embedded_table1, parse_catalog, serialize_catalog
from .constants import HBAR, mass_to_si, wavenumber
from .dynamics import (
    BlockAmplitudes,
    LightField,
    MomentumGrid,
    WavepacketSpec,
    average_speed,
    block_detuning,
    closed_form_displacement,
    dressed_frequencies,
    effective_rabi,
    evolve_block_analytic,
    simulate,
)
from .errors import CatalogParseError
from .oracle import IntegratorConfig, block_hamiltonian, evolve_block_numeric, rk4_propagate
from .planner import MixtureMember, pairwise_gap

# Reference speed column of the embedded dataset, m/s, keyed by species.
# The Eu-153 entry is internally inconsistent with its own printed mass and
# wavelength (it back-solves to the Eu-152 mass); it is kept verbatim so the
# discrepancy is measured, not hidden.
REFERENCE_SPEEDS = {
    "Li-7": 0.042153,
    "C-12": 0.099775,
    "Ne-20": 0.01583,
    "Mg-24": 0.0290,
    "Mg-25": 0.027838,
    "Mg-26": 0.02677,
    "Si-28": 0.028202,
    "Ca-40": 0.011745,
    "Ti-48": 0.0082515,
    "Fe-56": 0.014282,
    "Co-59": 0.0095446,
    "Ga-69": 0.0071367,
    "Rb-85": 0.0029952,
    "Rb-87": 0.0029264,
    "Sr-87": 0.0049544,
    "Nb-93": 0.0060399,
    "Ag-107": 0.0056564,
    "Cd-114": 0.0076122,
    "In-115": 0.0042092,
    "Cs-133": 0.0017517,
    "Eu-153": 0.0028011,
    "Yb-173": 0.0020645,
    "Au-197": 0.0037639,
    "U-238": 0.0023247,
}

RB_GAP_NOTE = (
    "NOTE: Rb-85/Rb-87 gap at 500 us computed from the embedded masses and "
    "wavelengths is 34.4 nm; the commonly quoted ~50 nm for this pair is not "
    "reproducible from the same data and is deliberately not matched"
)

EU_NOTE = (
    "the Eu-153 reference speed 0.0028011 m/s is inconsistent with its own "
    "mass and wavelength (it back-solves to the Eu-152 mass 151.9218 u); "
    "h/(2 M lambda) gives 0.0027828 m/s, a 0.65% residual"
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def format_line(result: CheckResult) -> str:
    status = "PASS" if result.passed else "FAIL"
    return f"{status} {result.name}: {result.detail}"


def _reference_field(rabi: float = 1.0e6, shift: float = 0.0) -> tuple[LightField, float]:
    """Rb-87-like field tuned so the p=0 block shift equals ``shift``."""
    species = embedded_table1().get("Rb-87")
    mass_kg = mass_to_si(species.mass_u)
    wavelength = species.wavelength_nm * 1e-9
    recoil_rate = HBAR * wavenumber(wavelength) ** 2 / (2.0 * mass_kg)
    field = LightField.from_wavelength(wavelength, rabi=rabi, detuning=shift - recoil_rate)
    return field, mass_kg


def check_table1_speeds() -> CheckResult:
    """Golden speeds: h/(2 M lambda) matches the reference column to 0.05%."""
    started = time.perf_counter()
    catalog = embedded_table1()
    residuals = {
        sp.name: abs(average_speed(sp) - REFERENCE_SPEEDS[sp.name])
        / REFERENCE_SPEEDS[sp.name]
        for sp in catalog
    }
    elapsed = time.perf_counter() - started
    worst = max(residuals, key=residuals.get)
    failing = {name: r for name, r in residuals.items() if r > 5e-4}
    others = max(r for name, r in residuals.items() if name not in failing) if failing else None
    passed = not failing and elapsed < 1.0
    if failing:
        detail = (
            f"{24 - len(failing)}/24 rows within 0.05% (worst of those {others:.2e}); "
            + "; ".join(f"{n} off by {r:.2%}" for n, r in sorted(failing.items()))
            + f" -- {EU_NOTE}"
        )
    else:
        detail = f"24/24 rows within 0.05% (worst {residuals[worst]:.2e}, {worst})"
    return CheckResult("table1-speeds", passed, detail + f"; {elapsed:.2f}s")


def check_oracle_equivalence() -> CheckResult:
    """Analytic block evolution vs RK4 cross-check, plus 4th-order scaling."""
    started = time.perf_counter()
    rng = np.random.default_rng(20250809)
    rabi = 1.0e6
    period = 2.0 * math.pi / rabi
    worst_error = 0.0
    for ratio in (0.0, 0.5, 2.0):
        field, mass_kg = _reference_field(rabi, shift=ratio * rabi)
        matrix = block_hamiltonian(0.0, field, mass_kg)
        inits = rng.normal(size=(100, 2)) + 1j * rng.normal(size=(100, 2))
        inits /= np.linalg.norm(inits, axis=1, keepdims=True)
        y = inits.copy()
        elapsed_t = 0.0
        for checkpoint in (2, 4, 6, 8, 10):
            target = checkpoint * period
            y = rk4_propagate(matrix, y, target - elapsed_t, 0.002 / rabi)
            elapsed_t = target
            for row in range(100):
                block = BlockAmplitudes(0.0, complex(inits[row, 0]), complex(inits[row, 1]))
                exact = evolve_block_analytic(block, field, mass_kg, target)
                err = max(
                    abs(y[row, 0] - exact.ground), abs(y[row, 1] - exact.excited)
                )
                worst_error = max(worst_error, err)

    # 4th-order convergence, measured on the stiffest of the three ratios
    field, mass_kg = _reference_field(rabi, shift=2.0 * rabi)
    split = float(effective_rabi(2.0 * rabi, rabi))
    block = BlockAmplitudes(0.0, 1.0, 0.0)
    exact = evolve_block_analytic(block, field, mass_kg, 10 * period)
    exact_vec = np.array([exact.ground, exact.excited])
    errors = []
    for dt in (0.02 / split, 0.01 / split):
        numeric = evolve_block_numeric(block, field, mass_kg, 10 * period, IntegratorConfig(dt))
        errors.append(
            float(np.abs(np.array([numeric.ground, numeric.excited]) - exact_vec).max())
        )
    factor = errors[0] / errors[1]
    elapsed = time.perf_counter() - started
    passed = worst_error < 1e-8 and 12.0 <= factor <= 20.0 and elapsed < 10.0
    detail = (
        f"max amplitude error {worst_error:.2e} over 10 periods x 3 shift ratios "
        f"x 100 inits; halving dt shrinks the error {factor:.1f}x; {elapsed:.1f}s"
    )
    return CheckResult("oracle-equivalence", passed, detail)


def check_strong_coupling() -> CheckResult:
    """Full grid simulation against the strong-coupling closed forms."""
    started = time.perf_counter()
    species = embedded_table1().get("Rb-87")
    mass_kg = mass_to_si(species.mass_u)
    wavelength = species.wavelength_nm * 1e-9
    recoil = HBAR * wavenumber(wavelength)
    spec = WavepacketSpec(center_momentum=0.0, momentum_width=0.05 * recoil)
    grid = MomentumGrid.for_packet(spec, half_span=6.0, n_points=4096)
    probe = LightField.from_wavelength(wavelength, rabi=1.0, detuning=0.0)
    max_shift = float(np.abs(block_detuning(grid.points(), probe, mass_kg)).max())
    field = LightField.from_wavelength(wavelength, rabi=100.0 * max_shift, detuning=0.0)
    period = field.period
    times = np.linspace(0.0, 3.0 * period, 3 * 200 + 1)
    trajectory = simulate(spec, grid, field, mass_kg, times)
    closed = np.array(
        [closed_form_displacement(t, spec, field, mass_kg) for t in times]
    )
    scale = HBAR * abs(field.wavenumber) * period / (2.0 * mass_kg)
    displacement_err = float(np.abs(trajectory.mean_position - closed).max()) / scale
    mean_speed = (trajectory.mean_position[-1] - trajectory.mean_position[0]) / times[-1]
    expected = average_speed(species)
    speed_err = abs(mean_speed - expected) / expected
    elapsed = time.perf_counter() - started
    passed = displacement_err < 0.01 and speed_err < 0.005 and elapsed < 30.0
    detail = (
        f"displacement within {displacement_err:.2e} of one period's drift "
        f"(gate 1e-2); period-averaged speed off by {speed_err:.2e} (gate 5e-3); "
        f"{elapsed:.1f}s"
    )
    return CheckResult("strong-coupling-forms", passed, detail)


def check_conservation() -> CheckResult:
    """Norms along trajectories, per-block norms, spectral identities."""
    rng = np.random.default_rng(11)
    field, mass_kg = _reference_field(rabi=1.0e6, shift=0.3e6)
    recoil = abs(field.recoil_momentum)

    spec = WavepacketSpec(center_momentum=0.2 * recoil, momentum_width=0.05 * recoil)
    grid = MomentumGrid.for_packet(spec, n_points=1024)
    times = np.linspace(0.0, 3.0 * field.period, 301)
    trajectory = simulate(spec, grid, field, mass_kg, times)
    norm_drift = float(np.abs(trajectory.norm - 1.0).max())

    block_drift = 0.0
    momenta = rng.uniform(-10.0 * recoil, 10.0 * recoil, size=200)
    for p in momenta:
        raw = rng.normal(size=2) + 1j * rng.normal(size=2)
        raw /= np.linalg.norm(raw)
        block = BlockAmplitudes(float(p), complex(raw[0]), complex(raw[1]))
        evolved = evolve_block_analytic(block, field, mass_kg, float(rng.uniform(0, 20) * field.period))
        block_drift = max(block_drift, abs(evolved.norm_sq - block.norm_sq))

    p = rng.uniform(-10.0 * recoil, 10.0 * recoil, size=10_000)
    low, high = dressed_frequencies(p, field, mass_kg)
    shift = block_detuning(p, field, mass_kg)
    trace = 2.0 * (p * p / (2.0 * mass_kg * HBAR)) + shift
    split = effective_rabi(shift, field.rabi)
    sum_err = float(np.abs((low + high - trace) / trace).max())
    diff_err = float(np.abs((high - low - split) / split).max())

    passed = (
        norm_drift < 1e-9 and block_drift < 1e-12 and sum_err < 1e-12 and diff_err < 1e-12
    )
    detail = (
        f"trajectory norm drift {norm_drift:.1e} (gate 1e-9); per-block norm "
        f"drift {block_drift:.1e} (gate 1e-12); spectral identities to "
        f"{max(sum_err, diff_err):.1e} on 1e4 random blocks (gate 1e-12)"
    )
    return CheckResult("conservation", passed, detail)


def check_figure3_gaps() -> CheckResult:
    """Desk-scale displacement gaps from the period-averaged speeds."""
    catalog = embedded_table1()

    def gap(name_a: str, name_b: str, t: float) -> float:
        return pairwise_gap(
            MixtureMember(catalog.get(name_a)), MixtureMember(catalog.get(name_b)), t
        )

    cases = [
        ("Mg-24", "Mg-25", 42e-6, 48.8e-9, 0.5e-9),
        ("U-238", "Yb-173", 30e-6, 7.8e-9, 0.2e-9),
        ("Rb-85", "Rb-87", 500e-6, 34.4e-9, 0.5e-9),
    ]
    passed = True
    parts = []
    for name_a, name_b, t, expected, tol in cases:
        value = gap(name_a, name_b, t)
        ok = abs(value - expected) <= tol
        passed = passed and ok
        parts.append(f"{name_a}/{name_b}@{t * 1e6:g}us = {value * 1e9:.2f} nm")
    detail = "; ".join(parts) + f"; {RB_GAP_NOTE}"
    return CheckResult("figure3-gaps", passed, detail)


def check_resonant_rabi() -> CheckResult:
    """Resonant block flops as sin^2 of half the coupling phase."""
    rabi = 1.0e6
    field, mass_kg = _reference_field(rabi, shift=0.0)
    block = BlockAmplitudes(0.0, 1.0, 0.0)
    period = 2.0 * math.pi / rabi

    analytic_err = 0.0
    for t in np.linspace(0.0, 2.0 * period, 41):
        evolved = evolve_block_analytic(block, field, mass_kg, float(t))
        analytic_err = max(
            analytic_err, abs(abs(evolved.excited) ** 2 - math.sin(rabi * t / 2.0) ** 2)
        )

    cfg = IntegratorConfig(dt=0.002 / rabi)
    oracle_err = 0.0
    for t in (0.25 * period, 0.5 * period, period, 1.75 * period):
        numeric = evolve_block_numeric(block, field, mass_kg, float(t), cfg)
        oracle_err = max(
            oracle_err, abs(abs(numeric.excited) ** 2 - math.sin(rabi * t / 2.0) ** 2)
        )
    half_period = evolve_block_numeric(block, field, mass_kg, math.pi / rabi, cfg)
    transfer_defect = abs(abs(half_period.excited) ** 2 - 1.0)

    passed = analytic_err < 1e-9 and oracle_err < 1e-8 and transfer_defect < 1e-8
    detail = (
        f"analytic population error {analytic_err:.1e} (gate 1e-9); oracle "
        f"{oracle_err:.1e} (gate 1e-8); full transfer defect at the half-period "
        f"pulse {transfer_defect:.1e}"
    )
    return CheckResult("resonant-rabi", passed, detail)


def _random_catalog_text(rng: np.random.Generator) -> str:
    lines = ["name,mass_u,transition,wavelength_nm"]
    n = int(rng.integers(0, 12))
    for i in range(n):
        mass = float(rng.uniform(1.0, 300.0))
        wavelength = float(rng.uniform(100.0, 2000.0))
        label = f"{int(rng.integers(1, 8))}s {int(rng.integers(1, 4))}S1/2"
        lines.append(f"Sp{i}-{int(rng.integers(1, 300))},{mass!r},{label},{wavelength!r}")
    return "\n".join(lines) + "\n"


def check_catalog_roundtrip() -> CheckResult:
    """serialize/parse is the identity; bad lines are located by line number."""
    rng = np.random.default_rng(7)
    mismatches = 0
    for _ in range(1000):
        catalog = parse_catalog(_random_catalog_text(rng))
        if parse_catalog(serialize_catalog(catalog)).entries != catalog.entries:
            mismatches += 1

    bad_line_hits = 0
    trials = 50
    for _ in range(trials):
        text = _random_catalog_text(rng)
        lines = text.splitlines()
        position = int(rng.integers(1, len(lines) + 1))
        lines.insert(position, "Bad-1,not_a_number,label,500.0")
        try:
            parse_catalog("\n".join(lines) + "\n")
        except CatalogParseError as exc:
            if exc.line == position + 1:
                bad_line_hits += 1
    passed = mismatches == 0 and bad_line_hits == trials
    detail = (
        f"1000 randomized catalogs round-trip field-exactly ({mismatches} "
        f"mismatches); {bad_line_hits}/{trials} malformed lines rejected with "
        f"the correct line number"
    )
    return CheckResult("catalog-roundtrip", passed, detail)


def check_cli_determinism() -> CheckResult:
    """Identical flags produce byte-identical output."""
    from . import cli  # deferred: cli imports this module for `validate`

    commands = [
        ["speeds"],
        ["bands", "--species", "Rb-87", "--points", "64"],
        ["simulate", "--species", "Mg-24", "--t-max", "2e-6", "--steps", "50"],
        ["separate", "--pair", "Mg-24,Mg-25,Mg-26", "--t", "42e-6"],
    ]
    stable = True
    for argv in commands:
        code_a, out_a = cli.run(argv)
        code_b, out_b = cli.run(argv)
        if code_a != 0 or code_b != 0 or out_a.encode() != out_b.encode():
            stable = False
    detail = f"{len(commands)} commands re-run byte-identically" if stable else (
        "output differed between identical runs"
    )
    return CheckResult("cli-determinism", stable, detail)


ALL_CHECKS: tuple[tuple[str, Callable[[], CheckResult]], ...] = (
    ("table1-speeds", check_table1_speeds),
    ("oracle-equivalence", check_oracle_equivalence),
    ("strong-coupling-forms", check_strong_coupling),
    ("conservation", check_conservation),
    ("figure3-gaps", check_figure3_gaps),
    ("resonant-rabi", check_resonant_rabi),
    ("catalog-roundtrip", check_catalog_roundtrip),
    ("cli-determinism", check_cli_determinism),
)


def run_checks(names: Sequence[str] | None = None) -> list[CheckResult]:
    table = dict(ALL_CHECKS)
    if names:
        unknown = [n for n in names if n not in table]
        if unknown:
            raise KeyError(f"unknown check(s): {', '.join(unknown)}")
        selected = [(n, table[n]) for n in names]
    else:
        selected = list(ALL_CHECKS)
    return [func() for _, func in selected]
