import math

import numpy as np
import pytest

from lightwalk import (
    HBAR,
    BlockAmplitudes,
    IntegratorConfig,
    IntegratorError,
    LightField,
    block_detuning,
    block_hamiltonian,
    effective_rabi,
    embedded_table1,
    evolve_block_analytic,
    evolve_block_numeric,
    mass_to_si,
    rk4_propagate,
    suggested_dt,
    wavenumber,
)

RB87 = embedded_table1().get("Rb-87")
MASS = mass_to_si(RB87.mass_u)
WAVELENGTH = RB87.wavelength_nm * 1e-9
RECOIL_RATE = HBAR * wavenumber(WAVELENGTH) ** 2 / (2 * MASS)


def field_with_shift(shift, rabi=1.0e6):
    """Field whose p=0 block has the requested shift."""
    return LightField.from_wavelength(WAVELENGTH, rabi=rabi, detuning=shift - RECOIL_RATE)


def test_config_validation():
    with pytest.raises(IntegratorError):
        IntegratorConfig(dt=0.0)
    with pytest.raises(IntegratorError):
        IntegratorConfig(dt=1e-9, method_tag="euler")
    with pytest.raises(IntegratorError):
        IntegratorConfig(dt=1e-9, max_steps=0)


def test_step_bounds_enforced_at_entry():
    rabi = 1e6
    field = field_with_shift(0.0, rabi)
    init = BlockAmplitudes(0.0, 1.0, 0.0)
    with pytest.raises(IntegratorError):
        evolve_block_numeric(init, field, MASS, 1e-6, IntegratorConfig(dt=0.02 / rabi))
    # rabi*dt fine but the effective splitting is too fast for the step
    stiff = field_with_shift(5 * rabi, rabi)
    with pytest.raises(IntegratorError):
        evolve_block_numeric(init, stiff, MASS, 1e-6, IntegratorConfig(dt=0.009 / rabi))


def test_max_steps_overflow():
    rabi = 1e6
    field = field_with_shift(0.0, rabi)
    cfg = IntegratorConfig(dt=0.002 / rabi, max_steps=10)
    with pytest.raises(IntegratorError):
        evolve_block_numeric(BlockAmplitudes(0.0, 1.0, 0.0), field, MASS, 1e-3, cfg)


def test_zero_time_is_identity():
    field = field_with_shift(0.3e6)
    init = BlockAmplitudes(1e-28, 0.6, 0.8j)
    out = evolve_block_numeric(init, field, MASS, 0.0, IntegratorConfig(dt=1e-9))
    assert out == init


def test_resonant_pi_pulse():
    rabi = 1e6
    field = field_with_shift(0.0, rabi)
    init = BlockAmplitudes(0.0, 1.0, 0.0)
    out = evolve_block_numeric(init, field, MASS, math.pi / rabi, IntegratorConfig(0.002 / rabi))
    assert abs(out.excited) ** 2 == pytest.approx(1.0, abs=1e-8)


def test_matches_analytic_at_double_detuning():
    rng = np.random.default_rng(3)
    rabi = 1e6
    field = field_with_shift(2 * rabi, rabi)
    raw = rng.normal(size=2) + 1j * rng.normal(size=2)
    raw /= np.linalg.norm(raw)
    init = BlockAmplitudes(0.0, complex(raw[0]), complex(raw[1]))
    t = 10 * 2 * math.pi / rabi
    numeric = evolve_block_numeric(init, field, MASS, t, IntegratorConfig(0.002 / rabi))
    exact = evolve_block_analytic(init, field, MASS, t)
    assert abs(numeric.ground - exact.ground) < 1e-8
    assert abs(numeric.excited - exact.excited) < 1e-8


def test_norm_drift_small():
    rabi = 1e6
    field = field_with_shift(0.0, rabi)
    init = BlockAmplitudes(0.0, 1.0, 0.0)
    out = evolve_block_numeric(
        init, field, MASS, 10 * 2 * math.pi / rabi, IntegratorConfig(0.01 / rabi)
    )
    assert abs(out.norm_sq - 1.0) < 1e-8


def test_fourth_order_convergence():
    rabi = 1e6
    field = field_with_shift(2 * rabi, rabi)
    split = float(effective_rabi(2 * rabi, rabi))
    init = BlockAmplitudes(0.0, 1.0, 0.0)
    t = 10 * 2 * math.pi / rabi
    exact = evolve_block_analytic(init, field, MASS, t)
    errors = []
    for dt in (0.02 / split, 0.01 / split):
        numeric = evolve_block_numeric(init, field, MASS, t, IntegratorConfig(dt))
        errors.append(
            max(abs(numeric.ground - exact.ground), abs(numeric.excited - exact.excited))
        )
    factor = errors[0] / errors[1]
    assert 12.0 <= factor <= 20.0


def test_randomized_agreement_batch():
    # 100 random (shift, coupling, init) tuples, each over 10 of its own periods
    rng = np.random.default_rng(99)
    n = 100
    rabis = rng.uniform(0.2e6, 5e6, size=n)
    shifts = rng.uniform(-3.0, 3.0, size=n) * rabis
    inits = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    inits /= np.linalg.norm(inits, axis=1, keepdims=True)

    fields = [field_with_shift(shifts[i], rabis[i]) for i in range(n)]
    matrices = np.stack([block_hamiltonian(0.0, f, MASS) for f in fields])
    periods = 2 * math.pi / rabis
    dts = np.array([suggested_dt(f, shift_bound=shifts[i]) for i, f in enumerate(fields)])
    out = rk4_propagate(matrices, inits, 10 * periods, dts)

    worst = 0.0
    for i in range(n):
        block = BlockAmplitudes(0.0, complex(inits[i, 0]), complex(inits[i, 1]))
        exact = evolve_block_analytic(block, fields[i], MASS, 10 * periods[i])
        worst = max(
            worst, abs(out[i, 0] - exact.ground), abs(out[i, 1] - exact.excited)
        )
    assert worst < 1e-7


def test_suggested_dt_resolves_fastest_scale():
    field = field_with_shift(2e6, 1e6)
    dt = suggested_dt(field, shift_bound=2e6)
    split = float(effective_rabi(2e6, 1e6))
    assert split * dt == pytest.approx(0.002, rel=1e-12)


def test_hamiltonian_matches_block_shift():
    field = field_with_shift(0.7e6)
    p = 0.3 * HBAR * wavenumber(WAVELENGTH)
    matrix = block_hamiltonian(p, field, MASS)
    assert matrix[0, 1] == matrix[1, 0] == -field.rabi / 2
    assert (matrix[1, 1] - matrix[0, 0]).real == pytest.approx(
        float(block_detuning(p, field, MASS)), rel=1e-12
    )
