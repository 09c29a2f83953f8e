"""Coherent atomic walking in traveling light, and purification planning on top of it."""

from .catalog import (
    CATALOG_HEADER,
    Catalog,
    Species,
    embedded_table1,
    load_catalog,
    parse_catalog,
    serialize_catalog,
)
from .constants import (
    CODATA_CONSTANTS,
    CONSTANT_SETS,
    HBAR,
    H_PLANCK,
    PAPER_CONSTANTS,
    PhysicalConstants,
    mass_to_si,
    wavenumber,
)
from .dynamics import (
    BandStructure,
    BlockAmplitudes,
    DressedBlock,
    LightField,
    MomentumGrid,
    QuantumState,
    Trajectory,
    WavepacketSpec,
    average_speed,
    band_structure,
    block_coefficients,
    block_detuning,
    closed_form_displacement,
    closed_form_velocity,
    dress_block,
    dressed_frequencies,
    effective_rabi,
    evolve_block_analytic,
    evolve_state,
    expectation_momentum,
    init_gaussian,
    kinetic_frequency,
    simulate,
)
from .errors import (
    CatalogError,
    CatalogParseError,
    CatalogValidationError,
    DegenerateBlockError,
    DomainError,
    GridCoverageError,
    IntegratorError,
)
from .oracle import (
    IntegratorConfig,
    block_hamiltonian,
    evolve_block_numeric,
    rk4_propagate,
    suggested_dt,
)
from .planner import (
    LADDER_GROUPS,
    MixtureMember,
    PairSeparation,
    SeparationReport,
    SpeedEntry,
    member_speed,
    packet_width,
    pairwise_gap,
    separation_report,
    speed_ladder,
    speed_table,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG_HEADER",
    "CODATA_CONSTANTS",
    "CONSTANT_SETS",
    "Catalog",
    "CatalogError",
    "CatalogParseError",
    "CatalogValidationError",
    "BandStructure",
    "BlockAmplitudes",
    "DegenerateBlockError",
    "DomainError",
    "DressedBlock",
    "GridCoverageError",
    "HBAR",
    "H_PLANCK",
    "IntegratorConfig",
    "IntegratorError",
    "LADDER_GROUPS",
    "LightField",
    "MixtureMember",
    "MomentumGrid",
    "PAPER_CONSTANTS",
    "PairSeparation",
    "PhysicalConstants",
    "QuantumState",
    "SeparationReport",
    "Species",
    "SpeedEntry",
    "Trajectory",
    "WavepacketSpec",
    "average_speed",
    "band_structure",
    "block_coefficients",
    "block_detuning",
    "block_hamiltonian",
    "closed_form_displacement",
    "closed_form_velocity",
    "dress_block",
    "dressed_frequencies",
    "effective_rabi",
    "embedded_table1",
    "evolve_block_analytic",
    "evolve_block_numeric",
    "evolve_state",
    "expectation_momentum",
    "init_gaussian",
    "kinetic_frequency",
    "load_catalog",
    "mass_to_si",
    "member_speed",
    "packet_width",
    "pairwise_gap",
    "parse_catalog",
    "rk4_propagate",
    "separation_report",
    "serialize_catalog",
    "simulate",
    "speed_ladder",
    "speed_table",
    "suggested_dt",
    "wavenumber",
]
