"""Frequency-bin single-photon components simulated as scattering networks."""

from ._core import (
    DeviceConfig,
    FidelityResult,
    FrequencyGrid,
    NetlistError,
    ScatteringElement,
    effective_transmission,
    extract_rotation,
    fidelity,
    fidelity_sweep,
    format_netlist,
    frequency_beamsplitter,
    gaussian_overlap,
    ideal_rotation,
    mz_backward,
    mz_forward,
    rf_hwp,
    run_netlist,
)

__all__ = [
    "DeviceConfig",
    "FidelityResult",
    "FrequencyGrid",
    "NetlistError",
    "ScatteringElement",
    "effective_transmission",
    "extract_rotation",
    "fidelity",
    "fidelity_sweep",
    "format_netlist",
    "frequency_beamsplitter",
    "gaussian_overlap",
    "ideal_rotation",
    "mz_backward",
    "mz_forward",
    "rf_hwp",
    "run_netlist",
]
