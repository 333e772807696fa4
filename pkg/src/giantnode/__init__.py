"""Single-photon scattering and quantum-network primitives for a giant-atom node
coupled to a dual-rail waveguide."""

__version__ = "0.1.0"

from .core import NodeParams, ParameterError, Port, ScatteringMatrix  # noqa: E402
from .solver import ResonanceSingularity, scattering_matrix  # noqa: E402

__all__ = ["NodeParams", "ParameterError", "Port", "ScatteringMatrix", "ResonanceSingularity",
           "scattering_matrix", "__version__"]
