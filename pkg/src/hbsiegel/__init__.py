"""Exact Hilbert-Blumenthal to Siegel modular embedding toolkit."""

__version__ = "0.1.0"

from .numfield import FieldElement, NumberField, RealEmbeddingSet, nf_create  # noqa: E402
from .symplectic import GSpElement, HBMatrix, standard_form  # noqa: E402
from .modembed import HBPoint, SiegelPoint, iota_bar, iota_point  # noqa: E402
from .torsion import HBTorsionPoint, TorsionPoint, transport  # noqa: E402
from .symrep import DualVector, SymTensor  # noqa: E402

__all__ = [
    "FieldElement", "NumberField", "RealEmbeddingSet", "nf_create",
    "GSpElement", "HBMatrix", "standard_form",
    "HBPoint", "SiegelPoint", "iota_bar", "iota_point",
    "HBTorsionPoint", "TorsionPoint", "transport",
    "DualVector", "SymTensor",
]
