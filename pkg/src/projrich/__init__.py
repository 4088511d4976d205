"""Projected Richardson varieties versus affine Schubert varieties, computed exactly."""

from .root_data import build_root_system, RootSystem
from .coxeter import weyl_group, WeylGroup, AffineWeylGroup, WeylElt, AffineElt

__all__ = [
    "build_root_system", "RootSystem", "weyl_group", "WeylGroup",
    "AffineWeylGroup", "WeylElt", "AffineElt",
]
__version__ = "0.1.0"
