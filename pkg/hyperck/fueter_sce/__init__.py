"""
The Fueter-Sce map on GPS-regular stems, its constants, and the verifiers of
the commutative diagrams linking it to the CK, GCK and HGCK extensions.
"""

from hyperck.fueter_sce.constants import (
    FSConstants,
    c_q,
    double_factorial,
    fs_constants,
    gamma_q,
    require_odd_q,
)
from hyperck.fueter_sce.diagrams import (
    dirac_of_laplacian_power,
    fueter_sce_map,
    laplacian_power_ambient,
    laplacian_power_stem,
    verify_diagram_H,
    verify_diagram_M,
    verify_diagram_MH,
)

__all__ = [
    # Constants
    "FSConstants",
    "fs_constants",
    "c_q",
    "gamma_q",
    "double_factorial",
    "require_odd_q",
    # Map
    "laplacian_power_stem",
    "laplacian_power_ambient",
    "dirac_of_laplacian_power",
    "fueter_sce_map",
    # Diagrams
    "verify_diagram_M",
    "verify_diagram_MH",
    "verify_diagram_H",
]
