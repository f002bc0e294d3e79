"""regulus: tube combinatorics and minimal (co)tilting decompositions for
tame hereditary module categories.

The package is organised bottom-up:

- :mod:`regulus.tubes` — tube configurations, segments, the shift ``tau``.
- :mod:`regulus.linalg` — exact integer linear algebra (rank, kernel).
- :mod:`regulus.homext` — Hom/Ext dimensions: closed formulas, the Euler
  form, and an independent matrix oracle.
- :mod:`regulus.tilting` — branch modules, wings, large tilting/cotilting
  descriptors, branch-module enumeration.
- :mod:`regulus.localization` — generator systems for localized classes,
  wide-closure descriptions, filtration witnesses, and the
  generated-class/perpendicular-class cross-check.
- :mod:`regulus.kronecker` — the Kronecker-algebra catalogs: epimorphism
  classes, silting entries, and the extension decision matrix.
- :mod:`regulus.verify` — batch verification suites over exhaustively
  enumerated inputs.
- :mod:`regulus.cli` — the ``regulus`` command-line front end.
"""

from regulus.homext import euler_form, ext_dim, hom_dim
from regulus.tilting import (
    BranchModule,
    Pair,
    build_cotilting,
    build_tilting,
    enumerate_branch_modules,
    is_branch_module,
    is_minimal_cotilting,
    is_minimal_tilting,
)
from regulus.tubes import Segment, TubeConfig, tau

__version__ = "1.0.0"

__all__ = [
    "BranchModule",
    "Pair",
    "Segment",
    "TubeConfig",
    "build_cotilting",
    "build_tilting",
    "enumerate_branch_modules",
    "euler_form",
    "ext_dim",
    "hom_dim",
    "is_branch_module",
    "is_minimal_cotilting",
    "is_minimal_tilting",
    "tau",
    "__version__",
]
