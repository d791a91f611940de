"""Differences of squares of upper-triangular 2x2 integer matrices."""
from ._backend import BACKEND
from .classify import (CaseTag, Kind, NotRepresentableVerdict, Obstruction, Representable,
                       decide, m_of)
from .errors import InternalError, NotRepresentable, ResourceError
from .intdos import (DosRep, LinearSolution, canonical_dos, enumerate_dos, gcd_nonneg, is_dos,
                     solve_linear)
from .matrix import Target, UTMat, Witness, diff_of_squares, square, target, verify_witness
from .modtables import (ModTable, emit_table, is_representable_mod, nonrep_diag4_mod16,
                        representable_mod)
from .oracle import brute_decide, brute_g
from .witness import build

__version__ = "0.1.0"
