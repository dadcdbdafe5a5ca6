"""Exact integer calculus for grape clusters on the hexagonal lattice,
slip moves, cyclic branched covers, and singular-fiber neighborhoods."""

from .congruence import apply_certificate, find_congruence, verify_certificate
from .hexgrapes import GrapeCluster, HexCell, linking_form, render_svg
from .intform import IntSymForm, InvariantBundle
from .monodromy import FiberType, SL2Matrix, classify, evaluate, fiber_word
from .slips import SlipMove, SlipTrace, apply, enumerate_moves, is_legal, search

__all__ = [
    "GrapeCluster", "HexCell", "linking_form", "render_svg",
    "IntSymForm", "InvariantBundle",
    "apply_certificate", "find_congruence", "verify_certificate",
    "FiberType", "SL2Matrix", "classify", "evaluate", "fiber_word",
    "SlipMove", "SlipTrace", "apply", "enumerate_moves", "is_legal", "search",
]

__version__ = "0.1.0"
