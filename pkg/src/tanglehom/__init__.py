"""Exact homology of double branched covers and a knot-closure harness for genus-1 tangles."""

from .bracket import bracket_determinant, bracket_polynomial, jones_polynomial
from .branched import (CoverIndex, SurgeryCurve, SurgeryPresentation, double_cover_group, goeritz_matrix,
                       handlebody, knot_determinant, krebes_even_cover, krebes_odd_cover, load_presentation,
                       surgery_h1)
from .diagram import (DiagramError, LinkDiagram, braid_closure, checkerboard, faces, linking_number,
                      parse_pd, writhe)
from .intlinalg import (AbelianGroup, IntMatrix, SnfResult, cokernel_group, determinant, smith_normal_form,
                        torsion_order)
from .moves import MoveSpec, apply_reidemeister, random_move
from .tangle import (AnnulusTangle, ClosureSpec, ClosureVerdict, Passage, Verdict, close_tangle,
                     closure_linking, krebes_A, load_closure_spec, load_tangle, obstruction_verdict,
                     scan_closures, trivial_tangle)

__all__ = [
    "AbelianGroup", "AnnulusTangle", "ClosureSpec", "ClosureVerdict", "CoverIndex", "DiagramError",
    "IntMatrix", "LinkDiagram", "MoveSpec", "Passage", "SnfResult", "SurgeryCurve", "SurgeryPresentation",
    "Verdict", "apply_reidemeister", "bracket_determinant", "bracket_polynomial", "braid_closure",
    "checkerboard", "close_tangle", "closure_linking", "cokernel_group", "determinant", "double_cover_group",
    "faces", "goeritz_matrix", "handlebody", "jones_polynomial", "knot_determinant", "krebes_A",
    "krebes_even_cover", "krebes_odd_cover", "linking_number", "load_closure_spec", "load_presentation",
    "load_tangle", "obstruction_verdict", "parse_pd", "random_move", "scan_closures", "smith_normal_form",
    "surgery_h1", "torsion_order", "trivial_tangle", "writhe",
]
