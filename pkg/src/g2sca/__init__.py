"""G2(1) perfect crystals, combinatorial R-matrices and the soliton cellular automaton."""

from .a1 import A1Crystal, A1Element, a1_aff_r, a1_h_hat, a1_r_hat
from .crystal import B1, BNAT, PerfectCrystal, coord, coord_tableau, tableau_coord, u
from .rmatrix import aff_r, r_apply, r_insertion, rbar_apply
from .sca import (SCAState, detect_solitons, evolve, predict_multi, predict_two_body,
                  scattering_report, soliton_label, state_energy, t_natural)
from .tensor import TensorProduct

__all__ = [
    "A1Crystal", "A1Element", "a1_aff_r", "a1_h_hat", "a1_r_hat",
    "B1", "BNAT", "PerfectCrystal", "coord", "coord_tableau", "tableau_coord", "u",
    "aff_r", "r_apply", "r_insertion", "rbar_apply",
    "SCAState", "detect_solitons", "evolve", "predict_multi", "predict_two_body",
    "scattering_report", "soliton_label", "state_energy", "t_natural",
    "TensorProduct",
]
