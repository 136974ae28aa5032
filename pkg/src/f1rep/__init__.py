"""Representations of quivers over F1: colored quivers, enumeration, Hall algebras."""

from .f1lin import F1Map, compose, direct_sum, enumerate_maps, is_nilpotent
from .quiver import Quiver, classify, cycle_quiver, cycle_rank, loop_quiver, named_quiver
from .rep import Representation, decompose, direct_sum_rep, hom_set, is_nilpotent_rep, make_rep
from .colored import ColoredQuiver, canonical_key, check_admissible, gamma_of, rep_key, rep_of
from .enumeration import IsoClassTable, enumerate_reps, f_reduce, i_growth, ni
from .hall import HallAlgebra, HallElement
from .corr import SkewShape, enumerate_shapes, rep_to_shape, shape_to_rep

__version__ = "0.1.0"
