"""Generate, verify and analyze almost Pythagorean triples, x^2 + y^2 = z^2 + 1."""

from .core import Triple, TripleKind, classify, is_apt, is_ppt, is_pythagorean
from .errors import AptError
from .explicit import apt_pair, emit_bfile, family_constants, sequence_a261654
from .frink import AptPair, FrinkConstants, box_solutions, generate, solve_constants
from .oracle import AptRecord, CoverageReport, coverage, enumerate_apts
from .ppt import EuclidParams, enumerate_ppts, ppt_family, ppt_from_params

__version__ = "0.1.0"
