"""Exact knot polynomials, twist families and surgery homology."""
from .laurent import LPoly, LPoly1, LPoly2, equal_up_to_units, format_lpoly, normal_form, parse_lpoly
from .diagram import LinkDiagram, format_pd, linking_number, mirror, parse_pd, writhe
from .moves import MoveSpec, apply_move, legal_moves, random_move
from .fox import alexander_knot, alexander_link2
from .bracket import HAVE_COMPILED, jones, kauffman_bracket
from .twistfam import AnnotatedPair, TwistFamily, annotate, check_cor26, family_alexander, insert_full_twists
from .surgery import FramedLink, Slope, first_homology, smith_normal_form
from .fixtures import load_fixtures

__version__ = "0.1.0"
