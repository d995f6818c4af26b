"""Reed-Muller and CSS-T codes over bit-packed GF(2) linear algebra."""

from .css import CssPair, CssParams, css_params, make_css, stabilizer_matrix
from .csst import CssTReport, check_csst_bruteforce, check_csst_corollary, check_csst_theorem, cross_validate
from .gf2 import BitMatrix, BitVector
from .linear_code import INFINITY, LinearCode
from .reed_muller import RmCode, rm_code, rm_params

__version__ = "0.1.0"
