"""Canonical Bezout coefficients, Pythagorean-pair trees and their compatibility
with unimodular transforms."""
from ._kernels import default_backend as kernel_backend
from .bezout_core import PreconditionError, QuotientTrace, XgcdTriple, beta, euclid_trace, gcd, xgcd
from .compat import (
    CompatReport,
    ExceptionalSet,
    candidate_exceptional,
    check_compat,
    check_lemma,
    generator_exceptional,
    scan_exceptional,
)
from .mat2 import Gen, Mat2, apply, eval_word, factor, inv_transpose, mat_inv, mat_mul
from .trees import TreeNode, bezout_tree, f_child, g_child, locate, node_at, pyth_tree

__version__ = "0.1.0"
