"""Exact toolkit for circulant matrices built from primitive roots.

Construct the order-(p-1) circulant of the power sequence of a primitive
root g mod an odd prime p, evaluate the attached character sums (Gauss,
Jacobi, first moments), verify the rank duality rank_Q = (p+1)/2 versus
rank over GF(p) = 1, gather Smith-normal-form evidence, and derive the
rank-1 codes and weighted circulant graphs.  The `circroots` CLI exposes
everything; see the README for the command map.
"""

from .applications import (
    GraphSpectrumSummary,
    LinearCode,
    block_diagonal_code,
    export_graph,
    generate_code,
    graph_spectrum_summary,
    min_distance,
)
from .characters import (
    CharIndex,
    FirstMomentClass,
    IdentityAudit,
    InvariantViolation,
    additive_char,
    audit_lemma_formula,
    char_indices,
    check_gauss_magnitude,
    check_jacobi_gauss,
    check_parity_identity,
    classify_first_moments,
    first_moment,
    gauss_sum,
    jacobi_sum,
    mult_char,
    quadratic_index,
    zero_tolerance,
)
from .circulant import (
    Circulant,
    Spectrum,
    build_circulant,
    crosscheck_spectrum,
    eigenvalues,
    power_sequence,
)
from .intlinalg import (
    IntMatrix,
    InvariantFactors,
    SmithDecomposition,
    SnfConjectureReport,
    check_snf_conjecture,
    determinant,
    format_matrix_text,
    matmul,
    rank_mod_p,
    rank_rational,
    read_matrix_text,
    smith_normal_form,
)
from .kernels import BACKEND
from .ntheory import (
    all_primitive_roots,
    canonical_rep,
    euler_phi,
    factorize,
    find_primitive_root,
    is_prime,
    is_primitive_root,
    pow_mod,
)

__version__ = "0.1.0"
