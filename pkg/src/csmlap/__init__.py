"""Exact Laplace expansions restricted to a common submatrix, over commutative rings."""
from .condensation import CondensationTrace, condense, desnanot_jacobi, det_condensation
from .csm import (CsmReport, ExpansionReport, build_doubled, build_initialized, build_tilde,
                  csm_lhs, csm_rhs, csm_rhs_complement, csm_terms, expand_csm, verify_csm)
from .index import (CsmPartition, IndexSetError, Label, OrderedIndexSet, complement,
                    extend_order, k_subsets, position, rank, sign_from_rank_sum)
from .laplace import ExpansionTerm, laplace_det, laplace_terms
from .matrix import (LabeledMatrix, MatrixError, OracleCapExceeded, col_op_add, det_leibniz,
                     row_op_sub, submatrix)
from .matrixfile import format_matrix, parse_matrix, read_matrix, write_matrix
from .ring import (ContextMismatch, DivisionError, ModInt, ParseError, Poly, RingContext,
                   RingError, eval_poly, ring_arith)

__version__ = "0.1.0"
