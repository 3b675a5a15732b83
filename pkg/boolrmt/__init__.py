from ._version import __version__

from .utils import BudgetExceededError, enumeration_budget, check_budget
from .utils import as_scalar, is_symbolic, is_zero, equal, simplify, to_float, format_scalar
from .utils import records_to_frame, dump_records
from .partitions import IntervalPartition, one, zero, enumerate_partitions
from .partitions import meet, join, meet_inductive, join_inductive
from .partitions import juxtapose, restrict, decompose, interval_pairing
from .partitions import ONE, STAR, SignPattern, LabelTuple, IndexTuple, parse_xi, format_xi
from .partitions import is_xi_alternating, enumerate_alt, omega_of_labels
from .partitions import variable_pairs, iota, iota_permuted, enumerate_alt_permuted
from .cumulants import Letter, Alphabet, WordFunctional, MomentFunctional, CumulantFunctional
from .cumulants import moments_from_cumulants, cumulants_from_moments, cumulant_table
from .cumulants import multilinear, IndependenceReport, check_boolean_independence
from .cumulants import BDiagonalLaw, bdiag_word_moment, bernoulli_moment, bernoulli_cumulants
from .cumulants import bdiag_product_law, verify_prop_B_part_i
from .model import EntryModel, GeneralEntries, BDiagonalEntries, SelfAdjointEntries
from .model import selfadjoint_letter, TaggedWord, boolean_product_moment, entry_word_moment
from .model import product_of_boolean_letters_law, product_law_violations, lemma_split_holds
from .matrix import CountResult, iota_histogram, count_tuples_brute, count_polynomial
from .matrix import count_tuples_blockwise, closed_form_count, closed_form_applies
from .matrix import MixedWordSpec, trace_moment_exact, trace_moment_selfadjoint_exact
from .matrix import limit_bdiag, limit_mixed, mixed_factorization, limit_permuted
from .matrix import limit_selfadjoint, limit_selfadjoint_integral, ConvergenceSweep
from .permutation import PermutationSpec, PartialTransposeSpec, identity, transpose
from .permutation import partial_transpose, from_callable, from_csv, parse_permutation
from .permutation import apply_entry_permutation, theta_condition_count, theta_ratio_sweep
from .permutation import sharing_pairs, delta_set, partial_transpose_cross_moment
from .permutation import cross_moment_exact
from . import verify
