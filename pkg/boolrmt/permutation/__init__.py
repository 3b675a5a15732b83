from .spec import PermutationSpec, PartialTransposeSpec, identity, transpose, partial_transpose
from .spec import from_callable, from_csv, parse_permutation, apply_entry_permutation
from .diagnostics import theta_condition_count, theta_ratio_sweep, sharing_pairs, delta_set
from .diagnostics import partial_transpose_cross_moment, cross_moment_exact
