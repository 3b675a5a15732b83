from .counting import CountResult, iota_histogram, count_tuples_brute, count_polynomial
from .counting import count_tuples_blockwise, closed_form_count, closed_form_applies
from .trace import MixedWordSpec, trace_moment_exact, trace_moment_selfadjoint_exact
from .limits import limit_bdiag, limit_mixed, mixed_factorization, limit_permuted
from .limits import limit_selfadjoint, limit_selfadjoint_integral
from .sweep import ConvergenceSweep
