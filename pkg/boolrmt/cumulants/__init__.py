from .functional import Letter, Alphabet, WordFunctional, MomentFunctional, CumulantFunctional
from .boolean import moments_from_cumulants, cumulants_from_moments, cumulant_table
from .boolean import multilinear, IndependenceReport, check_boolean_independence
from .bdiag import BDiagonalLaw, bdiag_word_moment, bernoulli_moment, bernoulli_cumulants
from .bdiag import bdiag_product_law, verify_prop_B_part_i
