from .interval import IntervalPartition, one, zero, enumerate_partitions
from .interval import meet, join, meet_inductive, join_inductive
from .interval import juxtapose, restrict, decompose, interval_pairing
from .signs import ONE, STAR, SignPattern, LabelTuple, IndexTuple, parse_xi, format_xi
from .alternating import is_xi_alternating, enumerate_alt, omega_of_labels
from .alternating import variable_pairs, iota, iota_permuted, enumerate_alt_permuted
