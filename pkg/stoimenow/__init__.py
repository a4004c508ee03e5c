from .core import Arc, Matching, ViolationReport, LabeledMatching, MatchingError, NotStoimenowError, TYPE1, TYPE2
from .core import parse_matching, format_matching, find_violations, is_stoimenow, labels, maxarc, redarc, stat_m, stat_M, level_set_size
from .ascent import AscentSequence, InvalidSequenceError, asc, is_valid, parse_sequence, enumerate_sequences, count_sequences, sample_uniform
from .bijection import TraceEntry, BijectionError, remove_arc, add_arc, encode, decode, trace_encode, trace_decode
from .enumeration import CensusReport, enumerate_matchings, count_matchings, verify_bijection
