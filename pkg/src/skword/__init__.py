"""Exact short-word synthesis and diameter experiments for SL_n(Z/p^N Z)."""

from .diam import DistanceTable, bfs_distances, chain_diameter, check_subadditivity, exact_diameter
from .expolog import exp_trunc, nlog, verify_weigel
from .group import GenSet, GroupElement, commutator, group_element, identity, inverse, level, multiply, project
from .lie import LieElement, bracket, decompose_brackets, from_coords, lie_element, strong_perfectness_r, to_coords
from .modring import RingParams, Residue, factorial_valuation, invert, reduce, valuation
from .rootsys import CoveringCertificate, RootSystem, build, certify_cover, verify_certificate
from .sk import BaseTable, SKStats, build_base_table, d_exponent, default_C_bound, diam_bound, layer_word, sk_approx, sk_literal, sk_prime
from .words import Word, comm_word, word_concat, word_evaluate, word_invert, word_reduce

__all__ = [
    "BaseTable",
    "CoveringCertificate",
    "DistanceTable",
    "GenSet",
    "GroupElement",
    "LieElement",
    "RingParams",
    "Residue",
    "RootSystem",
    "SKStats",
    "Word",
    "bfs_distances",
    "bracket",
    "build",
    "build_base_table",
    "certify_cover",
    "chain_diameter",
    "check_subadditivity",
    "comm_word",
    "commutator",
    "d_exponent",
    "decompose_brackets",
    "default_C_bound",
    "diam_bound",
    "exact_diameter",
    "exp_trunc",
    "factorial_valuation",
    "from_coords",
    "group_element",
    "identity",
    "invert",
    "inverse",
    "layer_word",
    "level",
    "lie_element",
    "multiply",
    "nlog",
    "project",
    "reduce",
    "sk_approx",
    "sk_literal",
    "sk_prime",
    "strong_perfectness_r",
    "to_coords",
    "valuation",
    "verify_certificate",
    "verify_weigel",
    "word_concat",
    "word_evaluate",
    "word_invert",
    "word_reduce",
]
