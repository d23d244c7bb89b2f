"""Exact checkers and constructions for Hom-Jacobi-Jordan and Hom-pre-Jacobi-Jordan algebras."""
from .algebra import (HomAlgebra, PreconditionError, UnsupportedCharacteristic, anticommutator,
                      check_anti_hom_associative, check_commutative, check_hom_associative,
                      check_hom_jacobi_jordan, check_hom_jordan, check_left_hom_pre_jj, check_morphism,
                      check_multiplicative, check_right_hom_pre_jj, check_rota_baxter, direct_sum,
                      jj_admissibility_obstruction, nijenhuis_check, nijenhuis_deform, opposite,
                      transport, yau_twist)
from .documents import builtin_example, load_document, parse_document, serialize
from .fields import GF, QQ, get_field, scalar_parse
from .matched_pairs import (MatchedPairData, bicross_sum_jj, bicross_sum_prejj, check_matched_pair,
                            subadjacent_matched_pair)
from .report import CheckReport, Witness
from .representations import PreJJRepresentation, Representation, check_jj_rep, check_prejj_rep

__version__ = "0.1.0"
