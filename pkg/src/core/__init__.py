"""
Core functionality: grammar calculus, permutation statistics, labelings,
trees and the fixed-set bijection
"""
from .errors import GrammarCalcError
from .poly import LaurentPolynomial, Monomial
from .grammar import Grammar, DUMONT, DUMONT_B, EULERIAN, get_grammar
from .series import TruncatedEgf
from .perms import Permutation, CycleForm
from .labeling import SlotLabeling, Variant, label_slots
from .trees import LabeledTree, LeafPosition, encode, decode
from .bijection import phi, phi_inverse
from .verifier import IdentityVerifier
