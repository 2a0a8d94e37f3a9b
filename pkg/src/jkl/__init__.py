"""Exact computations with Johnson homomorphisms of free group automorphisms."""
from .freegroup import AutWord, Endomorphism, Word, evaluate, word_commutator
from .glrep import decompose, weyl_dimension
from .johnson import tau, tau2

__version__ = "0.1.0"

__all__ = ["AutWord", "Endomorphism", "Word", "evaluate", "word_commutator", "decompose",
           "weyl_dimension", "tau", "tau2"]
