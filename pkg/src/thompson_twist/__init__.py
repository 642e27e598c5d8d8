"""Thompson's group F, its automorphisms, and twisted conjugacy classes."""

from .dyadic import Dyadic
from .errors import ThompsonError
from .groupf import REV, AbPair, AutWord, ConjBy, ab, apply_aut, conj_by_tlike, h1_matrix, project_class, rev
from .kernels import BACKEND
from .plmap import FMap, TLikeMap, validate_f, validate_tlike
from .zlinalg import INFINITE, IntMatrix, reidemeister_of_matrix, snf

__version__ = "0.1.0"
