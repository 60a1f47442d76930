"""
Exact algebra for the Winger verifier: cyclotomic numbers, matrices, permutation
groups, characters, invariants, the pencil, generating tuples and covers.
"""
from .exactfield import ConstructionError, CycloNum
from .perm import COMPOSITION_CONVENTION, Perm
from .winger import WingerPencil, reconstruct_group

__all__ = ['ConstructionError', 'CycloNum', 'COMPOSITION_CONVENTION', 'Perm', 'WingerPencil', 'reconstruct_group']
