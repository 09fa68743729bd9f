"""Exact combinatorics around the generalized Springer correspondence.

Modules: ``partitions`` and ``orbits`` (nilpotent orbits and A(O)),
``cuspidal`` (cuspidal local systems and supports), ``rootdata`` (extended
Weyl groups, parabolic pairs, double cosets), ``projrep`` (character tables
and twisted group algebras), ``extquot`` (twisted extended quotients) and
``bernstein`` (block assembly over cuspidal-datum catalogs).
"""
from . import bernstein, cuspidal, extquot, orbits, partitions, projrep, rootdata
from .orbits import GroupLabel

__version__ = "0.1.0"
__all__ = ["GroupLabel", "bernstein", "cuspidal", "extquot", "orbits", "partitions", "projrep", "rootdata"]
