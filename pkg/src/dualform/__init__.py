"""Executable self-dual axioms for group-like structures.

Finite groups and finite rings with identity are modelled through their
subobject lattices, direct and inverse images, and canonical embeddings and
projections.  On top of that sit zigzag chasing, the pyramid construction
that decides when a zigzag induces a morphism, and the classical
isomorphism theorems as checked constructions.
"""

from .core import DualModel, FormModel, Morphism, SubObject, dualize, op
from .concrete import GroupModel
from .rings import RingModel
from .engine import Zigzag, build_pyramid, chase, induced_homomorphism, induces_homomorphism
from .errors import FormError

__all__ = [
    "DualModel",
    "FormError",
    "FormModel",
    "GroupModel",
    "Morphism",
    "RingModel",
    "SubObject",
    "Zigzag",
    "build_pyramid",
    "chase",
    "dualize",
    "induced_homomorphism",
    "induces_homomorphism",
    "op",
]
