"""Alternating sign matrices and their relatives, checked by exhaustive search.

Modules, roughly bottom-up:

* :mod:`asmlab.lattice` - the grid L_{m,n}, boundary labels, plaquettes
* :mod:`asmlab.asm` - alternating sign matrices
* :mod:`asmlab.sixvertex` - ice states and the ASM bijection
* :mod:`asmlab.height` - height functions and the poset of triples
* :mod:`asmlab.fpl` - fully packed loops and link patterns
* :mod:`asmlab.gyration` - plaquette flips, gyration, orbits
* :mod:`asmlab.tl_algebra` - operators on link-pattern vectors
"""

from .asm import Asm, enumerate_asms, partial_sums, validate_asm
from .fpl import Fpl, LinkPattern, enumerate_fpls, enumerate_link_patterns, link_pattern
from .height import HeightFn, asm_to_height, height_to_asm, height_to_state, state_to_height
from .lattice import EdgeKey, GridSpec, Plaquette
from .sixvertex import IceState, VertexType, asm_to_sixvertex, sixvertex_to_asm

__all__ = [
    "Asm",
    "EdgeKey",
    "Fpl",
    "GridSpec",
    "HeightFn",
    "IceState",
    "LinkPattern",
    "Plaquette",
    "VertexType",
    "asm_to_height",
    "asm_to_sixvertex",
    "enumerate_asms",
    "enumerate_fpls",
    "enumerate_link_patterns",
    "height_to_asm",
    "height_to_state",
    "link_pattern",
    "partial_sums",
    "sixvertex_to_asm",
    "state_to_height",
    "validate_asm",
]
