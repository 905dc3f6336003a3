"""Fisher-Yates and Sattolo shuffles read as bijections onto permutations and cycles.

The submodules are the public API:

* :mod:`fyperm.perm`: permutations and the insertion/deletion maps ``up``/``down``
* :mod:`fyperm.codec`: Fisher-Yates, dual and inversion-table encodings, ranking
* :mod:`fyperm.generator`: seeded Fisher-Yates, Sattolo and the m-shifted family
* :mod:`fyperm.enumerator`: lex and reflected Gray streams with step classification
* :mod:`fyperm.statistics`: per-symbol moves and distance, their PGFs and closed forms
* :mod:`fyperm.gflab`: truncated grand generating functions and their identities
"""

from .perm import Permutation, compose, identity, inverse

__version__ = "0.1.0"

__all__ = ["Permutation", "compose", "identity", "inverse", "__version__"]
