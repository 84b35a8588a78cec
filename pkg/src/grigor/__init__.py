"""Exact computation in the first Grigorchuk group.

Words over {a, b, c, d}, the self-similar tree action, word-problem
decision procedures, constructive arithmetic in the branching subgroup K,
Engel commutator towers, and machine-checkable refutation certificates.
"""

__version__ = "0.1.0"
