"""Frobenius pushforwards of graded one-dimensional rings over F_p and its perfect closures.

The main entry points are :func:`decomp.decompose`, :func:`decomp.classify`,
:func:`decomp.ffrt_verdict` and :func:`tower.tower_summands`; the ``ffrt``
command wraps them.
"""

from .curve import RingPresentation, coefficient_space, conductor, hilbert_dim
from .decomp import classify, decompose, ffrt_verdict, pairwise_noniso, recurrence_certificate
from .fields import ExtField, FiniteField, PerfectClosure, prime_field, trivial_extension
from .subspace import Subspace, canonical_label, projectively_equivalent, scaling_transporter, span
from .tower import brenner_instance, fedder_fpure, substitution_identity_check, tower_summands

__version__ = "0.1.0"

__all__ = [
    "RingPresentation", "coefficient_space", "conductor", "hilbert_dim",
    "classify", "decompose", "ffrt_verdict", "pairwise_noniso", "recurrence_certificate",
    "ExtField", "FiniteField", "PerfectClosure", "prime_field", "trivial_extension",
    "Subspace", "canonical_label", "projectively_equivalent", "scaling_transporter", "span",
    "brenner_instance", "fedder_fpure", "substitution_identity_check", "tower_summands",
]
