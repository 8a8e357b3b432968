"""The exceptional outer automorphism of S6 and invariants of six points.

Submodules: :mod:`exact` (rationals, finite fields, Q(phi), sparse
polynomials), :mod:`perms`, :mod:`mystic` (pentagons and their avatars),
:mod:`reps` (characters), :mod:`moduli` (invariant maps), :mod:`verify`
and :mod:`cli`.
"""

__version__ = "0.1.0"
