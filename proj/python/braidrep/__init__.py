"""Type-B braid group representations.

Exact quantum-group side (R, K, E, ABRR twist Psi) and numeric cyclotomic-KZ
side (regularized holonomies), with equation-level checks exposed as simple
functions. See the `braidrep` CLI for the full machine-readable reports.
"""

try:
    from ._braidrep import (
        abrr_exact,
        axioms,
        compare_characters,
        enumerate_words,
        kz_octagon_profile,
        kz_pentagon_profile,
        octagon_exact,
        pentagon_exact,
        presentation,
        qybe_exact,
    )
except ImportError:  # plain cmake build leaves the module next to the binaries
    from _braidrep import (
        abrr_exact,
        axioms,
        compare_characters,
        enumerate_words,
        kz_octagon_profile,
        kz_pentagon_profile,
        octagon_exact,
        pentagon_exact,
        presentation,
        qybe_exact,
    )

__all__ = [
    "abrr_exact",
    "axioms",
    "compare_characters",
    "enumerate_words",
    "kz_octagon_profile",
    "kz_pentagon_profile",
    "octagon_exact",
    "pentagon_exact",
    "presentation",
    "qybe_exact",
]
