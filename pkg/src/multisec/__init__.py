"""multisec: exact verification of multi-section degree bounds.

Monodromy orbits of fiber strata give divisibility constraints on the
degrees of multi-sections of a pencil; explicit constructions realize
degrees.  This package computes both sides exactly — permutation orbits,
numerical semigroups, and cyclotomic/rational polynomial identities — and
reports minimal-degree and index bounds that are marked exact only when
the two sides meet.
"""

from . import construct, exactalg, perm, semigroup, strata, witness

__version__ = "0.1.0"

__all__ = ["construct", "exactalg", "perm", "semigroup", "strata", "witness",
           "__version__"]
