"""Filtrations, buildings and norms for GL_n.

Objects are plain dicts in the same layout as the command line tool's JSON
files; exact numbers are fraction strings such as "-1/2".
"""

from fractions import Fraction

from ._bruhat import (
    DomainError,
    FormatError,
    adapt_norms,
    adapt_to_filtration,
    add_fil,
    add_fil_norm,
    cartan,
    distance,
    dn,
    dominance_leq,
    filtration_type,
    fischer_courant,
    fixes,
    loc,
    moy_prasad,
    retract,
    run_axioms,
    valuation,
)


def fractions(values):
    """Converts a list of fraction strings to Fractions."""
    return [Fraction(v) for v in values]


__all__ = [
    "DomainError",
    "FormatError",
    "adapt_norms",
    "adapt_to_filtration",
    "add_fil",
    "add_fil_norm",
    "cartan",
    "distance",
    "dn",
    "dominance_leq",
    "filtration_type",
    "fischer_courant",
    "fixes",
    "fractions",
    "loc",
    "moy_prasad",
    "retract",
    "run_axioms",
    "valuation",
]
