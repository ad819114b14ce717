"""Generalized Fermat curves over finite fields.

Exact constructions of the curve families carrying a rational C_n x C_m
action with rational quotients: genus by closed form and by a valuation-sweep
oracle, orbit censuses with the Frobenius classification, automorphism
generator groups, and the verification suites.
"""

from _gfc import (
    GfcError,
    aut_group,
    dickson,
    field_order,
    find_nonsquare,
    genus,
    orbit_report,
    place_count,
    quotient,
    root_of_unity_index,
    suites,
    verify,
)

__all__ = [
    "GfcError",
    "aut_group",
    "dickson",
    "field_order",
    "find_nonsquare",
    "genus",
    "orbit_report",
    "place_count",
    "quotient",
    "root_of_unity_index",
    "suites",
    "verify",
]
