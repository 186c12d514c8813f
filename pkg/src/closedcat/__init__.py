"""closedcat: an executable-mathematics kernel for finite closed
categories and closed multicategories.

The package represents finite (or lazily finite) categories with
decidable morphism equality, closed structures on them, and
multicategories with closedness and unit witnesses.  Every axiom and
derived law is checked by evaluating both sides of the equation on
concrete instances; the constructions relating the two worlds (the
underlying closed category of a closed multicategory, the arity
recursion reconstructing a multifunctor from a closed functor, and the
representing multicategory of a finite closed category) are runnable and
round-trip tested.

Entry points:
  closedcat.instances   registry of shipped structures and fixtures
  closedcat.cli         command-line front end (``closedcat --help``)
"""

__version__ = "0.1.0"
