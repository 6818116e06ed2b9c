"""Exact kernel for deciding and certifying linkage of ideals in polynomial
rings and their quotients."""

__version__ = "0.1.0"

from .engine import (
    LinkageVerdict,
    check_geometric,
    check_linked,
    classify_linked_radical,
    find_partner,
    linked_by,
    sset_member,
)
from .errors import LinkageError
from .groebner import GroebnerBasis, buchberger, ideal_member, normal_form
from .ideals import (
    Ideal,
    RingContext,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    polynomial_ring,
    radical_member,
    saturate,
)
from .monomial import MonomialIdeal, associated_primes, is_unmixed, monomial_primary_decomposition
from .parser import format_ideal, format_polynomial, parse_ideal, parse_polynomial, parse_ring, parse_script
from .ring import GF, GREVLEX, LEX, QQ, Field, MonomialOrder, PolyRing, Polynomial
from .syzygy import grade, is_maximal_regular_sequence, is_regular_sequence, syzygies
