"""Finite lattices, filters, and S-filters relative to join-closed sets."""

from .constructions import (
    LatticeHom,
    ProductLattice,
    QuotientLattice,
    all_homs,
    image_filter,
    kernel,
    make_hom,
    preimage_filter,
    product,
    product_s_filter_check,
    quotient,
    quotient_s_filter,
)
from .errors import LattikaError
from .filters import (
    ElementSet,
    FilterSet,
    all_filters,
    filter_join,
    generate_filter,
    is_filter,
    is_maximal_filter,
    is_prime_filter,
    min_primes_over,
    prime_filters,
    principal,
    proper_filters,
    residual_elem,
    residual_filter,
)
from .generators import boolean, build, chain, default_catalog, divisor_lattice, downset_lattice, named, random_poset
from .harness import THEOREMS, VerificationReport, hunt_counterexample, run_theorem_suite
from .lattice import Lattice, Poset, is_distributive, is_modular, lattice_from_covers
from .serialize import dumps_lattice, emit_dot, load_lattice, loads_lattice, save_lattice
from .sfilters import (
    VeeClosedSet,
    all_s_filters,
    all_vee_closed_sets,
    check_ghasem_equivalences,
    check_pair_characterization,
    find_prime_s_filter_containing,
    intersect_s_filters,
    is_s_complete,
    is_s_filter,
    is_vee_closed,
    maximal_s_filters,
    prime_avoidance_check,
    s_complete_decomposition,
    saturate,
    smallest_s_filter,
    vee_closure,
)

__version__ = "0.1.0"
