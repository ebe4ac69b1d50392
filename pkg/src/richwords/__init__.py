"""Palindromic-rich words: richness, extensions, switches and extremal constructions."""
from .construction import (
    ConstructionReport,
    HVerdicts,
    alpha,
    elpp,
    ewp,
    ewp_chain,
    flexed_delta_check,
    gen_g,
    gen_h,
    kappa,
    rho,
    switch_formula_check,
    verify_h,
)
from .extension import (
    ExtensionTrace,
    GammaTriple,
    flexed_points,
    gamma_check,
    omega,
    std_ext,
    two_way_extendable,
    unique_rich_extension,
)
from .palindex import PalIndex
from .phi_search import Falsification, PhiResult, cache_lookup, cache_store, enumerate_rich, phi
from .richness import RichnessCertificate, complete_returns, is_rich, rich, rich_extension_letters
from .switches import SwitchSet, is_switch, reduced, reverse_unioccurrent, swc, swc_set, switch_suf, switches_of
from .words import Alphabet, WordError, affix, is_palindrome, max_pow, occ, reverse, suffix_union, trim

__version__ = "0.1.0"
