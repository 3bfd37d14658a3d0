"""p'-character-degree combinatorics with built-in verification oracles.

Partitions, hooks and e-cores; exact symmetric/alternating character
degrees with two independent p'-degree tests; the p'-hook counting
formula against two constructions of the set; quasihook families and
the extendable-degree lower bound for A_n; and the degree polynomials
in q used for the small Lie-type families, with their divisibility
contracts.
"""

from .ctbl import (
    DegreeTable,
    bundled_names,
    bundled_table,
    cd,
    cd_pprime,
    load_degree_table,
    pgl2_degree_set,
)
from .degrees import (
    an_degrees,
    binomial_coprime_lucas,
    degree,
    degree_valuation,
    factorial_valuation,
    hook_degree,
    hook_degree_valuation,
    is_pprime_macdonald,
    is_pprime_oracle,
)
from .hooks import (
    AnBoundResult,
    count_pprime_hooks_formula,
    ext_pprime_degree_set,
    halved_count_lower_bound,
    layered_pprime_hooks,
    list_pprime_hooks,
    pprime_hook_xs,
    pprime_partitions_small,
    quasihook,
    quasihook_monotone,
    scan_bound,
    scan_ext_degree_sets,
    verify_An_bound,
    verify_hook_counts,
)
from .lie import (
    CentralizerSpec,
    DegreeFormula,
    ExceptionalPairRecord,
    NonIntegralDegreeError,
    classical_grid,
    classical_unipotent_pair,
    eval_formula,
    exceptional_grid,
    exceptional_pair,
    exceptional_pair_record,
    gl_order,
    nondivisibility_check,
    not_both_divisible,
    pprime_part,
    qprime_part,
    semisimple_degree,
    steinberg_qpower,
)
from .partitions import (
    PAdicExpansion,
    Partition,
    conjugate,
    divisible_hooks,
    e_core,
    e_core_by_removal,
    enumerate_hooks,
    enumerate_partitions,
    hook_length,
    hook_multiset,
    hook_partition,
    is_prime,
    is_self_conjugate,
    p_adic_expansion,
)

__version__ = "0.1.0"
