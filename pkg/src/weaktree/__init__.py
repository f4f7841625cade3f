"""Rooted-tree inf-embedding toolkit.

Canonical unlabeled rooted trees, the inf-embedding order with an
independent brute-force oracle, symbolic tree families with closed-form
embedding rules, a compact encoding of an ~8.4e14-step bad sequence with
exact random access, validity audits (explicit, symbolic, and
cross-validating), and exhaustive search for the tiny exact cases.
"""

from .construction import (
    EliminationRun,
    LegState,
    SequenceDescription,
    assemble_sequence,
    bound_breakdown,
    build_full_sequence,
    chain_countdown,
    greedy_restart_steps,
    initial_segment,
    iter_sequence,
    label_of,
    leg_elimination_steps,
    simulate_leg_elimination,
    total_bound,
    tree_at,
)
from .embedding import (
    EmbeddingWitness,
    brute_force_inf_embeds,
    check_embedding_map,
    inf_embeds,
    inf_embeds_witness,
)
from .errors import CapacityError, ConstructionError, TreeParseError
from .families import (
    Chain,
    Explicit,
    TreeDescriptor,
    TwoLeg,
    descriptor_height,
    descriptor_leaf_count,
    descriptor_size,
    expand,
    family_embeds,
    format_descriptor,
    parse_descriptor,
    recognize_family,
)
from .search import SearchResult, longest_bad_sequence
from .trees import (
    RootedTree,
    chain_tree,
    enumerate_rooted_trees,
    lca,
    leaf_count,
    make_tree,
    parse_tree,
    serialize_tree,
    single_vertex,
    to_dot,
)
from .verify import (
    BudgetViolation,
    EmbeddingViolation,
    PairClassResult,
    VerificationReport,
    cross_validate,
    format_report,
    report_from_dict,
    report_to_dict,
    verify_explicit_sequence,
    verify_phases,
)

__version__ = "0.1.0"
