"""starxor: a workbench for star-of-symmetric-difference state complexity."""

from .automata import (
    Dfa,
    NerodePartition,
    accessible_part,
    accepts,
    export_dot,
    export_json,
    import_json,
    is_equivalent,
    minimize,
    nerode_partition,
    preimage_by_renaming,
    run,
)
from .modifiers import (
    DEFAULT_STATE_CAP,
    SubsetDfa,
    check_1_uniformity,
    star_modifier,
    stx,
    xor_modifier,
)
from .monsters import (
    DEFAULT_LETTER_CAP,
    MonsterSpec,
    PairLetter,
    letter_index,
    monster,
    monster1,
    monster2,
)
from .reports import ExperimentReport
from .tableaux import (
    FinalZone,
    Tableau,
    count_constrained,
    count_rtf,
    count_rtf_pinned,
    final_zone,
    has_right_triangle,
    is_accessible_state,
    is_final,
    predicted_complexity,
    render_tableau,
    rows_equal_or_disjoint,
    saturate,
)
from .transforms import (
    LimitExceeded,
    Transformation,
    compose,
    cycle,
    enumerate_all,
    identity,
    point_map,
)
from .witness import WitnessAlphabet, sigma_prime, verify_witness, witness_pair

__version__ = "0.1.0"

__all__ = [
    "Dfa",
    "NerodePartition",
    "SubsetDfa",
    "Transformation",
    "MonsterSpec",
    "PairLetter",
    "WitnessAlphabet",
    "Tableau",
    "FinalZone",
    "ExperimentReport",
    "LimitExceeded",
    "DEFAULT_STATE_CAP",
    "DEFAULT_LETTER_CAP",
    "accessible_part",
    "accepts",
    "check_1_uniformity",
    "compose",
    "count_constrained",
    "count_rtf",
    "count_rtf_pinned",
    "cycle",
    "enumerate_all",
    "export_dot",
    "export_json",
    "final_zone",
    "has_right_triangle",
    "identity",
    "import_json",
    "is_accessible_state",
    "is_equivalent",
    "is_final",
    "letter_index",
    "minimize",
    "monster",
    "monster1",
    "monster2",
    "nerode_partition",
    "point_map",
    "predicted_complexity",
    "preimage_by_renaming",
    "render_tableau",
    "rows_equal_or_disjoint",
    "run",
    "saturate",
    "sigma_prime",
    "star_modifier",
    "stx",
    "verify_witness",
    "witness_pair",
    "xor_modifier",
]
