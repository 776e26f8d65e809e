from kkclique.extremal.formulas import (
    theorem4_count,
    turan_k3_count,
    turan_k4_count,
    turan_k5_count,
)
from kkclique.extremal.tables import (
    GapReport,
    GapRow,
    gap_report,
    gap_table,
    rows_to_frame,
    table_section3,
)
from kkclique.extremal.verifiers import (
    VerificationReport,
    corollary1_params,
    corollary2_sequence,
    minimal_admissible,
    plateau_check,
    verify_bollobas,
    verify_canonical_x,
    verify_identity_t5,
    verify_identity_t6,
    verify_theorem3,
    verify_theorem4,
)

__all__ = [
    "GapReport",
    "GapRow",
    "VerificationReport",
    "corollary1_params",
    "corollary2_sequence",
    "gap_report",
    "gap_table",
    "minimal_admissible",
    "plateau_check",
    "rows_to_frame",
    "table_section3",
    "theorem4_count",
    "turan_k3_count",
    "turan_k4_count",
    "turan_k5_count",
    "verify_bollobas",
    "verify_canonical_x",
    "verify_identity_t5",
    "verify_identity_t6",
    "verify_theorem3",
    "verify_theorem4",
]
