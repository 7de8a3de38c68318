"""Verification-grade combinatorics of theta characteristics, numerical theta
functions, Goepel-system modular forms, the explicit Coble quartic and
universal Kummer surface, and GIT point-configuration invariants.
"""

from .characteristics import (
    ARONHOLD_EXAMPLE,
    Characteristic,
    CharacteristicSet,
    aronhold_classify,
    enumerate_aronhold_sets,
    enumerate_characteristics,
    is_fundamental_system,
    pairing,
    parity,
    special_fundamental_completion,
    triple_sign,
)
from .gopel import (
    GopelSystem,
    enumerate_gopel,
    even_coset,
    fano_basis,
    fano_from_aronhold,
    pascal_decomposition,
    pascal_from_aronhold,
)
from .modular import (
    chi,
    h_fano,
    h_goepel,
    h_pascal,
    h_via_jacobian,
    riemann_relation,
    s_vector,
)
from .quartics import (
    coble_coefficients,
    coble_eval,
    coble_gradient,
    coble_monomial_count,
    export_coble_formula,
    jacobi_form_residual,
    kummer2_eval,
    q_basis_eval,
    quartic_labels,
)
from .sampling import random_tau, random_z, stream
from .suites import Report, run_suite
from .symplectic import SymplecticMatF2, enumerate_group, parabolic_cosets
from .theta import (
    PeriodMatrix,
    PhasePoint,
    jacobian_det,
    theta,
    theta2,
    theta_gradient,
)

__version__ = "0.1.0"

__all__ = [
    "ARONHOLD_EXAMPLE",
    "Characteristic",
    "CharacteristicSet",
    "GopelSystem",
    "PeriodMatrix",
    "PhasePoint",
    "Report",
    "SymplecticMatF2",
    "aronhold_classify",
    "chi",
    "coble_coefficients",
    "coble_eval",
    "coble_gradient",
    "coble_monomial_count",
    "enumerate_aronhold_sets",
    "enumerate_characteristics",
    "enumerate_gopel",
    "enumerate_group",
    "even_coset",
    "export_coble_formula",
    "fano_basis",
    "fano_from_aronhold",
    "h_fano",
    "h_goepel",
    "h_pascal",
    "h_via_jacobian",
    "is_fundamental_system",
    "jacobi_form_residual",
    "jacobian_det",
    "kummer2_eval",
    "pairing",
    "parabolic_cosets",
    "parity",
    "pascal_decomposition",
    "pascal_from_aronhold",
    "q_basis_eval",
    "quartic_labels",
    "random_tau",
    "random_z",
    "riemann_relation",
    "run_suite",
    "s_vector",
    "special_fundamental_completion",
    "stream",
    "theta",
    "theta2",
    "theta_gradient",
    "triple_sign",
]
