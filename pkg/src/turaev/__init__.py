"""Turaev cobracket on cyclic words of a free group.

Cyclic words, linked pairs, the cobracket ``delta`` and its closed form on
powers, self-intersection numbers and the cube test for powers of simple
curves on surfaces with boundary.
"""

from .cobracket import (
    TensorElement,
    check_cojacobi,
    check_coskew,
    cobracket,
    cobracket_power,
    cojacobi_defect,
    manhattan_norm,
)
from .errors import InvalidInput, NotApplicable
from .linked_pairs import (
    LinkedPair,
    LinkedPairSet,
    enumerate_linked_pairs,
    lift_to_power,
    linked_pairs,
    orientation_sign,
    symmetry_partner,
)
from .simplicity import (
    ClassReport,
    class_report,
    coincidences,
    exhaustive_verify,
    is_power_of_simple,
    search_turaev1_counterexamples,
    self_intersection,
    verify_norm_identity,
)
from .surface import Surface, boundary_components, default_order
from .words import Alphabet, CyclicWord, least_rotation, smallest_period

__version__ = "0.1.0"
