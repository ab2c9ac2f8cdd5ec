"""Measurement of movement between two status distributions.

Build a :class:`MovementProfile` from paired period-0 and period-1 status
and pass it to any index, or describe the index with a
:class:`MeasureSpec` and call :func:`evaluate`.
"""

from .axioms import PropertyVerdict, Witness, property_report
from .class1 import (
    a1,
    alpha_tilde,
    decompose_a1_subgroups,
    decompose_s1_subgroups,
    decompose_t1_subgroups,
    intermediate,
    s1,
    t1,
    updown_partition,
)
from .class2 import (
    DistanceConcept,
    PMode,
    WeightScheme,
    a2,
    decompose_seg,
    decompose_updown,
    distances,
    gamma_measure,
    gini_of_differences,
    s2,
    t2,
    weights,
)
from .decomposition import Component, DecompositionResult
from .errors import DomainError, MobilityError, ParameterError, ParseError
from .inequality import extended_gini, generalized_entropy, gini, kolm_family, reduce_mobility
from .legacy import barcena_canto, elasticity_mobility, fields_ok, pearson_mobility, ray_genicot, shorrocks
from .measures import ROSTER, MeasureSpec, evaluate
from .profile import (
    MovementProfile,
    StatusTransform,
    replicate,
    reverse_profile,
    summary,
    transform_status,
    validate_profile,
)

__version__ = "0.1.0"
