"""Plane-wave diffraction by a uniformly moving, perfectly conducting half-plane.

Exact fields (co-moving and laboratory frames), their high-frequency
GO + diffracted decomposition, and the geometry of the moving edge.
"""

from .asymptotics import FieldDecomposition, decompose, diffracted_field, go_field, local_frequency
from .errors import MovingEdgeError
from .fields import EMField
from .kinematics import (
    LabPoint,
    Motion,
    PrimedPoint,
    PrimedWaveParams,
    WaveParams,
    lab_to_primed,
    primed_to_lab,
    sommerfeld_arguments,
    transform_wave,
)
from .lab_field import lab_field_E, lab_field_H, lab_field_total, plane_wave
from .sommerfeld import efield_primed, hfield_primed, total_field_primed
from .special import eval_G, eval_G_asymptotic, heaviside

__version__ = "0.1.0"
