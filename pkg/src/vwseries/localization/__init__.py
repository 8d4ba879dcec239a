"""Torus-localization oracle for the universal series on toric surfaces."""

from .characters import CharacterPolynomial, ZeroWeightError, arm_leg_character, euler_localize, vertex_ext_character
from .oracle import (Configuration, ExtractionResult, FitError, G_coefficients, G_series, SpecializationMismatch,
                     compare_with_fixtures, default_configurations, empty_character, extract_universal,
                     fixed_point_character, quadratic_form, relative_character, upsilon_constant)
from .partitions import partitions, tuples_of_size
from .toric import ToricSurfaceSpec, hirzebruch, p1xp1, p2, preset
