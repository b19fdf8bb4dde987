"""Shadowing and gap computations on shifts of finite type."""

from .errors import (DecayFailure, DeltaTooLarge, EmptyShift, HorizonTooLong, NoPath, NotMixing,
                     NotTransitive, ParseError, PQNotCoprime, SftError, SpacingTooSmall)
from .fullshift import (FiniteMetricSpace, chain_bound, diagonal_shadow, metric_D, product_space,
                        verify_decay)
from .sft import (Sft, connect_path, entropy, essentialize, generate, higher_block_recode, member,
                  path_spectrum, period_and_classes, power_shift, product,
                  strongly_connected_components, transition_length)
from .shadowing import (FinitePseudoOrbit, GapShadow, Segment, Specification, TsLimitPseudoOrbit,
                        average_report, chain_connect, connect_heteroclinic, minimal_gap,
                        shadow_finite, shadow_specification, spec_spacing,
                        two_sided_limit_shadow, validate_delta, verify_two_sided)
from .symbolic import BACKWARD, FORWARD, Dyadic, EpBiSeq, SyncWitness, dist, shift, tail_sync

__version__ = "0.1.0"
