"""revivalscope: spectral wave-packet evolution in exactly solvable 1-D
systems, conjugate-space Shannon entropies, and fractional-revival
detection from entropy minima and autocorrelation maxima."""

from .bouncer import (BouncerBasis, BouncerParams, airy_ai, airy_ai_prime,
                      airy_zero, airy_zeros, bouncer_eigenstate,
                      bouncer_gaussian_coefficients, bouncer_timescales)
from .entropy import (ENTROPY_BOUND, TimeSeriesRecord, TransformPlan,
                      density_profile, entropy_record, entropy_records,
                      from_momentum, shannon_entropy, to_momentum)
from .grids import ComplexField, DensityProfile, MomentumGrid, SpatialGrid
from .kernels import BACKEND
from .morse import (MorseBasis, MorseParams, bound_state_count, laguerre,
                    morse_eigenstate, morse_energy, morse_lambda,
                    morse_population, morse_timescales)
from .packets import (SpectralPacket, autocorrelation, autocorrelation_batch,
                      classical_component, evolve_position,
                      evolve_position_batch, packet_norm, renormalized,
                      truncate)
from .presets import PRESET_NAMES, ScenarioConfig, preset
from .revivals import (Extremum, RevivalReport, RevivalRow, farey_fractions,
                       find_extrema, match_revivals, moving_average)
from .squarewell import (SquareWellBasis, SquareWellParams, sw_energy,
                         sw_eval_phi, sw_eval_u, sw_gaussian_coefficients,
                         sw_timescales)
from .sweep import build_scenario, run_snapshots, run_sweep

__version__ = "0.1.0"
