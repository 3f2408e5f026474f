"""Lorentz-boost effects on the mean-spin entanglement of two massive Dirac particles."""

from .kinematics import BoostZ, DomainError, FourMomentum, SphericalMomentum, boost_momentum, on_shell
from .wigner import coefficients, positive_block, transform_closed_form, transform_operator_product
from .states import TwoParticleState, bell_momentum_state, boost_state, reduce_over_momentum
from .entanglement import (
    BellSetting,
    bell_max_optimize,
    bell_max_oracle,
    bell_parameter,
    concurrence,
    spin_correlation,
)

__version__ = "0.1.0"
