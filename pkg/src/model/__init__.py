from src.model.params import Branch, PhysParams
from src.model.potential import (
    a_of_energy,
    decay_exponent,
    decay_point,
    energy_of_a,
    epsilon_of_energy,
    outer_turning_point,
    potential,
    potential_minimum,
    sqrt_term_coefficient,
)

__all__ = [
    "Branch",
    "PhysParams",
    "a_of_energy",
    "decay_exponent",
    "decay_point",
    "energy_of_a",
    "epsilon_of_energy",
    "outer_turning_point",
    "potential",
    "potential_minimum",
    "sqrt_term_coefficient",
]
