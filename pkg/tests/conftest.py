"""Shared independent oracles for the test suite.

These helpers deliberately avoid the library's own code paths: the cycle
oracle evaluates the raw ratio-of-exponentials closed form term by term, so
it can arbitrate the occupation-difference implementation.
"""

import math


def exponential_cycle_energies(medium, t_low, theta_sq, boltzmann_k):
    """Two-level cycle exchanges from the explicit exponential closed form."""
    e_l_g, e_l_e = medium.low_config
    e_h_g, e_h_e = medium.high_config
    beta = 1.0 / (boltzmann_k * t_low)
    num = math.exp(-beta * e_l_g) * math.exp(-beta * e_h_e / theta_sq) - math.exp(
        -beta * e_h_g / theta_sq
    ) * math.exp(-beta * e_l_e)
    den = (
        math.exp(-beta * e_h_g / theta_sq) + math.exp(-beta * e_h_e / theta_sq)
    ) * (math.exp(-beta * e_l_g) + math.exp(-beta * e_l_e))
    x = num / den
    return ((e_h_e - e_h_g) * x, -(e_l_e - e_l_g) * x)


def boltzmann_probabilities(levels, temperature, boltzmann_k):
    """Direct partition-sum evaluation, no stabilization tricks."""
    weights = [math.exp(-e / (boltzmann_k * temperature)) for e in levels]
    z = sum(weights)
    return [w / z for w in weights]
