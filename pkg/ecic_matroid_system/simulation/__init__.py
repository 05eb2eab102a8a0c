"""
Monte Carlo decoding simulation
"""

from .decode_simulator import DecodeSimulator
from .simulation_models import SimulationResult

__all__ = ['DecodeSimulator', 'SimulationResult']
