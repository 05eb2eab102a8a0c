"""
ECIC Matroid System
Scalar linear differential error-correcting index codes over prime fields,
their verification oracles, and their representable-matroid certificates.
"""

__version__ = "1.0.0"
__description__ = "Differential error-correcting index codes and matroid certificates"

from .config.engine_config import EngineConfig
from .config.config_manager import ConfigManager

__all__ = ['EngineConfig', 'ConfigManager']
