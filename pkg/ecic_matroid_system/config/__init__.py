"""
Configuration management for the ECIC Matroid System
"""

from .engine_config import EngineConfig
from .config_manager import ConfigManager

__all__ = ['EngineConfig', 'ConfigManager']
