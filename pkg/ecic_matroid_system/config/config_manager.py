"""
Configuration Manager for the ECIC Matroid System
Handles loading, saving, and validation of engine configurations
"""

import json
from pathlib import Path
from typing import List
import logging

from .engine_config import EngineConfig
from ..exceptions import ConfigurationError


class ConfigManager:
    """
    Engine Configuration Manager

    Loads and saves EngineConfig JSON files with validation
    """

    def __init__(self, config_dir: str = "configs"):
        """
        Initialize Configuration Manager

        Args:
            config_dir: Directory holding configuration files
        """
        self.config_dir = Path(config_dir)
        self.logger = logging.getLogger("ConfigManager")
        self.logger.debug(f"🗂️ Config Manager initialized: {self.config_dir}")

    def load_config(self, config_path: str) -> EngineConfig:
        """
        Load configuration from file with validation

        Args:
            config_path: File name inside config_dir (".json" may be omitted)

        Returns:
            EngineConfig instance

        Raises:
            ConfigurationError: If the file is not valid JSON or fails validation
        """
        config_file = self.config_dir / config_path
        if config_file.suffix != ".json":
            config_file = config_file.with_suffix(".json")

        if not config_file.exists():
            self.logger.warning(f"⚠️ Config file not found: {config_file}, using defaults")
            return self.get_default_config()

        try:
            with open(config_file, 'r') as f:
                config_data = json.load(f)
        except json.JSONDecodeError as e:
            error_msg = f"Invalid JSON in config file {config_file}: {str(e)}"
            self.logger.error(f"💀 {error_msg}")
            raise ConfigurationError(error_msg)

        if not isinstance(config_data, dict):
            raise ConfigurationError(f"Config file {config_file} must hold a JSON object")

        try:
            config = EngineConfig.from_dict(config_data)
        except TypeError as e:
            raise ConfigurationError(f"Bad config values in {config_file}: {str(e)}")

        errors = config.validate()
        if errors:
            error_msg = "Configuration validation failed:\n" + "\n".join(f"  - {error}" for error in errors)
            self.logger.error(f"💀 {error_msg}")
            raise ConfigurationError(error_msg)

        self.logger.info(f"✅ Configuration loaded: {config_file.name}")
        return config

    def save_config(self, config: EngineConfig, config_path: str) -> Path:
        """
        Save configuration to file after validating it

        Returns:
            Path of the written file
        """
        errors = config.validate()
        if errors:
            error_msg = "Cannot save invalid configuration:\n" + "\n".join(f"  - {error}" for error in errors)
            self.logger.error(f"💀 {error_msg}")
            raise ConfigurationError(error_msg)

        self.config_dir.mkdir(parents=True, exist_ok=True)
        config_file = self.config_dir / config_path
        with open(config_file, 'w') as f:
            json.dump(config.to_dict(), f, indent=2)

        self.logger.info(f"✅ Configuration saved: {config_path}")
        return config_file

    def get_default_config(self) -> EngineConfig:
        """Get default configuration"""
        return EngineConfig()

    def create_default_configs(self) -> None:
        """
        Create the shipped configuration files: default, fast and thorough
        """
        self.save_config(self.get_default_config(), "default.json")

        # Quick interactive runs
        fast_config = EngineConfig(
            max_workers=2,
            search_ceiling=200000,
            default_budget=1000,
            default_trials=200,
        )
        self.save_config(fast_config, "fast.json")

        # Overnight sweeps
        thorough_config = EngineConfig(
            max_workers=8,
            search_ceiling=50000000,
            search_batch_size=1024,
            default_budget=100000,
            default_trials=10000,
        )
        self.save_config(thorough_config, "thorough.json")

        self.logger.info("✅ Default configuration files created")

    def list_configs(self) -> List[str]:
        """List available configuration files"""
        if not self.config_dir.exists():
            return []
        return sorted(f.name for f in self.config_dir.glob("*.json"))
