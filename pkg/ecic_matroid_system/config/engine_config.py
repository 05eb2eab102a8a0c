"""
Engine Configuration Dataclass
Tunables shared by the verifiers, the matroid bridge, the simulator and the search
"""

from dataclasses import dataclass, fields
from typing import List, Dict, Any
import json

from . import settings


@dataclass
class EngineConfig:
    """
    Configuration for every engine class in the system
    Defaults come from config.settings (environment / .env)
    """

    # Concurrency
    max_workers: int = settings.MAX_WORKERS

    # Search
    search_ceiling: int = settings.SEARCH_CEILING
    search_batch_size: int = 256
    default_budget: int = 5000  # random-mode draws per length

    # Matroid engine guards
    axiom_check_limit: int = 12
    exhaustive_basis_limit: int = 14

    # Simulation
    default_trials: int = 1000
    default_seed: int = 0

    # Output
    log_level: str = settings.LOG_LEVEL
    report_dir: str = settings.REPORT_DIR

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EngineConfig':
        """Create configuration from dictionary, ignoring unknown keys"""
        valid_fields = {f.name for f in fields(cls)}
        filtered_data = {k: v for k, v in data.items() if k in valid_fields}
        return cls(**filtered_data)

    def to_json(self) -> str:
        """Convert configuration to JSON string"""
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, json_str: str) -> 'EngineConfig':
        """Create configuration from JSON string"""
        return cls.from_dict(json.loads(json_str))

    def validate(self) -> List[str]:
        """
        Validate configuration parameters
        Returns list of validation errors
        """
        errors = []

        if self.max_workers < 1 or self.max_workers > 64:
            errors.append("max_workers must be between 1 and 64")

        if self.search_ceiling < 1:
            errors.append("search_ceiling must be positive")

        if self.search_batch_size < 1:
            errors.append("search_batch_size must be positive")

        if self.default_budget < 1:
            errors.append("default_budget must be positive")

        if self.axiom_check_limit < 0 or self.axiom_check_limit > 16:
            errors.append("axiom_check_limit must be between 0 and 16")

        if self.exhaustive_basis_limit < 0 or self.exhaustive_basis_limit > 20:
            errors.append("exhaustive_basis_limit must be between 0 and 20")

        if self.default_trials < 0:
            errors.append("default_trials must be non-negative")

        if self.log_level not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            errors.append("log_level must be one of DEBUG, INFO, WARNING, ERROR, CRITICAL")

        return errors
