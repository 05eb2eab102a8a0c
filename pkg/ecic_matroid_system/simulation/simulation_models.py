"""
Simulation Data Models
Per-receiver tallies of Monte Carlo decoding runs
"""

from dataclasses import dataclass
from typing import Dict, Any, Tuple

import pandas as pd


@dataclass(frozen=True)
class SimulationResult:
    """Success counts per receiver over a seeded run"""
    trials: int
    seed: int
    deltas: Tuple[int, ...]
    successes: Tuple[int, ...]

    @property
    def receivers(self) -> range:
        return range(1, len(self.successes) + 1)

    def success_rate(self, receiver: int) -> float:
        """Fraction of successful decodes at receiver; NaN when no trial ran"""
        if self.trials == 0:
            return float('nan')
        return self.successes[receiver - 1] / self.trials

    @property
    def all_succeeded(self) -> bool:
        return all(s == self.trials for s in self.successes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'trials': self.trials,
            'seed': self.seed,
            'deltas': list(self.deltas),
            'successes': list(self.successes),
        }

    def to_dataframe(self) -> pd.DataFrame:
        """One row per receiver"""
        if self.trials == 0:
            return pd.DataFrame(columns=['receiver', 'delta', 'trials', 'successes', 'success_rate'])

        data = []
        for i in self.receivers:
            data.append({
                'receiver': i,
                'delta': self.deltas[i - 1],
                'trials': self.trials,
                'successes': self.successes[i - 1],
                'success_rate': self.success_rate(i),
            })
        return pd.DataFrame(data)
