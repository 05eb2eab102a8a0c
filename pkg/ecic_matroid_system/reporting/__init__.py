"""
Text reports and persisted run history
"""

from .report_formatter import ReportFormatter
from .report_logger import ReportLogger, RunRecord

__all__ = ['ReportFormatter', 'ReportLogger', 'RunRecord']
