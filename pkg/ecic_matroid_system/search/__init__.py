"""
Search for short differential error-correcting index codes
"""

from .search_models import SearchSpec, SearchResult, SearchMode, LengthOutcome, LengthStatus
from .code_search import CodeSearcher, canonical_columns, canonical_count

__all__ = [
    'SearchSpec', 'SearchResult', 'SearchMode', 'LengthOutcome', 'LengthStatus',
    'CodeSearcher', 'canonical_columns', 'canonical_count',
]
