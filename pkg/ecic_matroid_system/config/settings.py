"""
Configuration settings for the ECIC Matroid System
Process-level defaults, overridable through the environment or a .env file
"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Logging
LOG_LEVEL: str = os.getenv('ECIC_LOG_LEVEL', 'WARNING').upper()

# Thread pool width for receivers, error patterns, trials and search batches
MAX_WORKERS: int = int(os.getenv('ECIC_MAX_WORKERS', '4'))

# Largest number of canonical candidates an exhaustive refutation may enumerate
SEARCH_CEILING: int = int(os.getenv('ECIC_SEARCH_CEILING', '2000000'))

# Where --save-report writes run records
REPORT_DIR: str = os.getenv('ECIC_REPORT_DIR', 'report_logs')

# Field moduli accepted by PrimeField
MAX_FIELD_MODULUS: int = 251
