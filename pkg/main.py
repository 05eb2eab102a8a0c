#!/usr/bin/env python3
"""
ECIC Matroid System - command line entry point

    python main.py verify fixtures/weighted_three.json --oracle all
    python main.py to-matroid fixtures/weighted_three.json weighted_three_certificate.json
    python main.py from-matroid fixtures/three_parity_certificate.json fixtures/three_parity.json
    python main.py search fixtures/all_ones.json --nmax 4
    python main.py simulate fixtures/weighted_three.json --trials 1000 --seed 7
    python main.py contractions fixtures/all_ones.json --receiver 1
    python main.py equiv-check fixtures
"""
import logging
import sys

from ecic_matroid_system.config import settings
from ecic_matroid_system.cli import main

# Logs go to stderr; stdout carries only the report
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL, logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)

if __name__ == "__main__":
    sys.exit(main())
