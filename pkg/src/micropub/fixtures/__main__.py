"""Regenerate the shipped MPJSON fixtures: ``python -m micropub.fixtures [DIR]``."""

import sys
from pathlib import Path

from . import write_all

target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
for path in write_all(target):
    print(path)
