"""Entry point for python -m src.cli."""

import sys

from .main import main

sys.exit(main().exit_code)
