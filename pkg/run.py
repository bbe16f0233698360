#!/usr/bin/env python3
"""
gsemi - Main Entry Point
Command-line launcher for the Gorenstein projective classification engine
"""

import sys
from pathlib import Path

# Add project root to Python path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

REQUIRED_MODULES = ['numpy', 'sympy', 'pyparsing', 'pydantic', 'dotenv']


def check_prerequisites() -> bool:
    """Check Python version and required packages before importing gsemi."""
    if sys.version_info < (3, 9):
        print(
            f"error: Python 3.9+ required, found {sys.version_info.major}.{sys.version_info.minor}",
            file=sys.stderr,
        )
        return False

    missing_modules = []
    for module in REQUIRED_MODULES:
        try:
            __import__(module)
        except ImportError:
            missing_modules.append(module)

    if missing_modules:
        print(f"error: missing required modules: {', '.join(missing_modules)}", file=sys.stderr)
        print("Run setup.sh or: pip install -r requirements.txt", file=sys.stderr)
        return False
    return True


if __name__ == "__main__":
    if not check_prerequisites():
        sys.exit(2)

    from src.cli.main import run

    sys.exit(run(sys.argv[1:]))
