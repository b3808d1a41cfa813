#!/usr/bin/env python3
"""
TotDom Game Solver - Application Entry Point
Combinatorial Games Group

Sets up the Python path and runs the command-line interface.
Run it from the project root directory:

    python main.py solve --graph cycle:n=8 --variant d
"""

import sys
from pathlib import Path

# Get the directory containing this script (project root)
PROJECT_ROOT = Path(__file__).parent

# Add project root to Python path so we can import src as a package
sys.path.insert(0, str(PROJECT_ROOT))


def main(argv=None):
    """Main entry point"""
    try:
        # Import and run the main application module
        import src.main

        return src.main.main(argv)

    except ImportError as e:
        print(f"Import error: {e}", file=sys.stderr)
        print("Install dependencies with: pip install -r requirements.txt", file=sys.stderr)
        return 2


if __name__ == "__main__":
    if not (PROJECT_ROOT / "src").exists():
        print("Error: src directory not found", file=sys.stderr)
        print(f"Make sure you're running this script from: {PROJECT_ROOT}", file=sys.stderr)
        sys.exit(2)

    sys.exit(main())
