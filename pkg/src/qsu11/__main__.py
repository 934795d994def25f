"""Module entry point: ``python -m qsu11`` runs the verification CLI."""

import sys

from .harness import main

if __name__ == "__main__":
    sys.exit(main())
