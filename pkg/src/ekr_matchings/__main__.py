"""Module entry point: run the CLI via python -m ekr_matchings."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
