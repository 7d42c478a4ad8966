"""Entry point for the command-line interface."""

import sys

from rbtrees.cli import main

if __name__ == "__main__":
    sys.exit(main())
