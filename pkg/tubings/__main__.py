"""Entry point for python -m tubings."""

import sys
from tubings.cli import main

if __name__ == "__main__":
    sys.exit(main())
