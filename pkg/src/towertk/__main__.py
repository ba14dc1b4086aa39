"""
Entry point for towertk when run with python -m towertk.
"""

import sys

from .cli import main

if __name__ == '__main__':
    sys.exit(main())
