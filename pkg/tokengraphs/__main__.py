"""Allow running as: python -m tokengraphs"""

import sys

from .cli import main

sys.exit(main())
