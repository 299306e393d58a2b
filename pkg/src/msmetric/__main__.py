import sys

from msmetric.cli import main

sys.exit(main())
