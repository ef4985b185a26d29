import sys

from sizeramsey.cli import main

sys.exit(main())
