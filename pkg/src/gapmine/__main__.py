import sys

from gapmine.cli import main

sys.exit(main())
