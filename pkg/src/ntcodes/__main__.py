import sys

from ntcodes.cli import main

sys.exit(main())
