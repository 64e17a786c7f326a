import sys

from skewpbw.cli import main

sys.exit(main())
