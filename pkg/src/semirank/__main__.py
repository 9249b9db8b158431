import sys

from semirank.cli import main

sys.exit(main())
