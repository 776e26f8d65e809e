import sys

from kkclique.api.cli import main

sys.exit(main())
