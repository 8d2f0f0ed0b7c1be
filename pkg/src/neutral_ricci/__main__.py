import sys

from neutral_ricci.cli import main

sys.exit(main())
