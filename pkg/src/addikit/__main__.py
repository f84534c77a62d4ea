import sys

from addikit.cli import main

sys.exit(main())
