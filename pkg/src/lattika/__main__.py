import sys

from lattika.cli import main

sys.exit(main())
