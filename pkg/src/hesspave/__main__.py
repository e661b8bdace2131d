import sys

from hesspave.cli import main

sys.exit(main())
