import sys

from valsemi.cli import main

sys.exit(main())
