import sys

from caryb.cli import main

sys.exit(main())
