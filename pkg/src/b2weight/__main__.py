import sys

from b2weight.cli import main

sys.exit(main())
