import sys

from richfca.cli import main

sys.exit(main())
