import sys

from fano_privacy.cli import main

sys.exit(main())
