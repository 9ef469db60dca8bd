import sys

from qwalk_mub.cli.main import main

sys.exit(main())
