import sys

from pointmorse.cli.main import main

sys.exit(main())
