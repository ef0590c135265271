import sys

from .run_system import main

sys.exit(main())
