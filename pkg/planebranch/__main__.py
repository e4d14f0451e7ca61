import sys

from planebranch.main import main

sys.exit(main())
