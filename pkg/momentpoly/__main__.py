import sys

from .momentpoly import main

sys.exit(main())
