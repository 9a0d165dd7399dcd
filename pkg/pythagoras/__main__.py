""" __main__.py -- Run Pythagoras with python -m pythagoras.

    Language: Python 3.9
"""

import sys

from pythagoras.main import main

sys.exit(main())
