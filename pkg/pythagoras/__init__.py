""" Pythagoras -- numerical generalizations of the Pythagorean theorem, cross-checked.

    Language: Python 3.9
"""

from pythagoras.config import PYTHAGORAS_VERSION as __version__  # noqa: F401
