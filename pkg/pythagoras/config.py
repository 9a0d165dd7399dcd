""" config.py -- Defaults and dotenv variables for Pythagoras.

    Language: Python 3.9
"""

import os
import pathlib

import dotenv

dotenv.load_dotenv(pathlib.Path(__file__).with_name(".env"))

PYTHAGORAS_VERSION = "1.0.0"

# Environment only touches logging and the worker pool, never a computed value.
DEBUG = os.getenv("PYTHAGORAS_DEBUG", "0").lower() in ("1", "true", "yes")
MAX_WORKERS = int(os.getenv("PYTHAGORAS_WORKERS", "4"))

DEFAULT_SEED = 0
DEFAULT_CASES = 1000
DEFAULT_TOLERANCE = 1e-9

# arccos arguments this close to the boundary are clamped, not rejected.
CLAMP_TOLERANCE = 1e-12

EARTH_RADIUS_KM = 6371.0
MAX_LEGS = 20  # n! is exact in double precision through 20!.

JSON_DIR = pathlib.Path(__file__).parent.joinpath("json")
COMMAND_INFO_FILE = JSON_DIR.joinpath("command_info.json")
CITY_TABLE_FILE = JSON_DIR.joinpath("cities.json")
