""" cities.py -- City coordinate table used by the distance command.

    Language: Python 3.9
"""

import json
import logging
import pathlib

import pandas as pd

from pythagoras import config
from pythagoras.utils.exceptions import CityNotFoundError, UsageError

TABLE_VERSION = 1
TABLE_UNITS = {"latitude": "degrees north", "longitude": "degrees east"}


class CityTable(object):
    """Container for named (latitude, longitude) records."""

    def __init__(self, path: pathlib.Path = config.CITY_TABLE_FILE):
        self.path = pathlib.Path(path)
        try:
            with open(self.path, "r") as f:
                data = json.loads(f.read())
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"Could not read city table '{self.path.name}': {e}") from e
        if data.get("version") != TABLE_VERSION:
            raise UsageError(
                f"City table '{self.path.name}' has version {data.get('version')!r}, "
                f"expected {TABLE_VERSION}."
            )
        if data.get("units") != TABLE_UNITS:
            raise UsageError(
                f"City table '{self.path.name}' must give coordinates in {TABLE_UNITS}, "
                f"got {data.get('units')!r}."
            )
        self.table = pd.DataFrame.from_records(
            data.get("records", []), columns=["name", "latitude", "longitude"]
        ).set_index("name")
        logging.info(f"Loaded {len(self.table)} cities from '{self.path.name}'.")

    @property
    def names(self) -> list:
        return list(self.table.index)

    def lookup(self, name: str) -> tuple:
        """Latitude and longitude of a city, in degrees.

        Parameters
        ----------
        name: str
            City name. Case and surrounding whitespace are ignored.

        Returns
        ----------
        tuple
            (latitude, longitude).
        """
        key = name.strip().lower()
        if key not in self.table.index:
            logging.error(f"City '{name}' not found in '{self.path.name}'.")
            raise CityNotFoundError(
                f"Unknown city '{name}'. Known cities: {', '.join(self.names)}."
            )
        row = self.table.loc[key]
        return float(row["latitude"]), float(row["longitude"])
