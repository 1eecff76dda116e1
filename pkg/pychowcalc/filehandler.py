"""
Filehandler class for PyChowCalc application

This handles all the file i/o: scenario scripts, the fixture corpus of
scenario / expected JSON pairs and report output.

Created on 10 Sep 2026

@author: semuadmin
"""

import json
import logging
import os

from pychowcalc.exceptions import FixtureError
from pychowcalc.globals import EXPECTED_EXT, FIXTURE_DIR, FIXTURE_ENV, SCENARIO_EXT
from pychowcalc.strings import FIXTUREDIRERROR, FIXTUREREADERROR, OPENFILEERROR

LOGGER = logging.getLogger(__name__)


class FileHandler:
    """
    File handler class.
    """

    def __init__(self, app=None, fixture_dir: str = None):
        """
        Constructor.

        :param object app: reference to main application (optional)
        :param str fixture_dir: fixture directory (default from environment or package)
        """

        self.__app = app  # Reference to main application class
        self._fixture_dir = fixture_dir

    @property
    def fixture_dir(self) -> str:
        """
        Getter for the fixture directory. The PYCHOWCALC_FIXTURES environment
        variable overrides the packaged corpus.

        :return: directory path
        :rtype: str
        :raises: FixtureError if the directory does not exist
        """

        path = self._fixture_dir or os.environ.get(FIXTURE_ENV) or FIXTURE_DIR
        if not os.path.isdir(path):
            raise FixtureError(FIXTUREDIRERROR.format(path))
        return path

    @staticmethod
    def read_scenario(path: str) -> str:
        """
        Read a scenario script.

        :param str path: file path
        :return: source text
        :rtype: str
        :raises: OSError
        """

        try:
            with open(path, "r", encoding="utf-8") as file:
                return file.read()
        except OSError as err:
            LOGGER.error(OPENFILEERROR.format(path, err))
            raise

    def list_fixtures(self, filt: str = None) -> list:
        """
        Names of the fixtures in the corpus, sorted.

        :param str filt: optional substring filter
        :return: fixture names (scenario file stems)
        :rtype: list
        """

        names = [
            fname[: -len(SCENARIO_EXT)]
            for fname in os.listdir(self.fixture_dir)
            if fname.endswith(SCENARIO_EXT)
        ]
        if filt:
            names = [name for name in names if filt in name]
        return sorted(names)

    def load_fixture(self, name: str) -> tuple:
        """
        Load a fixture pair.

        :param str name: fixture name
        :return: (scenario source, expected JSON document or None if absent)
        :rtype: tuple
        :raises: FixtureError if either file is unreadable
        """

        base = os.path.join(self.fixture_dir, name)
        try:
            source = self.read_scenario(base + SCENARIO_EXT)
        except OSError as err:
            raise FixtureError(FIXTUREREADERROR.format(name, err)) from err
        expected_path = base + EXPECTED_EXT
        if not os.path.exists(expected_path):
            return source, None
        try:
            with open(expected_path, "r", encoding="utf-8") as file:
                expected = json.load(file)
        except (OSError, ValueError) as err:
            raise FixtureError(FIXTUREREADERROR.format(name, err)) from err
        return source, expected

    @staticmethod
    def write_report(text: str, stream):
        """
        Write a report to an output stream.

        :param str text: report text
        :param stream: writable text stream
        """

        stream.write(text)
        stream.flush()
