"""
PyChowCalc - Main application class and command line entry point

Created on 12 Sep 2026

@author: semuadmin
"""

import json
import logging
import sys
from argparse import ArgumentParser

from pychowcalc._version import __version__
from pychowcalc.exceptions import FixtureError, ScenarioSyntaxError
from pychowcalc.filehandler import FileHandler
from pychowcalc.globals import (
    EXIT_FAIL,
    EXIT_OK,
    EXIT_PARSE,
    JSON_INDENT,
    OUTPUT_JSON,
    OUTPUT_TEXT,
    json_subset_match,
)
from pychowcalc.oracle import sweep
from pychowcalc.scenario_handler import ScenarioHandler, to_json, to_text
from pychowcalc.scenario_parser import format_scenario, parse
from pychowcalc.strings import (
    ABOUTTXT,
    FIXTUREFAIL,
    FIXTUREMISSING,
    FIXTUREPASS,
    NOFIXTURES,
    ORACLEFAIL,
    ORACLEPASS,
    PARSEFAILTXT,
    ROUNDTRIPFAIL,
    SELFTESTSUMMARY,
    TITLE,
)

VERSION = __version__

LOGGER = logging.getLogger(__name__)


class App:
    """
    Main Application Class
    """

    def __init__(self, stdout=None, stderr=None, fixture_dir: str = None):
        """
        Set up main application and handlers.

        :param stdout: report stream (default sys.stdout)
        :param stderr: diagnostics stream (default sys.stderr)
        :param str fixture_dir: fixture corpus override
        """

        self._stdout = stdout or sys.stdout
        self._stderr = stderr or sys.stderr

        # Instantiate handler classes
        self.file_handler = FileHandler(self, fixture_dir)
        self.scenario_handler = ScenarioHandler()

    def _err(self, text: str):
        self._stderr.write(text + "\n")

    def evaluate(self, source: str) -> list:
        """
        Parse and evaluate scenario source.

        :param str source: scenario text
        :return: result records
        :rtype: list
        :raises: ScenarioSyntaxError
        """

        return self.scenario_handler.execute(parse(source))

    def run(self, path: str, output: str = OUTPUT_JSON) -> int:
        """
        Run a scenario file and write its report.

        :param str path: scenario file
        :param str output: "json" or "text"
        :return: exit code (0 ok, 1 query failure, 2 parse failure)
        :rtype: int
        """

        try:
            source = self.file_handler.read_scenario(path)
        except OSError as err:
            self._err(str(err))
            return EXIT_FAIL
        try:
            results = self.evaluate(source)
        except ScenarioSyntaxError as err:
            self._err(PARSEFAILTXT.format(err))
            return EXIT_PARSE
        report = to_json(results) if output == OUTPUT_JSON else to_text(results)
        self.file_handler.write_report(report, self._stdout)
        failed = sum(1 for rec in results if rec["status"] == "error")
        LOGGER.info("%d queries, %d failed", len(results), failed)
        return EXIT_FAIL if failed else EXIT_OK

    def check_fixture(self, name: str) -> list:
        """
        Replay one fixture against its expected JSON.

        :param str name: fixture name
        :return: mismatch descriptions (empty if the fixture passes)
        :rtype: list
        """

        source, expected = self.file_handler.load_fixture(name)
        try:
            scenario = parse(source)
        except ScenarioSyntaxError as err:
            return [PARSEFAILTXT.format(err)]
        diffs = []
        if parse(format_scenario(scenario)) != scenario:
            diffs.append(ROUNDTRIPFAIL)
        if expected is None:
            return diffs + [FIXTUREMISSING]
        actual = json.loads(to_json(self.scenario_handler.execute(scenario)))
        return diffs + json_subset_match(expected, actual)

    def selftest(self, filt: str = None, output: str = OUTPUT_TEXT) -> int:
        """
        Replay the fixture corpus and the oracle sweep.

        :param str filt: optional fixture name substring
        :param str output: "json" or "text"
        :return: exit code (0 all passed, 1 otherwise)
        :rtype: int
        """

        try:
            names = self.file_handler.list_fixtures(filt)
        except FixtureError as err:
            self._err(str(err))
            return EXIT_FAIL
        if not names:
            LOGGER.error(NOFIXTURES.format(filt))
            self._err(NOFIXTURES.format(filt))
            return EXIT_FAIL

        fixtures = {}
        for name in names:
            try:
                diffs = self.check_fixture(name)
            except FixtureError as err:
                diffs = [str(err)]
            fixtures[name] = diffs
            if diffs:
                LOGGER.error(FIXTUREFAIL.format(name, "; ".join(diffs)))
            else:
                LOGGER.info(FIXTUREPASS.format(name))
        oracles = dict(sweep()) if not filt else {}

        total = len(fixtures) + len(oracles)
        passed = sum(1 for d in fixtures.values() if not d) + sum(oracles.values())
        if output == OUTPUT_JSON:
            doc = {
                "fixtures": {n: {"passed": not d, "mismatches": d} for n, d in fixtures.items()},
                "oracles": oracles,
                "passed": passed,
                "total": total,
            }
            report = json.dumps(doc, sort_keys=True, indent=JSON_INDENT) + "\n"
        else:
            lines = []
            for name, diffs in fixtures.items():
                lines.append(
                    FIXTUREFAIL.format(name, "; ".join(diffs)) if diffs else FIXTUREPASS.format(name)
                )
            for name, ok in oracles.items():
                lines.append(ORACLEPASS.format(name) if ok else ORACLEFAIL.format(name))
            lines.append(SELFTESTSUMMARY.format(passed, total))
            report = "\n".join(lines) + "\n"
        self.file_handler.write_report(report, self._stdout)
        return EXIT_OK if passed == total else EXIT_FAIL


def _parser() -> ArgumentParser:
    parser = ArgumentParser(prog="pychowcalc", description=f"{TITLE}: {ABOUTTXT}")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="evaluate a scenario file")
    run.add_argument("file", help="scenario script")
    run.add_argument("--output", choices=(OUTPUT_JSON, OUTPUT_TEXT), default=OUTPUT_JSON)
    test = sub.add_parser("selftest", help="replay the fixture corpus and oracles")
    test.add_argument("--filter", dest="filt", default=None, help="fixture name substring")
    test.add_argument("--output", choices=(OUTPUT_JSON, OUTPUT_TEXT), default=OUTPUT_TEXT)
    return parser


def main(argv: list = None) -> int:
    """
    Command line entry point.

    :param list argv: arguments (default sys.argv[1:])
    :return: process exit code
    :rtype: int
    """

    args = _parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    app = App()
    if args.command == "run":
        return app.run(args.file, args.output)
    return app.selftest(args.filt, args.output)
