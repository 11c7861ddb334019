# Copyright 2024 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""The `od` command: batch access to diagrams, Q parts, ropes and self-tests.

Exit status is 0 for success (a valid diagram, passing laws or suites), 1 when
the subject is invalid or a check fails, and 2 for usage and parse errors.
Data goes to stdout; errors and log records go to stderr.
"""

import argparse
import dataclasses
import json
import logging
import os
import sys
from typing import Final

from ordiag.check import enumeration
from ordiag.check import selftest
from ordiag.front_end import textio
from ordiag.notation import chain
from ordiag.notation import order
from ordiag.notation import printer
from ordiag.notation import qpart
from ordiag.notation import validity
from ordiag.util import error

LOGGER: Final = logging.getLogger(__name__)

_USAGE_ERROR = 2


def _parse_command_line(argv):
    """Parses the given command-line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=4, help="The level N (at least 4).")
    common.add_argument(
        "--json", action="store_true", help="Print results as JSON objects."
    )
    common.add_argument(
        "--verbose",
        "-v",
        action="count",
        default=0,
        help="Log progress; repeat for per-item detail.",
    )
    common.add_argument(
        "--color-output",
        default="if_tty",
        choices=["always", "never", "if_tty", "auto"],
        help="Print error messages using color.  'auto' is a synonym for 'if_tty'.",
    )

    parser = argparse.ArgumentParser(
        description="Ordinal diagram toolkit.", prog=os.path.basename(argv[0])
    )
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser(
        "validate", parents=[common], help="Check that a term is a diagram."
    )
    validate.add_argument("term", help="The term to check.")

    compare = commands.add_parser("cmp", parents=[common], help="Compare two terms.")
    compare.add_argument("left")
    compare.add_argument("right")

    enum = commands.add_parser(
        "enum", parents=[common], help="List the diagrams up to a size."
    )
    enum.add_argument("--max-size", type=int, default=3)
    enum.add_argument("--count-cap", type=int, default=100_000)

    show_q = commands.add_parser(
        "qpart", parents=[common], help="Show In and pd/st/rg of a collapse."
    )
    show_q.add_argument("term")

    for name, text in (
        ("chain-synth", "Synthesize the collapse a rope descriptor determines."),
        ("chain-verify", "Check the rope laws of a rope descriptor."),
    ):
        rope = commands.add_parser(name, parents=[common], help=text)
        rope.add_argument("--desc", required=True, help="Rope descriptor file.")

    suites = commands.add_parser(
        "selftest", parents=[common], help="Run the property suites."
    )
    suites.add_argument(
        "--seed", type=int, default=0, help="Seed; OD_SEED overrides it."
    )
    suites.add_argument("--max-size", type=int, default=5)
    suites.add_argument(
        "--suite",
        action="append",
        choices=sorted(selftest.SUITES),
        help="Run only this suite (repeatable).",
    )

    descend = commands.add_parser(
        "descend", parents=[common], help="Print a random descending sequence."
    )
    descend.add_argument("term")
    descend.add_argument("--seed", type=int, default=0)
    descend.add_argument("--steps", type=int, default=20)

    reprint = commands.add_parser(
        "print", parents=[common], help="Print a term in canonical form."
    )
    reprint.add_argument("term")
    reprint.add_argument("--pretty", action="store_true")
    return parser.parse_args(argv[1:])


def _show_errors(errors, source_codes, color_output):
    """Prints errors with source code snippets."""
    use_color = color_output == "always" or (
        color_output in ("auto", "if_tty") and sys.stderr.isatty()
    )
    print(error.format_errors(errors, source_codes, use_color), file=sys.stderr)


def _read_term(text, flags):
    t, errors = textio.parse_term(text)
    if errors:
        _show_errors(errors, {"<arg>": text}, flags.color_output)
    return t


def _read_descriptor(flags):
    try:
        with open(flags.desc) as f:
            text = f.read()
    except IOError as e:
        print(str(e), file=sys.stderr)
        return None
    parsed, errors = textio.parse_descriptor(text, flags.desc)
    if errors:
        _show_errors(errors, {flags.desc: text}, flags.color_output)
    return parsed


def _print_report(report, flags):
    if flags.json:
        print(
            json.dumps(
                {
                    "subject": printer.print_term(report.subject),
                    "checks": [
                        {"label": c.label, "passed": c.passed, "detail": c.detail}
                        for c in report.checks
                    ],
                    "valid": report.valid,
                }
            )
        )
        return
    print(
        f"{printer.print_term(report.subject)}: "
        + ("valid" if report.valid else "invalid")
    )
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        print(f"  {status} {check.label}: {check.detail}")


def _validate(flags):
    t = _read_term(flags.term, flags)
    if t is None:
        return _USAGE_ERROR
    report = validity.check_term(t, flags.n)
    _print_report(report, flags)
    return 0 if report.valid else 1


def _compare(flags):
    left = _read_term(flags.left, flags)
    right = _read_term(flags.right, flags)
    if left is None or right is None:
        return _USAGE_ERROR
    try:
        result = order.checked_cmp(left, right, flags.n)
    except error.OrderError as e:
        print(str(e), file=sys.stderr)
        return 1
    print(json.dumps({"result": result.name}) if flags.json else result.name)
    return 0


def _enum(flags):
    config = enumeration.EnumConfig(
        N=flags.n, max_size=flags.max_size, count_cap=flags.count_cap
    )
    result = enumeration.enumerate_valid(config)
    spellings = [printer.print_term(t) for t in result.terms]
    if flags.json:
        print(json.dumps({"terms": spellings, "truncated": result.truncated}))
    else:
        for spelling in spellings:
            print(spelling)
    if result.truncated:
        print(f"truncated at {flags.count_cap} terms", file=sys.stderr)
    return 0


def _qpart(flags):
    t = _read_term(flags.term, flags)
    if t is None:
        return _USAGE_ERROR
    try:
        indices = sorted(qpart.in_set(t))
        rows = []
        # Views exist up to the index of the last quadruple, whatever the order.
        for i in range(2, t.q[-1].j + 1 if t.q else 2):
            view = qpart.derive(t, i)
            rows.append(
                {
                    "i": i,
                    "pd": printer.print_term(view.pd),
                    "st": None if view.st is None else printer.print_term(view.st),
                    "rg": None if view.rg is None else printer.print_term(view.rg),
                }
            )
    except error.OdError as e:
        print(str(e), file=sys.stderr)
        return _USAGE_ERROR
    if flags.json:
        print(
            json.dumps(
                {"subject": printer.print_term(t), "in": indices, "indices": rows}
            )
        )
        return 0
    print("In: " + ",".join(str(i) for i in indices))
    for row in rows:
        print(
            f"i={row['i']} pd={row['pd']} st={row['st'] or '-'} rg={row['rg'] or '-'}"
        )
    return 0


def _chain_synth(flags):
    parsed = _read_descriptor(flags)
    if parsed is None:
        return _USAGE_ERROR
    try:
        _, report = chain.synth(parsed.descriptor, parsed.inputs)
    except error.OdError as e:
        print(str(e), file=sys.stderr)
        return _USAGE_ERROR
    _print_report(report, flags)
    return 0 if report.valid else 1


def _chain_verify(flags):
    parsed = _read_descriptor(flags)
    if parsed is None:
        return _USAGE_ERROR
    try:
        report = chain.verify_rope_laws(parsed.descriptor)
    except error.OdError as e:
        print(str(e), file=sys.stderr)
        return _USAGE_ERROR
    _print_report(report, flags)
    return 0 if report.valid else 1


def _selftest(flags):
    seed = flags.seed
    if "OD_SEED" in os.environ:
        try:
            seed = int(os.environ["OD_SEED"])
        except ValueError:
            print("OD_SEED must be an integer", file=sys.stderr)
            return _USAGE_ERROR
    config = selftest.SelftestConfig(seed=seed, max_size=flags.max_size)
    LOGGER.info("selftest seed %d", seed)
    results = selftest.run_suites(config, flags.suite)
    if flags.json:
        print(json.dumps([dataclasses.asdict(result) for result in results]))
    else:
        for result in results:
            status = "pass" if result.passed else "FAIL"
            print(f"{status} {result.name} ({result.cases} cases)")
            if result.counterexample:
                print("  " + result.counterexample.replace("\n", "\n  "))
    return 0 if all(result.passed for result in results) else 1


def _descend(flags):
    t = _read_term(flags.term, flags)
    if t is None:
        return _USAGE_ERROR
    if not validity.is_valid(t, flags.n):
        print(f"{flags.term} is not a diagram", file=sys.stderr)
        return 1
    sequence = enumeration.descent_sample(flags.seed, t, flags.steps)
    spellings = [printer.print_term(s) for s in sequence]
    print(json.dumps(spellings) if flags.json else "\n".join(spellings))
    return 0


def _print(flags):
    t = _read_term(flags.term, flags)
    if t is None:
        return _USAGE_ERROR
    print(printer.print_term(t, pretty=flags.pretty))
    return 0


_COMMANDS = {
    "validate": _validate,
    "cmp": _compare,
    "enum": _enum,
    "qpart": _qpart,
    "chain-synth": _chain_synth,
    "chain-verify": _chain_verify,
    "selftest": _selftest,
    "descend": _descend,
    "print": _print,
}


def main(flags):
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(flags.verbose, 2)],
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if flags.n < 4:
        print(f"--n must be at least 4, got {flags.n}", file=sys.stderr)
        return _USAGE_ERROR
    return _COMMANDS[flags.command](flags)


def run():
    sys.exit(main(_parse_command_line(sys.argv)))


if __name__ == "__main__":
    run()
