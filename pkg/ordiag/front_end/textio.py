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

"""Parser for diagram terms; reader and writer for rope descriptor files.

Terms use the grammar

    term := '0' | 'W' | 'p' | term '+' term | 'f' '(' term ',' term ')'
          | term '^+' | 'd' '[' term (';' quad (',' quad)*)? ']' '(' term ')'
    quad := '(' term ',' term ',' term ',' nat ')'

where '+' is left-associative with the lowest precedence and '^+' binds
tightest.  Parsed terms are canonicalized, so `0+W` reads as `W`; the printed
form of a canonical term (notation.printer) parses back to the same term.

Descriptor files are line-oriented `key: value` lines:

    N: 4
    sigmas: p ; d[p;(...)](...)
    knots: 0,1
    indices: 2
    body: ...
    st_top: ...
    st[2]: ...

Blank lines and lines starting with '#' are ignored.
"""

import dataclasses
import re

from ordiag.front_end import tokenizer
from ordiag.notation import printer
from ordiag.notation import term
from ordiag.util import error
from ordiag.util import od_data
from ordiag.util import parser_types


# Limits the nesting of f, d, quadruples and ^+ together.
_MAX_DEPTH = 64


class _ParseError(Exception):
    def __init__(self, message, token):
        super().__init__(message)
        self.message = message
        self.token = token


class _TermParser:
    """Recursive-descent parser over a list of tokens."""

    def __init__(self, tokens):
        self._tokens = tokens
        self._index = 0
        self._depth = 0

    def _peek(self):
        if self._index < len(self._tokens):
            return self._tokens[self._index]
        return None

    def _next(self):
        token = self._peek()
        if token is None:
            raise _ParseError("Unexpected end of input", None)
        self._index += 1
        return token

    def _expect(self, symbol):
        token = self._peek()
        if token is None or token.symbol != symbol:
            found = "end of input" if token is None else repr(token.text)
            raise _ParseError(f"Expected {symbol}, found {found}", token)
        self._index += 1
        return token

    def at_end(self):
        return self._index >= len(self._tokens)

    def parse_all(self):
        result = self.parse_term()
        if not self.at_end():
            raise _ParseError(
                f"Unexpected {self._peek().text!r} after term", self._peek()
            )
        return result

    def parse_term(self):
        if self._depth == _MAX_DEPTH:
            raise _ParseError(
                f"Term nested deeper than {_MAX_DEPTH} levels", self._peek()
            )
        self._depth += 1
        try:
            parts = [self._parse_postfix()]
            while self._peek() is not None and self._peek().symbol == '"+"':
                self._index += 1
                parts.append(self._parse_postfix())
        finally:
            self._depth -= 1
        return term.mk_sum(parts)

    def _parse_postfix(self):
        result = self._parse_primary()
        successors = 0
        while self._peek() is not None and self._peek().symbol == '"^+"':
            token = self._next()
            successors += 1
            if self._depth + successors > _MAX_DEPTH:
                raise _ParseError(
                    f"Term nested deeper than {_MAX_DEPTH} levels", token
                )
            result = self._build(token, term.mk_rsucc, result)
        return result

    def _parse_primary(self):
        token = self._peek()
        if token is None:
            raise _ParseError("Expected a term, found end of input", None)
        symbol = token.symbol
        if symbol == '"0"':
            self._index += 1
            return od_data.ZERO
        if symbol == '"W"':
            self._index += 1
            return od_data.OMEGA
        if symbol == '"p"':
            self._index += 1
            return od_data.PI
        if symbol == '"f"':
            self._index += 1
            self._expect('"("')
            first = self.parse_term()
            self._expect('","')
            second = self.parse_term()
            self._expect('")"')
            return term.mk_phi(first, second)
        if symbol == '"d"':
            self._index += 1
            self._expect('"["')
            sub = self.parse_term()
            quads = []
            if self._peek() is not None and self._peek().symbol == '";"':
                self._index += 1
                quads.append(self._parse_quad())
                while self._peek() is not None and self._peek().symbol == '","':
                    self._index += 1
                    quads.append(self._parse_quad())
            self._expect('"]"')
            self._expect('"("')
            body_term = self.parse_term()
            self._expect('")"')
            return self._build(token, term.mk_d, sub, quads, body_term)
        raise _ParseError(f"Expected a term, found {token.text!r}", token)

    def _parse_quad(self):
        start = self._expect('"("')
        nu = self.parse_term()
        self._expect('","')
        kappa = self.parse_term()
        self._expect('","')
        tau = self.parse_term()
        self._expect('","')
        j = self._parse_nat()
        self._expect('")"')
        return self._build(start, term.mk_quad, nu, kappa, tau, j)

    def _parse_nat(self):
        token = self._peek()
        if token is None or token.symbol not in ("Number", '"0"'):
            found = "end of input" if token is None else repr(token.text)
            raise _ParseError(f"Expected a natural number, found {found}", token)
        self._index += 1
        return int(token.text)

    def _build(self, token, constructor, *args):
        try:
            return constructor(*args)
        except error.OdError as e:
            raise _ParseError(str(e), token) from e


def _location_of(token, tokens, fallback):
    if token is not None:
        return token.source_location
    if tokens:
        end = tokens[-1].source_location.end
        return parser_types.SourceLocation(end, end)
    if fallback is not None:
        return fallback
    return parser_types.SourceLocation((1, 1), (1, 1))


def _parse_tokens(tokens, file_name, fallback=None):
    try:
        return _TermParser(tokens).parse_all(), []
    except _ParseError as e:
        location = _location_of(e.token, tokens, fallback)
        return None, [[error.error(file_name, location, e.message)]]


def parse_term(text, file_name="<arg>"):
    """Parses `text` as a term.

    Returns:
      A tuple of (term or None, list of errors).
    """
    tokens, errors = tokenizer.tokenize(text, file_name)
    if errors:
        return None, errors
    return _parse_tokens(tokens, file_name)


@dataclasses.dataclass(frozen=True)
class ParsedDescriptor:
    descriptor: od_data.RopeDescriptor
    inputs: od_data.SynthInputs


_REQUIRED_FIELDS = ("N", "sigmas", "knots", "body", "st_top")
_KNOWN_FIELDS = "Known fields: N, sigmas, knots, indices, body, st_top, st[i]"
_ST_KEY = re.compile(r"st\[\s*([0-9]+)\s*\]$")
_INT_LIST = re.compile(r"\s*([0-9]+\s*(,\s*[0-9]+\s*)*)?$")


def _line_location(line_number, line):
    return parser_types.SourceLocation(
        (line_number, 1), (line_number, max(len(line), 1) + 1)
    )


def _split_top_level(tokens, separator):
    """Splits tokens at `separator` tokens that are outside all brackets."""
    groups = [[]]
    depth = 0
    for token in tokens:
        if token.symbol in ('"("', '"["'):
            depth += 1
        elif token.symbol in ('")"', '"]"'):
            depth -= 1
        if token.symbol == separator and depth == 0:
            groups.append([])
        else:
            groups[-1].append(token)
    return groups


def parse_descriptor(text, file_name="<arg>"):
    """Parses a rope descriptor file.

    Returns:
      A tuple of (ParsedDescriptor or None, list of errors).  Errors name the
      offending line.
    """
    fields = {}
    st_lower = {}
    errors = []
    last_line = 1

    def fail(line_number, line, message):
        errors.append(
            [error.error(file_name, _line_location(line_number, line), message)]
        )

    for line_number, line in enumerate(text.splitlines(), start=1):
        last_line = line_number
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens, token_errors = tokenizer.tokenize_line(line, line_number, file_name)
        if token_errors:
            errors.extend(token_errors)
            continue
        colon = next(
            (k for k, token in enumerate(tokens) if token.symbol == '":"'), None
        )
        if colon is None:
            fail(line_number, line, "Expected 'key: value'")
            continue
        key = line[: tokens[colon].source_location.start.column - 1].strip()
        value_tokens = tokens[colon + 1 :]
        value_text = line[tokens[colon].source_location.end.column - 1 :]
        st_match = _ST_KEY.match(key)
        if st_match:
            index = int(st_match.group(1))
            if index in st_lower:
                fail(line_number, line, f"Duplicate field 'st[{index}]'")
                continue
            value, value_errors = _parse_tokens(
                value_tokens, file_name, _line_location(line_number, line)
            )
            if value_errors:
                errors.extend(value_errors)
                continue
            st_lower[index] = (value, line_number, line)
            continue
        if key in fields:
            fail(line_number, line, f"Duplicate field '{key}'")
            continue
        if key == "N":
            if not value_text.strip().isdigit():
                fail(line_number, line, "N must be an integer")
                continue
            fields[key] = (int(value_text), line_number, line)
        elif key in ("knots", "indices"):
            if not _INT_LIST.match(value_text):
                fail(line_number, line, f"{key} must be a comma-separated list")
                continue
            numbers = tuple(int(v) for v in value_text.split(",") if v.strip())
            fields[key] = (numbers, line_number, line)
        elif key == "sigmas":
            sigmas = []
            for group in _split_top_level(value_tokens, '";"'):
                value, value_errors = _parse_tokens(
                    group, file_name, _line_location(line_number, line)
                )
                if value_errors:
                    errors.extend(value_errors)
                    break
                sigmas.append(value)
            else:
                fields[key] = (tuple(sigmas), line_number, line)
        elif key in ("body", "st_top"):
            value, value_errors = _parse_tokens(
                value_tokens, file_name, _line_location(line_number, line)
            )
            if value_errors:
                errors.extend(value_errors)
                continue
            fields[key] = (value, line_number, line)
        else:
            location = _line_location(line_number, line)
            errors.append(
                [
                    error.error(file_name, location, f"Unknown field '{key}'"),
                    error.note(file_name, None, _KNOWN_FIELDS),
                ]
            )
    if errors:
        return None, errors

    for name in _REQUIRED_FIELDS:
        if name not in fields:
            fail(last_line, "", f"Missing field '{name}'")
    if errors:
        return None, errors

    n, n_line, n_text = fields["N"]
    sigmas, sigmas_line, sigmas_text = fields["sigmas"]
    knots, knots_line, knots_text = fields["knots"]
    indices, indices_line, indices_text = fields.get("indices", ((), last_line, ""))
    if n < 4:
        fail(n_line, n_text, f"N must be at least 4, got {n}")
    top = len(sigmas) - 1
    if not term.is_regular(sigmas[0]):
        fail(sigmas_line, sigmas_text, "sigma_0 must be regular")
    for p in range(top):
        nxt = sigmas[p + 1]
        if not isinstance(nxt, od_data.D) or nxt.sub != sigmas[p]:
            fail(
                sigmas_line,
                sigmas_text,
                f"sigma_{p + 1} must be a collapse with subscript sigma_{p}",
            )
    if any(a >= b for a, b in zip(knots, knots[1:])):
        fail(knots_line, knots_text, "knot numbers must be strictly increasing")
    elif top == 0 and knots:
        fail(knots_line, knots_text, "a rope without collapses has no knots")
    elif top > 0 and (not knots or knots[-1] != top - 1 or knots[0] < 0):
        fail(
            knots_line,
            knots_text,
            f"knot numbers must lie in [0, {top - 1}] and end at {top - 1}",
        )
    expected = max(len(knots) - 1, 0)
    if len(indices) != expected:
        fail(
            indices_line,
            indices_text,
            f"expected {expected} knot indices, got {len(indices)}",
        )
    for index in indices:
        if not 2 <= index <= n - 2:
            fail(
                indices_line,
                indices_text,
                f"index {index} out of range [2, {n - 2}]",
            )
    for index, (_, line_number, line) in sorted(st_lower.items()):
        if not 2 <= index <= n - 2:
            fail(line_number, line, f"st index {index} out of range [2, {n - 2}]")
    if errors:
        return None, errors

    descriptor = od_data.RopeDescriptor(
        N=n, sigmas=sigmas, knot_numbers=knots, knot_indices=indices
    )
    inputs = od_data.SynthInputs(
        body=fields["body"][0],
        st_top=fields["st_top"][0],
        st_lower={index: value for index, (value, _, _) in st_lower.items()},
    )
    return ParsedDescriptor(descriptor, inputs), []


def print_descriptor(descriptor, inputs):
    """Returns the descriptor file text for (descriptor, inputs)."""
    lines = [
        f"N: {descriptor.N}",
        "sigmas: " + " ; ".join(printer.print_term(s) for s in descriptor.sigmas),
        "knots: " + ",".join(str(k) for k in descriptor.knot_numbers),
        "indices: " + ",".join(str(i) for i in descriptor.knot_indices),
        f"body: {printer.print_term(inputs.body)}",
        f"st_top: {printer.print_term(inputs.st_top)}",
    ]
    for index in sorted(inputs.st_lower):
        lines.append(f"st[{index}]: {printer.print_term(inputs.st_lower[index])}")
    return "\n".join(lines) + "\n"
