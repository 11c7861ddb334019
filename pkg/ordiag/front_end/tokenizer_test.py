# Copyright 2019 Google LLC
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

"""Tests for tokenizer."""

import unittest

from ordiag.front_end import tokenizer
from ordiag.util import error
from ordiag.util import parser_types


def _token_symbols(token_list):
    """Given a list of tokens, returns a list of their symbol names."""
    return [token.symbol for token in token_list]


class TokenizerTest(unittest.TestCase):
    """Tests for the tokenizer.tokenize function."""

    def test_collapse(self):
        tokens, errors = tokenizer.tokenize("d[p](f(0,0))", "file")
        self.assertFalse(errors)
        self.assertEqual(
            ['"d"', '"["', '"p"', '"]"', '"("', '"f"', '"("', '"0"', '","', '"0"']
            + ['")"', '")"'],
            _token_symbols(tokens),
        )

    def test_next_regular_is_one_token(self):
        tokens, errors = tokenizer.tokenize("W^+^+", "file")
        self.assertFalse(errors)
        self.assertEqual(['"W"', '"^+"', '"^+"'], _token_symbols(tokens))

    def test_whitespace_and_comments_are_dropped(self):
        tokens, errors = tokenizer.tokenize("f( 0 ,\t0 )  # one", "file")
        self.assertFalse(errors)
        self.assertEqual(
            ['"f"', '"("', '"0"', '","', '"0"', '")"'], _token_symbols(tokens)
        )

    def test_longest_match(self):
        tokens, errors = tokenizer.tokenize("fx 12 0", "file")
        self.assertFalse(errors)
        self.assertEqual(["Word", "Number", '"0"'], _token_symbols(tokens))

    def test_lines_are_concatenated(self):
        tokens, errors = tokenizer.tokenize("f(0,\n0)", "file")
        self.assertFalse(errors)
        self.assertEqual(6, len(tokens))
        self.assertEqual(
            parser_types.SourceLocation((2, 1), (2, 2)), tokens[4].source_location
        )

    def test_source_locations(self):
        tokens, _ = tokenizer.tokenize("W^+ + p", "file")
        self.assertEqual(
            [
                parser_types.SourceLocation((1, 1), (1, 2)),
                parser_types.SourceLocation((1, 2), (1, 4)),
                parser_types.SourceLocation((1, 5), (1, 6)),
                parser_types.SourceLocation((1, 7), (1, 8)),
            ],
            [token.source_location for token in tokens],
        )

    def test_unrecognized_token(self):
        tokens, errors = tokenizer.tokenize("f(0,0)\n  @", "file")
        self.assertIsNone(tokens)
        self.assertEqual(
            [
                [
                    error.error(
                        "file",
                        parser_types.SourceLocation((2, 3), (2, 4)),
                        "Unrecognized token",
                    )
                ]
            ],
            errors,
        )


class TokenizeLineTest(unittest.TestCase):
    def test_descriptor_line(self):
        tokens, errors = tokenizer.tokenize_line("st[2]: W", 3, "rope.desc")
        self.assertIsNone(errors)
        self.assertEqual(
            ["Word", '"["', "Number", '"]"', '":"', '"W"'], _token_symbols(tokens)
        )
        self.assertEqual(3, tokens[0].source_location.start.line)

    def test_empty_line(self):
        self.assertEqual(([], None), tokenizer.tokenize_line("", 1, "file"))


if __name__ == "__main__":
    unittest.main()
