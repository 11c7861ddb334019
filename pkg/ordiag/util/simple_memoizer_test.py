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

"""Tests for simple_memoizer."""

import threading
import unittest

from ordiag.util import simple_memoizer


class SimpleMemoizerTest(unittest.TestCase):

    def test_memoized_function_is_only_called_once(self):
        arguments = []

        @simple_memoizer.memoize
        def add_one_and_record(n):
            arguments.append(n)
            return n + 1

        self.assertEqual(1, add_one_and_record(0))
        self.assertEqual(1, add_one_and_record(0))
        self.assertEqual([0], arguments)
        self.assertEqual(1, add_one_and_record.cache_size())

    def test_memoized_function_may_recurse(self):
        calls = []

        @simple_memoizer.memoize
        def fib(n):
            calls.append(n)
            return n if n < 2 else fib(n - 1) + fib(n - 2)

        self.assertEqual(832040, fib(30))
        self.assertEqual(31, len(calls))

    def test_memoized_function_keeps_name(self):
        @simple_memoizer.memoize
        def twice(n):
            return 2 * n

        self.assertEqual("twice", twice.__name__)

    def test_concurrent_callers_agree(self):
        @simple_memoizer.memoize
        def square(n):
            return n * n

        results = []

        def worker():
            results.append([square(i) for i in range(200)])

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        expected = [i * i for i in range(200)]
        for result in results:
            self.assertEqual(expected, result)


if __name__ == "__main__":
    unittest.main()
