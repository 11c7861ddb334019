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

"""Provides a simple, thread-safe memoizing decorator."""

import functools
import threading


def memoize(f):
    """Memoizes f.

    The @memoize decorator returns a function which caches the results of f, and
    returns directly from the cache instead of calling f when it is called again
    with the same arguments.

    The cache is guarded by a lock, so memoized functions may be shared between
    threads.  The lock is not held while f runs: f may recurse into itself, and
    two threads may both compute a missing entry, in which case the first result
    stored wins.  f must therefore be pure.

    This memoizer only works for functions taking hashable positional arguments,
    and it never evicts anything from its cache.

    Usage:
        @memoize
        def function(arg, arg2, arg3):
           ...

    Arguments:
        f: The function to memoize.

    Returns:
        A function which acts like f, but faster when called repeatedly with the
        same arguments.
    """
    cache = {}
    lock = threading.Lock()

    @functools.wraps(f)
    def _memoized(*args):
        assert all(
            arg.__hash__ for arg in args
        ), "Arguments to memoized function {} must be hashable.".format(f.__name__)
        with lock:
            if args in cache:
                return cache[args]
        result = f(*args)
        with lock:
            return cache.setdefault(args, result)

    _memoized.cache_size = lambda: len(cache)
    return _memoized
