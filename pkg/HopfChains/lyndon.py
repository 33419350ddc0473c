# HopfChains/lyndon.py
# From HopfChains
# Copyright 2026 HopfChains contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# DESCRIPTION
# Lyndon words over graded generators: the Lyndon test, Duval's
# factorization, the standard factorization and bracketing, and the
# symmetrized product sym(w) of the bracketed Lyndon factors.
from functools import lru_cache
from itertools import permutations
from HopfChains.algebra import LinComb, Word
from HopfChains.errors import InvalidInputError


def _require_nonempty(w: Word):
    if w.length == 0:
        raise InvalidInputError("Lyndon combinatorics needs a nonempty word.", w.label)


def is_lyndon(w: Word) -> bool:
    _require_nonempty(w)
    letters = w.letters
    return all(letters < letters[i:] + letters[:i] for i in range(1, len(letters)))


def lyndon_factorize(w: Word) -> list[Word]:
    """Duval's scan. Factors come out weakly decreasing and concatenate to w."""
    _require_nonempty(w)
    s = w.letters
    n = len(s)
    factors: list[Word] = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(Word(s[i:i + j - k]))
            i += j - k
    return factors


def standard_factorization(l: Word) -> tuple[Word, Word]:
    """Split a Lyndon word at its longest proper Lyndon suffix.

    A single letter comes back as (l, empty word)."""
    if not is_lyndon(l):
        raise InvalidInputError("Standard factorization needs a Lyndon word.", l.label)
    s = l.letters
    for i in range(1, len(s)):
        suffix = Word(s[i:])
        if is_lyndon(suffix):
            return Word(s[:i]), suffix
    return l, Word()


def _concatenate(u: Word, v: Word) -> Word:
    return u * v


@lru_cache(maxsize=4096)
def standard_bracketing(l: Word) -> LinComb[Word]:
    if not is_lyndon(l):
        raise InvalidInputError("Standard bracketing needs a Lyndon word.", l.label)
    if l.length == 1:
        return LinComb.single(l)
    left, right = standard_factorization(l)
    x, y = standard_bracketing(left), standard_bracketing(right)
    return x.times(y, _concatenate) - y.times(x, _concatenate)


def sym(w: Word) -> LinComb[Word]:
    """Sum over every ordering of the Lyndon factors of the product of their bracketings."""
    brackets = [standard_bracketing(factor) for factor in lyndon_factorize(w)]
    total: LinComb[Word] = LinComb()
    for order in permutations(range(len(brackets))):
        term = LinComb.single(Word())
        for index in order:
            term = term.times(brackets[index], _concatenate)
        total = total + term
    return total
