"""Permutations of [n] in one-line notation, words in the simple
reflections s_a, and the Demazure (0-Hecke) product.

Windows are tuples of the values 1..n; position a is window[a-1].  Right
multiplication by s_a swaps the entries in positions a, a+1.  The Demazure
product folds a word left-to-right, keeping a letter only when it lengthens
the permutation - the semantics of ignoring repeated pipe crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations as _itperms
from typing import Iterable, Iterator

Window = tuple[int, ...]
Word = tuple[int, ...]


# -- tuple-level kernel ------------------------------------------------------

def identity_window(n: int) -> Window:
    return tuple(range(1, n + 1))


def longest_window(n: int) -> Window:
    return tuple(range(n, 0, -1))


def inversions(window: Window) -> int:
    """Number of pairs i<j with window[i] > window[j].

    >>> inversions((1, 4, 3, 2))
    3
    """
    n = len(window)
    return sum(1 for i in range(n) for j in range(i + 1, n) if window[i] > window[j])


def apply_s(window: Window, a: int) -> Window:
    """Right multiplication by s_a (swap positions a, a+1; 1-indexed)."""
    w = list(window)
    w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def demazure_step(window: Window, a: int) -> Window:
    """window * s_a if that lengthens, else window."""
    if window[a - 1] < window[a]:
        w = list(window)
        w[a - 1], w[a] = w[a], w[a - 1]
        return tuple(w)
    return window


def demazure_window(letters: Iterable[int], n: int) -> Window:
    w = identity_window(n)
    for a in letters:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range for rank {n}")
        if w[a - 1] < w[a]:
            lst = list(w)
            lst[a - 1], lst[a] = lst[a], lst[a - 1]
            w = tuple(lst)
    return w


def ordinary_product(letters: Iterable[int], n: int) -> Window:
    """Plain group product of simple reflections, for reduced-word checks."""
    w = identity_window(n)
    for a in letters:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range for rank {n}")
        w = apply_s(w, a)
    return w


def bruhat_leq(u: Window, w: Window) -> bool:
    """Strong Bruhat order comparison by the sorted-prefix criterion.

    >>> bruhat_leq((2, 1, 3), (3, 1, 2))
    True
    >>> bruhat_leq((2, 3, 1), (3, 1, 2))
    False
    """
    n = len(u)
    if len(w) != n:
        raise ValueError("rank mismatch")
    pu: list[int] = []
    pw: list[int] = []
    for k in range(n - 1):
        pu.append(u[k])
        pu.sort()
        pw.append(w[k])
        pw.sort()
        for a, b in zip(pu, pw):
            if a > b:
                return False
    return True


def all_windows(n: int) -> Iterator[Window]:
    return _itperms(range(1, n + 1))


# -- public wrapper ----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of [n] in one-line notation, 1-indexed throughout."""

    window: Window

    def __post_init__(self):
        w = tuple(self.window)
        object.__setattr__(self, "window", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")

    @property
    def n(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(identity_window(n))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(longest_window(n))

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def length(self) -> int:
        """Inversion count l(w)."""
        return inversions(self.window)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.window == identity_window(self.n)

    def __str__(self):
        return permutation_to_string(self)

    # serialization: "1432" for n <= 9, comma-separated beyond

    def to_string(self) -> str:
        return permutation_to_string(self)


def permutation_to_string(w: Permutation) -> str:
    if w.n <= 9:
        return "".join(str(v) for v in w.window)
    return ",".join(str(v) for v in w.window)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if "," in text:
        window = tuple(int(p) for p in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        window = tuple(int(ch) for ch in text)
    return Permutation(window)


def catalan_permutation(n: int) -> Permutation:
    """The permutation 1 n n-1 ... 2, whose reduced pipe dreams are counted
    by the Catalan numbers.

    >>> catalan_permutation(4).window
    (1, 4, 3, 2)
    """
    return Permutation(tuple([1] + list(range(n, 1, -1))))


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def word_to_string(word: Word) -> str:
    return ",".join(str(a) for a in word)


def demazure_product(word: Iterable[int], n: int) -> Permutation:
    """Demazure (0-Hecke) product of a word, folded from the identity.

    >>> demazure_product((2, 3, 2), 4).window
    (1, 4, 3, 2)
    >>> demazure_product((3, 2, 3, 3), 4).window
    (1, 4, 3, 2)
    """
    return Permutation(demazure_window(word, n))


def is_reduced_word(word: Word, w: Permutation) -> bool:
    """True iff the word is a reduced decomposition of w."""
    return len(word) == w.length() and demazure_window(word, w.n) == w.window


def word_contains(letters: Word, w: Permutation) -> bool:
    """True iff some subsequence of `letters` is a reduced word for w.

    Equivalent to the Demazure product of the whole word dominating w in
    Bruhat order, which is how it is computed here.
    """
    return bruhat_leq(w.window, demazure_window(letters, w.n))


def word_contains_bruteforce(letters: Word, w: Permutation) -> bool:
    """Independent oracle for word_contains: scan all subsequences of the
    target length for an ordinary product equal to w.  Exponential; only
    for cross-checks at tiny rank."""
    l = w.length()
    if l > len(letters):
        return False
    for positions in combinations(range(len(letters)), l):
        if ordinary_product([letters[p] for p in positions], w.n) == w.window:
            return True
    return False
