"""The staircase shape and pipe dreams.

Boxes of the staircase for rank n are the pairs (row, col) with
row + col <= n.  Reading order is row 1 to row n-1, each row scanned right
to left; the box (r, c) carries the letter s_{r+c-1}.  Concatenating the
letters in reading order gives the triangular word
(s_{n-1}, ..., s_1, s_{n-1}, ..., s_2, ..., s_{n-1}).

A pipe dream is a set of crossed boxes; its permutation is the Demazure
product of the letters at the crosses, taken in reading order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .perms import (
    Permutation,
    Window,
    bruhat_leq,
    demazure_step,
    demazure_window,
    identity_window,
)
from .poly import MultiPolynomial

Box = tuple[int, int]

# Pruned DFS over the staircase is fast at desk scale but still exponential
# in principle; refuse ranks past this unless the caller raises the limit.
DEFAULT_LIMIT_N = 9


class EnumerationLimitError(ValueError):
    """Rank exceeds the configured pipe dream search limit."""


def staircase_boxes(n: int) -> tuple[Box, ...]:
    """All staircase boxes for rank n, in reading order.

    >>> staircase_boxes(3)
    ((1, 2), (1, 1), (2, 1))
    """
    return tuple((r, c) for r in range(1, n) for c in range(n - r, 0, -1))


def box_letter(box: Box) -> int:
    r, c = box
    return r + c - 1


def triangular_word(n: int) -> tuple[int, ...]:
    """Letters of the staircase in reading order.

    >>> triangular_word(4)
    (3, 2, 1, 3, 2, 3)
    """
    return tuple(box_letter(b) for b in staircase_boxes(n))


@dataclass(frozen=True, slots=True)
class PipeDream:
    """A set of crossed staircase boxes for rank n."""

    n: int
    crosses: tuple[Box, ...]

    def __post_init__(self):
        crosses = tuple(sorted(set(self.crosses)))
        if len(crosses) != len(tuple(self.crosses)):
            raise ValueError("duplicate cross positions")
        for r, c in crosses:
            if r < 1 or c < 1 or r + c > self.n:
                raise ValueError(f"box {(r, c)} outside the staircase for n={self.n}")
        object.__setattr__(self, "crosses", crosses)

    @property
    def size(self) -> int:
        return len(self.crosses)

    def elbows(self) -> tuple[Box, ...]:
        cross = set(self.crosses)
        return tuple(b for b in staircase_boxes(self.n) if b not in cross)

    def permutation(self) -> Permutation:
        cross = set(self.crosses)
        letters = [box_letter(b) for b in staircase_boxes(self.n) if b in cross]
        return Permutation(demazure_window(letters, self.n))

    def to_jsonable(self) -> dict:
        return {"n": self.n, "crosses": [list(b) for b in self.crosses]}

    @classmethod
    def from_jsonable(cls, data) -> "PipeDream":
        return cls(data["n"], tuple((r, c) for r, c in data["crosses"]))


def permutation_of(P: PipeDream) -> Permutation:
    return P.permutation()


def is_pipe_dream_for(P: PipeDream, w: Permutation) -> bool:
    return P.n == w.n and P.permutation() == w


def is_reduced_for(P: PipeDream, w: Permutation) -> bool:
    return is_pipe_dream_for(P, w) and P.size == w.length()


def codimension(P: PipeDream, w: Permutation) -> int:
    """Codimension of the face labeled by P inside the complex of w:
    the number of crosses beyond l(w)."""
    if not is_pipe_dream_for(P, w):
        raise ValueError(f"{P} is not a pipe dream for {w}")
    return P.size - w.length()


def weight(P: PipeDream, vars: tuple[str, ...] | None = None) -> MultiPolynomial:
    """Product over crosses at (i, j) of (x_i - y_j); empty product is 1.

    The variable tuple defaults to (x1..x_{n-1}, y1..y_{n-1}, b) so weights
    combine directly with powers of b in the Grothendieck sums.
    """
    if vars is None:
        vars = xy_beta_vars(P.n)
    poly = MultiPolynomial.one(vars)
    for r, c in P.crosses:
        x = MultiPolynomial.variable(f"x{r}", vars)
        y = MultiPolynomial.variable(f"y{c}", vars)
        poly = poly * (x - y)
    return poly


def xy_beta_vars(n: int) -> tuple[str, ...]:
    return tuple(
        [f"x{i}" for i in range(1, n)] + [f"y{j}" for j in range(1, n)] + ["b"]
    )


def enumerate_pipe_dreams(
    w: Permutation, limit_n: int = DEFAULT_LIMIT_N
) -> list[PipeDream]:
    """Every cross set whose Demazure product is w, reduced and nonreduced,
    sorted by (size, cross list).

    Depth-first search in reading order over the staircase, carrying the
    running Demazure product u.  Two sound prunes: the final product always
    dominates u, so u must stay below w; and it is dominated by the product
    of u with all remaining letters, which must stay above w.

    >>> [p.size for p in enumerate_pipe_dreams(Permutation((1, 4, 3, 2)))]
    [3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5]
    """
    n = w.n
    if n > limit_n:
        raise EnumerationLimitError(
            f"rank {n} exceeds search limit {limit_n}; raise limit_n to override"
        )
    boxes = staircase_boxes(n)
    letters = [box_letter(b) for b in boxes]
    m = len(boxes)
    target = w.window

    below: dict[Window, bool] = {}

    def is_below(u: Window) -> bool:
        v = below.get(u)
        if v is None:
            v = below[u] = bruhat_leq(u, target)
        return v

    reach: dict[tuple[Window, int], bool] = {}

    def can_reach(u: Window, i: int) -> bool:
        """Whether w is below the Demazure product of u with letters i..m."""
        key = (u, i)
        v = reach.get(key)
        if v is None:
            full = u
            for a in letters[i:]:
                full = demazure_step(full, a)
            v = reach[key] = bruhat_leq(target, full)
        return v

    found: list[tuple[Box, ...]] = []
    chosen: list[Box] = []

    def dfs(i: int, u: Window) -> None:
        if not is_below(u) or not can_reach(u, i):
            return
        if i == m:
            if u == target:
                found.append(tuple(chosen))
            return
        dfs(i + 1, u)
        chosen.append(boxes[i])
        dfs(i + 1, demazure_step(u, letters[i]))
        chosen.pop()

    dfs(0, identity_window(n))
    dreams = [PipeDream(n, crosses) for crosses in found]
    dreams.sort(key=lambda p: (p.size, p.crosses))
    return dreams


def reduced_pipe_dreams(
    w: Permutation, limit_n: int = DEFAULT_LIMIT_N
) -> list[PipeDream]:
    l = w.length()
    return [P for P in enumerate_pipe_dreams(w, limit_n) if P.size == l]


def enumerate_pipe_dreams_bruteforce(w: Permutation) -> list[PipeDream]:
    """Oracle for the pruned search: try all 2^boxes subsets.  Tiny n only."""
    boxes = staircase_boxes(w.n)
    out = []
    for mask in range(1 << len(boxes)):
        crosses = tuple(b for i, b in enumerate(boxes) if mask >> i & 1)
        P = PipeDream(w.n, crosses)
        if P.permutation() == w:
            out.append(P)
    out.sort(key=lambda p: (p.size, p.crosses))
    return out


def dreams_to_jsonable(dreams: Iterable[PipeDream]) -> list[dict]:
    return [P.to_jsonable() for P in dreams]
