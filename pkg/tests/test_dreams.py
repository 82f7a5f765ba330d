"""Pipe dreams: staircase, enumeration, weights."""

import random

import pytest

from pipedreams.dreams import (
    EnumerationLimitError,
    PipeDream,
    enumerate_pipe_dreams,
    enumerate_pipe_dreams_bruteforce,
    is_pipe_dream_for,
    is_reduced_for,
    permutation_of,
    reduced_pipe_dreams,
    staircase_boxes,
    triangular_word,
    weight,
    xy_beta_vars,
)
from pipedreams.perms import Permutation, all_windows, catalan_permutation
from pipedreams.poly import MultiPolynomial

W1432 = Permutation((1, 4, 3, 2))

# hand-derived census for 1432: reduced words are (2,3,2) and (3,2,3) and the
# staircase reading word is (3,2,1,3,2,3), so the reduced cross sets are
# exactly these five
REDUCED_1432 = {
    ((1, 2), (1, 3), (2, 2)),
    ((1, 2), (1, 3), (3, 1)),
    ((1, 3), (2, 1), (3, 1)),
    ((2, 1), (2, 2), (3, 1)),
    ((1, 2), (2, 1), (2, 2)),
}


def test_staircase_reading_order():
    assert staircase_boxes(4) == ((1, 3), (1, 2), (1, 1), (2, 2), (2, 1), (3, 1))


def test_triangular_word_examples():
    assert triangular_word(2) == (1,)
    assert triangular_word(4) == (3, 2, 1, 3, 2, 3)
    w5 = triangular_word(5)
    assert len(w5) == 10 and w5[-3:] == (4, 3, 4)


def test_permutation_of_examples():
    assert permutation_of(PipeDream(4, ())).is_identity()
    assert permutation_of(PipeDream(4, ((1, 3), (1, 2), (2, 2)))) == W1432
    full = PipeDream(4, staircase_boxes(4))
    assert permutation_of(full) == Permutation.longest(4)


def test_pipe_dream_predicates():
    P = PipeDream(4, ((1, 3), (1, 2), (2, 2)))
    assert is_pipe_dream_for(P, W1432) and is_reduced_for(P, W1432)
    four = PipeDream(4, ((1, 3), (1, 2), (2, 2), (2, 1)))
    assert is_pipe_dream_for(four, W1432) and not is_reduced_for(four, W1432)
    empty = PipeDream(4, ())
    assert not is_pipe_dream_for(empty, W1432)


def test_boxes_validated():
    with pytest.raises(ValueError):
        PipeDream(4, ((1, 4),))
    with pytest.raises(ValueError):
        PipeDream(4, ((0, 1),))


def test_census_1432():
    dreams = enumerate_pipe_dreams(W1432)
    by_size = {}
    for P in dreams:
        by_size.setdefault(P.size, []).append(P)
    assert {s: len(v) for s, v in by_size.items()} == {3: 5, 4: 5, 5: 1}
    assert {P.crosses for P in by_size[3]} == REDUCED_1432
    assert by_size[5][0].crosses == ((1, 2), (1, 3), (2, 1), (2, 2), (3, 1))


def test_enumeration_matches_bruteforce_exhaustively():
    for n in (2, 3, 4):
        for window in all_windows(n):
            w = Permutation(window)
            assert enumerate_pipe_dreams(w) == enumerate_pipe_dreams_bruteforce(w)


def test_identity_has_single_empty_dream():
    dreams = enumerate_pipe_dreams(Permutation.identity(3))
    assert len(dreams) == 1 and dreams[0].crosses == ()


def test_catalan_counts():
    expected = {2: 1, 3: 2, 4: 5, 5: 14, 6: 42}
    for n, count in expected.items():
        assert len(reduced_pipe_dreams(catalan_permutation(n))) == count


def test_enumeration_limit_guard():
    w = Permutation(tuple([1] + list(range(10, 1, -1))))
    with pytest.raises(EnumerationLimitError):
        enumerate_pipe_dreams(w)
    # override allows it (rank 10 path would be slow; use a cheap target)
    big_identity = Permutation.identity(10)
    assert len(enumerate_pipe_dreams(big_identity, limit_n=10)) == 1


def test_weight_examples():
    vars = xy_beta_vars(4)
    assert weight(PipeDream(4, ())) == MultiPolynomial.one(vars)
    x1 = MultiPolynomial.variable("x1", vars)
    y1 = MultiPolynomial.variable("y1", vars)
    assert weight(PipeDream(4, ((1, 1),))) == x1 - y1
    x2 = MultiPolynomial.variable("x2", vars)
    y2 = MultiPolynomial.variable("y2", vars)
    y3 = MultiPolynomial.variable("y3", vars)
    P = PipeDream(4, ((1, 3), (1, 2), (2, 2)))
    assert weight(P) == (x1 - y3) * (x1 - y2) * (x2 - y2)


def test_minimal_dreams_are_the_reduced_ones():
    rng = random.Random(3)
    windows = list(all_windows(4))
    for window in rng.sample(windows, 8):
        w = Permutation(window)
        dreams = enumerate_pipe_dreams(w)
        min_size = min(P.size for P in dreams)
        assert min_size == w.length()
        assert all(
            (P.size == min_size) == is_reduced_for(P, w) for P in dreams
        )


def test_sizes_are_length_plus_codim():
    for window in all_windows(4):
        w = Permutation(window)
        l = w.length()
        for P in enumerate_pipe_dreams(w):
            assert P.size >= l


def test_canonical_output_order():
    dreams = enumerate_pipe_dreams(W1432)
    assert dreams == sorted(dreams, key=lambda P: (P.size, P.crosses))


def test_json_round_trip():
    P = PipeDream(4, ((1, 3), (2, 1)))
    assert PipeDream.from_jsonable(P.to_jsonable()) == P
