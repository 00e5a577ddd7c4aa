"""Smoke tests for the python bindings; runnable directly or under pytest."""

import math

import lcsfinder


def test_index_matches_worked_example():
    idx = lcsfinder.LcsIndex([1, 2, 1, 2, 2], [2, 1, 2, 3])
    assert idx.source_size == 5
    assert idx.target_size == 4
    assert idx.strict_match_length(0, 4) == 3
    assert idx.lambda_length(0, 4) == 4
    assert idx.relaxed_query(0, 1, 3)
    assert not idx.relaxed_query(0, 0, 1)
    assert idx.batch_lambda([(0, 4), (0, 0)]) == [4, 1]


def test_index_agrees_with_brute_force():
    tokens_s = lcsfinder.generate_uniform_tokens(60, 4, 123)
    tokens_t = lcsfinder.generate_uniform_tokens(40, 4, 456)
    idx = lcsfinder.LcsIndex(tokens_s, tokens_t)
    for i in range(0, 41, 7):
        for j in range(0, 61, 11):
            assert idx.strict_match_length(i, j) == lcsfinder.brute_force_strict(
                tokens_s, tokens_t, i, j
            )


def test_self_entropy_constant_sequence():
    rep = lcsfinder.self_entropy_rate([1] * 8)
    assert rep.lambdas == [1, 2, 3, 4, 5, 4, 3, 2]
    assert rep.lambda_sum == 24
    assert math.isclose(rep.entropy_bits, 1.0)


def test_cross_entropy_modes():
    rep = lcsfinder.cross_entropy_rate(
        [1] * 8, [1] * 4, lcsfinder.CrossEntropyMode.full_history
    )
    assert rep.lambdas == [5, 4, 3, 2]
    assert math.isclose(rep.entropy_bits, 12.0 / 14.0)

    mapped = lcsfinder.cross_entropy_rate(
        [1] * 8,
        [1] * 4,
        lcsfinder.CrossEntropyMode.mapped,
        [(0, 8), (1, 8), (2, 8), (3, 8)],
    )
    assert mapped.lambdas == rep.lambdas

    profile = lcsfinder.match_length_profile(
        [1] * 8, [1] * 4, lcsfinder.CrossEntropyMode.full_history
    )
    assert profile == [5, 4, 3, 2]


def test_tokenize_shares_vocab():
    vocab = lcsfinder.VocabMap()
    assert lcsfinder.tokenize(["a", "b", "a"], vocab) == [1, 2, 1]
    assert lcsfinder.tokenize(["b", "c"], vocab) == [2, 3]
    assert len(vocab) == 3
    assert vocab.symbol(3) == "c"


def test_errors_are_python_exceptions():
    try:
        lcsfinder.self_entropy_rate([1])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a length-1 sequence")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL {name}: {exc}")
    raise SystemExit(1 if failures else 0)
