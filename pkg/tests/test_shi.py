import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from shivariety.rootsys import build_root_system, scaled
from shivariety.shi import (VectorError, check_characterization, check_lambda, is_admissible,
                            is_admitted, is_alcove_vector, lambda_extract)
from shivariety.weyl import IntegrityError, from_word, shi_vector


def strips_nonempty(rs, k):
    """LP oracle: does {x : k_a < (x, a^vee) < k_a + 1 for all a} have interior?"""
    n = rs.rank
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rows = [[float(rs.pairing(basis[j], r)) for j in range(n)] for r in rs.positive_roots]
    A, b = [], []
    for row, kr in zip(rows, k):
        # row.x - t >= k  and  row.x + t <= k + 1
        A.append([-x for x in row] + [1.0])
        b.append(-float(kr))
        A.append(list(row) + [1.0])
        b.append(float(kr) + 1)
    res = linprog(c=[0.0] * n + [-1.0], A_ub=np.array(A), b_ub=np.array(b),
                  bounds=[(None, None)] * n + [(None, 1.0)])
    return res.status == 0 and -res.fun > 1e-9


@pytest.mark.parametrize("t,span", [(("A", 2), range(-2, 3)), (("B", 2), range(-2, 3)),
                                    (("G", 2), range(-1, 2))])
def test_checker_matches_lp_oracle(t, span):
    rs = build_root_system(*t)
    for k in itertools.product(span, repeat=rs.m):
        assert is_alcove_vector(rs, k)[0] == strips_nonempty(rs, k), k


def test_zero_vector_is_alcove(any_rs):
    assert is_alcove_vector(any_rs, (0,) * any_rs.m) == (True, [])


def test_a2_rejects_k_theta_two(a2):
    ok, bad = is_alcove_vector(a2, (0, 0, 2))
    assert not ok
    assert bad == [((1, 0), (0, 1), (1, 1))]


def test_b2_violation_triple(b2):
    ok, bad = is_alcove_vector(b2, (0, 0, 2, 0))
    assert not ok
    assert ((0, 1), (1, 1), (1, 2)) in bad


def test_wrong_length_rejected(a2):
    with pytest.raises(VectorError):
        is_alcove_vector(a2, (0, 0))
    with pytest.raises(VectorError):
        is_admissible(a2, (0, 0, 0, 0))


def test_admissible_admitted_b2(b2):
    zero = (0, 0, 0, 0)
    assert is_admissible(b2, zero) and is_admitted(b2, zero)
    assert is_admissible(b2, (0, 0, 2, 0)) and not is_admitted(b2, (0, 0, 2, 0))
    assert is_admitted(b2, (0, 0, 2, 1))
    assert not is_admissible(b2, (0, 0, 3, 0))
    assert not is_admissible(b2, (1, 0, 0, 0))
    admitted = [v for v in itertools.product([0], [0], range(3), range(2)) if is_admitted(b2, v)]
    assert [v[2:] for v in admitted] == [(0, 0), (1, 0), (1, 1), (2, 1)]


def test_lambda_examples(a2):
    assert lambda_extract(a2, (0, 0, 0)) == (0, 0, 0)
    assert lambda_extract(a2, (2, -1, 1)) == (0, 0, 0)
    assert lambda_extract(a2, (0, 0, 1)) == (0, 0, 1)


def test_lambda_traps_bad_input(a2):
    with pytest.raises(IntegrityError):
        lambda_extract(a2, (0, 0, 2))


@pytest.mark.parametrize("t", [("A", 2), ("B", 2), ("G", 2)])
def test_characterization_and_scale(t):
    report = check_characterization(build_root_system(*t), bound=3)
    assert report["passed"], report
    assert report["scale_invariant"]
    assert report["accepted"] == report["alcoves"] > 1


@pytest.mark.parametrize("t", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_lambda_on_ball(t):
    report = check_lambda(build_root_system(*t), radius=6)
    assert report["passed"], report["witnesses"]


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_shi_vectors_of_words_are_accepted(data):
    rs = build_root_system(*data.draw(st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("G", 2),
                                                        ("D", 4)])))
    word = data.draw(st.lists(st.integers(0, rs.rank), max_size=15))
    k = shi_vector(rs, from_word(rs, word))
    assert is_alcove_vector(rs, k)[0]
    assert is_alcove_vector(scaled(rs, 2), k)[0]
    lam = lambda_extract(rs, k)
    assert is_admitted(rs, lam)
