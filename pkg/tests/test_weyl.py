"""Extended affine symmetric group in window notation."""

from hypothesis import given, settings, strategies as st

from zzeval.weyl import AffinePerm


def random_words(max_d=5, max_len=8):
    return st.integers(3, max_d).flatmap(
        lambda d: st.tuples(
            st.just(d),
            st.integers(-2, 2),
            st.lists(st.integers(0, d - 1), max_size=max_len),
        )
    )


def test_coxeter_relations():
    for d in (3, 4, 5):
        e = AffinePerm.identity(d)
        s = [AffinePerm.simple(d, i) for i in range(d)]
        for i in range(d):
            assert s[i] * s[i] == e
            j = (i + 1) % d
            if d > 2:
                assert s[i] * s[j] * s[i] == s[j] * s[i] * s[j]
        for i in range(d):
            for j in range(d):
                if (i - j) % d not in (0, 1, d - 1):
                    assert s[i] * s[j] == s[j] * s[i]


def test_rotation_conjugates_simples():
    for d in (3, 4, 5):
        r = AffinePerm.rho(d)
        for i in range(d):
            assert r * AffinePerm.simple(d, i) * r.inverse() == \
                AffinePerm.simple(d, (i + 1) % d)


@settings(max_examples=80)
@given(random_words())
def test_reduced_word_roundtrip(params):
    d, m, word = params
    g = AffinePerm.from_word(d, m, word)
    mm, red = g.reduced_word()
    assert AffinePerm.from_word(d, mm, red) == g
    assert len(red) == g.length()
    assert len(red) <= len(word)


@settings(max_examples=80)
@given(random_words())
def test_inverse_and_length(params):
    d, m, word = params
    g = AffinePerm.from_word(d, m, word)
    assert g * g.inverse() == AffinePerm.identity(d)
    assert g.inverse().length() == g.length()


@settings(max_examples=80)
@given(random_words())
def test_descents_match_length_drop(params):
    d, m, word = params
    g = AffinePerm.from_word(d, m, word)
    for i in range(d):
        drops = (g * AffinePerm.simple(d, i)).length() < g.length()
        assert drops == g.has_descent(i)
