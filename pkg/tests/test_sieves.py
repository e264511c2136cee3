import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from demorgan.errors import BaseMismatch, NotASieve, WrongCodomain
from demorgan.fixtures import category_fixtures
from demorgan.sieves import (
    Sieve,
    b_sieve,
    empty_sieve,
    generate_sieve,
    is_stably_nonempty,
    m_sieve,
    maximal_sieve,
    pullback_sieve,
    r_sieve,
)
from demorgan.topology import generate_topology, trivial_topology

from oracles import (
    all_sieves_on,
    naive_b_sieve,
    naive_generate_sieve,
    naive_is_sieve,
    naive_m_sieve,
    naive_pullback,
    naive_stably_nonempty,
)

FIXTURES = category_fixtures()


def test_generate_sieve_examples(fixtures):
    C = fixtures["cspan"]
    assert generate_sieve(C, "c", ["f"]).members == {"f"}
    assert generate_sieve(C, "c", []).members == set()
    assert generate_sieve(C, "c", ["id_c"]) == maximal_sieve(C, "c")
    with pytest.raises(WrongCodomain):
        generate_sieve(C, "a", ["f"])


def test_pullback_examples(fixtures):
    C = fixtures["cspan"]
    R = generate_sieve(C, "c", ["f"])
    assert pullback_sieve(C, "g", R) == empty_sieve(C, "b")
    assert pullback_sieve(C, "f", R) == maximal_sieve(C, "a")
    for f in ("f", "g", "id_c"):
        assert pullback_sieve(C, f, maximal_sieve(C, "c")) == maximal_sieve(
            C, C.dom(f)
        )
    with pytest.raises(BaseMismatch):
        pullback_sieve(C, "f", maximal_sieve(C, "a"))


def test_non_sieve_rejected(fixtures):
    C = fixtures["mon2"]
    with pytest.raises(NotASieve):
        pullback_sieve(C, "e", Sieve("*", {"id_*"}))


def test_stably_nonempty_examples(fixtures):
    C = fixtures["cspan"]
    assert is_stably_nonempty(C, generate_sieve(C, "c", ["f", "g"])) is True
    assert is_stably_nonempty(C, generate_sieve(C, "c", ["f"])) is False
    for name, C in FIXTURES.items():
        for obj in C.objects:
            assert is_stably_nonempty(C, maximal_sieve(C, obj)) is True


def test_m_sieve_examples(fixtures):
    C = fixtures["cspan"]
    assert m_sieve(C, generate_sieve(C, "c", ["f"])).members == {"f", "g"}
    for name, C in FIXTURES.items():
        for obj in C.objects:
            assert m_sieve(C, empty_sieve(C, obj)) == maximal_sieve(C, obj)
            assert m_sieve(C, maximal_sieve(C, obj)) == maximal_sieve(C, obj)


def test_b_sieve_examples(fixtures):
    C = fixtures["cspan"]
    assert b_sieve(C, generate_sieve(C, "c", ["f"])).members == {"f", "g"}
    for name, C in FIXTURES.items():
        for obj in C.objects:
            assert b_sieve(C, empty_sieve(C, obj)) == maximal_sieve(C, obj)
            assert b_sieve(C, maximal_sieve(C, obj)) == maximal_sieve(C, obj)


def test_r_sieve_examples(fixtures):
    C = fixtures["cspan"]
    T = trivial_topology(C)
    for obj in C.objects:
        assert r_sieve(C, T, obj) == empty_sieve(C, obj)
    K = generate_topology(C, [empty_sieve(C, "a")])
    assert r_sieve(C, K, "c").members == {"f"}
    K2 = generate_topology(C, [empty_sieve(C, "c")])
    assert r_sieve(C, K2, "c") == maximal_sieve(C, "c")


def test_sieve_ops_match_naive_oracles(fixtures):
    for C in fixtures.values():
        for obj in C.objects:
            for S in all_sieves_on(C, obj):
                assert naive_is_sieve(C, S)
                assert is_stably_nonempty(C, S) == naive_stably_nonempty(C, S)
                m = m_sieve(C, S)
                assert m == naive_m_sieve(C, S)
                assert naive_is_sieve(C, m)
                b = b_sieve(C, S)
                assert b == naive_b_sieve(C, S)
                assert naive_is_sieve(C, b)
                assert b.members >= S.members
                if is_stably_nonempty(C, S):
                    assert m == maximal_sieve(C, obj)
                for f in sorted(C.arrows_into(obj)):
                    assert pullback_sieve(C, f, S) == naive_pullback(C, f, S)
                    # pullback compatibility of the m construction
                    assert pullback_sieve(C, f, m) == m_sieve(
                        C, pullback_sieve(C, f, S)
                    )


@settings(max_examples=60, deadline=None)
@given(
    name=st.sampled_from(sorted(FIXTURES)),
    data=st.data(),
)
def test_generated_sieves_are_sieves(name, data):
    C = FIXTURES[name]
    obj = data.draw(st.sampled_from(sorted(C.objects)))
    incoming = sorted(C.arrows_into(obj))
    gens = data.draw(st.sets(st.sampled_from(incoming)))
    S = generate_sieve(C, obj, gens)
    assert naive_is_sieve(C, S)
    assert S == naive_generate_sieve(C, obj, gens)
    assert S.members >= set(gens)
