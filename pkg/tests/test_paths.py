import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_words, catalan, end, expanded_count, is_partial, motzkin_numbers, partial_words
from weighted_motzkin import (
    EnumerationLimitError,
    InvalidObjectError,
    LatticePath,
    PathClass,
    Step,
    WeightSpec,
    count_paths,
    count_weighted,
    enumerate_paths,
    enumeration_cap,
    l_visible_down_steps,
    path,
    r_visible_up_steps,
    validate_path,
    weight,
)
from weighted_motzkin.paths import flip

path_words = st.text(alphabet="UDH", max_size=12)


def strs(paths):
    return [str(p) for p in paths]


class TestValidate:
    def test_ud_is_dyck(self):
        assert validate_path(path("UD"), PathClass.dyck())

    def test_du_fails_at_step_zero(self):
        v = validate_path(path("DU"), PathClass.dyck())
        assert not v and v.index == 0

    def test_partial_motzkin_end_one(self):
        assert validate_path(path("UUHD"), PathClass.partial_motzkin(end_level=1))

    def test_horizontal_not_dyck(self):
        assert not validate_path(path("UHD"), PathClass.dyck())

    def test_wrong_end_level(self):
        assert not validate_path(path("UU"), PathClass.partial_motzkin(end_level=1))

    def test_free_allows_negative(self):
        assert validate_path(path("DDH"), PathClass.free_motzkin())

    def test_colored_dyck_peak_must_be_plain(self):
        cls = PathClass.colored_dyck(2)
        assert validate_path(path("U2UDD"), cls)
        assert not validate_path(path("U1D"), cls)
        assert not validate_path(path("UUDD"), cls)
        assert not validate_path(path("U3UDD"), cls)

    def test_horizontal_colors_bounded(self):
        cls = PathClass.partial_motzkin(horizontal_colors=2)
        assert validate_path(path("H1H2"), cls)
        assert not validate_path(path("H3"), cls)


class TestWeight:
    @pytest.mark.parametrize("text,a,b,expected", [("UHD", 2, 1, 2), ("UHD", 3, 2, 6), ("", 5, 5, 1)])
    def test_examples(self, text, a, b, expected):
        assert weight(path(text), WeightSpec(a, b)) == expected

    def test_from_kt(self):
        assert WeightSpec.from_kt(6, 2) == WeightSpec(3, 2)
        assert WeightSpec.from_kt(6, 2).k == 6


class TestEnumerate:
    def test_dyck_four(self):
        assert strs(enumerate_paths(PathClass.dyck(), 4)) == ["UUDD", "UDUD"]

    def test_motzkin_three(self):
        assert len(list(enumerate_paths(PathClass.motzkin(), 3))) == 4

    def test_free_two(self):
        assert len(list(enumerate_paths(PathClass.free_motzkin(), 2))) == 9

    def test_order_is_lexicographic(self):
        got = strs(enumerate_paths(PathClass.free_motzkin(), 3))
        assert got == list(all_words(3, "UHD"))

    def test_colors_ascending(self):
        got = strs(enumerate_paths(PathClass.free_motzkin(horizontal_colors=2), 1))
        assert got == ["U", "H1", "H2", "D"]

    @pytest.mark.parametrize("n", range(11))
    def test_dyck_catalan(self, n):
        assert count_paths(PathClass.dyck(), 2 * n) == catalan(n)
        if n <= 6:
            assert len(list(enumerate_paths(PathClass.dyck(), 2 * n))) == catalan(n)

    def test_motzkin_numbers(self):
        want = motzkin_numbers(13)
        assert [len(list(enumerate_paths(PathClass.motzkin(), n))) for n in range(13)] == want

    @pytest.mark.parametrize("n", range(13))
    def test_free_powers(self, n):
        assert count_paths(PathClass.free_motzkin(), n) == 3**n

    @pytest.mark.parametrize("n", range(9))
    def test_partial_matches_oracle(self, n):
        assert strs(enumerate_paths(PathClass.partial_motzkin(), n)) == partial_words(n)

    def test_colored_dyck_counts(self):
        from oracles import colored_dyck_count

        for c in (1, 2, 3):
            for n in range(6):
                assert count_paths(PathClass.colored_dyck(c), 2 * n) == colored_dyck_count(n, c)

    def test_cap_raises_before_work(self):
        with enumeration_cap(10):
            with pytest.raises(EnumerationLimitError):
                enumerate_paths(PathClass.free_motzkin(), 3)
            assert len(list(enumerate_paths(PathClass.free_motzkin(), 2))) == 9


class TestCountWeighted:
    def test_examples(self):
        assert count_weighted(PathClass.partial_motzkin(), 3, 1, WeightSpec(2, 1)) == 14
        assert count_weighted(PathClass.partial_motzkin(), 4, 2, WeightSpec(3, 2)) == 60
        assert count_weighted(PathClass.motzkin(), 4, 0, WeightSpec(1, 1)) == 9

    @pytest.mark.parametrize("a", range(5))
    @pytest.mark.parametrize("b", (1, 2, 3))
    def test_equals_color_expansion(self, a, b):
        for n in range(9):
            for j in range(n + 1):
                want = expanded_count(partial_words(n, j), a, b)
                assert count_weighted(PathClass.partial_motzkin(), n, j, WeightSpec(a, b)) == want

    def test_two_motzkin_catalan_bridge(self):
        for n in range(11):
            assert count_weighted(PathClass.partial_motzkin(), n, 0, WeightSpec(2, 1)) == catalan(n + 1)

    def test_horizontal_colors_multiply(self):
        cls = PathClass.partial_motzkin(horizontal_colors=2)
        for n in range(7):
            assert count_paths(cls, n) == count_weighted(PathClass.partial_motzkin(), n, weights=WeightSpec(2, 1))


class TestSerialization:
    def test_parse_colored(self):
        p = path("U3H2D")
        assert p.steps == (Step("U", 3), Step("H", 2), Step("D"))
        assert str(p) == "U3H2D"

    def test_json(self):
        p = path("U3D")
        assert p.to_json() == {"steps": [{"dir": "U", "color": 3}, {"dir": "D"}]}
        assert LatticePath.from_json(p.to_json()) == p

    @pytest.mark.parametrize("bad", ["X", "U0", "u"])
    def test_rejects(self, bad):
        with pytest.raises(InvalidObjectError):
            path(bad)

    @pytest.mark.parametrize("n", range(9))
    def test_round_trip_all(self, n):
        cls = PathClass.free_motzkin(horizontal_colors=2) if n <= 6 else PathClass.partial_motzkin()
        for p in enumerate_paths(cls, n):
            assert path(str(p)) == p
            assert LatticePath.from_json(p.to_json()) == p


class TestVisibility:
    @pytest.mark.parametrize("text,expected", [("UU", [0, 1]), ("UDU", [2]), ("UD", [])])
    def test_r_examples(self, text, expected):
        assert r_visible_up_steps(path(text)) == expected

    @pytest.mark.parametrize("text,expected", [("D", [0]), ("UD", []), ("DUD", [0])])
    def test_l_examples(self, text, expected):
        assert l_visible_down_steps(path(text)) == expected

    @pytest.mark.parametrize("n", range(11))
    def test_r_visible_properties(self, n):
        for w in partial_words(n):
            idx = r_visible_up_steps(path(w))
            assert len(idx) == end(w)
            assert idx == sorted(set(idx))
            starts = [0, *heights_of(w)[:-1]]
            for i in idx:
                assert w[i] == "U"
                assert all(starts[q] != starts[i] for q in range(i + 1, n))

    @settings(max_examples=300)
    @given(path_words)
    def test_l_visible_are_new_minima(self, w):
        idx = l_visible_down_steps(path(w))
        low, want = 0, []
        for i, h in enumerate(heights_of(w)):
            if h < low:
                low = h
                want.append(i)
        assert idx == want

    @settings(max_examples=300)
    @given(path_words)
    def test_flip_preserves_length(self, w):
        p = path(w)
        assert len(flip(p, l_visible_down_steps(p), "U")) == len(p)


def heights_of(w):
    from oracles import heights

    return heights(w)


@given(path_words)
def test_validate_agrees_with_oracle(w):
    assert bool(validate_path(path(w), PathClass.partial_motzkin())) == is_partial(w)
