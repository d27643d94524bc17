from collections import defaultdict

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXAMPLE, EXAMPLE_PNF_A, EXAMPLE_PNF_B, all_binary_strings
from cornerindex.corner import build_index
from cornerindex.oracle import parikh_set_bruteforce
from cornerindex.pnf import PnfPair, pnf_from_index, rank, select, verify_pnf_relations
from cornerindex.rle import encode

binary_strings = st.text(alphabet="ab", max_size=60)


class TestRankSelect:
    def test_rank(self):
        assert rank("aabab", "a", 0) == 0
        assert rank("aabab", "a", 3) == 2
        assert rank("aabab", "b", 5) == 2

    def test_rank_range(self):
        with pytest.raises(ValueError, match="out of range"):
            rank("ab", "a", 3)
        with pytest.raises(ValueError, match="out of range"):
            rank("ab", "a", -1)

    def test_select(self):
        assert select("aabab", "a", 1) == 1
        assert select("aabab", "a", 3) == 4
        assert select("ba", "a", 1) == 2

    def test_select_errors(self):
        with pytest.raises(ValueError, match="must be positive"):
            select("ab", "a", 0)
        with pytest.raises(ValueError, match="exceeds the 1 occurrences"):
            select("ab", "a", 2)

    @given(binary_strings, st.integers(1, 60))
    def test_inverse(self, s, i):
        if i > s.count("a"):
            with pytest.raises(ValueError):
                select(s, "a", i)
        else:
            pos = select(s, "a", i)
            assert s[pos - 1] == "a"
            assert rank(s, "a", pos) == i


class TestNormalForms:
    def test_worked_example(self):
        pnfs = pnf_from_index(build_index(EXAMPLE))
        assert pnfs == PnfPair(EXAMPLE_PNF_A, EXAMPLE_PNF_B)

    def test_degenerate(self):
        assert pnf_from_index(build_index("")) == PnfPair("", "")
        assert pnf_from_index(build_index("aaa")) == PnfPair("aaa", "aaa")
        assert pnf_from_index(build_index("b")) == PnfPair("b", "b")

    def test_relations_on_example(self):
        idx = build_index(EXAMPLE)
        assert verify_pnf_relations(idx, pnf_from_index(idx))

    def test_relations_reject_wrong_strings(self):
        idx = build_index(EXAMPLE)
        good = pnf_from_index(idx)
        assert not verify_pnf_relations(idx, PnfPair(good.pnf_a, good.pnf_a))
        assert not verify_pnf_relations(idx, PnfPair(good.pnf_a[::-1], good.pnf_b))
        assert not verify_pnf_relations(idx, PnfPair("a" * 18, good.pnf_b))
        assert not verify_pnf_relations(idx, PnfPair("", ""))

    @given(binary_strings)
    @settings(max_examples=300)
    def test_relations_hold(self, s):
        idx = build_index(s)
        assert verify_pnf_relations(idx, pnf_from_index(idx))

    @given(binary_strings)
    def test_prefix_normal(self, s):
        # each form maximizes its own letter across every prefix
        pnfs = pnf_from_index(build_index(s))
        for w, c in [(pnfs.pnf_a, "a"), (pnfs.pnf_b, "b")]:
            for m in range(len(w) + 1):
                windows = {w[i:i + m].count(c) for i in range(len(w) - m + 1)}
                assert rank(w, c, m) == max(windows)

    @given(binary_strings)
    @settings(max_examples=150)
    def test_each_form_keeps_its_own_staircase(self, s):
        # pnf_a reproduces the minimal-b corners, pnf_b the maximal-b ones;
        # neither form alone pins down the other side
        idx = build_index(s)
        pnfs = pnf_from_index(idx)
        assert build_index(pnfs.pnf_a).l_min == idx.l_min
        assert build_index(pnfs.pnf_b).l_max == idx.l_max

    def test_forms_are_one_sided(self):
        # "bab" admits no all-b pair of length two, but its a-form does
        pnfs = pnf_from_index(build_index("bab"))
        assert pnfs.pnf_a == "abb"
        assert (0, 2) in parikh_set_bruteforce("abb")
        assert (0, 2) not in parikh_set_bruteforce("bab")

    @given(binary_strings)
    @settings(max_examples=150)
    def test_idempotent(self, s):
        pnfs = pnf_from_index(build_index(s))
        again_a = pnf_from_index(build_index(pnfs.pnf_a))
        again_b = pnf_from_index(build_index(pnfs.pnf_b))
        assert again_a.pnf_a == pnfs.pnf_a
        assert again_b.pnf_b == pnfs.pnf_b


class TestRunCount:
    def test_matches_lmin_size(self):
        for s in all_binary_strings(10, min_len=1):
            idx = build_index(s)
            runs = encode(pnf_from_index(idx).pnf_a)
            assert len(runs.a_runs) == len(idx.l_min), s

    def test_empty_is_the_exception(self):
        idx = build_index("")
        assert len(idx.l_min) == 1
        assert encode("").pairs == 0


def test_forms_classify_strings():
    # strings share a pnf pair exactly when they share an occurrence set
    by_parikh: dict[frozenset, set[PnfPair]] = defaultdict(set)
    pairs_seen: dict[PnfPair, frozenset] = {}
    for s in all_binary_strings(10):
        key = frozenset(parikh_set_bruteforce(s))
        pair = pnf_from_index(build_index(s))
        by_parikh[key].add(pair)
        if pair in pairs_seen:
            assert pairs_seen[pair] == key
        else:
            pairs_seen[pair] = key
    assert all(len(v) == 1 for v in by_parikh.values())
