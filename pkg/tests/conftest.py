import itertools

# Running example used across the suite: 18 characters, 10 runs.
EXAMPLE = "aabababbaaabbaabbb"
EXAMPLE_BMIN = (0, 0, 0, 0, 2, 2, 4, 4, 6, 6)
EXAMPLE_BMAX = (3, 3, 5, 5, 5, 7, 8, 9, 9, 9)
EXAMPLE_LMIN = [(3, 0), (5, 2), (7, 4), (9, 6)]
EXAMPLE_LMAX = [(0, 3), (2, 5), (5, 7), (6, 8), (7, 9)]
EXAMPLE_PNF_A = "aaabbaabbaabbaabbb"
EXAMPLE_PNF_B = "bbbaabbaaabbababaa"


def all_binary_strings(max_len, min_len=0):
    """Every string over {a, b} with min_len <= length <= max_len."""
    for length in range(min_len, max_len + 1):
        for tpl in itertools.product("ab", repeat=length):
            yield "".join(tpl)
