import random
import sys

from hypothesis import strategies as st

from opentorus.twistword import Generator, TwistWord

X, Y = Generator.X, Generator.Y

letters = st.tuples(st.sampled_from([X, Y]), st.integers(-6, 6))
words = st.lists(letters, max_size=20).map(TwistWord)


def random_word(rng: random.Random, max_len: int = 40, max_exp: int = 6) -> TwistWord:
    n = rng.randint(0, max_len)
    return TwistWord((rng.choice([X, Y]), rng.randint(-max_exp, max_exp)) for _ in range(n))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
