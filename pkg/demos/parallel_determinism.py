"""
Worker pools and determinism
============================

Suffix encoding is split into index ranges and bucket sorting into one task
per bucket.  Outputs are identical for every worker count and chunk size.
"""

import random
import time

from polysuffix import ParallelConfig, oracle_doubling, random_text, suffix_array

rng = random.Random(1)
text = "".join(rng.choice("acgt") for _ in range(5000))

reference = None
for workers in (1, 2, 4, 8):
    config = ParallelConfig(workers=workers, chunk=128)
    t0 = time.perf_counter()
    sa = suffix_array(text, config)
    print(f"workers={workers}: {time.perf_counter() - t0:.3f}s")
    if reference is None:
        reference = sa.tobytes()
    assert sa.tobytes() == reference

assert (oracle_doubling(text) == suffix_array(text)).all()

# The random corpus used by the tests: mixed alphabets and run lengths.
for _ in range(3):
    print(repr(random_text(rng, max_length=40)))
