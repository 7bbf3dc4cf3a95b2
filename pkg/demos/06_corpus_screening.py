"""Screen every small positive braid word and cross-check all engines.

Every rotation/commutation class on 3 strands up to 8 crossings gets the
full pipeline; any disagreement between the closed formula, the skein
recursion, and the polynomial engines would show up here.
"""

import time
from collections import Counter

from braidhfk import corpus, verify_all

words = corpus(3, 8)
print(f"{len(words)} words on 3 strands with at most 8 crossings")

start = time.perf_counter()
reports = verify_all(words)
elapsed = time.perf_counter() - start

failures = [r for r in reports if not r.overall_pass]
print(f"verified in {elapsed:.1f}s, {len(failures)} failures")

by_shape = Counter((r.components, r.split_count, r.prime_count) for r in reports)
print("(|L|, s, p) histogram:")
for shape, count in sorted(by_shape.items()):
    print(f"  {shape}: {count}")

genus_hist = Counter(r.genus for r in reports)
print("genus histogram:", dict(sorted(genus_hist.items())))

for r in failures:
    print(r.render_text())
