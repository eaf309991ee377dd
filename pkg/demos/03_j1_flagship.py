"""The 266-point action of the sporadic group J1.

This is the showcase entry: the smallest faithful permutation representation
of Janko's first group, bundled as a fixture. It is one of the rare primitive
actions realizing TWO pairwise coprime non-trivial subdegrees, meeting the
theoretical maximum.
"""
import time

from subdeg import analyze, fixture_path, load_group, order

t0 = time.perf_counter()
G = load_group(fixture_path("j1_266.json"))
report = analyze(G)
elapsed = time.perf_counter() - t0

print(f"degree            {G.degree}")
print(f"order             {order(G)}")
print(f"rank              {report.rank}")
print(f"subdegrees        {report.subdegrees}")
print(f"coprime clique    {report.max_coprime_clique}  <- size {report.clique_size}, the maximum possible")
print(f"weiss             {report.weiss_ok}")
print(f"neumann (rank >= 2^2) {report.neumann_ok}")
print(f"theorem_ok        {report.theorem_ok}")
print(f"analyzed in       {elapsed:.2f}s")

assert report.subdegrees == (1, 11, 12, 110, 132)
assert report.max_coprime_clique == (11, 12)
