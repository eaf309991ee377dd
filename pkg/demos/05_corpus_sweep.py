"""Sweeping the built-in corpus.

verify_corpus() analyzes every entry, asserts the theorem/Weiss/Neumann
checks on the primitive ones, and returns an aggregate. The same sweep runs
from the command line: subdeg verify-corpus --builtin
"""
from collections import Counter

from subdeg import builtin_entries, verify_corpus

names = [name for name, _ in builtin_entries()]
families = Counter(name.split("(")[0] for name in names)
print(f"built-in corpus: {len(names)} entries")
for fam, count in sorted(families.items()):
    print(f"  {fam:<10} {count}")

result = verify_corpus()
assert result.exit_code == 0

entries = result.entries
primitive = [e for e in entries if e["primitive"]]
by_clique = Counter(e["clique_size"] for e in primitive)
print(f"\nprimitive entries: {len(primitive)} of {result.total}")
print(f"violations: {len(result.violations)}")
print(f"clique sizes among primitive entries: {dict(sorted(by_clique.items()))}")

# Nobody in the built-in corpus reaches clique size 2; the bundled J1
# fixture (demo 03) is the witness that 2 is attained.
largest = max(primitive, key=lambda e: (e["clique_size"], e["rank"]))
print(f"highest rank with the top clique size: {largest['name']} (rank {largest['rank']})")
