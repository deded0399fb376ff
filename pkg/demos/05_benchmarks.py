# coding: utf-8

# # Reproducible benchmarks
#
# Random specifications are named by (type, seed, k, le, p, n). The generator
# is SplitMix64, so the same name gives the same file everywhere.

# In[1]:

from collections import Counter

from regsynth.benchgen import BenchParams, generate
from regsynth.specfile import format_spec

params = BenchParams.of(1, 42, 2, 5, 4, 4)
print(format_spec(generate(params)))


# Type 1 samples strings uniformly from everything up to length le, so long
# strings dominate. Type 2 picks a length uniformly first, so short strings,
# the empty one included, show up often.

# In[2]:

for t in (1, 2):
    lengths = Counter(len(w) for seed in range(300)
                      for s in [generate(BenchParams.of(t, seed, 2, 10, 10, 10))]
                      for w in s.positive + s.negative)
    print(f"Type {t}:", [lengths[i] for i in range(11)])


# The engine against the oracle on a handful of small random specs:

# In[3]:

from regsynth.check import cross_check

print(cross_check(instances=20, seed=1))
