# coding: utf-8

# # When the cache fills up
#
# Every new language is stored so later levels can combine it. The memory
# budget caps how many can be stored. Once it is hit, the search keeps going
# without storing anything, combining only what is already cached, until no
# further cost can be built from cached parts.

# In[1]:

from regsynth import Synthesizer, validate_spec

e1 = validate_spec(["1", "011", "1011", "11011"], ["", "10", "101", "0011"])
full = Synthesizer(e1)
full.run()
print({c: hi - lo for c, (lo, hi) in full.cache.start_points.items()})


# Each entry takes three times the width of one characteristic sequence (64
# bits here), so 24 bytes. Room for 62 entries caches costs 1 to 5.

# In[2]:

s = Synthesizer(e1, memory_budget=62 * 24)
res = s.run()
print(type(res).__name__, res.regex, res.cost, "on the fly from cost", res.stats.onthefly_from)


# The answer costs 7 = 5 + 1 + 1, one concatenation of cached parts, so it is
# still found. A harder specification under the same budget is not:

# In[3]:

hard = validate_spec(
    ["00", "1101", "0001", "0111", "001", "1", "10", "1100", "111", "1010"],
    ["", "0", "0000", "0011", "01", "010", "011", "100", "1000", "1001", "11", "1110"])
res = Synthesizer(hard, memory_budget=62 * 24).run()
print(type(res).__name__, "last complete cost", res.last_complete_cost)
