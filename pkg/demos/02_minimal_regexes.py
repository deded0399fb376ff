# coding: utf-8

# # Finding a cheapest regex
#
# `synthesize` enumerates languages bottom-up by cost and stops at the first
# one that separates the examples. Cost is additive over the syntax tree, with
# one weight per constructor.

# In[1]:

from regsynth import CostFn, cost, oracle_synthesize, synthesize, validate_spec

e1 = validate_spec(["1", "011", "1011", "11011"], ["", "10", "101", "0011"])
res = synthesize(e1)
print(res.regex, "cost", res.cost)
print(res.stats)


# The brute-force oracle works from regex trees and a plain matcher, sharing
# nothing with the bit-vector engine. It agrees:

# In[2]:

print(oracle_synthesize(e1).cost)


# Strings of the form 10 followed by anything:

# In[3]:

intro = validate_spec(["10", "101", "100", "1010", "1011", "1000", "1001"],
                      ["", "0", "1", "00", "11", "010"])
res = synthesize(intro)
print(res.regex, res.cost)


# Changing the weights changes which answer is cheapest. Here stars and
# unions are expensive.

# In[4]:

cf = CostFn(5, 2, 7, 2, 19)
res = synthesize(e1, cf)
print(cf, res.regex, res.cost, cost(res.regex, cf))


# Two edge cases: nothing to accept, and only the empty string to accept.

# In[5]:

print(synthesize(validate_spec([], ["0", "1"])).regex)
print(synthesize(validate_spec([""], ["0"])).regex)
