# coding: utf-8

# # Characteristic sequences
#
# The synthesizer never builds an automaton. Every candidate language is
# represented by which words of a fixed, finite universe it contains: the
# infix-closure of the examples. This notebook walks through that universe and
# the bit-level operations on it.

# In[1]:

import numpy as np

from regsynth import infix_closure, validate_spec, parse_regex, language_on
from regsynth.engine import (cs_concat, cs_from_indices, cs_indices, cs_question, cs_star,
                             cs_union, cs_of_regex)
from regsynth.infix import build_guide_table


# A specification is a set of positive and a set of negative strings.

# In[2]:

spec = validate_spec(["1", "011", "1011", "11011"], ["", "10", "101", "0011"])
iws = infix_closure(spec)
list(enumerate(iws.words))
print(list(enumerate(iws.words)))


# Fifteen words, shortlex ordered, with the empty string at index 0. Every
# substring of every example is in there, which is what makes the
# concatenation below exact.
#
# A language becomes a row of 64-bit words (one bit per infix):

# In[3]:

def cs(*words):
    return cs_from_indices([iws.index[w] for w in words], 64)

one, ten = cs("1"), cs("10")
print(one, one.dtype)


# Union is a bitwise or. Concatenation needs the guide table, which lists for
# each word every way of cutting it in two.

# In[4]:

gt = build_guide_table(iws)
print("splits of 110:", [(iws.words[l], iws.words[r]) for l, r in gt[iws.index["110"]]])

print("{1} + {0}  ->", [iws.words[i] for i in cs_indices(cs_union(one, cs("0")))])
print("{1} . {10} ->", [iws.words[i] for i in cs_indices(cs_concat(one, ten, gt))])
print("{0}*       ->", [iws.words[i] for i in cs_indices(cs_star(cs("0"), gt))])
print("{1}?       ->", [iws.words[i] for i in cs_indices(cs_question(one))])


# Composing these operations along a regex gives the same bits as running a
# matcher on every infix. That is the property the whole search rests on.

# In[5]:

r = parse_regex("(0?1)*1")
bits = cs_of_regex(r, iws, gt)
print([iws.words[i] for i in cs_indices(bits)])
assert int(bits[0]) == language_on(r, iws.words)


# The regex accepts every positive example and no negative one, so it
# satisfies the specification. Checking that takes two masked comparisons:

# In[6]:

p_mask = cs_from_indices(iws.positive_indices, 64)
n_mask = cs_from_indices(iws.negative_indices, 64)
print(bool(np.all(bits & p_mask == p_mask) and not np.any(bits & n_mask)))
