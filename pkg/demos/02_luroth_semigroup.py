# # Degrees of pencils on plane curves
#
# On a smooth plane curve of degree d a base-point-free pencil can only have
# certain degrees.  The missing degrees come in runs, one for each a with
# a^2 <= d - 2.

# In[1]:

from chernpairs import luroth_gaps, luroth_contains

for d in (2, 3, 5, 6, 11, 20):
    print(d, luroth_gaps(d))

# Every degree from 1 to d-2 is missing: a pencil needs degree at least d-1.

# In[2]:

d = 9
print([n for n in range(1, 3 * d) if not luroth_contains(d, n)])

# The set of allowed degrees is closed under addition.  A quick check:

# In[3]:

members = [n for n in range(0, 60) if luroth_contains(d, n)]
bad = [(u, v) for u in members for v in members if u + v < 60 and not luroth_contains(d, u + v)]
print("sums leaving the set:", bad)

# These gaps are what produce the missing Chern classes: for y in the t-th
# window the relevant curve has degree t-1 and the relevant line bundle has
# degree c(t-1) - y.

# In[4]:

from chernpairs import classify

r = classify(16, 47)
print(r.t, r.l, r.luroth_gap)
