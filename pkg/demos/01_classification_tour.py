# # Which Chern pairs occur?
#
# A globally generated rank two bundle on the plane has Chern classes (c, y).
# This walk-through asks the library which y are possible for a few c and
# looks at why the missing ones are missing.

# In[1]:

from chernpairs import classify, effective_set, gap_set, existence_recipe

# For small c nothing is missing inside the allowed range [c-1, c^2-c+1],
# apart from the values below c-1 and above c^2-c+1 which never occur.

# In[2]:

for c in range(1, 6):
    eff = effective_set(c)
    print(c, len(eff), "values, first few:", eff[:6])

# The first real gap shows up at c = 6.

# In[3]:

print(effective_set(6))
print("gaps in the lower half:", gap_set(6).values())

# classify explains itself. y = 7 falls in the window for t = 2 and the
# residual degree l = c(t-1) - y is negative, so no line bundle fits.

# In[4]:

r = classify(6, 7)
print(r.effective, r.case.value, "t =", r.t, "l =", r.l)

# Values above c^2/2 are decided by the dual bundle, y -> c^2 - y.

# In[5]:

r = classify(6, 29)
print(r.case.value, "dual y =", r.dual_y, "dual case:", r.dual.case.value)

# A larger example. For c = 16 the lower-half gaps come in three blocks.

# In[6]:

print(gap_set(16))

# y = 62 sits in the t = 7 window and is realized; y = 63 = 7 * 9 is a
# split bundle.  Both would fall inside the raw, unclipped interval formulas,
# which is why the library clips every piece to its window.

# In[7]:

for y in (47, 62, 63):
    r = classify(16, y)
    print(y, r.effective, r.case.value, r.t, r.l)

# How is an effective pair actually built?

# In[8]:

for c, y in [(6, 6), (16, 63), (16, 62), (23, 89), (16, 100), (16, 194)]:
    print((c, y), existence_recipe(c, y))
