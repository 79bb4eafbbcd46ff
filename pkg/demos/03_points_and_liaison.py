# # Points in the plane, Cayley-Bacharach and liaison
#
# Everything here is exact linear algebra: the evaluation matrix of a point
# set in degree n has rank H(Z, n).

# In[1]:

from chernpairs import (
    CollinearPlus, FieldSpec, Generic, PointSet,
    gen_points, hilbert, h0_ideal, numerical_character, character_gap_indices,
    is_cb, is_gg, make_transverse_ci, ci_residual,
    check_trou_instance, check_cb_residuel_instance,
)
from chernpairs.points import hilbert_function

QQ = FieldSpec.rational()
F = FieldSpec.prime(101)

# Four points on a line and one off it.

# In[2]:

Z = PointSet(QQ, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)])
print("H:", hilbert_function(Z, 5))
ch = numerical_character(Z)
print("character", ch, "gap indices", character_gap_indices(ch))

# The drop 4 -> 2 in the character forces a failure of Cayley-Bacharach in
# degree 1: the line through the four points misses the fifth.

# In[3]:

res = is_cb(Z, 1)
print(res.holds, ":".join(map(str, res.witness[0])), str(res.witness[1]))
print(check_trou_instance(Z).conclusion)

# Generic points behave the other way round in high degree.

# In[4]:

W = gen_points(Generic(5), QQ, seed=2)
print([is_cb(W, n).holds for n in range(1, 6)])

# A conic and a cubic meeting in six rational points, sampled over F_101.

# In[5]:

Fc, Gc, X = make_transverse_ci(2, 3, F, seed=0)
print(X.degree, numerical_character(X), is_cb(X, 2).holds)
print("curves of degree 2 through X:", h0_ideal(X, 2))
print("I_X(3) generated:", is_gg(X, 3).verdict.value)

# Split X into two linked halves and run the liaison checker.

# In[6]:

Y = PointSet(F, X.points[:2])
Zr = ci_residual(Fc, Gc, X, Y)
rep = check_cb_residuel_instance(Y, Zr, 2, 3, Fc, Gc)
print(rep.hypotheses, rep.conclusion, rep.violation)

# The same checks run in bulk, with fixed seeds, from the command line:
#
#     chernpairs verify --seed 7 --max-c 100
