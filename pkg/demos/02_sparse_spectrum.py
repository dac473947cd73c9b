# # Sparse spectra: fewer circuit runs than the maximum frequency suggests
#
# The cross-resonance generator `X(x)1 - b Z(x)X + c 1(x)X` has eigenvalues
# `+-c +- sqrt(1 + b^2)`.  With `b = 3/4`, `c = 1/4` these are
# `{-3/2, -1, 1, 3/2}`, so the level differences are a sparse subset of
# `-5..5`.

# In[1]:

import warnings

import numpy as np

import pqcfourier as pq
from pqcfourier.circuit import CountingEvaluator
from pqcfourier.library import random_circuit, random_hermitian, random_state_vector, transmon_generator

rng = np.random.default_rng(1)
gen = transmon_generator(0.75, 0.25)
print("eigenvalues", np.round(gen.eigenvalues, 12))


# The canonical frequency set: shift, rationalize, rescale by `alpha`.

# In[2]:

circuit = random_circuit(2, [gen], rng)
state = pq.QuantumState(vector=random_state_vector(4, rng))
obs = pq.Observable(matrix=random_hermitian(4, rng))
fs = pq.parameter_frequencies(circuit, 0)
print(fs.to_dict())


# After scaling by `alpha = 1/2` the largest frequency is 6, so dense
# trigonometric interpolation needs `2*6 + 1 = 13` evaluations.  Random
# sample points need only `|D| = 9`.

# In[3]:

sparse = CountingEvaluator(pq.restrict(circuit, [0.0], state, obs, 0))
p9 = pq.reconstruct_random(sparse, fs, seed=7)
dense = CountingEvaluator(pq.restrict(circuit, [0.0], state, obs, 0))
p_dense = pq.reconstruct_generic(dense, fs.max_freq, alpha=fs.alpha)
probe = np.linspace(0, p9.period, 1000)
print("evaluations:", sparse.calls, "vs", dense.calls)
print("max disagreement:", np.max(np.abs(p9(probe) - p_dense(probe))))
print("condition number of the random system:", p9.condition)


# Equidistant points alias here: 5 and -4 land on the same residue mod 9.
# The library notices and falls back to dense equidistant sampling.

# In[4]:

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    eq = CountingEvaluator(pq.restrict(circuit, [0.0], state, obs, 0))
    pq.reconstruct_equidistant(eq, fs)
print(eq.calls, "evaluations;", [str(w.message) for w in caught])
