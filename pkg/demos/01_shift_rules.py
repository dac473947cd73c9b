# # Exact derivatives from shifted circuit runs
#
# A rotation `exp(-i t P/2)` makes the expectation value a degree-1
# trigonometric polynomial in `t`.  Two shifted evaluations then give the
# exact derivative, and a generator with eigenvalues `{-1, 0, 0, 1}` needs
# four.

# In[1]:

import numpy as np

import pqcfourier as pq
from pqcfourier.circuit import pauli_matrix
from pqcfourier.circuit import CountingEvaluator
from pqcfourier.library import pauli_generator, random_circuit, random_hermitian, random_state_vector

rng = np.random.default_rng(0)


# A random two-qubit circuit with three Pauli rotations and Haar-random
# fixed gates in between.

# In[2]:

gens = [pauli_generator(w) for w in ("XY", "ZI", "IY")]
circuit = random_circuit(2, gens, rng)
state = pq.QuantumState(vector=random_state_vector(4, rng))
obs = pq.Observable(matrix=random_hermitian(4, rng))
theta = rng.uniform(0, 2 * np.pi, 3)
print("F(theta) =", pq.expectation(circuit, theta, state, obs))


# Every parameter has frequency set D = {-1, 0, 1}.

# In[3]:

for j in range(3):
    print(j, pq.parameter_frequencies(circuit, j).to_dict())


# Two-point rule against a central finite difference.

# In[4]:

for j in range(3):
    f = CountingEvaluator(pq.restrict(circuit, theta, state, obs, j))
    exact = pq.shift_rule_2ev(f)
    h = 1e-5
    fd = (f(h) - f(-h)) / (2 * h)
    print(f"param {j}: shift rule {exact:+.10f}  finite diff {fd:+.10f}")


# Now a generator `(Z(x)1 + 1(x)Z)/2`, whose level differences are
# `{0, +-1, +-2}`.  The four-point rule recovers the derivative from 4 runs.

# In[5]:

zz = pq.eigendecompose((pauli_matrix("ZI") + pauli_matrix("IZ")) / 2)
circuit2 = random_circuit(2, [zz], rng)
f = CountingEvaluator(pq.restrict(circuit2, [0.4], state, obs, 0))
d, b1, b2 = pq.four_point_rule_3ev(f)
print("derivative", d, "from", f.calls, "evaluations")
p = pq.reconstruct_equidistant(pq.restrict(circuit2, [0.4], state, obs, 0), pq.parameter_frequencies(circuit2, 0))
print("derivative of the full 5-point reconstruction", pq.derivative_trig(p, 0.0))
