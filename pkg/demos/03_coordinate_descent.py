# # Coordinate descent with exact line minimization
#
# Each coordinate update reconstructs the one-parameter restriction from
# `|D_j|` circuit runs and jumps to its global minimum.

# In[1]:

import numpy as np

import pqcfourier as pq
from pqcfourier.library import pauli_generator, random_circuit, random_state_vector


# Toy problem: `RZ(t2) RY(t1) |0>` measured in Z.  The minimum is -1.

# In[2]:

circuit = pq.ParameterizedCircuit(
    1, [pq.Parameterized(pauli_generator("Y"), 0), pq.Parameterized(pauli_generator("Z"), 1)]
)
state = pq.QuantumState.basis("0")
obs = pq.Observable.from_pauli((1.0, "Z"))
report = pq.coordinate_descent(circuit, state, obs, [0.1, 0.0])
print(report.status, "energy", report.energy, "evaluations", report.evaluations)
print("theta", report.theta)


# A three-qubit transverse-field Ising Hamiltonian with a layered ansatz.

# In[3]:

rng = np.random.default_rng(3)
h = pq.Observable.from_pauli(
    (-1.0, "ZZI"), (-1.0, "IZZ"), (-0.7, "XII"), (-0.7, "IXI"), (-0.7, "IIX")
)
words = ["YII", "IYI", "IIY", "ZZI", "IZZ", "XII", "IXI", "IIX"] * 2
elements = [pq.Parameterized(pauli_generator(w), j) for j, w in enumerate(words)]
ansatz = pq.ParameterizedCircuit(3, elements)
plus = pq.QuantumState(vector=np.ones(8) / np.sqrt(8))
report = pq.coordinate_descent(ansatz, plus, h, rng.uniform(-0.5, 0.5, len(words)))
exact = h.operator.eigenvalues[0]
print(f"{report.status} after {report.sweeps} sweeps, {report.evaluations} evaluations")
print(f"energy {report.energy:.8f}   ground state {exact:.8f}")


# The recorded energies never increase.

# In[4]:

e = np.array(report.energies)
print("largest increase between steps:", np.max(np.diff(e)))
print("energy after every tenth sweep:")
for s in range(1, report.sweeps + 1, 10):
    print(s, [st.energy for st in report.steps if st.sweep == s][-1])
