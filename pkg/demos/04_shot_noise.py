# # Shot noise in reconstructed coefficients
#
# With a finite number of measurement shots every evaluation is a sample
# mean, so the reconstructed Fourier coefficients carry an error that
# shrinks like `shots**-0.5`.

# In[1]:

import numpy as np

import pqcfourier as pq
from pqcfourier.circuit import pauli_matrix
from pqcfourier.library import random_circuit, random_hermitian, random_state_vector
from pqcfourier.sampler import SampledRestriction, ShotConfig

rng = np.random.default_rng(4)
gen = pq.eigendecompose((pauli_matrix("ZI") + pauli_matrix("IZ")) / 2)
circuit = random_circuit(2, [gen], rng)
state = pq.QuantumState(vector=random_state_vector(4, rng))
obs = pq.Observable(matrix=random_hermitian(4, rng))
fs = pq.parameter_frequencies(circuit, 0)
exact = pq.reconstruct_equidistant(pq.restrict(circuit, [0.0], state, obs, 0), fs)
print("exact coefficients", np.round(exact.coeffs, 6))


# RMS coefficient error over 20 seeds for each shot budget.

# In[2]:

shots_list = [10**3, 10**4, 10**5, 10**6]
errors = []
for shots in shots_list:
    errs = []
    for seed in range(20):
        f = SampledRestriction(circuit, [0.0], state, obs, 0, ShotConfig(shots, seed=seed))
        p = pq.reconstruct_equidistant(f, fs)
        errs.append(np.mean(np.abs(p.coeffs - exact.coeffs) ** 2))
    errors.append(np.sqrt(np.mean(errs)))
    print(f"{shots:>8} shots: rms error {errors[-1]:.2e}")

slope = np.polyfit(np.log10(shots_list), np.log10(errors), 1)[0]
print("log-log slope", round(slope, 3))


# Coordinate descent also runs on sampled energies.

# In[3]:

report = pq.coordinate_descent(circuit, state, obs, [0.0], shots=ShotConfig(20000, seed=1))
print(report.status, "estimated energy", report.energy)
print("true energy at the result", pq.expectation(circuit, report.theta, state, obs))
print("true minimum along the coordinate", pq.minimize_trig(exact)[1])
