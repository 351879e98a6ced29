"""
Transition probabilities of a precessing spin
=============================================

A spin-j in a field along x precesses; the probability of jumping from
``|m>`` to ``|m'>`` after a rotation by ``theta`` is ``|d^j_{m',m}(theta)|**2``.
Smearing ``theta`` with a Gaussian of width ``delta`` blurs the rows of this
matrix towards their angular average.
"""
import numpy as np

from macroreal import Spin, d_matrix_sq, quadrature_transfer, smeared_transfer

spin = Spin.from_j("3/2")

# Sharp rotation by pi/2: every row is a probability distribution over m'.
p = d_matrix_sq(spin, np.pi / 2).p
print("sharp, theta = pi/2")
print(np.round(p, 4))
print("row sums:", p.sum(axis=1))

###############################################################################
# Coarsened times: the Fourier route is exact, the quadrature route checks it.
for delta in (0.25, 0.55, 0.85):
    fourier = smeared_transfer(spin, np.pi / 2, delta).t
    quad = quadrature_transfer(spin, np.pi / 2, delta).t
    print(f"delta={delta}: first column {np.round(fourier[:, 0], 4)}, "
          f"max |fourier - quadrature| = {np.abs(fourier - quad).max():.1e}")

###############################################################################
# Large spins are no problem: the matrix for j = 200 stays doubly stochastic.
big = d_matrix_sq(Spin(400), 1.0).p
print("2j=400: max row-sum deviation", np.abs(big.sum(axis=1) - 1).max())
