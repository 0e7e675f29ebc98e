'''
.. Named weight matrices, Pauli matrices, and tabulated constants.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import math
import numpy as np

# The CHSH weight matrix
W0 = np.array([[1.0,  1.0],
               [1.0, -1.0]])

# W0 (x) W0, a zero-gap matrix of dimension 4
W00 = np.kron(W0, W0)

# The 3x3 magic square: every row and column sums to 15
Wm = np.array([[8.0, 3.0, 4.0],
               [1.0, 5.0, 9.0],
               [6.0, 7.0, 2.0]])

# Bell matrix of dimension 3 used by the (3,2,2) model
X3 = np.array([[-1.0, 1.0, 0.0],
               [ 1.0, 0.0, 1.0],
               [ 0.0, 1.0, 1.0]])

SigmaX = np.array([[0, 1], [1, 0]], dtype=complex)
SigmaY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SigmaZ = np.array([[1, 0], [0, -1]], dtype=complex)
Identity2 = np.eye(2, dtype=complex)

# Upper bounds on the Grothendieck constant K_G(N) from the literature.
# Exact values are unknown for N >= 3; N >= 5 uses Krivine's bound.
GrothendieckTable = {
    2: math.sqrt(2.0),
    3: 1.5163,
    4: math.pi / 2,
}
KrivineBound = math.pi / (2 * math.log(1 + math.sqrt(2.0)))   # 1.7822...

# Names accepted by weight-source parsing, mapped to matrices
NamedWeights = {
    'chsh'  : W0,
    'w00'   : W00,
    'magic3': Wm,
    'x3'    : X3,
}

# Verdicts returned by hvmodel.classify()
LOCAL            = 'local'
BELL_VIOLATING   = 'bell_violating'
AT_QUANTUM_BOUND = 'at_quantum_bound'

# Supported output formats for result records
OUTPUT_FORMATS = ('json', 'csv', 'md')

# Distributions for random weight matrices
UNIFORM = 'uniform'
NORMAL  = 'normal'
DISTRIBUTIONS = (UNIFORM, NORMAL)
