'''
.. Finite-dimensional operator algebra for EPR systems: Bell-operator
   assembly and spectra, correlation matrices and their norms, entanglement
   entropy, and locality diagnostics.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from collections import namedtuple
import itertools
import math

import numpy as np
from scipy.linalg import eigh, eigvalsh, svdvals, LinAlgError
from scipy.special import xlogy
from scipy.stats import unitary_group

from .config import getParamAsFloat
from .constants import SigmaX, SigmaZ
from .error import InvalidInputError, NumericError, InconsistencyError, UnsupportedError
from .log import getLogger
from .weights import asWeightMatrix, BellMatrix, validateBellMatrix

_logger = getLogger(__name__)

HERMITIAN_TOL  = 1e-12
UNIT_BOUND_TOL = 1e-9
UNIT_STATE_TOL = 1e-9
IMAG_TOL       = 1e-9
COS_TOL        = 1e-6

EprDims = namedtuple('EprDims', ['Na', 'Nb', 'na', 'nb'])


class HermitianOperator(object):
    """
    A complex n x n Hermitian matrix, n >= 2.

    :param entries: (array-like) the matrix
    :param unitBounded: (bool) if True, require operator norm <= 1 + 1e-9
    :param check: (bool) if False, skip the Hermiticity test for matrices
       that are Hermitian by construction
    """
    __slots__ = ['entries', '_norm']

    def __init__(self, entries, unitBounded=False, check=True):
        arr = np.array(entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InvalidInputError("Hermitian operator must be square, got shape %s" % (arr.shape,))

        if arr.shape[0] < 2:
            raise InvalidInputError("Hermitian operator must have dimension >= 2")

        if check:
            if not np.all(np.isfinite(arr)):
                raise InvalidInputError("Hermitian operator has non-finite entries")

            scale = max(1.0, float(np.abs(arr).max()))
            if np.abs(arr - arr.conj().T).max() > HERMITIAN_TOL * scale:
                raise InvalidInputError("Operator is not Hermitian")

        self.entries = arr
        self._norm = None

        if unitBounded and self.norm > 1 + UNIT_BOUND_TOL:
            raise InvalidInputError("Operator norm %.6g exceeds 1" % self.norm)

    @property
    def dim(self):
        return self.entries.shape[0]

    @property
    def norm(self):
        "The operator norm, max |eigenvalue|."
        if self._norm is None:
            eigs = eigvalsh(self.entries)
            self._norm = float(np.abs(eigs).max())
        return self._norm

    def __repr__(self):
        return "<HermitianOperator dim=%d>" % self.dim


def _asOperator(op, unitBounded=False):
    if isinstance(op, HermitianOperator):
        if unitBounded and op.norm > 1 + UNIT_BOUND_TOL:
            raise InvalidInputError("Operator norm %.6g exceeds 1" % op.norm)
        return op
    return HermitianOperator(op, unitBounded=unitBounded)


class EprConfiguration(object):
    """
    Alice's observables {A_j} (dimension n_a) and Bob's {B_k} (dimension n_b),
    each a unit-norm-bounded Hermitian matrix.
    """
    def __init__(self, alice, bob):
        self.alice = [_asOperator(op, unitBounded=True) for op in alice]
        self.bob   = [_asOperator(op, unitBounded=True) for op in bob]

        for side, ops in (('Alice', self.alice), ('Bob', self.bob)):
            if len(ops) < 2:
                raise InvalidInputError("%s needs at least 2 observables, got %d" % (side, len(ops)))

            dims = set(op.dim for op in ops)
            if len(dims) != 1:
                raise InvalidInputError("%s's observables have different dimensions %s" % (side, sorted(dims)))

        self.aliceStack = np.array([op.entries for op in self.alice])
        self.bobStack   = np.array([op.entries for op in self.bob])

    @property
    def dims(self):
        return EprDims(len(self.alice), len(self.bob), self.alice[0].dim, self.bob[0].dim)

    def asDict(self):
        """
        Return the observables as nested lists of [real, imag] pairs.
        """
        def encode(ops):
            return [np.stack([op.entries.real, op.entries.imag], axis=-1).tolist() for op in ops]

        return {'alice': encode(self.alice), 'bob': encode(self.bob)}

    @classmethod
    def fromDict(cls, d):
        def decode(items):
            out = []
            for item in items:
                arr = np.array(item, dtype=float)
                out.append(arr[..., 0] + 1j * arr[..., 1])
            return out

        return cls(decode(d['alice']), decode(d['bob']))

    def __repr__(self):
        return "<EprConfiguration %s>" % (tuple(self.dims),)


class SpectralData(object):
    """
    The eigensystem of a Bell operator, ordered by |lambda| descending
    (positive before negative on ties). ``eigenvectors[t]`` is the unit
    eigenvector for ``eigenvalues[t]``, with phase fixed so that its
    largest-magnitude component is real and positive.
    """
    def __init__(self, eigenvalues, eigenvectors, maxIndexSet, residual):
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors
        self.maxIndexSet = maxIndexSet
        self.residual = residual

    @property
    def norm(self):
        return float(abs(self.eigenvalues[0]))

    @property
    def trace(self):
        return float(self.eigenvalues.sum())

    @property
    def pairingDeviation(self):
        "max |lambda_i + lambda_{n+1-i}| over the ascending spectrum; zero for +/- paired spectra"
        asc = np.sort(self.eigenvalues)
        return float(np.abs(asc + asc[::-1]).max())

    @property
    def unpaired(self):
        "The middle eigenvalue of the ascending spectrum for odd dimension, else None."
        n = len(self.eigenvalues)
        if n % 2 == 0:
            return None
        return float(np.sort(self.eigenvalues)[n // 2])

    def asDict(self):
        return {'eigenvalues' : self.eigenvalues.tolist(),
                'maxIndexSet' : list(self.maxIndexSet),
                'trace'       : self.trace,
                'pairingDeviation': self.pairingDeviation,
                'residual'    : self.residual}


class CorrelationReport(object):
    """
    A correlation matrix with its singular values, trace, Schmidt and
    operator norms, Schmidt rank, Bell expectation tr(W^T C), opening angle
    to W in degrees, quantum-extreme flag, and the entropy of the state
    that produced it (if known).
    """
    __slots__ = ['matrix', 'singularValues', 'traceNorm', 'schmidtNorm', 'opNorm',
                 'schmidtRank', 'bellExpectation', 'openingAngleDeg', 'isExtreme', 'entropy']

    def __init__(self, **kwargs):
        for name in self.__slots__:
            setattr(self, name, kwargs.get(name))

    def asDict(self):
        d = {name: getattr(self, name) for name in self.__slots__}
        d['matrix'] = self.matrix.tolist()
        d['singularValues'] = self.singularValues.tolist()
        return d


def _weightArray(W, dims):
    W = asWeightMatrix(W)
    if W.shape != (dims.Na, dims.Nb):
        raise InvalidInputError("Weight matrix shape %s doesn't match (N_a, N_b) = (%d, %d)"
                                % (W.shape, dims.Na, dims.Nb))
    return W.entries

def assembleStacks(W, aliceStack, bobStack):
    """
    Return sum_jk W_jk (A_j (x) B_k) for stacked observables of shape
    (N_a, n_a, n_a) and (N_b, n_b, n_b).
    """
    na, nb = aliceStack.shape[1], bobStack.shape[1]
    weighted = np.einsum('jk,kbd->jbd', W, bobStack)
    S = np.einsum('jac,jbd->abcd', aliceStack, weighted).reshape(na * nb, na * nb)
    return 0.5 * (S + S.conj().T)

def assembleBellOperator(W, cfg):
    """
    Assemble the Bell operator sum_jk W_jk (A_j (x) B_k).

    :param W: (WeightMatrix or array-like) N_a x N_b weights
    :param cfg: (EprConfiguration) the observables
    :return: (HermitianOperator) of dimension n_a * n_b
    :raises InvalidInputError: if W's shape doesn't match the configuration
    """
    arr = _weightArray(W, cfg.dims)
    S = assembleStacks(arr, cfg.aliceStack, cfg.bobStack)
    return HermitianOperator(S, check=False)

def _matrixOf(S):
    return S.entries if isinstance(S, HermitianOperator) else np.asarray(S, dtype=complex)

def bellOperatorNorm(S):
    """
    Return max |lambda| over the spectrum of the Hermitian operator `S`.
    """
    return float(np.abs(eigvalsh(_matrixOf(S))).max())

def _fixPhase(vectors):
    """
    Multiply each column by a unit phase so its largest-magnitude component
    is real and positive.
    """
    idx = np.argmax(np.abs(vectors), axis=0)
    pivots = vectors[idx, np.arange(vectors.shape[1])]
    return vectors * (np.abs(pivots) / pivots)

def spectralDecomposition(S, tol=None):
    """
    Compute the full eigensystem of `S`, sorted by |lambda| descending.

    :param S: (HermitianOperator or array-like) the operator
    :param tol: (float) relative tolerance defining the set of indices whose
       |lambda| equals the maximum; defaults to ``Quantum.ExtremeTol``
    :return: (SpectralData)
    :raises NumericError: if the eigensolver fails
    """
    mat = _matrixOf(S)
    tol = getParamAsFloat('Quantum.ExtremeTol') if tol is None else tol

    try:
        values, vectors = eigh(mat)
    except (LinAlgError, ValueError) as e:
        hermDev = float(np.abs(mat - mat.conj().T).max()) if np.all(np.isfinite(mat)) else float('nan')
        raise NumericError("Eigensolver failed on %dx%d operator (Frobenius norm %.6g, "
                           "Hermiticity deviation %.3g): %s"
                           % (mat.shape[0], mat.shape[1], np.linalg.norm(mat), hermDev, e))

    order = np.lexsort((-values, -np.abs(values)))
    values = values[order]
    vectors = _fixPhase(vectors[:, order])

    top = abs(values[0])
    maxIndexSet = [t for t, v in enumerate(values) if abs(v) >= top - tol * max(1.0, top)]

    residual = float(np.linalg.norm(mat @ vectors - vectors * values, axis=0).max())

    return SpectralData(values, vectors.T.copy(), maxIndexSet, residual)

def _checkState(psi, dim):
    psi = np.asarray(psi, dtype=complex).ravel()
    if psi.size != dim:
        raise InvalidInputError("State has length %d, expected %d" % (psi.size, dim))

    norm = np.linalg.norm(psi)
    if abs(norm - 1) > UNIT_STATE_TOL:
        raise InvalidInputError("State is not a unit vector (norm %.12g)" % norm)

    return psi

def correlationMatrix(cfg, psi):
    """
    Return C_jk = <psi| A_j (x) B_k |psi> for a pure state.

    :param cfg: (EprConfiguration) the observables
    :param psi: (array-like) unit vector of length n_a * n_b
    :return: (ndarray) real N_a x N_b matrix
    :raises InvalidInputError: if psi has the wrong length or isn't a unit vector
    """
    dims = cfg.dims
    psi = _checkState(psi, dims.na * dims.nb)
    J = psi.reshape(dims.na, dims.nb)

    C = np.einsum('ab,jac,cd,kbd->jk', J.conj(), cfg.aliceStack, J, cfg.bobStack, optimize=True)

    imag = float(np.abs(C.imag).max())
    if imag > IMAG_TOL:
        raise NumericError("Correlation matrix has imaginary residual %.3g" % imag)

    return C.real.copy()

def analyzeCorrelation(C, W, sNorm, normMeans=(1.0, 1.0), entropy=None, tol=None, rankTol=None):
    """
    Compute the norms and geometry of a correlation matrix.

    :param C: (array-like) N_a x N_b correlation matrix
    :param W: (WeightMatrix or array-like) the weights
    :param sNorm: (float) |<psi|S_W|psi>| for the state that produced C
    :param normMeans: (tuple) (M_a, M_b) of the configuration
    :param entropy: (float) entanglement entropy of the state, if known
    :param tol: (float) relative tolerance for the quantum-extreme test;
       defaults to ``Quantum.ExtremeTol``
    :param rankTol: (float) singular values at most rankTol * mu_1 are
       not counted in the Schmidt rank; defaults to ``Quantum.SchmidtRankTol``
    :return: (CorrelationReport)
    :raises InconsistencyError: if the implied |cos theta| exceeds 1 + 1e-6
    """
    W = asWeightMatrix(W)
    C = np.asarray(C, dtype=float)
    if C.shape != W.shape:
        raise InvalidInputError("Correlation matrix shape %s doesn't match weights %s" % (C.shape, W.shape))

    tol = getParamAsFloat('Quantum.ExtremeTol') if tol is None else tol
    rankTol = getParamAsFloat('Quantum.SchmidtRankTol') if rankTol is None else rankTol

    mu = svdvals(C)
    traceNorm = float(mu.sum())
    schmidtNorm = float(math.sqrt((mu ** 2).sum()))
    opNorm = float(mu[0])
    rank = int(np.count_nonzero(mu > rankTol * opNorm)) if opNorm > 0 else 0

    bellExpectation = float((W.entries * C).sum())

    if schmidtNorm == 0:
        angle = float('nan')
    else:
        cos = sNorm / (W.schmidtNorm * schmidtNorm)
        if cos > 1 + COS_TOL:
            raise InconsistencyError("|cos theta| = %.9g exceeds 1; s_norm %.9g is inconsistent with C"
                                     % (cos, sNorm))
        cos = min(cos, 1.0)
        if bellExpectation < 0:
            cos = -cos
        angle = math.degrees(math.acos(cos))

    Ma, Mb = normMeans
    bound = math.sqrt(W.rows * W.cols) * Ma * Mb
    isExtreme = bool(bound > 0 and traceNorm > 0 and abs(traceNorm - bound) <= tol * bound)

    return CorrelationReport(matrix=C, singularValues=mu, traceNorm=traceNorm,
                             schmidtNorm=schmidtNorm, opNorm=opNorm, schmidtRank=rank,
                             bellExpectation=bellExpectation, openingAngleDeg=angle,
                             isExtreme=isExtreme, entropy=entropy)

def rigidityConstant(N):
    if N not in (2, 3):
        raise UnsupportedError("Rigidity holds only for Bell matrices with N = 2 or 3, got N = %d" % N)
    return math.sqrt(N) / 2

def rigidityDeviation(C, X):
    """
    Return min over the sign of ||C -/+ k(N) X|| (operator norm), where
    k(N) = sqrt(N)/2.

    :param C: (array-like) N x N correlation matrix
    :param X: (BellMatrix or array-like) a Bell matrix with N in {2, 3}
    :raises UnsupportedError: for other N
    """
    if not isinstance(X, BellMatrix):
        X = validateBellMatrix(X)

    k = rigidityConstant(X.N)
    C = np.asarray(C, dtype=float)
    return float(min(svdvals(C - k * X.entries)[0], svdvals(C + k * X.entries)[0]))

def entanglementEntropy(psi, na, nb):
    """
    Return the entanglement entropy -sum s^2 ln s^2 (nats) of a pure state,
    where s are the singular values of the n_a x n_b coefficient matrix.

    :raises InvalidInputError: if psi has the wrong length or isn't a unit vector
    """
    psi = _checkState(psi, na * nb)
    s = svdvals(psi.reshape(na, nb))
    p = s ** 2
    return max(0.0, float(-xlogy(p, p).sum()))

def normMeans(cfg):
    """
    Return (M_a, M_b), the root-mean-square operator norms of each side.
    """
    Ma = math.sqrt(np.mean([op.norm ** 2 for op in cfg.alice]))
    Mb = math.sqrt(np.mean([op.norm ** 2 for op in cfg.bob]))
    return Ma, Mb

def quantumBound(W, cfg):
    """
    Return sqrt(N_a N_b) M_a M_b ||W||, the bound on the Bell-operator norm
    for the norm means of `cfg`.
    """
    W = asWeightMatrix(W)
    Ma, Mb = normMeans(cfg)
    return math.sqrt(W.rows * W.cols) * Ma * Mb * W.opNorm

def _maxCommutator(ops):
    worst = 0.0
    for X, Y in itertools.combinations(ops, 2):
        comm = X.entries @ Y.entries - Y.entries @ X.entries
        worst = max(worst, float(svdvals(comm)[0]))
    return worst

def quantumLocalityCheck(cfg, tol=None):
    """
    Check whether each side's observables commute pairwise.

    :return: (aliceCommuting, bobCommuting, maxCommutatorNorm)
    """
    tol = getParamAsFloat('Quantum.CommutatorTol') if tol is None else tol
    aliceMax = _maxCommutator(cfg.alice)
    bobMax = _maxCommutator(cfg.bob)
    return aliceMax <= tol, bobMax <= tol, max(aliceMax, bobMax)

def cliffordDeviation(ops):
    """
    Return max over pairs j != m of ||{A_j, A_m} - (tr{A_j, A_m} / n) I||.
    Zero means every anticommutator is a multiple of the identity.
    """
    worst = 0.0
    for X, Y in itertools.combinations(ops, 2):
        anti = X.entries @ Y.entries + Y.entries @ X.entries
        n = anti.shape[0]
        resid = anti - (np.trace(anti) / n) * np.eye(n)
        worst = max(worst, float(svdvals(resid)[0]))
    return worst

def dichotomyDeviation(ops):
    """
    Return max_j ||A_j^2 - I||, zero when every observable squares to the identity.
    """
    worst = 0.0
    for op in ops:
        resid = op.entries @ op.entries - np.eye(op.dim)
        worst = max(worst, float(svdvals(resid)[0]))
    return worst

def randomUnitary(n, seed):
    """
    Return a Haar-random n x n unitary matrix determined by `seed`.
    """
    return unitary_group.rvs(n, random_state=seed)

def conjugateLocal(cfg, Ua, Ub):
    """
    Return the configuration {Ua A_j Ua^+}, {Ub B_k Ub^+}. Its Bell operator is
    (Ua (x) Ub) S (Ua (x) Ub)^+, so the spectrum is unchanged.
    """
    def conj(U, op):
        M = U @ op.entries @ U.conj().T
        return 0.5 * (M + M.conj().T)

    return EprConfiguration([conj(Ua, op) for op in cfg.alice],
                            [conj(Ub, op) for op in cfg.bob])

def correlationReports(W, cfg, spectral, indices=None, tol=None):
    """
    Return a CorrelationReport, including entropy, for each eigenstate index
    in `indices` (default: the max index set).
    """
    dims = cfg.dims
    means = normMeans(cfg)
    indices = spectral.maxIndexSet if indices is None else indices

    reports = []
    for t in indices:
        psi = spectral.eigenvectors[t]
        C = correlationMatrix(cfg, psi)
        entropy = entanglementEntropy(psi, dims.na, dims.nb)
        reports.append(analyzeCorrelation(C, W, abs(spectral.eigenvalues[t]),
                                          normMeans=means, entropy=entropy, tol=tol))
    return reports

def extremeCount(W, cfg, spectral, tol=None):
    """
    Return the number of eigenstates whose correlation matrix is a quantum extreme.
    """
    reports = correlationReports(W, cfg, spectral, indices=range(len(spectral.eigenvalues)), tol=tol)
    return sum(1 for r in reports if r.isExtreme)

def bellMatrixExtreme(X):
    """
    Return (cfg, psi) realizing ||S_X|| = 2N cos(pi/2N) for a Bell matrix X
    with qubit observables in the x-z plane and the maximally entangled state
    (|00> + |11>)/sqrt 2, for which C_jk = cos(alpha_j - beta_k). Angles step
    by pi/2N along the row-column cycle of X, shifted by pi across -1 entries.
    """
    if not isinstance(X, BellMatrix):
        X = validateBellMatrix(X)

    arr = X.entries
    N = X.N
    step = math.pi / (2 * N)

    alpha = np.zeros(N)
    beta = np.zeros(N)

    # Walk the cycle r0, c, r, c, ... assigning angles edge by edge
    row = 0
    col = int(np.flatnonzero(arr[0]).min())
    for _ in range(N):
        beta[col] = alpha[row] + step - (math.pi if arr[row, col] < 0 else 0.0)
        nextRow = int([r for r in np.flatnonzero(arr[:, col]) if r != row][0])
        if nextRow == 0:
            break
        alpha[nextRow] = beta[col] + step + (math.pi if arr[nextRow, col] < 0 else 0.0)
        row = nextRow
        col = int([c for c in np.flatnonzero(arr[row]) if c != col][0])

    def observable(theta):
        return math.cos(theta) * SigmaZ + math.sin(theta) * SigmaX

    cfg = EprConfiguration([observable(a) for a in alpha], [observable(b) for b in beta])
    psi = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    return cfg, psi
