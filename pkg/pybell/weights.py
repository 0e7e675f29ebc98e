'''
.. Weight-matrix algebra: operator and hidden-variable norms, the class of
   Bell matrices, quantum gaps, and zero-gap certificates.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import math

import numpy as np
from scipy.linalg import svdvals
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .config import getParamAsFloat, getParamAsInt
from .constants import GrothendieckTable, KrivineBound, UNIFORM, NORMAL, DISTRIBUTIONS
from .error import (InvalidInputError, BellMatrixError, ResourceLimitError, NumericError)
from .log import getLogger
from .utils import asRealMatrix, cornerSigns, mapChunks

_logger = getLogger(__name__)


class WeightMatrix(object):
    """
    A real N_a x N_b weight matrix (N_a, N_b >= 2) with finite entries.
    The operator, Schmidt and hidden-variable norms are computed on first
    use and cached.
    """
    def __init__(self, entries):
        arr = asRealMatrix(entries, name='weight matrix')
        rows, cols = arr.shape
        if rows < 2 or cols < 2:
            raise InvalidInputError("Weight matrix must be at least 2x2, got %dx%d" % (rows, cols))

        arr.flags.writeable = False
        self.entries = arr
        self._opNorm = None
        self._hvNorm = None

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def opNorm(self):
        if self._opNorm is None:
            self._opNorm = operatorNorm(self)
        return self._opNorm

    @property
    def hvNorm(self):
        if self._hvNorm is None:
            self._hvNorm = hvNorm(self)
        return self._hvNorm

    @property
    def schmidtNorm(self):
        return schmidtNorm(self)

    def isZero(self):
        return not np.any(self.entries)

    def __repr__(self):
        return "<%s %dx%d>" % (type(self).__name__, self.rows, self.cols)


class BellMatrix(WeightMatrix):
    """
    A validated member of the class of Bell matrices of dimension N: every row
    and column holds exactly two entries of +1 or -1, the support pattern is
    irreducible, and the number of -1 entries is odd. Create instances with
    :py:func:`validateBellMatrix`.
    """
    def __init__(self, entries, minusCount):
        super(BellMatrix, self).__init__(entries)
        self.minusCount = minusCount
        self.norm = bellMatrixNorm(self.rows)

    @property
    def N(self):
        return self.rows


class SignaturePair(object):
    """
    Diagonals of the signature matrices D1, D2 certifying a zero quantum gap.
    """
    __slots__ = ['d1', 'd2']

    def __init__(self, d1, d2):
        self.d1 = np.asarray(d1, dtype=int)
        self.d2 = np.asarray(d2, dtype=int)

    def asDict(self):
        return {'d1': self.d1.tolist(), 'd2': self.d2.tolist()}

    def __eq__(self, other):
        return (isinstance(other, SignaturePair) and
                np.array_equal(self.d1, other.d1) and np.array_equal(self.d2, other.d2))

    def __repr__(self):
        return "<SignaturePair d1=%s d2=%s>" % (self.d1.tolist(), self.d2.tolist())


class GapReport(object):
    """
    The absolute gap G(W) = sqrt(N_a N_b) ||W|| - ||W||*, the scale-invariant
    gap g(W) = G(W) / ||W||, the two norms, and a zero-gap certificate if one
    was found.
    """
    __slots__ = ['absoluteGap', 'scaledGap', 'opNorm', 'hvNorm', 'certificate']

    def __init__(self, absoluteGap, scaledGap, opNorm, hvNorm, certificate=None):
        self.absoluteGap = absoluteGap
        self.scaledGap = scaledGap
        self.opNorm = opNorm
        self.hvNorm = hvNorm
        self.certificate = certificate

    def asDict(self):
        return {'absoluteGap': self.absoluteGap,
                'scaledGap'  : self.scaledGap,
                'opNorm'     : self.opNorm,
                'hvNorm'     : self.hvNorm,
                'certificate': self.certificate.asDict() if self.certificate else None}


def asWeightMatrix(W):
    return W if isinstance(W, WeightMatrix) else WeightMatrix(W)

def operatorNorm(W):
    """
    Return the largest singular value of `W`.

    :param W: (WeightMatrix or array-like) the weight matrix
    :return: (float) ||W||
    :raises InvalidInputError: if entries are non-finite
    """
    arr = W.entries if isinstance(W, WeightMatrix) else asRealMatrix(W)
    return float(svdvals(arr)[0])

def schmidtNorm(W):
    """
    Return the Hilbert-Schmidt (Frobenius) norm of `W`.
    """
    arr = W.entries if isinstance(W, WeightMatrix) else asRealMatrix(W)
    return float(np.linalg.norm(arr, 'fro'))

def _enumerationSide(arr, capVar='Bell.EnumerationCap'):
    """
    Orient `arr` so its column count is the smaller dimension, which is the
    side the corner enumeration runs over. Returns (matrix, transposed).
    """
    transposed = arr.shape[1] > arr.shape[0]
    mat = arr.T if transposed else arr

    cap = getParamAsInt(capVar)
    n = mat.shape[1]
    if n > cap:
        raise ResourceLimitError("Corner enumeration over %d dimensions exceeds %s = %d; "
                                 "min(N_a, N_b) must not exceed the cap" % (n, capVar, cap))
    return mat, transposed

def _hvChunkMax(mat):
    n = mat.shape[1]

    def chunkMax(start, stop):
        b = cornerSigns(start, stop, n, fixFirst=True)
        values = np.abs(b @ mat.T).sum(axis=1)
        i = int(np.argmax(values))
        return values[i], start + i

    return chunkMax

def hvNorm(W, threads=None):
    """
    Return the hidden-variable norm ||W||* = max over corner vectors a, b of
    (a, W b). Because the form is bilinear the maximum over the unit
    hypercubes is attained at corners, and for a fixed b it equals
    sum_j |(W b)_j|. Corners are enumerated over the smaller dimension with
    the first sign fixed, since b and -b give the same value.

    :param W: (WeightMatrix or array-like) the weight matrix
    :param threads: (int) worker threads; defaults to ``Bell.Threads``
    :return: (float) ||W||*
    :raises ResourceLimitError: if min(N_a, N_b) exceeds ``Bell.EnumerationCap``
    """
    value, _a, _b = hvNormArgmax(W, threads=threads)
    return value

def hvNormArgmax(W, threads=None):
    """
    Return (||W||*, a, b) where a and b are corner vectors with (a, W b) = ||W||*.
    Ties are broken in favor of the lowest corner index.
    """
    W = asWeightMatrix(W)
    mat, transposed = _enumerationSide(W.entries)
    n = mat.shape[1]
    total = 1 << (n - 1)

    _logger.debug("hvNorm: enumerating %d corners of dimension %d", total, n)

    results = mapChunks(_hvChunkMax(mat), total, threads=threads)
    best = max(range(len(results)), key=lambda i: (results[i][0], -i))
    value, index = results[best]

    b = cornerSigns(index, index + 1, n, fixFirst=True)[0].astype(int)
    Wb = mat @ b
    a = np.where(Wb >= 0, 1, -1)

    if transposed:
        a, b = b, a

    return float(value), a, b

def checkBounds(bounds, size, label):
    try:
        arr = np.array(bounds, dtype=float)
    except (TypeError, ValueError) as e:
        raise InvalidInputError("%s bounds are malformed: %s" % (label, e))

    if arr.shape != (size, 2):
        raise InvalidInputError("%s bounds must have shape (%d, 2), got %s" % (label, size, arr.shape))

    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("%s bounds must be finite" % label)

    if np.any(arr[:, 0] > arr[:, 1]):
        raise InvalidInputError("%s bounds must satisfy lower <= upper" % label)

    return arr

def unitBounds(size):
    return np.tile([-1.0, 1.0], (size, 1))

def hvBoxNorm(W, aBounds, bBounds, threads=None):
    """
    Return ||W||_{A,B}, the maximum of |(a, W b)| over a in the box given by
    `aBounds` and b in the box given by `bBounds`. By bilinearity the extremes
    occur at box corners: the corners of one box are enumerated, and for each
    one the other vector's entries are chosen greedily by sign.

    :param W: (WeightMatrix or array-like) the weight matrix
    :param aBounds: (sequence of [lo, hi]) one interval per row of W
    :param bBounds: (sequence of [lo, hi]) one interval per column of W
    :return: (float) the box norm
    :raises InvalidInputError: if the bounds are malformed
    :raises ResourceLimitError: if the enumerated side exceeds ``Bell.EnumerationCap``
    """
    W = asWeightMatrix(W)
    aBounds = checkBounds(aBounds, W.rows, 'a')
    bBounds = checkBounds(bBounds, W.cols, 'b')

    mat, transposed = _enumerationSide(W.entries)
    if transposed:
        aBounds, bBounds = bBounds, aBounds

    n = mat.shape[1]
    lo, hi = bBounds[:, 0], bBounds[:, 1]
    aLo, aHi = aBounds[:, 0], aBounds[:, 1]

    def chunkExtremes(start, stop):
        upper = cornerSigns(start, stop, n) > 0
        b = np.where(upper, hi, lo)
        v = b @ mat.T
        pLo, pHi = v * aLo, v * aHi
        top = np.maximum(pLo, pHi).sum(axis=1).max()
        bottom = np.minimum(pLo, pHi).sum(axis=1).min()
        return top, bottom

    results = mapChunks(chunkExtremes, 1 << n, threads=threads)
    top = max(r[0] for r in results)
    bottom = min(r[1] for r in results)
    return float(max(top, -bottom, 0.0))

def bellMatrixNorm(N):
    """
    Return 2 cos(pi / 2N), the operator norm shared by every Bell matrix of dimension N.
    """
    return 2 * math.cos(math.pi / (2 * N))

def _isIrreducible(support):
    """
    The support of a Bell matrix is 2-regular, so its row-column incidence
    graph is a union of cycles. The pattern is irreducible when that graph,
    taken as the digraph of the dilation [[0, X], [X^T, 0]], is strongly
    connected, i.e., forms a single cycle through all 2N rows and columns.
    """
    N = support.shape[0]
    dilation = np.zeros((2 * N, 2 * N), dtype=np.int8)
    dilation[:N, N:] = support
    dilation[N:, :N] = support.T
    count, _labels = connected_components(csr_matrix(dilation), directed=True, connection='strong')
    return count == 1

def validateBellMatrix(M):
    """
    Check that `M` is a Bell matrix and return it as a :py:class:`BellMatrix`.

    :param M: (WeightMatrix or array-like) the candidate matrix
    :return: (BellMatrix) the validated matrix, with its minus count
    :raises BellMatrixError: with ``code`` identifying the failed condition
    """
    arr = M.entries if isinstance(M, WeightMatrix) else asRealMatrix(M)

    rows, cols = arr.shape
    if rows != cols:
        raise BellMatrixError(BellMatrixError.NON_SQUARE, "shape is %dx%d" % (rows, cols))

    if rows < 2:
        raise InvalidInputError("Bell matrices have dimension N >= 2")

    if not np.all(np.isin(arr, (-1.0, 0.0, 1.0))):
        raise BellMatrixError(BellMatrixError.ENTRY_VALUES, "entries must be -1, 0 or 1")

    support = (arr != 0).astype(np.int8)
    rowCounts = support.sum(axis=1)
    colCounts = support.sum(axis=0)
    if np.any(rowCounts != 2) or np.any(colCounts != 2):
        raise BellMatrixError(BellMatrixError.SUPPORT_COUNT,
                              "row counts %s, column counts %s" % (rowCounts.tolist(), colCounts.tolist()))

    if not _isIrreducible(support):
        raise BellMatrixError(BellMatrixError.REDUCIBLE, "support pattern is not a single cycle")

    minusCount = int(np.count_nonzero(arr < 0))
    if minusCount % 2 == 0:
        raise BellMatrixError(BellMatrixError.EVEN_MINUS, "found %d entries equal to -1" % minusCount)

    return BellMatrix(arr, minusCount)

def canonicalZ0(N):
    """
    Return the canonical Bell matrix Z0 of dimension N: tridiagonal with zeros
    on the interior diagonal, every entry +1 except the upper-left -1.

    :param N: (int) dimension, N >= 2
    :return: (BellMatrix) Z0
    """
    if N < 2:
        raise InvalidInputError("Bell matrices have dimension N >= 2, got %s" % N)

    Z = np.zeros((N, N))
    idx = np.arange(N - 1)
    Z[idx, idx + 1] = 1
    Z[idx + 1, idx] = 1
    Z[0, 0] = -1
    Z[N - 1, N - 1] = 1

    return validateBellMatrix(Z)

def signedPermutation(perm, signs):
    """
    Return the signed permutation matrix P with P[i, perm[i]] = signs[i].
    """
    n = len(perm)
    P = np.zeros((n, n), dtype=int)
    P[np.arange(n), perm] = signs
    return P

def generateBellMatrix(N, seed):
    """
    Return a random Bell matrix of dimension N, obtained by applying
    independent random signed row and column permutations to Z0. The
    result depends only on (N, seed).

    :param N: (int) dimension, N >= 2
    :param seed: (int) random seed
    :return: (BellMatrix) the generated matrix
    """
    Z = canonicalZ0(N).entries
    rng = np.random.default_rng(seed)

    rowPerm = rng.permutation(N)
    colPerm = rng.permutation(N)
    rowSigns = rng.choice([-1, 1], size=N)
    colSigns = rng.choice([-1, 1], size=N)

    R = signedPermutation(rowPerm, rowSigns)
    C = signedPermutation(colPerm, colSigns).T
    X = R @ Z @ C

    return validateBellMatrix(X)

def _walkCycle(arr):
    """
    Walk the row-column cycle of a Bell matrix starting at row 0 and taking
    its smaller column first. Returns the visited rows and columns in order.
    """
    N = arr.shape[0]
    rowCols = [np.flatnonzero(arr[i]).tolist() for i in range(N)]
    colRows = [np.flatnonzero(arr[:, j]).tolist() for j in range(N)]

    rows, cols = [0], []
    col = min(rowCols[0])
    for _ in range(N):
        cols.append(col)
        nextRow = [r for r in colRows[col] if r != rows[-1]][0]
        if len(cols) == N:
            break
        rows.append(nextRow)
        col = [c for c in rowCols[nextRow] if c != col][0]

    return rows, cols

def reduceToZ0(X):
    """
    Find signed permutation matrices Pr, Pc with Pr X Pc = Z0.

    The support of X is a single cycle through its rows and columns. Walking
    that cycle in step with the cycle of Z0 aligns the patterns; the signs
    are then propagated edge by edge along the cycle. The closing edge is
    consistent because both matrices have an odd number of -1 entries, so
    the one remaining -1 lands at Z0's upper-left position.

    :param X: (BellMatrix or array-like) a Bell matrix
    :return: (tuple of int arrays) (Pr, Pc)
    :raises InvalidInputError: if X is not a Bell matrix
    """
    if not isinstance(X, BellMatrix):
        X = validateBellMatrix(X)

    arr = X.entries.astype(int)
    N = X.N
    Z = canonicalZ0(N).entries.astype(int)

    xRows, xCols = _walkCycle(arr)
    zRows, zCols = _walkCycle(Z)

    rowMap = np.empty(N, dtype=int)     # Z0 row index -> X row index
    colMap = np.empty(N, dtype=int)
    rowMap[zRows] = xRows
    colMap[zCols] = xCols

    Y = arr[rowMap][:, colMap]

    # Propagate signs along the Z0 cycle: r0, c0, r1, c1, ...
    d1 = np.zeros(N, dtype=int)
    d2 = np.zeros(N, dtype=int)
    d1[zRows[0]] = 1
    for k in range(N):
        r, c = zRows[k], zCols[k]
        d2[c] = Z[r, c] * Y[r, c] * d1[r]
        if k + 1 < N:
            rNext = zRows[k + 1]
            d1[rNext] = Z[rNext, c] * Y[rNext, c] * d2[c]

    Pr = signedPermutation(rowMap, d1)
    Pc = signedPermutation(colMap, d2).T

    if not np.array_equal(Pr @ arr @ Pc, Z):
        raise NumericError("reduceToZ0: failed to reduce matrix to Z0")

    return Pr, Pc

def iterZeroGapCertificates(W, tol=None):
    """
    Generate every signature pair (d1, d2) with d1[0] = +1 such that
    D1 W D2 has all row sums equal to sqrt(N_b/N_a) ||W|| and all column sums
    equal to sqrt(N_a/N_b) ||W||, within a tolerance relative to
    sqrt(N_a N_b) ||W||. Given d1, d2 is fixed by the signs of the column
    sums of D1 W, so only the smaller side's signatures are enumerated.
    """
    W = asWeightMatrix(W)
    tol = getParamAsFloat('Bell.ZeroGapTol') if tol is None else tol

    cap = getParamAsInt('Bell.CertificateCap')
    if W.rows + W.cols > cap:
        raise ResourceLimitError("Zero-gap certificate search needs N_a + N_b <= %d (Bell.CertificateCap), "
                                 "got %d" % (cap, W.rows + W.cols))

    Na, Nb = W.shape
    norm = W.opNorm
    scale = math.sqrt(Na * Nb) * norm

    if norm == 0:
        yield SignaturePair(np.ones(Na, dtype=int), np.ones(Nb, dtype=int))
        return

    transposed = Na > Nb
    mat = W.entries.T if transposed else W.entries
    n, m = mat.shape
    rowTarget = math.sqrt(m / n) * norm
    colTarget = math.sqrt(n / m) * norm
    slack = tol * scale

    total = 1 << (n - 1)
    _logger.debug("zero-gap certificate search over %d signatures", total)

    for start in range(0, total, 4096):
        stop = min(start + 4096, total)
        d1s = cornerSigns(start, stop, n, fixFirst=True).astype(float)
        colSums = d1s @ mat                       # (k, m)
        d2s = np.where(colSums >= 0, 1.0, -1.0)
        signed = colSums * d2s                    # column sums of D1 W D2
        colOk = np.all(np.abs(signed - colTarget) <= slack, axis=1)

        for k in np.flatnonzero(colOk):
            d1, d2 = d1s[k], d2s[k]
            rowSums = d1 * (mat @ d2)
            if np.all(np.abs(rowSums - rowTarget) <= slack):
                d1, d2 = d1.astype(int), d2.astype(int)
                yield SignaturePair(d2, d1) if transposed else SignaturePair(d1, d2)

def zeroGapCertificate(W, tol=None):
    """
    Return the first signature pair certifying that W has zero quantum gap,
    or None if there is none. A certificate exists exactly when
    sqrt(N_a N_b) ||W|| = ||W||*.

    :param W: (WeightMatrix or array-like) the weight matrix
    :param tol: (float) relative tolerance; defaults to ``Bell.ZeroGapTol``
    :return: (SignaturePair or None)
    :raises ResourceLimitError: if N_a + N_b exceeds ``Bell.CertificateCap``
    """
    return next(iterZeroGapCertificates(W, tol=tol), None)

def quantumGap(W, tol=None, certificate=True):
    """
    Compute G(W) = sqrt(N_a N_b) ||W|| - ||W||* and g(W) = G(W) / ||W||.

    :param W: (WeightMatrix or array-like) a non-zero weight matrix
    :param tol: (float) tolerance for the certificate search
    :param certificate: (bool) whether to search for a zero-gap certificate.
       The search is skipped when N_a + N_b exceeds ``Bell.CertificateCap``.
    :return: (GapReport)
    :raises InvalidInputError: if W is zero, since g(W) is then undefined
    """
    W = asWeightMatrix(W)
    if W.isZero():
        raise InvalidInputError("The scaled quantum gap is undefined for W = 0")

    root = math.sqrt(W.rows * W.cols)
    opNorm = W.opNorm
    hv = W.hvNorm

    absoluteGap = root * opNorm - hv
    scaledGap = root - hv / opNorm

    cert = None
    if certificate and W.rows + W.cols <= getParamAsInt('Bell.CertificateCap'):
        cert = zeroGapCertificate(W, tol=tol)

    return GapReport(absoluteGap, scaledGap, opNorm, hv, cert)

def grothendieckConstant(N):
    """
    Return the tabulated upper bound on K_G(N): sqrt(2), 1.5163 and pi/2 for
    N = 2, 3, 4, and Krivine's bound pi / (2 ln(1 + sqrt 2)) for N >= 5.
    """
    if N < 2:
        raise InvalidInputError("K_G(N) is tabulated for N >= 2")
    return GrothendieckTable.get(N, KrivineBound)

def theoremBounds(W):
    """
    Return (thm1, thm2, bellThreshold) for unit-bounded observables:
    thm1 = sqrt(N_a N_b) ||W||, thm2 = K_G(N+) ||W||* with N+ = max(N_a, N_b),
    and the Bell threshold ||W||*. The thm2 value uses tabulated upper bounds
    on K_G and is indicative only.
    """
    W = asWeightMatrix(W)
    thm1 = math.sqrt(W.rows * W.cols) * W.opNorm
    hv = W.hvNorm
    thm2 = grothendieckConstant(max(W.shape)) * hv
    return thm1, thm2, hv

def grothendieckWindow(W):
    """
    Return ||W||* (K_G(N+) - 1), the Bell-violation window allowed by the
    Grothendieck bound.
    """
    W = asWeightMatrix(W)
    return W.hvNorm * (grothendieckConstant(max(W.shape)) - 1)

def randomWeightMatrix(rng, Na, Nb, distribution=UNIFORM):
    if distribution == UNIFORM:
        return rng.uniform(-1.0, 1.0, size=(Na, Nb))
    if distribution == NORMAL:
        return rng.standard_normal(size=(Na, Nb))
    raise InvalidInputError("Unknown distribution '%s'; expected one of %s" % (distribution, DISTRIBUTIONS))

def sampleGapDistribution(Na, Nb, count, seed, distribution=UNIFORM):
    """
    Generate `count` pairs (W, g(W)) for random N_a x N_b matrices whose
    entries are uniform on [-1, 1] or standard normal. The sequence depends
    only on the arguments.

    :return: a generator of (ndarray, float) pairs
    """
    if distribution not in DISTRIBUTIONS:
        raise InvalidInputError("Unknown distribution '%s'; expected one of %s" % (distribution, DISTRIBUTIONS))

    if Na < 2 or Nb < 2:
        raise InvalidInputError("Weight matrices must be at least 2x2")

    if count < 0:
        raise InvalidInputError("count must be non-negative")

    rng = np.random.default_rng(seed)
    root = math.sqrt(Na * Nb)

    for _ in range(count):
        arr = randomWeightMatrix(rng, Na, Nb, distribution)
        W = WeightMatrix(arr)
        yield W.entries, root - W.hvNorm / W.opNorm
