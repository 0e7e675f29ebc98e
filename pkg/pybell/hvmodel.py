'''
.. Hidden-variable simulation: finite mixtures of deterministic local
   strategies, their Bell expectations and correlations, and checks that
   no local model exceeds the Bell threshold of the weight matrix.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import math

import numpy as np

from .config import getParamAsFloat, getParamAsInt
from .constants import LOCAL, BELL_VIOLATING, AT_QUANTUM_BOUND
from .error import InvalidInputError
from .log import getLogger
from .weights import asWeightMatrix, hvBoxNorm, hvNormArgmax, unitBounds, checkBounds

_logger = getLogger(__name__)

NORMALIZATION_TOL = 1e-12
BOX_TOL = 1e-12


class HvStrategy(object):
    """
    A deterministic local strategy: the values assigned to each of Alice's
    and Bob's observables, each within its spectral interval.
    """
    __slots__ = ['aValues', 'bValues']

    def __init__(self, aValues, bValues, aBounds=None, bBounds=None):
        self.aValues = np.array(aValues, dtype=float)
        self.bValues = np.array(bValues, dtype=float)

        if self.aValues.ndim != 1 or self.bValues.ndim != 1:
            raise InvalidInputError("Strategy values must be vectors")

        if not (np.all(np.isfinite(self.aValues)) and np.all(np.isfinite(self.bValues))):
            raise InvalidInputError("Strategy values must be finite")

        aBounds = unitBounds(len(self.aValues)) if aBounds is None else checkBounds(aBounds, len(self.aValues), 'a')
        bBounds = unitBounds(len(self.bValues)) if bBounds is None else checkBounds(bBounds, len(self.bValues), 'b')

        for label, values, bounds in (('a', self.aValues, aBounds), ('b', self.bValues, bBounds)):
            if np.any(values < bounds[:, 0] - BOX_TOL) or np.any(values > bounds[:, 1] + BOX_TOL):
                raise InvalidInputError("Strategy %s-values lie outside their bounds" % label)

    def expectation(self, W):
        return float(self.aValues @ W @ self.bValues)

    def asDict(self):
        return {'a': self.aValues.tolist(), 'b': self.bValues.tolist()}


class HvModel(object):
    """
    A finite hidden-variable model: strategies mixed with probability `weights`.
    """
    def __init__(self, strategies, weights=None):
        strategies = list(strategies)
        if not strategies:
            raise InvalidInputError("An HvModel needs at least one strategy")

        shapes = {(len(s.aValues), len(s.bValues)) for s in strategies}
        if len(shapes) > 1:
            raise InvalidInputError("Strategies in a model must have matching dimensions, got %s" % sorted(shapes))

        if weights is None:
            weights = np.full(len(strategies), 1.0 / len(strategies))

        weights = np.array(weights, dtype=float)
        if weights.shape != (len(strategies),):
            raise InvalidInputError("Need one weight per strategy")

        if np.any(weights < 0) or abs(weights.sum() - 1.0) > NORMALIZATION_TOL:
            raise InvalidInputError("Weights must be non-negative and sum to 1, got sum %.17g" % weights.sum())

        self.strategies = strategies
        self.weights = weights

    @property
    def shape(self):
        s = self.strategies[0]
        return len(s.aValues), len(s.bValues)

    def asDict(self):
        return {'weights': self.weights.tolist(),
                'strategies': [s.asDict() for s in self.strategies]}


def hvExpectation(W, model):
    """
    Return the Bell expectation sum over strategies of weight * (a, W b).

    :raises InvalidInputError: if the model's dimensions don't match W
    """
    W = asWeightMatrix(W)
    if model.shape != W.shape:
        raise InvalidInputError("Model dimensions %s don't match weight matrix %s" % (model.shape, W.shape))

    values = [s.expectation(W.entries) for s in model.strategies]
    return float(np.dot(model.weights, values))

def hvCorrelation(model):
    """
    Return the correlation matrix c_jk = sum over strategies of weight * a_j * b_k.
    """
    A = np.array([s.aValues for s in model.strategies])
    B = np.array([s.bValues for s in model.strategies])
    return np.einsum('l,lj,lk->jk', model.weights, A, B)

def _boxes(shape, bounds):
    Na, Nb = shape
    if bounds is None:
        return unitBounds(Na), unitBounds(Nb)

    aBounds, bBounds = bounds
    return checkBounds(aBounds, Na, 'a'), checkBounds(bBounds, Nb, 'b')

def _randomStrategy(rng, aBounds, bBounds):
    def sample(bounds):
        lo, hi = bounds[:, 0], bounds[:, 1]
        if rng.random() < 0.5:
            return np.where(rng.random(len(lo)) < 0.5, lo, hi)
        return rng.uniform(lo, hi)

    return HvStrategy(sample(aBounds), sample(bBounds), aBounds, bBounds)

def randomHvModels(shape, bounds=None, count=0, seed=0, maxStrategies=None):
    """
    Generate `count` random HvModels for weight matrices of the given shape.
    Each model mixes between 1 and `maxStrategies` strategies, each placed
    either at a box corner or at a uniform interior point, with weights drawn
    uniformly from the simplex. The sequence depends only on `seed`.

    :param shape: (tuple) (N_a, N_b)
    :param bounds: (tuple) (aBounds, bBounds); unit boxes if None
    :param count: (int) number of models
    :param seed: (int) seed for the random stream
    :param maxStrategies: (int) defaults to ``HV.MaxStrategies``
    :return: a generator of HvModel
    """
    if count < 0:
        raise InvalidInputError("count must be non-negative")

    aBounds, bBounds = _boxes(shape, bounds)
    maxStrategies = maxStrategies or getParamAsInt('HV.MaxStrategies')
    rng = np.random.default_rng(seed)

    for _ in range(count):
        n = int(rng.integers(1, maxStrategies + 1))
        strategies = [_randomStrategy(rng, aBounds, bBounds) for _ in range(n)]
        weights = rng.dirichlet(np.ones(n))
        weights /= weights.sum()
        yield HvModel(strategies, weights)

def maximizingStrategy(W):
    """
    Return the single-strategy model whose expectation equals ||W||*.
    """
    _value, a, b = hvNormArgmax(W)
    return HvModel([HvStrategy(a, b)])

def classify(value, W, bounds=None, tol=None):
    """
    Classify a Bell expectation `value` for weight matrix `W`.

    :return: AT_QUANTUM_BOUND if |value| is within `tol` of sqrt(N_a N_b)||W||,
        BELL_VIOLATING if it exceeds the box norm ||W||_{A,B} by more than
        `tol`, otherwise LOCAL.
    """
    W = asWeightMatrix(W)
    tol = getParamAsFloat('HV.ClassifyTol') if tol is None else tol
    aBounds, bBounds = _boxes(W.shape, bounds)

    magnitude = abs(value)
    thm1 = math.sqrt(W.rows * W.cols) * W.opNorm

    if abs(magnitude - thm1) <= tol:
        return AT_QUANTUM_BOUND

    if magnitude > hvBoxNorm(W, aBounds, bBounds) + tol:
        return BELL_VIOLATING

    return LOCAL

def verifyHvBound(W, bounds=None, count=10000, seed=0, tol=None):
    """
    Check that no random local model exceeds ||W||_{A,B}.

    :return: (dict) the threshold, the largest |expectation| seen, the number
        of models checked and the number of violations
    """
    W = asWeightMatrix(W)
    tol = getParamAsFloat('HV.Tolerance') if tol is None else tol
    aBounds, bBounds = _boxes(W.shape, bounds)
    threshold = hvBoxNorm(W, aBounds, bBounds)

    maxValue = 0.0
    violations = 0
    for model in randomHvModels(W.shape, (aBounds, bBounds), count, seed):
        value = abs(hvExpectation(W, model))
        maxValue = max(maxValue, value)
        if value > threshold + tol:
            violations += 1

    _logger.info("verifyHvBound: %d models, max |expectation| %.12g, threshold %.12g, %d violations",
                 count, maxValue, threshold, violations)

    return {'threshold': threshold, 'maxExpectation': maxValue,
            'count': count, 'violations': violations, 'seed': seed}
