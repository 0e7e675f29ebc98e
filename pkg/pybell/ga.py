'''
.. Genetic-algorithm search for EPR configurations maximizing the norm of
   the Bell operator, with optional structural constraints. The best genome
   is refined by a seesaw of alternating best responses and then by
   deterministic hill climbing.

   A genome holds, for each of Alice's N_a observables and then each of
   Bob's N_b, n diagonal values followed by the real and then the imaginary
   parts of the n(n-1)/2 upper-triangle entries; all genes lie in [-1, 1].

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from concurrent.futures import ThreadPoolExecutor
import math

import numpy as np
from scipy.linalg import eigh, eigvalsh

from .config import getParamAsBoolean, getParamAsFloat, getParamAsInt
from .error import InvalidInputError, NumericError, ResourceLimitError
from .log import getLogger
from .quantum import (EprConfiguration, EprDims, assembleStacks, assembleBellOperator, bellOperatorNorm,
                      spectralDecomposition, correlationReports, extremeCount, normMeans,
                      quantumLocalityCheck, cliffordDeviation, dichotomyDeviation)
from .utils import getThreads
from .weights import asWeightMatrix

_logger = getLogger(__name__)

IMPROVEMENT_TOL = 1e-12     # smaller gains don't reset the stall counter
BLEND_ALPHA     = 0.25      # blend crossover samples u in [-alpha, 1 + alpha]
MIN_POLISH_STEP = 1e-12
PLATEAU_TOL     = 1e-6      # relative distance from ||W||* treated as a classical plateau
SEESAW_TOL      = 1e-13     # relative gain per seesaw iteration below which it stops
SIGN_TOL        = 1e-10     # relative size below which an eigenvalue counts as zero
REFERENCE_SPLIT = 1e-8      # keeps the eigenvalues of a constraint reference distinct

# Offsets distinguishing random streams that share a seed
_POLISH_STREAM = 1 << 31
_SEESAW_STREAM = _POLISH_STREAM + 1
_RESEED_STREAM = _POLISH_STREAM + 2   # plus the reseed number


def genomeLength(dims):
    return dims.Na * dims.na ** 2 + dims.Nb * dims.nb ** 2

def asDims(dims):
    if isinstance(dims, EprDims):
        return dims

    try:
        dims = EprDims(*[int(d) for d in dims])
    except (TypeError, ValueError):
        raise InvalidInputError("dims must be four integers (N_a, N_b, n_a, n_b), got %s" % (dims,))

    if min(dims) < 2:
        raise InvalidInputError("All of (N_a, N_b, n_a, n_b) must be >= 2, got %s" % (tuple(dims),))

    return dims

def _decodeSide(genes, count, n):
    iu = np.triu_indices(n, 1)
    m = len(iu[0])
    ops = np.zeros((count, n, n), dtype=complex)

    for j in range(count):
        g = genes[j * n * n:(j + 1) * n * n]
        A = np.diag(g[:n]).astype(complex)
        A[iu] = g[n:n + m] + 1j * g[n + m:n + 2 * m]
        A[(iu[1], iu[0])] = np.conj(A[iu])

        norm = np.abs(eigvalsh(A)).max()
        if norm > 1:
            A /= norm

        ops[j] = A

    return ops

def _decodeStacks(genome, dims):
    genome = np.asarray(genome, dtype=float)
    expected = genomeLength(dims)
    if genome.shape != (expected,):
        raise InvalidInputError("Genome has length %d, expected %d for dims %s"
                                % (genome.size, expected, tuple(dims)))

    split = dims.Na * dims.na ** 2
    aliceStack = _decodeSide(genome[:split], dims.Na, dims.na)
    bobStack = _decodeSide(genome[split:], dims.Nb, dims.nb)
    return aliceStack, bobStack

def decode(genome, dims):
    """
    Build the configuration described by `genome`. Each observable is
    Hermitian by construction; one with operator norm above 1 is scaled
    back onto the unit ball.

    :param genome: (array-like) genes in [-1, 1]
    :param dims: (EprDims or 4-tuple) (N_a, N_b, n_a, n_b)
    :return: (EprConfiguration)
    :raises InvalidInputError: if the genome length doesn't match dims
    """
    dims = asDims(dims)
    aliceStack, bobStack = _decodeStacks(genome, dims)
    return EprConfiguration(list(aliceStack), list(bobStack))

def _encodeStack(stack):
    iu = np.triu_indices(stack.shape[1], 1)
    genes = []
    for A in stack:
        genes.extend([A.diagonal().real, A[iu].real, A[iu].imag])
    return np.concatenate(genes)

def encode(cfg):
    """
    Return the genome whose decoding is `cfg`.
    """
    return np.concatenate([_encodeStack(cfg.aliceStack), _encodeStack(cfg.bobStack)])


class SearchConstraint(object):
    """
    A structural constraint applied to decoded configurations:

    * ``none``: no constraint
    * ``tie``: observable ``index`` on ``side`` is replaced by a function of
      observable ``reference``: it keeps the reference's eigenbasis and takes
      its eigenvalues from its own diagonal
    * ``commuting``: every observable on ``side`` ('a', 'b' or 'both') is
      expressed in the eigenbasis of that side's first observable

    Indices are 0-based; the string form ("tie:b:3:2") is 1-based.
    """
    NONE      = 'none'
    TIE       = 'tie'
    COMMUTING = 'commuting'

    def __init__(self, kind=NONE, side=None, index=None, reference=None):
        self.kind = kind
        self.side = side
        self.index = index
        self.reference = reference

        if kind == self.TIE:
            if side not in ('a', 'b') or index is None or reference is None or index == reference:
                raise InvalidInputError("tie constraint needs a side (a|b) and two distinct indices")
            if index < 0 or reference < 0:
                raise InvalidInputError("tie constraint indices must be positive")

        elif kind == self.COMMUTING:
            if side not in ('a', 'b', 'both'):
                raise InvalidInputError("commuting constraint side must be a, b or both, got %s" % side)

        elif kind != self.NONE:
            raise InvalidInputError("Unknown constraint kind '%s'" % kind)

    @classmethod
    def parse(cls, text):
        """
        Parse "none", "tie:SIDE:I:J" (observable I becomes a function of J,
        both 1-based), "commuting:a", "commuting:b" or "commuting:both".
        The names "commuting_a", "commuting_b" and "commuting_both" are
        also accepted.
        """
        text = (text or cls.NONE).strip().lower()
        aliases = {'commuting_a': 'commuting:a', 'commuting_b': 'commuting:b',
                   'commuting_both': 'commuting:both'}
        parts = aliases.get(text, text).split(':')

        kind = parts[0]
        if kind == cls.NONE and len(parts) == 1:
            return cls()

        if kind == cls.COMMUTING and len(parts) == 2:
            return cls(cls.COMMUTING, side=parts[1])

        if kind == cls.TIE and len(parts) == 4:
            try:
                index, reference = int(parts[2]) - 1, int(parts[3]) - 1
            except ValueError:
                raise InvalidInputError("Bad constraint indices in '%s'" % text)
            return cls(cls.TIE, side=parts[1], index=index, reference=reference)

        raise InvalidInputError("Unrecognized constraint '%s'" % text)

    def validate(self, dims):
        if self.kind == self.TIE:
            count = dims.Na if self.side == 'a' else dims.Nb
            if max(self.index, self.reference) >= count:
                raise InvalidInputError("Constraint %s refers to an observable beyond N = %d" % (self, count))

    def sharedBasis(self, side, count):
        """
        Return (reference, tied) for `side`: the 0-based index of the
        observable whose eigenbasis is shared (None if there is none) and
        the indices of the observables expressed in that basis.
        """
        if self.kind == self.TIE and self.side == side:
            return self.reference, (self.index,)

        if self.kind == self.COMMUTING and self.side in (side, 'both'):
            return 0, tuple(range(1, count))

        return None, ()

    def __str__(self):
        if self.kind == self.TIE:
            return 'tie:%s:%d:%d' % (self.side, self.index + 1, self.reference + 1)
        if self.kind == self.COMMUTING:
            return 'commuting:%s' % self.side
        return self.NONE

    def __eq__(self, other):
        return isinstance(other, SearchConstraint) and str(self) == str(other)


def _inEigenbasis(reference, ops):
    """
    Replace each operator in `ops` by V diag(d) V^+, where V is the eigenbasis
    of `reference` and d is the operator's own (real) diagonal clipped to [-1, 1].
    """
    _values, V = eigh(reference)
    out = np.empty_like(ops)
    for i, op in enumerate(ops):
        d = np.clip(op.diagonal().real, -1.0, 1.0)
        out[i] = (V * d) @ V.conj().T
    return out

def _constrainStacks(aliceStack, bobStack, constraint):
    if constraint is None or constraint.kind == SearchConstraint.NONE:
        return aliceStack, bobStack

    aliceStack = aliceStack.copy()
    bobStack = bobStack.copy()

    if constraint.kind == SearchConstraint.TIE:
        stack = aliceStack if constraint.side == 'a' else bobStack
        i, j = constraint.index, constraint.reference
        stack[i] = _inEigenbasis(stack[j], stack[i:i + 1])[0]

    elif constraint.kind == SearchConstraint.COMMUTING:
        sides = ('a', 'b') if constraint.side == 'both' else (constraint.side,)
        for side in sides:
            stack = aliceStack if side == 'a' else bobStack
            stack[1:] = _inEigenbasis(stack[0], stack[1:])

    return aliceStack, bobStack

def applyConstraint(cfg, constraint):
    """
    Return `cfg` modified to satisfy `constraint`. Constrained observables
    share an eigenbasis with their reference, so they commute with it.
    """
    if constraint is None or constraint.kind == SearchConstraint.NONE:
        return cfg

    constraint.validate(cfg.dims)
    aliceStack, bobStack = _constrainStacks(cfg.aliceStack, cfg.bobStack, constraint)
    return EprConfiguration(list(aliceStack), list(bobStack))

def _fitness(genome, Warr, dims, constraint):
    aliceStack, bobStack = _decodeStacks(genome, dims)
    aliceStack, bobStack = _constrainStacks(aliceStack, bobStack, constraint)
    S = assembleStacks(Warr, aliceStack, bobStack)
    return float(np.abs(eigvalsh(S)).max())

def fitness(genome, W, dims, constraint=None):
    """
    Return the Bell-operator norm of the constrained configuration encoded
    by `genome`.
    """
    dims = asDims(dims)
    W = asWeightMatrix(W)
    _checkWeights(W, dims)
    if constraint is not None:
        constraint.validate(dims)
    return _fitness(genome, W.entries, dims, constraint)


class GaConfig(object):
    """
    Genetic-algorithm settings. Unspecified values are read from the
    ``GA.*`` configuration variables.
    """
    __slots__ = ['population', 'generations', 'tournamentSize', 'crossoverRate',
                 'mutationRate', 'mutationSigma', 'elitism', 'seed', 'stallGenerations',
                 'reseeds', 'polish', 'polishIterations', 'polishStep',
                 'seesawStarts', 'seesawIterations']

    _Types = {'polish': bool, 'crossoverRate': float, 'mutationRate': float,
              'mutationSigma': float, 'polishStep': float}

    def __init__(self, section=None, **kwargs):
        unknown = set(kwargs) - set(self.__slots__)
        if unknown:
            raise InvalidInputError("Unknown GA settings: %s" % sorted(unknown))

        for name in self.__slots__:
            value = kwargs.get(name)
            if value is None:
                value = self._fromConfig(name, section)
            setattr(self, name, self._Types.get(name, int)(value))

        self.validate()

    @classmethod
    def _fromConfig(cls, name, section):
        varName = 'GA.' + name[0].upper() + name[1:]
        kind = cls._Types.get(name, int)
        if kind is bool:
            return getParamAsBoolean(varName, section=section)
        if kind is float:
            return getParamAsFloat(varName, section=section)
        return getParamAsInt(varName, section=section)

    def validate(self):
        for name in ('crossoverRate', 'mutationRate'):
            value = getattr(self, name)
            if not 0 <= value <= 1:
                raise InvalidInputError("%s must be in [0, 1], got %s" % (name, value))

        if self.population < 2:
            raise InvalidInputError("population must be at least 2")

        if not 0 <= self.elitism < self.population:
            raise InvalidInputError("elitism must be in [0, population)")

        if self.tournamentSize < 1:
            raise InvalidInputError("tournamentSize must be at least 1")

        if self.generations < 0 or self.stallGenerations < 1:
            raise InvalidInputError("generations must be non-negative and stallGenerations positive")

        for name in ('reseeds', 'polishIterations', 'seesawStarts', 'seesawIterations'):
            if getattr(self, name) < 0:
                raise InvalidInputError("%s must be non-negative" % name)

        if self.mutationSigma < 0 or self.polishStep <= 0:
            raise InvalidInputError("mutationSigma must be >= 0 and polishStep > 0")

        if self.seed < 0:
            raise InvalidInputError("seed must be non-negative")

    def asDict(self):
        return {name: getattr(self, name) for name in self.__slots__}


class SearchResult(object):
    """
    The outcome of :py:func:`evolve`: the best configuration and its fitness,
    the per-generation trace of best-so-far fitness, the spectral data of the
    best Bell operator, correlation reports for its largest-|lambda|
    eigenstates, and deviations from the quantum bound and the sum rule.
    """
    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    def asDict(self):
        return {
            'dims'              : list(self.dims),
            'constraint'        : str(self.constraint),
            'bestFitness'       : self.bestFitness,
            'bestGenome'        : self.bestGenome.tolist(),
            'bestConfig'        : self.bestConfig.asDict(),
            'fitnessTrace'      : list(self.fitnessTrace),
            'generationsRun'    : self.generationsRun,
            'thm1'              : self.thm1,
            'thm1Deviation'     : self.thm1Deviation,
            'sumRuleDeviation'  : self.sumRuleDeviation,
            'spectral'          : self.spectral.asDict(),
            'reports'           : [r.asDict() for r in self.reports],
            'extremeCount'      : self.extremeCount,
            'stateCount'        : self.stateCount,
            'dichotomyDeviation': self.dichotomyDeviation,
            'cliffordDeviation' : self.cliffordDeviation,
            'locality'          : list(self.locality),
        }


def _checkWeights(W, dims):
    if W.shape != (dims.Na, dims.Nb):
        raise InvalidInputError("Weight matrix shape %s doesn't match (N_a, N_b) = (%d, %d)"
                                % (W.shape, dims.Na, dims.Nb))

def _stream(seed, generation, index):
    return np.random.default_rng([seed, generation, index])

def _tournament(rng, scores, size):
    entrants = rng.integers(0, len(scores), size=size)
    return entrants[np.argmax(scores[entrants])]

def _crossover(p1, p2, rng):
    """
    Uniform crossover on half of the genes (chosen at random) and blend
    crossover on the rest.
    """
    n = len(p1)
    pick = rng.random(n) < 0.5
    uniform = np.where(rng.random(n) < 0.5, p1, p2)
    u = rng.uniform(-BLEND_ALPHA, 1 + BLEND_ALPHA, size=n)
    blend = u * p1 + (1 - u) * p2
    return np.where(pick, uniform, blend)

def _breed(population, scores, config, generation, index):
    rng = _stream(config.seed, generation, index)
    p1 = population[_tournament(rng, scores, config.tournamentSize)]
    p2 = population[_tournament(rng, scores, config.tournamentSize)]

    child = _crossover(p1, p2, rng) if rng.random() < config.crossoverRate else p1.copy()

    mask = rng.random(len(child)) < config.mutationRate
    child[mask] += rng.normal(0.0, config.mutationSigma, size=int(mask.sum()))
    return np.clip(child, -1.0, 1.0)

class _Evaluator(object):
    """
    Evaluates fitness for lists of genomes, optionally on a thread pool.
    Results are returned in input order, so they don't depend on the
    number of threads.
    """
    def __init__(self, Warr, dims, constraint, threads):
        self.Warr = Warr
        self.dims = dims
        self.constraint = constraint
        self.pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None

    def __call__(self, genome):
        return _fitness(genome, self.Warr, self.dims, self.constraint)

    def evaluate(self, genomes, generation):
        values = list(self.pool.map(self, genomes)) if self.pool else [self(g) for g in genomes]
        scores = np.array(values)

        bad = np.flatnonzero(~np.isfinite(scores))
        if len(bad):
            raise NumericError("Non-finite fitness for genome %d in generation %d" % (bad[0], generation))

        return scores

    def close(self):
        if self.pool:
            self.pool.shutdown()

def _polish(genome, score, evaluator, config):
    """
    Coordinate hill climbing: each sweep tries +/- step on every gene and
    one random direction, accepting any improvement; the step is halved
    after a sweep without one.
    """
    rng = _stream(config.seed, _POLISH_STREAM, 0)
    step = config.polishStep
    n = len(genome)

    for sweep in range(config.polishIterations):
        improved = False

        for c in range(n):
            for sign in (1.0, -1.0):
                trial = genome.copy()
                trial[c] = np.clip(trial[c] + sign * step, -1.0, 1.0)
                value = evaluator(trial)
                if value > score:
                    genome, score, improved = trial, value, True
                    break

        direction = rng.normal(size=n)
        direction *= step / np.linalg.norm(direction)
        trial = np.clip(genome + direction, -1.0, 1.0)
        value = evaluator(trial)
        if value > score:
            genome, score, improved = trial, value, True

        if not improved:
            step *= 0.5
            if step < MIN_POLISH_STEP:
                break

        _logger.debug("polish sweep %d: fitness %.15g, step %.3g", sweep, score, step)

    return genome, score

def _signOperator(M, split=False):
    """
    Return the maximizer of tr(A M) over Hermitian A with ||A|| <= 1: the
    eigenvectors of M with eigenvalues sign(lambda), 0 on null directions.
    With `split`, the eigenvalues are made distinct so the result determines
    its eigenbasis.
    """
    values, V = eigh(M)
    scale = np.abs(values).max()
    s = np.where(np.abs(values) <= SIGN_TOL * scale, 0.0, np.sign(values))
    if not split and (np.all(s == 1.0) or np.all(s == -1.0)):
        return s[0] * np.eye(len(s), dtype=complex)
    if split:
        s = np.where(s == 0, 1.0, s) * (1.0 - REFERENCE_SPLIT * np.arange(len(s)))
    return (V * s) @ V.conj().T

def _seesawStep(genome, side, evaluator, moveReference):
    """
    Return `genome` with the observables on `side` replaced by the best
    response to the other side and the top eigenvector psi of S. Tied
    observables get the signs of their coefficient matrices in the
    reference's eigenbasis; the reference itself is kept unless
    `moveReference` is set.
    """
    dims, constraint = evaluator.dims, evaluator.constraint
    aliceStack, bobStack = _constrainStacks(*_decodeStacks(genome, dims), constraint)
    values, vectors = eigh(assembleStacks(evaluator.Warr, aliceStack, bobStack))

    # raise <psi|S|psi>, or <psi|-S|psi> when the negative end dominates
    if -values[0] > values[-1]:
        sign, psi = -1.0, vectors[:, 0]
    else:
        sign, psi = 1.0, vectors[:, -1]

    J = psi.reshape(dims.na, dims.nb)
    W = sign * evaluator.Warr

    # <psi|S|psi> = sum_j tr(A_j M_j) = sum_k tr(B_k M_k)
    if side == 'a':
        X = np.einsum('jk,kxy->jxy', W, bobStack)
        M = J @ X.transpose(0, 2, 1) @ J.conj().T
        stack = aliceStack
    else:
        Y = np.einsum('jk,jxy->kxy', W, aliceStack)
        M = (J.conj().T @ Y @ J).transpose(0, 2, 1)
        stack = bobStack

    M = 0.5 * (M + M.conj().transpose(0, 2, 1))
    raw = np.array([_signOperator(m) for m in M])

    reference, tied = (constraint.sharedBasis(side, len(M)) if constraint else (None, ()))
    if reference is not None:
        raw[reference] = _signOperator(M[reference], split=True) if moveReference else stack[reference]
        _values, V = eigh(raw[reference])
        for i in tied:
            d = np.einsum('xm,xy,ym->m', V.conj(), M[i], V).real
            raw[i] = np.diag(np.where(d >= 0, 1.0, -1.0)).astype(complex)

    trial = genome.copy()
    split = dims.Na * dims.na ** 2
    genes = np.clip(_encodeStack(raw), -1.0, 1.0)
    if side == 'a':
        trial[:split] = genes
    else:
        trial[split:] = genes
    return trial

def _seesaw(genome, score, evaluator, iterations):
    """
    Alternate best responses of Alice's and Bob's observables. For a fixed
    state and other side, <psi|S|psi> is linear in each observable, so a
    step never lowers ||S||; a step is kept only if the recomputed fitness
    confirms it.
    """
    constraint = evaluator.constraint
    for _iteration in range(iterations):
        start = score

        for side in ('a', 'b'):
            reference, _tied = (constraint.sharedBasis(side, 0) if constraint else (None, ()))
            for moveReference in ((True, False) if reference is not None else (True,)):
                trial = _seesawStep(genome, side, evaluator, moveReference)
                value = evaluator(trial)
                if value >= score:
                    genome, score = trial, value
                    break

        if score - start <= SEESAW_TOL * max(1.0, score):
            break

    return genome, score

def _refine(genome, score, evaluator, config, length):
    """
    Run the seesaw from `genome` and from ``seesawStarts`` random genomes,
    returning the best result. Random starts escape the commuting
    (classical) configurations where the GA population can collapse.
    """
    if config.seesawIterations == 0:
        return genome, score

    starts = [genome] + [_stream(config.seed, _SEESAW_STREAM, i).uniform(-1.0, 1.0, size=length)
                         for i in range(config.seesawStarts)]

    for i, start in enumerate(starts):
        g, s = _seesaw(start, evaluator(start), evaluator, config.seesawIterations)
        _logger.debug("seesaw start %d: fitness %.15g", i, s)
        if s > score:
            genome, score = g, s

    return genome, score

def _plateau(W, constraint):
    """
    Return the fitness at or below which a stalled search sits at the
    hidden-variable norm, or None when reseeding can't help.
    """
    if constraint.kind == SearchConstraint.COMMUTING:
        return None     # commuting observables never exceed ||W||*

    try:
        hv = W.hvNorm
    except ResourceLimitError:
        return None

    return hv + PLATEAU_TOL * max(1.0, hv)

def evolve(W, dims, config=None, constraint=None, threads=None):
    """
    Search for the configuration maximizing ||S_W(A, B)||.

    Each generation keeps the ``elitism`` best genomes and breeds the rest by
    tournament selection, uniform/blend crossover and Gaussian mutation
    clipped to [-1, 1]. Every child's randomness comes from a stream seeded
    by (seed, generation, index), so results don't depend on `threads`. The
    search stops after ``generations`` or after ``stallGenerations`` without
    an improvement above 1e-12. A search stalled at the hidden-variable norm
    ||W||* first replaces its non-elite genomes with fresh random ones, up to
    ``reseeds`` times. With ``polish``, the best genome is then refined by
    the seesaw and by hill climbing.

    :param W: (WeightMatrix or array-like) N_a x N_b weights
    :param dims: (EprDims or 4-tuple) (N_a, N_b, n_a, n_b)
    :param config: (GaConfig) settings; defaults to the ``GA.*`` variables
    :param constraint: (SearchConstraint) optional structural constraint
    :param threads: (int) worker threads; defaults to ``Bell.Threads``
    :return: (SearchResult)
    :raises ResourceLimitError: if n_a * n_b exceeds ``GA.MaxHilbertDim``
    :raises NumericError: if a fitness evaluation is not finite
    """
    dims = asDims(dims)
    W = asWeightMatrix(W)
    _checkWeights(W, dims)

    config = config or GaConfig()
    constraint = constraint or SearchConstraint()
    constraint.validate(dims)

    maxDim = getParamAsInt('GA.MaxHilbertDim')
    if dims.na * dims.nb > maxDim:
        raise ResourceLimitError("n_a * n_b = %d exceeds GA.MaxHilbertDim = %d"
                                 % (dims.na * dims.nb, maxDim))

    threads = getThreads(threads)
    logInterval = max(1, getParamAsInt('GA.LogInterval'))
    length = genomeLength(dims)
    plateau = _plateau(W, constraint) if config.reseeds else None

    _logger.info("evolve: dims %s, constraint %s, genome length %d, population %d",
                 tuple(dims), constraint, length, config.population)

    evaluator = _Evaluator(W.entries, dims, constraint, threads)
    try:
        population = np.array([_stream(config.seed, 0, i).uniform(-1.0, 1.0, size=length)
                                for i in range(config.population)])
        scores = evaluator.evaluate(population, 0)

        best = int(np.argmax(scores))
        bestGenome, bestScore = population[best].copy(), float(scores[best])
        trace = [bestScore]
        stall = 0
        reseeds = 0
        generation = 0

        for generation in range(1, config.generations + 1):
            order = np.argsort(-scores, kind='stable')
            elites = population[order[:config.elitism]]
            children = [_breed(population, scores, config, generation, i)
                        for i in range(config.elitism, config.population)]

            population = np.vstack([elites] + children) if children else elites.copy()
            scores = evaluator.evaluate(population, generation)

            best = int(np.argmax(scores))
            if scores[best] > bestScore + IMPROVEMENT_TOL:
                stall = 0
            else:
                stall += 1

            if scores[best] > bestScore:
                bestGenome, bestScore = population[best].copy(), float(scores[best])

            trace.append(bestScore)

            if generation % logInterval == 0:
                _logger.info("generation %d: best fitness %.12g", generation, bestScore)

            if stall < config.stallGenerations:
                continue

            if plateau is not None and bestScore <= plateau and reseeds < config.reseeds:
                reseeds += 1
                _logger.info("generation %d: stalled at ||W||* = %.12g, reseeding (%d of %d)",
                             generation, W.hvNorm, reseeds, config.reseeds)
                order = np.argsort(-scores, kind='stable')
                fresh = [_stream(config.seed, _RESEED_STREAM + reseeds, i).uniform(-1.0, 1.0, size=length)
                         for i in range(config.elitism, config.population)]
                population = np.vstack([population[order[:config.elitism]]] + fresh)
                scores = evaluator.evaluate(population, generation)
                stall = 0
                continue

            _logger.info("stopping at generation %d after %d generations without improvement",
                         generation, stall)
            break

        if config.polish:
            before = bestScore
            bestGenome, bestScore = _refine(bestGenome, bestScore, evaluator, config, length)
            _logger.info("seesaw: fitness %.15g -> %.15g", before, bestScore)

            before = bestScore
            bestGenome, bestScore = _polish(bestGenome, bestScore, evaluator, config)
            _logger.info("polish: fitness %.15g -> %.15g", before, bestScore)
    finally:
        evaluator.close()

    return _analyze(W, dims, constraint, bestGenome, trace, generation)

def _analyze(W, dims, constraint, genome, trace, generationsRun):
    cfg = applyConstraint(decode(genome, dims), constraint)
    S = assembleBellOperator(W, cfg)
    spectral = spectralDecomposition(S)
    bestFitness = bellOperatorNorm(S)

    reports = correlationReports(W, cfg, spectral)
    Ma, Mb = normMeans(cfg)
    root = math.sqrt(dims.Na * dims.Nb)
    thm1 = root * W.opNorm

    top = reports[0]
    sumRuleDeviation = root * Ma * Mb - top.traceNorm

    dichotomy = max(dichotomyDeviation(cfg.alice), dichotomyDeviation(cfg.bob))
    if dims.na == 2 and dims.nb == 2 and dichotomy > 5e-3:
        _logger.warning("observables don't square to the identity (deviation %.3g)", dichotomy)

    return SearchResult(
        W=W, dims=dims, constraint=constraint,
        bestConfig=cfg, bestGenome=genome, bestFitness=bestFitness,
        fitnessTrace=trace, generationsRun=generationsRun,
        spectral=spectral, reports=reports,
        thm1=thm1, thm1Deviation=thm1 - bestFitness, sumRuleDeviation=sumRuleDeviation,
        extremeCount=extremeCount(W, cfg, spectral), stateCount=len(spectral.eigenvalues),
        dichotomyDeviation=dichotomy,
        cliffordDeviation=max(cliffordDeviation(cfg.alice), cliffordDeviation(cfg.bob)),
        locality=quantumLocalityCheck(cfg))

def analyzeGenome(W, dims, genome, constraint=None):
    """
    Return the SearchResult analytics for a given genome, as if a search had
    found it. Used to re-check stored results.
    """
    dims = asDims(dims)
    W = asWeightMatrix(W)
    _checkWeights(W, dims)
    constraint = constraint or SearchConstraint()
    constraint.validate(dims)
    genome = np.asarray(genome, dtype=float)
    return _analyze(W, dims, constraint, genome, [], 0)
