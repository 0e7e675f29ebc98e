import math
import os
import shutil
import tempfile
import unittest
from unittest import TestCase

import numpy as np

from pybell.config import getConfig, setSection, DEFAULT_SECTION
from pybell.constants import W0, X3, SigmaX, SigmaZ, Identity2
from pybell.error import InvalidInputError, InconsistencyError, UnsupportedError
from pybell.quantum import (HermitianOperator, EprConfiguration, assembleBellOperator,
                            bellOperatorNorm, spectralDecomposition, correlationMatrix,
                            analyzeCorrelation, rigidityDeviation, rigidityConstant,
                            entanglementEntropy, normMeans, quantumBound, quantumLocalityCheck,
                            cliffordDeviation, dichotomyDeviation, randomUnitary, conjugateLocal,
                            correlationReports, bellMatrixExtreme)
from pybell.weights import canonicalZ0, generateBellMatrix, bellMatrixNorm, hvBoxNorm, unitBounds

_home = None

def setUpModule():
    global _home
    _home = tempfile.mkdtemp()
    os.environ['PYBELL_HOME'] = _home
    setSection(DEFAULT_SECTION)
    getConfig(reload=True)

def tearDownModule():
    shutil.rmtree(_home, ignore_errors=True)

ROOT2 = math.sqrt(2)

def chshConfig():
    alice = [SigmaZ, SigmaX]
    bob = [(SigmaZ + SigmaX) / ROOT2, (SigmaZ - SigmaX) / ROOT2]
    return EprConfiguration(alice, bob)

def randomObservable(rng, n):
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    H = (X + X.conj().T) / 2
    return H * (rng.uniform(0.5, 1.0) / np.abs(np.linalg.eigvalsh(H)).max())

def randomState(rng, dim):
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return psi / np.linalg.norm(psi)

def commutingFamily(rng, n, count, seed):
    U = randomUnitary(n, seed)
    return [U @ np.diag(rng.uniform(-1, 1, size=n)) @ U.conj().T for _ in range(count)]


class TestOperators(TestCase):
    def test_hermitian(self):
        with self.assertRaises(InvalidInputError):
            HermitianOperator([[0, 1], [0, 0]])

        with self.assertRaises(InvalidInputError):
            HermitianOperator([[1.0]])

        self.assertAlmostEqual(HermitianOperator(2 * SigmaZ).norm, 2.0, places=15)

    def test_unitBound(self):
        with self.assertRaises(InvalidInputError):
            EprConfiguration([2 * SigmaZ, SigmaX], [SigmaZ, SigmaX])

    def test_mixedDimensions(self):
        with self.assertRaises(InvalidInputError):
            EprConfiguration([SigmaZ, np.eye(3)], [SigmaZ, SigmaX])

    def test_configDict(self):
        cfg = chshConfig()
        copy = EprConfiguration.fromDict(cfg.asDict())
        self.assertTrue(np.array_equal(copy.aliceStack, cfg.aliceStack))
        self.assertTrue(np.array_equal(copy.bobStack, cfg.bobStack))
        self.assertEqual(tuple(copy.dims), (2, 2, 2, 2))


class TestBellOperator(TestCase):
    def test_chshNorm(self):
        S = assembleBellOperator(W0, chshConfig())
        self.assertAlmostEqual(bellOperatorNorm(S), 2 * ROOT2, places=12)

    def test_shapeMismatch(self):
        with self.assertRaises(InvalidInputError):
            assembleBellOperator(X3, chshConfig())

    def test_spectrum(self):
        spectral = spectralDecomposition(assembleBellOperator(W0, chshConfig()))
        self.assertAlmostEqual(spectral.eigenvalues[0], 2 * ROOT2, places=12)
        self.assertAlmostEqual(spectral.eigenvalues[1], -2 * ROOT2, places=12)
        self.assertEqual(spectral.maxIndexSet, [0, 1])
        self.assertLess(spectral.pairingDeviation, 1e-12)
        self.assertLess(abs(spectral.trace), 1e-12)
        self.assertLess(spectral.residual, 1e-12)
        self.assertIsNone(spectral.unpaired)

    def test_quantumBound(self):
        cfg = chshConfig()
        self.assertAlmostEqual(quantumBound(W0, cfg), 2 * ROOT2, places=12)
        Ma, Mb = normMeans(cfg)
        self.assertAlmostEqual(Ma, 1.0, places=12)
        self.assertAlmostEqual(Mb, 1.0, places=12)

    def test_localUnitaryInvariance(self):
        cfg = chshConfig()
        before = bellOperatorNorm(assembleBellOperator(W0, cfg))
        rotated = conjugateLocal(cfg, randomUnitary(2, 1), randomUnitary(2, 2))
        after = bellOperatorNorm(assembleBellOperator(W0, rotated))
        self.assertAlmostEqual(before, after, places=9)

    def test_locality(self):
        aOk, bOk, worst = quantumLocalityCheck(chshConfig())
        self.assertFalse(aOk)
        self.assertFalse(bOk)
        self.assertAlmostEqual(worst, 2.0, places=9)

        commuting = EprConfiguration([SigmaZ, -SigmaZ], [SigmaZ, Identity2])
        self.assertEqual(quantumLocalityCheck(commuting)[:2], (True, True))

    def test_traceIdentity(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            Na, Nb, na, nb = rng.integers(2, 4, size=4)
            cfg = EprConfiguration([randomObservable(rng, na) for _ in range(Na)],
                                   [randomObservable(rng, nb) for _ in range(Nb)])
            W = rng.uniform(-1, 1, size=(Na, Nb))
            psi = randomState(rng, na * nb)

            S = assembleBellOperator(W, cfg).entries
            expected = float(np.real(psi.conj() @ S @ psi))
            C = correlationMatrix(cfg, psi)
            self.assertAlmostEqual(float(np.trace(W.T @ C)), expected, places=10)

    def test_commutingBelowHv(self):
        rng = np.random.default_rng(43)
        for trial in range(10):
            Na, Nb = rng.integers(2, 5, size=2)
            cfg = EprConfiguration(commutingFamily(rng, 3, Na, seed=trial),
                                   commutingFamily(rng, 2, Nb, seed=100 + trial))
            W = rng.uniform(-1, 1, size=(Na, Nb))
            value = bellOperatorNorm(assembleBellOperator(W, cfg))
            hv = hvBoxNorm(W, unitBounds(Na), unitBounds(Nb))
            self.assertLessEqual(value, hv + 1e-9)

    def test_cliffordAndDichotomy(self):
        cfg = chshConfig()
        self.assertLess(cliffordDeviation(cfg.alice), 1e-12)
        self.assertLess(dichotomyDeviation(cfg.alice), 1e-12)
        self.assertLess(dichotomyDeviation(cfg.bob), 1e-12)

        half = EprConfiguration([SigmaZ / 2, SigmaX], [SigmaZ, SigmaX])
        self.assertAlmostEqual(dichotomyDeviation(half.alice), 0.75, places=12)


class TestCorrelations(TestCase):
    def test_entropy(self):
        phi = np.array([1, 0, 0, 1]) / ROOT2
        self.assertAlmostEqual(entanglementEntropy(phi, 2, 2), math.log(2), places=12)
        self.assertEqual(entanglementEntropy([1, 0, 0, 0], 2, 2), 0.0)

        with self.assertRaises(InvalidInputError):
            entanglementEntropy([1, 1, 0, 0], 2, 2)

        with self.assertRaises(InvalidInputError):
            entanglementEntropy([1, 0, 0], 2, 2)

    def test_entropySymmetry(self):
        rng = np.random.default_rng(47)
        for na, nb in ((2, 3), (3, 4), (4, 2)):
            psi = randomState(rng, na * nb)
            swapped = psi.reshape(na, nb).T.reshape(-1)
            self.assertAlmostEqual(entanglementEntropy(psi, na, nb),
                                   entanglementEntropy(swapped, nb, na), places=12)
            self.assertLessEqual(entanglementEntropy(psi, na, nb), math.log(min(na, nb)) + 1e-12)

    def test_chshExtreme(self):
        cfg, psi = bellMatrixExtreme(W0)
        S = assembleBellOperator(W0, cfg)
        self.assertAlmostEqual(bellOperatorNorm(S), 2 * ROOT2, places=12)

        C = correlationMatrix(cfg, psi)
        self.assertTrue(np.allclose(C, W0 / ROOT2, atol=1e-12))
        self.assertLess(rigidityDeviation(C, W0), 1e-12)

        report = analyzeCorrelation(C, W0, 2 * ROOT2, entropy=entanglementEntropy(psi, 2, 2))
        self.assertAlmostEqual(report.bellExpectation, 2 * ROOT2, places=12)
        self.assertAlmostEqual(report.traceNorm, 2.0, places=12)
        self.assertAlmostEqual(report.openingAngleDeg, 0.0, places=4)
        self.assertEqual(report.schmidtRank, 2)
        self.assertTrue(report.isExtreme)
        self.assertAlmostEqual(report.entropy, math.log(2), places=12)

    def test_bellMatrixExtremes(self):
        for N in range(2, 7):
            X = generateBellMatrix(N, N)
            cfg, psi = bellMatrixExtreme(X)
            S = assembleBellOperator(X, cfg)
            self.assertAlmostEqual(bellOperatorNorm(S), N * bellMatrixNorm(N), places=10)

            C = correlationMatrix(cfg, psi)
            self.assertAlmostEqual((X.entries * C).sum(), N * bellMatrixNorm(N), places=10)

    def test_openingAngles(self):
        for N in range(2, 6):
            Z = canonicalZ0(N)
            cfg, psi = bellMatrixExtreme(Z)
            C = correlationMatrix(cfg, psi)
            sNorm = abs((Z.entries * C).sum())
            report = analyzeCorrelation(C, Z, sNorm)
            expected = math.degrees(math.acos(min(1.0, 2 * math.cos(math.pi / (2 * N)) / math.sqrt(N))))
            self.assertAlmostEqual(report.openingAngleDeg, expected, delta=1e-4)

    def test_rigidity(self):
        cfg, psi = bellMatrixExtreme(X3)
        C = correlationMatrix(cfg, psi)
        self.assertLess(rigidityDeviation(C, X3), 1e-9)
        self.assertAlmostEqual(rigidityConstant(3), math.sqrt(3) / 2, places=15)

        with self.assertRaises(UnsupportedError):
            rigidityConstant(4)

    def test_inconsistentNorm(self):
        C = W0 / ROOT2
        with self.assertRaises(InconsistencyError):
            analyzeCorrelation(C, W0, 10.0)

    def test_zeroCorrelation(self):
        report = analyzeCorrelation(np.zeros((2, 2)), W0, 0.0)
        self.assertTrue(math.isnan(report.openingAngleDeg))
        self.assertEqual(report.schmidtRank, 0)
        self.assertFalse(report.isExtreme)

    def test_correlationReports(self):
        cfg = chshConfig()
        spectral = spectralDecomposition(assembleBellOperator(W0, cfg))
        reports = correlationReports(W0, cfg, spectral)
        self.assertEqual(len(reports), 2)
        for report in reports:
            self.assertAlmostEqual(abs(report.bellExpectation), 2 * ROOT2, places=10)
            self.assertAlmostEqual(report.entropy, math.log(2), places=9)
            self.assertTrue(report.isExtreme)


if __name__ == "__main__":
    unittest.main()
