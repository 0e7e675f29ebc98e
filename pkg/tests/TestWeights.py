import itertools
import math
import os
import shutil
import tempfile
import unittest
from unittest import TestCase

import numpy as np

from pybell.config import getConfig, setSection, DEFAULT_SECTION
from pybell.constants import W0, W00, Wm, X3, KrivineBound
from pybell.error import InvalidInputError, ResourceLimitError
from pybell.weights import (WeightMatrix, operatorNorm, schmidtNorm, hvNorm, hvNormArgmax,
                            hvBoxNorm, unitBounds, quantumGap, zeroGapCertificate,
                            iterZeroGapCertificates, grothendieckConstant, theoremBounds,
                            grothendieckWindow, sampleGapDistribution)

_home = None

def setUpModule():
    global _home
    _home = tempfile.mkdtemp()
    os.environ['PYBELL_HOME'] = _home
    setSection(DEFAULT_SECTION)
    getConfig(reload=True)

def tearDownModule():
    shutil.rmtree(_home, ignore_errors=True)


class TestNorms(TestCase):
    def test_operatorNorm(self):
        self.assertAlmostEqual(operatorNorm(W0), math.sqrt(2), places=12)
        self.assertAlmostEqual(operatorNorm(np.eye(3)), 1.0, places=12)
        self.assertAlmostEqual(operatorNorm(Wm), 15.0, places=10)

    def test_schmidtNorm(self):
        self.assertAlmostEqual(schmidtNorm(W0), 2.0, places=12)
        self.assertAlmostEqual(schmidtNorm(np.eye(4)), 2.0, places=12)

    def test_hvNorm(self):
        self.assertEqual(hvNorm(W0), 2.0)
        self.assertEqual(hvNorm(X3), 4.0)
        self.assertEqual(hvNorm(Wm), 45.0)
        self.assertEqual(hvNorm(np.eye(4)), 4.0)

    def test_hvNormThreads(self):
        rng = np.random.default_rng(5)
        W = rng.uniform(-1, 1, size=(6, 5))
        self.assertEqual(hvNorm(W, threads=1), hvNorm(W, threads=3))

    def test_hvNormArgmax(self):
        value, a, b = hvNormArgmax(Wm)
        self.assertEqual(value, 45.0)
        self.assertAlmostEqual(float(a @ Wm @ b), 45.0, places=10)
        self.assertTrue(np.all(np.abs(a) == 1) and np.all(np.abs(b) == 1))

    def test_normChain(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            Na, Nb = rng.integers(2, 6, size=2)
            W = WeightMatrix(rng.uniform(-1, 1, size=(Na, Nb)))
            self.assertLessEqual(W.opNorm, W.schmidtNorm + 1e-12)
            self.assertLessEqual(W.opNorm, W.hvNorm + 1e-12)
            self.assertLessEqual(W.hvNorm, math.sqrt(Na * Nb) * W.opNorm + 1e-12)

    def test_hvBoxNorm(self):
        self.assertEqual(hvBoxNorm(W0, unitBounds(2), unitBounds(2)), hvNorm(W0))

        box = np.array([[0.0, 1.0], [0.0, 1.0]])
        self.assertAlmostEqual(hvBoxNorm(W0, box, box), 2.0, places=12)

        wide = np.array([[-2.0, 2.0], [-2.0, 2.0]])
        self.assertAlmostEqual(hvBoxNorm(W0, wide, wide), 8.0, places=12)

        zero = np.zeros((2, 2))
        self.assertEqual(hvBoxNorm(W0, zero, unitBounds(2)), 0.0)

    def test_hvNormBruteForce(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            Na, Nb = rng.integers(2, 6, size=2)
            W = rng.uniform(-1, 1, size=(Na, Nb))
            best = max(abs(np.array(a) @ W @ np.array(b))
                       for a in itertools.product((-1.0, 1.0), repeat=Na)
                       for b in itertools.product((-1.0, 1.0), repeat=Nb))
            self.assertAlmostEqual(hvNorm(W), best, places=12)

            value, a, b = hvNormArgmax(W)
            self.assertAlmostEqual(abs(float(a @ W @ b)), best, places=12)

    def test_signedPermutations(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            Na, Nb = rng.integers(2, 5, size=2)
            W = WeightMatrix(rng.uniform(-1, 1, size=(Na, Nb)))

            P1 = np.eye(Na)[rng.permutation(Na)] @ np.diag(rng.choice([-1.0, 1.0], size=Na))
            P2 = np.diag(rng.choice([-1.0, 1.0], size=Nb)) @ np.eye(Nb)[rng.permutation(Nb)]
            V = WeightMatrix(P1 @ W.entries @ P2)

            self.assertAlmostEqual(V.opNorm, W.opNorm, places=12)
            self.assertAlmostEqual(V.hvNorm, W.hvNorm, places=12)
            self.assertAlmostEqual(V.schmidtNorm, W.schmidtNorm, places=12)

    def test_badBounds(self):
        with self.assertRaises(InvalidInputError):
            hvBoxNorm(W0, np.array([[1.0, -1.0], [-1.0, 1.0]]), unitBounds(2))

    def test_enumerationCap(self):
        with self.assertRaises(ResourceLimitError):
            hvNorm(np.ones((25, 25)))

    def test_badMatrices(self):
        with self.assertRaises(InvalidInputError):
            WeightMatrix([[1.0, 2.0]])

        with self.assertRaises(InvalidInputError):
            WeightMatrix([[1.0, float('nan')], [0.0, 1.0]])


class TestGap(TestCase):
    def test_chshGap(self):
        report = quantumGap(W0)
        self.assertAlmostEqual(report.absoluteGap, 2 * math.sqrt(2) - 2, places=12)
        self.assertAlmostEqual(report.scaledGap, 2 - math.sqrt(2), places=12)
        self.assertIsNone(report.certificate)

    def test_magicSquareCertificate(self):
        report = quantumGap(Wm)
        self.assertAlmostEqual(report.scaledGap, 0.0, places=9)
        cert = report.certificate
        self.assertIsNotNone(cert)
        self.assertTrue(np.all(cert.d1 == 1) and np.all(cert.d2 == 1))

    def test_w00Certificate(self):
        self.assertAlmostEqual(quantumGap(W00, certificate=False).scaledGap, 0.0, places=9)

        cert = zeroGapCertificate(W00)
        self.assertEqual(cert.d1.tolist(), [1, 1, 1, -1])
        self.assertEqual(cert.d2.tolist(), [1, 1, 1, -1])

        # every certificate balances the signed matrix
        for pair in iterZeroGapCertificates(W00):
            signed = np.diag(pair.d1) @ W00 @ np.diag(pair.d2)
            self.assertTrue(np.allclose(signed.sum(axis=0), 2.0))
            self.assertTrue(np.allclose(signed.sum(axis=1), 2.0))

    def test_rankOneCertificate(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            a = rng.choice([-1.0, 1.0], size=3)
            b = rng.choice([-1.0, 1.0], size=4)
            W = np.outer(a, b)
            self.assertIsNotNone(zeroGapCertificate(W))
            self.assertAlmostEqual(quantumGap(W).scaledGap, 0.0, places=9)

    def test_certificateIffZeroGap(self):
        for Na, Nb in ((2, 2), (3, 3)):
            for signs in itertools.product((-1.0, 1.0), repeat=Na * Nb):
                W = np.array(signs).reshape(Na, Nb)
                report = quantumGap(W)
                zeroGap = abs(report.scaledGap) <= 1e-9
                self.assertEqual(report.certificate is not None, zeroGap, msg=str(W))
                if not zeroGap:
                    self.assertGreater(report.scaledGap, 1e-3)

    def test_homogeneity(self):
        rng = np.random.default_rng(29)
        for _ in range(20):
            W = rng.uniform(-1, 1, size=(3, 4))
            lam = rng.uniform(-5, 5)
            base = quantumGap(W, certificate=False)
            scaled = quantumGap(lam * W, certificate=False)
            self.assertAlmostEqual(scaled.absoluteGap, abs(lam) * base.absoluteGap, places=9)
            self.assertAlmostEqual(scaled.scaledGap, base.scaledGap, places=9)

    def test_zeroMatrix(self):
        with self.assertRaises(InvalidInputError):
            quantumGap(np.zeros((2, 3)))

    def test_sampleGapDistribution(self):
        first = list(sampleGapDistribution(2, 2, 50, seed=9))
        second = list(sampleGapDistribution(2, 2, 50, seed=9))
        self.assertEqual([g for _, g in first], [g for _, g in second])

        for W, g in first:
            self.assertGreaterEqual(g, -1e-12)
            self.assertLessEqual(g, 1 + 1e-12)

    def test_sampleNormal(self):
        for W, g in sampleGapDistribution(3, 3, 20, seed=1, distribution='normal'):
            self.assertGreaterEqual(g, -1e-12)
            self.assertLessEqual(g, 3 - 1 + 1e-12)

    def test_badDistribution(self):
        with self.assertRaises(InvalidInputError):
            list(sampleGapDistribution(2, 2, 1, seed=0, distribution='cauchy'))


class TestBounds(TestCase):
    def test_grothendieckConstant(self):
        self.assertAlmostEqual(grothendieckConstant(2), math.sqrt(2), places=15)
        self.assertEqual(grothendieckConstant(3), 1.5163)
        self.assertAlmostEqual(grothendieckConstant(4), math.pi / 2, places=15)
        self.assertEqual(grothendieckConstant(7), KrivineBound)
        self.assertAlmostEqual(KrivineBound, 1.7822, places=4)

    def test_theoremBounds(self):
        thm1, thm2, hv = theoremBounds(W0)
        self.assertAlmostEqual(thm1, 2 * math.sqrt(2), places=12)
        self.assertAlmostEqual(thm2, 2 * math.sqrt(2), places=12)
        self.assertEqual(hv, 2.0)

    def test_window(self):
        self.assertAlmostEqual(grothendieckWindow(X3), 4 * (1.5163 - 1), places=12)


if __name__ == "__main__":
    unittest.main()
