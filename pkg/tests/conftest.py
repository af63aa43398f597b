"""Shared fixtures: the named map corpus used by cross-module tests."""

from __future__ import annotations

import numpy as np
import pytest

import harmomap as hm
from harmomap.specialfn import HypergeometricParams as HP


def monomial_map(n: int, alpha: complex) -> hm.HarmonicMapSeries:
    """f(z) = z + alpha conj(z^n)."""
    g = np.zeros(n + 1, dtype=complex)
    g[n] = alpha
    return hm.HarmonicMapSeries(hm.AnalyticSeries([0.0, 1.0]), hm.AnalyticSeries(g))


#: family specs whose closed-form certificate is expected "certified",
#: with b_1 = 0 (the fully-starlike route)
CERTIFIED_B1_ZERO_SPECS = [
    hm.FamilySpec("T41a", HP.real(1, 1, 4), 0.2),
    hm.FamilySpec("T41a", HP.negative_integer(2, 3), 0.1),
    hm.FamilySpec("T41a", HP.conjugate(1 + 1j, 4.5), 0.1),
    hm.FamilySpec("T41b", HP.real(1, 0.5, 4), 0.3),
    hm.FamilySpec("T41b", HP.negative_integer(3, 8), 0.05),
    hm.FamilySpec("T44b", HP.conjugate(1.3 + 0.8j, 4), 0.2),
    hm.FamilySpec("T44b", HP.real(0.5, 0.5, 2.5), 0.3),
    hm.FamilySpec("T44b", HP.negative_integer(2, 6), 0.1),
    hm.FamilySpec("C46b", HP.real(1, 1, 4.5), 0.15),
    hm.FamilySpec("C46b", HP.conjugate(0.8 + 0.3j, 4), 0.15),
]

#: certified specs with b_1 = alpha != 0 (the close-to-convex-only route)
CERTIFIED_B1_FREE_SPECS = [
    hm.FamilySpec("T41c", HP.real(1, 1, 5), 0.15),
    hm.FamilySpec("T44a", HP.real(1, 1, 3), 0.4),
    hm.FamilySpec("T44a", HP.conjugate(1 + 1j, 4), 0.3),
    hm.FamilySpec("C46a", HP.real(1, 1, 4), 0.15),
    hm.FamilySpec("C46a", HP.negative_integer(2, 4), 0.3),
]


@pytest.fixture(scope="session")
def b1_zero_corpus():
    """Named maps with b1 = 0 whose coefficient sum should certify."""
    corpus = [
        ("identity", hm.identity_map()),
        ("half-z2", monomial_map(2, 0.5)),  # boundary case, sum exactly 1
        ("quarter-z3", monomial_map(3, 0.25)),
        ("tenth-z4-rot", monomial_map(4, 0.1j)),
    ]
    one = hm.PolynomialSpec(np.array([1.0]), 0)
    for n, t in [(2, 0.5), (3, 0.25), (4, 0.75)]:
        corpus.append(
            (
                f"suffridge-n{n}",
                hm.suffridge_family(one, hm.SuffridgeParams(0.4, -0.7, t, n)),
            )
        )
    for spec in CERTIFIED_B1_ZERO_SPECS:
        name = f"{spec.family}-{spec.params.mode}"
        corpus.append((name, hm.hypergeometric_family(spec, truncation=2048)))
    return corpus


@pytest.fixture(scope="session")
def b1_free_corpus():
    """Certified maps with b1 != 0 (close-to-convex conclusion only)."""
    return [
        (f"{spec.family}-{spec.params.mode}", hm.hypergeometric_family(spec, truncation=2048))
        for spec in CERTIFIED_B1_FREE_SPECS
    ]


@pytest.fixture(scope="session")
def uncertified_corpus():
    """Counterexample maps: certification fails or scans find witnesses."""
    return [
        ("mocanu-f0", hm.mocanu_example(2, 0.3)),
        ("nonunivalent", hm.nonunivalent_example()),
        ("koebe", hm.harmonic_koebe()),
    ]
