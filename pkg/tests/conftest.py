import math

import numpy as np
import pytest
from scipy import integrate
from scipy.special import logsumexp
from scipy.stats import norm

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def gaussian_mi_quadrature(encodings, sigma, probs):
    """I(X;Y) for a 1-D Gaussian mixture by adaptive quadrature of the KL integrals."""
    total = 0.0
    for x, px in zip(encodings, probs):
        def integrand(y, x=x):
            log_mix = logsumexp([math.log(pm) + norm.logpdf(y, em, sigma) for em, pm in zip(encodings, probs)])
            return norm.pdf(y, x, sigma) * (norm.logpdf(y, x, sigma) - log_mix)

        val, _ = integrate.quad(integrand, -np.inf, np.inf, epsabs=1e-13, epsrel=1e-12, limit=200)
        total += px * val
    return total


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
