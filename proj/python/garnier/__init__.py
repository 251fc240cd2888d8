"""Verification of the irregular Garnier system and its algebraic solution.

Every check returns a report dict (or a list of them) with the keys
check, anchor, mode, verdict and optional witness/details.
"""

import json

from . import _garnier
from ._garnier import DomainError, hamiltonian

__all__ = [
    "DomainError",
    "hamiltonian",
    "tau_exponent",
    "check_compatibility",
    "verify_sigma_system",
    "verify_eta",
    "derive_hamiltonian",
    "check_apparent",
    "verify_pullback",
    "tau",
    "flow",
    "kernel_properties",
]


def _s(s):
    return [str(v) for v in s]


def _one(text):
    return json.loads(text)


def _many(texts):
    return [json.loads(t) for t in texts]


def check_compatibility(i, j, mode="pit", trials=20, seed=42):
    return _one(_garnier.check_compatibility(i, j, mode, trials, seed))


def verify_sigma_system():
    return _one(_garnier.verify_sigma_system())


def verify_eta(s=(1, 1, 1), digits=50, branch="+++", seed=42, random_points=5):
    return _many(_garnier.verify_eta(_s(s), digits, branch, seed, random_points))


def derive_hamiltonian(i, trials=20, seed=42):
    return _one(_garnier.derive_hamiltonian(i, trials, seed))


def check_apparent(seed=42, points=5):
    return _many(_garnier.check_apparent(seed, points))


def verify_pullback(s=(1, 1, 1), branch="+++"):
    return _many(_garnier.verify_pullback(_s(s), branch))


def tau(branch="+++"):
    return _many(_garnier.tau(branch))


def flow(direction, s=(1, 1, 1), branch="+++", delta="0.1", tol="1e-18", digits=50):
    return _one(_garnier.flow(direction, _s(s), branch, str(delta), str(tol), digits))


def kernel_properties(seed=42):
    return _one(_garnier.kernel_properties(seed))


def tau_exponent(s, digits=50):
    """F(s) as a decimal string, with tau = c exp(F); requires s_i > 0."""
    return _garnier.tau_exponent(_s(s), digits)
