"""Negativity fonts, partial transposes and polynomial invariants of multiqubit pure states."""

import json

import numpy as np

from . import _negfont
from ._negfont import NegfontError, catalog_names, delta24, i4, i48, j12, negativity, run_suite, tau48

__all__ = [
    "NegfontError",
    "catalog_names",
    "catalog_state",
    "classify",
    "delta24",
    "font_counts",
    "font_dets",
    "font_minimize",
    "i4",
    "i48",
    "invariants",
    "j12",
    "negativity",
    "random_state",
    "run_suite",
    "scramble",
    "tau48",
]


def _amps(x):
    return np.asarray(x, dtype=complex).ravel().tolist()


def catalog_state(name, normalize=True, **params):
    return np.array(_negfont.catalog_state(name, {k: complex(v) for k, v in params.items()}, normalize))


def random_state(n, seed):
    return np.array(_negfont.random_state(n, seed))


def scramble(amps, seed):
    return np.array(_negfont.scramble(_amps(amps), seed))


def invariants(amps, normalize=True, tol=1e-9):
    return json.loads(_negfont._invariants_json(_amps(amps), normalize, tol))


def classify(amps, font_min=False, seed=0, tol=1e-9):
    return json.loads(_negfont._classify_json(_amps(amps), font_min, seed, tol))


def font_minimize(amps, seed=0, restarts=32):
    return np.array(_negfont.font_minimize(_amps(amps), seed, restarts))


def font_dets(amps, qubit=1):
    return _negfont.font_dets(_amps(amps), qubit)


def font_counts(amps, qubit=1, tol=1e-9):
    """Nonzero font counts (n2, n3, ...) for the given qubit."""
    return tuple(_negfont.font_counts(_amps(amps), qubit, tol))
