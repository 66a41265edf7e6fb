"""Unit constants and dB/linear conversion helpers."""

import numpy as np

# Exact SI value, m/s. Fixed so results are bit-reproducible.
SPEED_OF_LIGHT = 299_792_458.0


def db_to_linear(value_db):
    """Convert a dB quantity to a linear power ratio."""
    return 10.0 ** (np.asarray(value_db, dtype=float) / 10.0)


def linear_to_db(value):
    """Convert a linear power ratio to dB."""
    return 10.0 * np.log10(np.asarray(value, dtype=float))


def dbm_to_mw(power_dbm):
    """Convert power in dBm to milliwatts."""
    return 10.0 ** (np.asarray(power_dbm, dtype=float) / 10.0)


def mw_to_dbm(power_mw):
    """Convert power in milliwatts to dBm."""
    return 10.0 * np.log10(np.asarray(power_mw, dtype=float))
