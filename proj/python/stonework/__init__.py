"""Quasipoints, germs and observables of M_n(C(Omega)) for a finite set Omega.

Operators are complex arrays of shape (m, n, n), module elements (m, n),
functions on Omega (m,), where m = |Omega|.
"""

from ._stonework import (
    StoneworkError,
    abelian_projection,
    central_carrier,
    germ,
    inner,
    is_abelian_projection,
    lattice_quasipoints,
    normalize,
    observable_value,
    orbit_witness,
    qp_contains,
    quasipoint,
    run_cli,
    spectral_family,
    spectrum,
    transport,
    verify_all,
)

__all__ = [
    "StoneworkError",
    "abelian_projection",
    "central_carrier",
    "germ",
    "inner",
    "is_abelian_projection",
    "lattice_quasipoints",
    "normalize",
    "observable_value",
    "orbit_witness",
    "qp_contains",
    "quasipoint",
    "run_cli",
    "spectral_family",
    "spectrum",
    "transport",
    "verify_all",
]
