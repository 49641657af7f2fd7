"""Lower-bound constructions with checkable certificates."""
from .adm_lower import (
    AdmLowerInstance,
    WitnessFamily,
    build_witness_families,
    gen_adm_lower,
    trim_witness,
    validate_witness,
)
from .grid import GridCoinInstance, gen_grid_coin, grid_scol_certificate
from .multigrid import MultigridInstance, gen_multigrid_coin, multigrid_wcol_certificate
from .square import gen_square_grid, grid_scol_lower_certificate

__all__ = [
    "AdmLowerInstance",
    "GridCoinInstance",
    "MultigridInstance",
    "WitnessFamily",
    "build_witness_families",
    "gen_adm_lower",
    "gen_grid_coin",
    "gen_multigrid_coin",
    "gen_square_grid",
    "grid_scol_certificate",
    "grid_scol_lower_certificate",
    "multigrid_wcol_certificate",
    "trim_witness",
    "validate_witness",
]
