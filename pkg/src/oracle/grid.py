"""
Parameter grids for the verification harness.

A GridSpec describes a regular grid over each probability axis plus a batch
of seeded uniform draws. Grids larger than the cell cap are subsampled with a
uniform stride over the flat enumeration order. Random draws always come
after the grid, so "first counterexample" means first in that order.
"""

import math
from enum import Enum
from typing import Dict, Sequence, Tuple

import numpy as np
from pydantic import Field, model_validator

from src.config import (
    GRID_CELL_CAP,
    GRID_LOWER,
    GRID_POINTS_PER_AXIS,
    GRID_RANDOM_DRAWS,
    GRID_SEED,
    GRID_UPPER,
)
from src.domain.models import DomainModel, OpenProbability

GENERATOR_ID = "numpy.random.Generator(PCG64)"


class GridRestriction(str, Enum):
    """Slices of the parameter space the certificates can be run on"""
    FULL = "full"
    NULL_EFFECT = "null-effect"            # p1 = p0
    NON_DIFFERENTIAL = "non-differential"  # classification identical across the other variable


class GridSpec(DomainModel):
    """Grid resolution, random-draw count and seed for one certificate run"""
    points_per_axis: int = Field(default=GRID_POINTS_PER_AXIS, ge=2)
    lower: OpenProbability = GRID_LOWER
    upper: OpenProbability = GRID_UPPER
    random_draws: int = Field(default=GRID_RANDOM_DRAWS, ge=0)
    seed: int = Field(default=GRID_SEED, ge=0, lt=2**64)
    cell_cap: int = Field(default=GRID_CELL_CAP, ge=1)
    restriction: GridRestriction = GridRestriction.FULL

    @model_validator(mode="after")
    def _ordered_bounds(self):
        if not self.lower < self.upper:
            raise ValueError(f"lower {self.lower} must be below upper {self.upper}")
        return self

    def restricted(self, restriction: GridRestriction) -> "GridSpec":
        return self.model_copy(update={"restriction": restriction})


def make_generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def grid_indices(points_per_axis: int, n_axes: int, cell_cap: int) -> np.ndarray:
    """Flat indices of the evaluated cells, strided when the grid exceeds the cap"""
    total = points_per_axis ** n_axes
    stride = max(1, math.ceil(total / cell_cap))
    return np.arange(0, total, stride, dtype=np.int64)


def lattice(axes: Sequence[np.ndarray], cell_cap: int) -> np.ndarray:
    """
    Cartesian product of equally long axes, one row per evaluated cell.

    Rows follow C order (last axis fastest).
    """
    n = len(axes[0])
    flat = grid_indices(n, len(axes), cell_cap)
    unravelled = np.unravel_index(flat, (n,) * len(axes))
    return np.column_stack([axis[idx] for axis, idx in zip(axes, unravelled)])


def probability_axis(spec: GridSpec) -> np.ndarray:
    return np.linspace(spec.lower, spec.upper, spec.points_per_axis)


def sample_probabilities(
    spec: GridSpec,
    names: Sequence[str],
    ties: Dict[str, str],
) -> Tuple[Dict[str, np.ndarray], int]:
    """
    Grid cells then seeded draws for the named probability axes.

    Args:
        spec: Grid resolution, draws and seed
        names: Parameter names in enumeration order
        ties: dependent -> source; tied parameters copy their source instead
            of getting an axis of their own

    Returns:
        (columns by name, number of leading rows that came from the grid)
    """
    free = [name for name in names if name not in ties]
    axis = probability_axis(spec)
    grid = lattice([axis] * len(free), spec.cell_cap)

    rng = make_generator(spec.seed)
    draws = rng.uniform(spec.lower, spec.upper, size=(spec.random_draws, len(free)))

    matrix = np.vstack([grid, draws])
    columns = {name: matrix[:, i] for i, name in enumerate(free)}
    for dependent, source in ties.items():
        columns[dependent] = columns[source]
    return {name: columns[name] for name in names}, len(grid)
