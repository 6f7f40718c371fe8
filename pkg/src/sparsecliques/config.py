from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    """Size limits for the quadratic-memory and exhaustive routines."""

    matrix_max_n: int = 65_536
    aux_max_vertices: int = 10**7
    oracle_max_tuples: int = 10**8
    brute_triangle_max_n: int = 2_000


DEFAULT_BUDGETS = Budgets()
