from typing import Tuple, Union

import numpy as np


def check_square(table) -> Tuple[Union[np.ndarray, None], str]:
    """
    Coerce a table to an int64 square array with entries in 0..n-1.

    Returns:
        Tuple[Union[np.ndarray, None], str]: The array, or None and the error.
    """
    try:
        table = np.array(table, dtype=np.int64)
    except (TypeError, ValueError):
        return None, "BadShape"

    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
        return None, "BadShape"

    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        bad = first_witness((table < 0) | (table >= n))
        return None, f"LabelOutOfRange({bad[0] + 1},{bad[1] + 1})"

    return table, ""


def first_witness(mask: np.ndarray) -> Union[Tuple[int, ...], None]:
    """Return the first True index of a boolean array in row-major order."""
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(i) for i in hits[0])


def is_permutation(row: np.ndarray) -> bool:
    return len(np.unique(row)) == row.size and row.min() >= 0 and row.max() < row.size
