"""Published SDS fixtures shipped with the package.

Keys: ``72-1`` ... ``72-8`` (the eight inequivalent (72;36,30;30) SDSs),
``34`` (a (34;16,13;12) SDS), ``68-P-Q`` and ``68-R-S`` (its products with the
Golay pair ([-1,1],[1,1]) by the SDS construction and by Turyn's formulas).
Every entry is checked against its parameters the first time the table is
loaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .sds import Sds, SdsParams, validate_params

GOLAY_2 = ((-1, 1), (1, 1))

_P72 = SdsParams(72, (36, 30), 30)

_RAW: dict[str, tuple[int, tuple[tuple[int, ...], ...], SdsParams, str]] = {
    "34": (
        34,
        (
            (0, 1, 2, 3, 5, 6, 8, 12, 13, 14, 15, 18, 20, 22, 24, 31),
            (0, 1, 4, 5, 7, 8, 9, 14, 15, 18, 23, 26, 28),
        ),
        SdsParams(34, (16, 13), 12),
        "periodic Golay SDS of length 34 used as the multiplication example",
    ),
    "68-P-Q": (
        68,
        (
            (0, 2, 8, 9, 10, 14, 15, 16, 18, 19, 21, 23, 28, 30, 33, 35, 36, 39, 43, 46,
             47, 51, 52, 53, 55, 56, 57, 59, 61, 65, 67),
            (0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 12, 13, 14, 16, 17, 19, 20, 23, 24, 25, 27,
             28, 29, 32, 33, 34, 35, 41, 43, 44, 45, 46, 47, 48, 52, 55, 58, 61, 63),
        ),
        SdsParams(68, (31, 39), 36),
        "SDS-construction product of ([-1,1],[1,1]) and entry 34",
    ),
    "68-R-S": (
        68,
        (
            (4, 5, 7, 13, 18, 21, 22, 23, 25, 26, 27, 30, 33, 35, 36, 38, 39, 40,
             41, 42, 43, 45, 49, 50, 51, 54, 55, 56, 59, 60, 61, 62, 63, 64, 65, 66, 67),
            (1, 3, 5, 7, 10, 11, 13, 14, 17, 20, 25, 27, 29, 30, 31, 36, 37, 38,
             41, 45, 48, 49, 50, 52, 56, 58, 63, 64, 66),
        ),
        SdsParams(68, (37, 29), 32),
        "Turyn product of ([-1,1],[1,1]) and entry 34",
    ),
    "72-1": (
        72,
        (
            (0, 1, 2, 3, 4, 5, 6, 7, 10, 12, 13, 15, 18, 20, 22, 24, 26, 27, 29, 30, 31,
             35, 37, 39, 40, 43, 44, 47, 51, 52, 53, 56, 58, 59, 62, 63),
            (0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 18, 21, 23, 25, 29, 32, 33, 39, 41,
             42, 43, 47, 48, 55, 56, 62, 67, 69),
        ),
        _P72,
        "(72;36,30;30) solution 1",
    ),
    "72-2": (
        72,
        (
            (0, 1, 2, 3, 4, 5, 6, 7, 10, 12, 13, 15, 18, 20, 22, 24, 26, 27, 29, 30, 31,
             35, 37, 39, 40, 43, 44, 47, 51, 52, 53, 56, 58, 59, 62, 63),
            (0, 2, 3, 5, 7, 8, 9, 11, 14, 15, 17, 18, 19, 23, 24, 30, 31, 32, 33, 37, 38,
             41, 42, 44, 48, 49, 51, 59, 61, 69),
        ),
        _P72,
        "(72;36,30;30) solution 2",
    ),
    "72-3": (
        72,
        (
            (0, 1, 2, 3, 5, 7, 10, 11, 12, 13, 15, 17, 19, 20, 26, 27, 28, 29, 30, 32,
             34, 35, 38, 39, 40, 42, 43, 46, 49, 51, 54, 56, 59, 60, 63, 64),
            (0, 1, 2, 3, 4, 6, 7, 8, 9, 14, 15, 16, 20, 22, 24, 26, 27, 31, 33, 36, 37, 40,
             42, 43, 46, 49, 54, 57, 58, 68),
        ),
        _P72,
        "(72;36,30;30) solution 3",
    ),
    "72-4": (
        72,
        (
            (0, 1, 2, 3, 5, 7, 10, 11, 12, 13, 15, 17, 19, 20, 26, 27, 28, 29, 30, 32,
             34, 35, 38, 39, 40, 42, 43, 46, 49, 51, 54, 56, 59, 60, 63, 64),
            (0, 1, 3, 4, 6, 7, 8, 9, 10, 14, 15, 18, 19, 20, 22, 25, 26, 31, 32, 36, 38,
             40, 42, 45, 49, 51, 52, 57, 58, 60),
        ),
        _P72,
        "(72;36,30;30) solution 4",
    ),
    "72-5": (
        72,
        (
            (0, 1, 2, 4, 5, 6, 7, 9, 10, 11, 14, 15, 16, 17, 22, 23, 25, 26, 29, 30, 33,
             35, 37, 38, 43, 45, 46, 48, 50, 51, 52, 54, 55, 60, 62, 63),
            (0, 2, 3, 5, 7, 8, 9, 11, 14, 17, 18, 19, 21, 23, 24, 27, 30, 31, 32, 37, 38,
             41, 42, 44, 48, 49, 57, 59, 61, 63),
        ),
        _P72,
        "(72;36,30;30) solution 5",
    ),
    "72-6": (
        72,
        (
            (0, 1, 3, 4, 5, 6, 7, 8, 9, 10, 14, 15, 17, 18, 19, 20, 22, 25, 26, 29, 31,
             32, 36, 38, 40, 41, 42, 45, 49, 51, 52, 53, 57, 58, 60, 65),
            (0, 1, 2, 5, 7, 10, 11, 12, 13, 17, 19, 20, 26, 28, 29, 30, 32, 34, 35, 38,
             40, 42, 43, 46, 49, 54, 56, 59, 60, 64),
        ),
        _P72,
        "(72;36,30;30) solution 6",
    ),
    "72-7": (
        72,
        (
            (0, 1, 3, 4, 5, 6, 7, 8, 9, 10, 14, 15, 17, 18, 19, 20, 22, 25, 26, 29, 31,
             32, 36, 38, 40, 41, 42, 45, 49, 51, 52, 53, 57, 58, 60, 65),
            (0, 1, 3, 4, 5, 6, 9, 10, 13, 16, 18, 19, 21, 23, 24, 27, 30, 34, 35, 40, 46,
             47, 48, 49, 53, 55, 57, 63, 65, 67),
        ),
        _P72,
        "(72;36,30;30) solution 7",
    ),
    "72-8": (
        72,
        (
            (0, 2, 3, 4, 5, 7, 8, 9, 11, 14, 15, 16, 17, 18, 19, 23, 24, 28, 30, 31, 32,
             33, 37, 38, 40, 41, 42, 44, 48, 49, 51, 52, 59, 61, 64, 69),
            (0, 1, 2, 4, 5, 6, 7, 10, 12, 13, 18, 20, 22, 24, 26, 29, 30, 31, 35, 37, 40,
             43, 44, 47, 52, 53, 56, 58, 59, 62),
        ),
        _P72,
        "(72;36,30;30) solution 8",
    ),
}

SOLUTIONS_72 = tuple(f"72-{i}" for i in range(1, 9))


@dataclass(frozen=True)
class DatasetEntry:
    id: str
    sds: Sds
    expected_params: SdsParams
    source: str


@cache
def load_dataset() -> dict[str, DatasetEntry]:
    """All entries, each validated against its parameters."""
    out = {}
    for key, (v, blocks, params, source) in _RAW.items():
        sds = Sds(v, blocks)
        validate_params(sds, params)
        out[key] = DatasetEntry(key, sds, params, source)
    return out


def get(key: str) -> Sds:
    try:
        return load_dataset()[key].sds
    except KeyError:
        raise KeyError(f"unknown dataset id {key!r}; known: {', '.join(_RAW)}") from None


def ids() -> list[str]:
    return list(_RAW)
