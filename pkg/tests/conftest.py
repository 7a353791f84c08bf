"""Shared fixtures: the family verification grid is built once per session
because several test modules and most acceptance criteria consume it."""

import time

import pytest

from crlab import families, regularity


GRID_SPEC = (
    [("ext-hamming", {"m": m}) for m in (2, 3, 4)]
    + [("dm-dual", {"p": p, "l": l, "h": h})
       for (p, l, h) in ((2, 1, 1), (2, 1, 2), (2, 2, 2), (3, 1, 1))]
    + [("mds-dual", {"q": q, "n": n})
       for q in (3, 4, 5, 7, 8) for n in range(3, q + 1)]
    + [("bose-bush", {"q": q}) for q in (4, 8, 16)]
    + [("delsarte", {"q": q}) for q in (8, 16)]
    + [("denniston", {"q": q, "h": h})
       for (q, h) in ((8, 2), (8, 4), (16, 2), (16, 4), (16, 8))]
)


def build_instance(kind, params):
    if kind == "ext-hamming":
        return families.cr1_extended_hamming(params["m"])
    if kind == "dm-dual":
        return families.cr2_dm_dual(params["p"], params["l"], params["h"])
    if kind == "mds-dual":
        return families.cr3_mds_dual(params["q"], params["n"])
    if kind == "bose-bush":
        return families.cr4_bose_bush(params["q"])
    if kind == "delsarte":
        return families.cr5_delsarte(params["q"])
    if kind == "denniston":
        return families.cr6_denniston(params["q"], params["h"])
    raise ValueError(kind)


class GridEntry:
    def __init__(self, kind, params, instance):
        self.kind = kind
        self.params = params
        self.instance = instance
        self.tw = instance.two_weight_code
        self.cr = instance.cr_code
        self.tw_wd = self.tw.weight_distribution()
        self.cr_result = regularity.complete_regularity(self.cr)

    @property
    def label(self):
        return f"{self.kind} {self.params}"


class GridData(list):
    build_seconds: float = 0.0


@pytest.fixture(scope="session")
def family_grid():
    start = time.monotonic()
    grid = GridData(GridEntry(kind, params, build_instance(kind, params))
                    for kind, params in GRID_SPEC)
    grid.build_seconds = time.monotonic() - start
    return grid
