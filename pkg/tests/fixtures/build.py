"""Generate the table-model fixtures.

The valid model is a one-object 2-group style double category: the only
vertical morphism is the identity, horizontal 1-cells are Z/2 under addition,
and each 1-cell carries Z/3 worth of globular squares.  The tensor adds
1-cells and squares; the interchanger is -u and the unit comparison u, so the
unit coherence of the tensor pseudofunctor forces the tensor unitors to -u.

Run ``python tests/fixtures/build.py`` to rewrite the JSON files.
"""

from __future__ import annotations

import copy
import itertools
import json
from pathlib import Path

HERE = Path(__file__).parent
H = (0, 1)
K = (0, 1, 2)


def sq(M: int, k: int) -> str:
    return f"s{M}.{k}"


def two_group(u: int = 1, sigma: int = 0, name: str = "two-group") -> dict:
    x = -u % 3
    unitor = -u % 3
    pairs = [(M, k) for M in H for k in K]
    data = {
        "schema_version": 1,
        "name": name,
        "objects": ["*"],
        "vmorphisms": [{"id": "1", "src": "*", "tgt": "*"}],
        "hcells": [{"id": M, "src": "*", "tgt": "*"} for M in H],
        "squares": [{"id": sq(M, k), "top": M, "left": "1", "right": "1", "bottom": M} for M, k in pairs],
        "compose_v": {
            "vmorphisms": [["1", "1", "1"]],
            "squares": [[sq(M, a), sq(M, b), sq(M, (a + b) % 3)] for M in H for a in K for b in K],
        },
        "compose_h": {
            "hcells": [[M, N, (M + N) % 2] for M in H for N in H],
            "squares": [[sq(M, a), sq(N, b), sq((M + N) % 2, (a + b) % 3)] for M, a in pairs for N, b in pairs],
        },
        "units": {
            "vmorphisms": [["*", "1"]],
            "hcells": [["*", 0]],
            "identity_squares": [[M, sq(M, 0)] for M in H],
            "unit_squares": [["1", sq(0, 0)]],
        },
        "constraints": {
            "assoc": [[M, N, P, sq((M + N + P) % 2, 0)] for M, N, P in itertools.product(H, H, H)],
            "lunit": [[M, sq(M, 0)] for M in H],
            "runit": [[M, sq(M, 0)] for M in H],
        },
        "tensor": {
            "unit": "*",
            "objects": [["*", "*", "*"]],
            "vmorphisms": [["1", "1", "1"]],
            "hcells": [[M, N, (M + N) % 2] for M in H for N in H],
            "squares": [[sq(M, a), sq(N, b), sq((M + N) % 2, (a + b) % 3)] for M, a in pairs for N, b in pairs],
            "interchanger": [[M1, N1, M2, N2, sq((M1 + N1 + M2 + N2) % 2, x)]
                             for M1, N1, M2, N2 in itertools.product(H, H, H, H)],
            "unit_comparison": [["*", "*", sq(0, u % 3)]],
            "assoc": {"vmorphisms": [["*", "*", "*", "1"]],
                      "squares": [[M, N, P, sq((M + N + P) % 2, 0)] for M, N, P in itertools.product(H, H, H)]},
            "lunit": {"vmorphisms": [["*", "1"]], "squares": [[M, sq(M, unitor)] for M in H]},
            "runit": {"vmorphisms": [["*", "1"]], "squares": [[M, sq(M, unitor)] for M in H]},
        },
        "braiding": {
            "symmetric": True,
            "vmorphisms": [["*", "*", "1"]],
            "squares": [[M, N, sq((M + N) % 2, sigma)] for M in H for N in H],
        },
    }
    return data


def _replace(rows: list, key: tuple, value) -> None:
    for r in rows:
        if tuple(r[:-1]) == key:
            r[-1] = value
            return
    raise KeyError(key)


def broken_interchange() -> dict:
    d = two_group(name="two-group, corrupted horizontal composite")
    _replace(d["compose_h"]["squares"], (sq(1, 1), sq(0, 1)), sq(1, 0))
    return d


def broken_hexagon() -> dict:
    d = two_group(name="two-group, corrupted interchanger")
    _replace(d["tensor"]["interchanger"], (1, 0, 1, 0), sq(0, 0))
    return d


def non_companion() -> dict:
    d = two_group(name="two-group, declared non-companion")
    d["companions"] = [{"vmorphism": "1", "companion": 0, "down": sq(0, 1), "up": sq(0, 1)}]
    return d


def inverted_pi() -> dict:
    d = two_group(name="two-group, inverted pentagonator")
    d["faults"] = ["pi"]
    return d


def non_involutive() -> dict:
    return two_group(sigma=1, name="two-group, non-involutive braiding")


def walking_arrow() -> dict:
    """Objects 0, 1 and one arrow between them, but only unit 1-cells: no companion."""
    v = ["1_0", "1_1", "f"]
    src = {"1_0": 0, "1_1": 1, "f": 0}
    tgt = {"1_0": 0, "1_1": 1, "f": 1}
    comp = {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1", ("1_0", "f"): "f", ("f", "1_1"): "f"}
    squares = {"u0": ("U0", "1_0", "1_0", "U0"), "u1": ("U1", "1_1", "1_1", "U1"), "uf": ("U0", "f", "f", "U1")}
    unit_of = {"1_0": "u0", "1_1": "u1", "f": "uf"}
    by_left = {"1_0": "u0", "1_1": "u1", "f": "uf"}
    return {
        "schema_version": 1,
        "name": "walking arrow without companions",
        "objects": [0, 1],
        "vmorphisms": [{"id": f, "src": src[f], "tgt": tgt[f]} for f in v],
        "hcells": [{"id": "U0", "src": 0, "tgt": 0}, {"id": "U1", "src": 1, "tgt": 1}],
        "squares": [{"id": s, "top": t, "left": l, "right": r, "bottom": b} for s, (t, l, r, b) in squares.items()],
        "compose_v": {
            "vmorphisms": [[f, g, h] for (f, g), h in comp.items()],
            "squares": [[unit_of[f], unit_of[g], unit_of[h]] for (f, g), h in comp.items()],
        },
        "compose_h": {
            "hcells": [["U0", "U0", "U0"], ["U1", "U1", "U1"]],
            "squares": [[a, b, by_left[squares[a][1]]] for a in squares for b in squares
                        if squares[a][2] == squares[b][1] and squares[a][1] == squares[b][1]],
        },
        "units": {
            "vmorphisms": [[0, "1_0"], [1, "1_1"]],
            "hcells": [[0, "U0"], [1, "U1"]],
            "identity_squares": [["U0", "u0"], ["U1", "u1"]],
            "unit_squares": [[f, unit_of[f]] for f in v],
        },
        "constraints": {
            "assoc": [["U0", "U0", "U0", "u0"], ["U1", "U1", "U1", "u1"]],
            "lunit": [["U0", "u0"], ["U1", "u1"]],
            "runit": [["U0", "u0"], ["U1", "u1"]],
        },
    }


FIXTURES = {
    "two_group.json": two_group,
    "broken_interchange.json": broken_interchange,
    "broken_hexagon.json": broken_hexagon,
    "non_companion.json": non_companion,
    "inverted_pi.json": inverted_pi,
    "non_involutive.json": non_involutive,
    "nonfibrant.json": walking_arrow,
}


def main() -> None:
    for fname, make in FIXTURES.items():
        (HERE / fname).write_text(json.dumps(make(), indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
