"""Regenerate the parameter corpus in fixtures/.

Every entry has N = 4 and Re(spec H) >= 1 + 4(1 + upsilon) + 2. Non-diagonal
pairs are V diag V^{-1} with one fixed, well-conditioned V.
"""

import json
import pathlib

import numpy as np

V = np.array([[1.0, 0.4], [-0.3, 1.1]])
N = 4

CORPUS = {
    1: dict(scalar=(11.4, 0.35),
            diag=((11.3, 12.6), (0.4, -0.45)),
            full=((11.5 + 0.4j, 13.1), (1.25, -0.3 + 0.2j))),
    2: dict(scalar=(15.3, -0.55),
            diag=((15.2, 16.7), (0.6, 1.9)),
            full=((15.6 - 0.3j, 17.2), (-0.4, 0.85 + 0.1j))),
    3: dict(scalar=(19.25, 0.7),
            diag=((19.4, 20.9), (-0.6, 0.3)),
            full=((19.7 + 0.25j, 21.3), (0.45, -0.25 - 0.15j))),
}


def encode(m):
    m = np.atleast_2d(m)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def doc(h, c, upsilon):
    h = np.atleast_2d(np.asarray(h, dtype=complex))
    return {"p": h.shape[0], "H": encode(h), "C": encode(c),
            "upsilon": upsilon, "max_degree": N}


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    out.mkdir(exist_ok=True)
    vinv = np.linalg.inv(V)
    for ups, entry in CORPUS.items():
        h, c = entry["scalar"]
        files = {f"scalar_u{ups}.json": doc([[h]], [[c]], ups)}
        h, c = entry["diag"]
        files[f"diag_u{ups}.json"] = doc(np.diag(h), np.diag(c).astype(complex), ups)
        h, c = entry["full"]
        files[f"full_u{ups}.json"] = doc(V @ np.diag(h) @ vinv, V @ np.diag(c) @ vinv, ups)
        for name, body in files.items():
            (out / name).write_text(json.dumps(body, indent=2) + "\n")


if __name__ == "__main__":
    main()
