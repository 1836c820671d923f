"""Fit the G(2,7) operator from its binomial sum and read instantons at both MUM points.

Each sequence is calibrated on its first entry, since the scale of q is a convention.
"""
import argparse
import time
from dataclasses import dataclass
from fractions import Fraction

from cyops.mirror import instanton_numbers, mirror_pipeline
from cyops.opcore import reciprocal_transform, riemann_symbol, shift_exponent
from cyops.opfit import search_operator
from cyops.sources.presets import named_series


@dataclass
class Config:
    terms: int = 80
    max_order: int = 4
    max_degree: int = 10
    margin: int = 10
    depth: int = 5


def calibrated(K, depth, first):
    raw = instanton_numbers(K, depth, 1).values()
    return [Fraction(first) / raw[0] * v for v in raw]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for key, val in vars(Config()).items():
        ap.add_argument("--" + key.replace("_", "-"), type=int, default=val)
    cfg = Config(**vars(ap.parse_args()))
    start = time.perf_counter()
    res = search_operator(named_series("g27", cfg.terms), cfg.max_order, cfg.max_degree, cfg.margin)
    print(f"shape (order, degree) = {res.shape} after {res.shapes_tried} shapes, "
          f"{time.perf_counter() - start:.1f}s")
    op = res.operator
    print(riemann_symbol(op).to_text())
    _, md = mirror_pipeline(op, 2 * cfg.depth)
    print("at 0:        ", [str(v) for v in calibrated(md.K, cfg.depth, 196)])
    # all exponents at infinity equal 1, so shift them to 0 before the MUM pipeline
    _, md = mirror_pipeline(shift_exponent(reciprocal_transform(op), 1), 2 * cfg.depth)
    print("at infinity: ", [str(v) for v in calibrated(md.K, cfg.depth, 588)])


if __name__ == "__main__":
    main()
