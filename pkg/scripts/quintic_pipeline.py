"""Quintic mirror family: holomorphic period, mirror map, Yukawa coupling, instantons."""
import argparse
from dataclasses import dataclass

from cyops import corpus
from cyops.mirror import instanton_numbers, mirror_pipeline


@dataclass
class Config:
    order: int = 12
    depth: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=Config.order)
    ap.add_argument("--depth", type=int, default=Config.depth)
    cfg = Config(**vars(ap.parse_args()))
    rec = corpus.load("quintic")
    fb, md = mirror_pipeline(rec.operator(), max(cfg.order, cfg.depth))
    print("y0(t) =", fb.f(0).truncate(6).to_string())
    print("q(t)  =", md.q_of_t.truncate(6).to_string())
    print("K(q)  =", md.K.truncate(6).to_string("q"))
    for d, n in instanton_numbers(md.K, cfg.depth, int(rec.meta("n0"))).entries:
        print(f"n_{d} = {n}")


if __name__ == "__main__":
    main()
