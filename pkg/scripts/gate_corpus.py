"""Run the Calabi-Yau gate on every bundled operator and print one verdict per line."""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from cyops import corpus
from cyops.cygate import run_gate


@dataclass
class Config:
    order: int = 30
    depth: int = 6
    json: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=Config.order)
    ap.add_argument("--depth", type=int, default=Config.depth)
    ap.add_argument("--json", action="store_true")
    cfg = Config(**vars(ap.parse_args()))
    for name in corpus.names():
        rec = corpus.load(name)
        report = run_gate(rec.operator(), cfg.order, cfg.depth, Fraction(rec.meta("n0", "1")))
        if cfg.json:
            print(report.to_json())
        else:
            print(f"{name:10s} order {rec.order} degree {rec.degree}: {report.verdict}")


if __name__ == "__main__":
    main()
