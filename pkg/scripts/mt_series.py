"""McKay-Thompson series of the order-4 lift on the moonshine frame, with the
characters it is built from."""

import argparse
from dataclasses import dataclass

from framedcodes import MoonshineFrame, code_voa_character_from_dual, mckay_thompson, weight_enumerator
from framedcodes.qseries import trunc_to_prec


@dataclass
class SeriesConfig:
    power: int = 10


def main(cfg: SeriesConfig) -> None:
    f = MoonshineFrame.standard()
    prec = trunc_to_prec(cfg.power)
    wd, wx = weight_enumerator(f.D), weight_enumerator(f.D_xi)
    ch_c = code_voa_character_from_dual(wd, prec)
    ch_c0 = code_voa_character_from_dual(wx, prec)
    mt = mckay_thompson(wd, wx, prec)
    print(f"{'q^k':>5} {'ch V_C':>14} {'ch V_C0':>14} {'T':>12}")
    for k in range(-1, cfg.power + 1):
        print(f"{k:>5} {ch_c.coefficient(k):>14} {ch_c0.coefficient(k):>14} {mt.coefficient(k):>12}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--power", type=int, default=SeriesConfig.power, help="last power of q")
    raise SystemExit(main(SeriesConfig(ap.parse_args().power)))
