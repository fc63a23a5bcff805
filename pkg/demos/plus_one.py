"""Closure of y = x + 1 under both bit orders, decoded back to integers."""

from rmc.builders import affine_relation, decode_int
from rmc.engine import RunConfig, run
from rmc.transducer import SamplingStrategy, bounded_pairs, reflexive
from rmc.transducer import Transducer


def main() -> None:
    for msb in (True, False):
        t = affine_relation(1, msb_first=msb)
        res = run(t, None, RunConfig(sampling=SamplingStrategy.exponential(2)))
        order = "msb-first" if msb else "lsb-first"
        print(f"== {order}: |T0| = {reflexive(t).n}")
        print(res.summary())
        pairs = bounded_pairs(Transducer(res.automaton), 4)
        width4 = sorted((decode_int(x, msb), decode_int(y, msb)) for x, y in pairs if len(x) == 4)
        ok = all(y >= x for x, y in width4) and len(width4) == 16 * 17 // 2
        print(f"4-bit pairs: {len(width4)}, all of the form y >= x: {ok}")
        print(res.extrapolation.grow.dump())


if __name__ == "__main__":
    main()
