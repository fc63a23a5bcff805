"""Ready-made models: the token ring and binary affine relations."""

from __future__ import annotations

from .automata import Alphabet, Automaton, determinize, minimize
from .transducer import Transducer, pair_alphabet

TOKEN = Alphabet.of("N", "T")
BITS = Alphabet.of("0", "1")


def token_ring() -> Transducer:
    """One step of a token passed rightwards around a ring.

    (N,N)*(T,N)(N,T)(N,N)*  plus the wrap-around  (N,T)(N,N)*(T,N).
    """
    p = pair_alphabet(TOKEN)
    nn, tn, nt = p.id("N/N"), p.id("T/N"), p.id("N/T")
    trans = [
        (0, nn, 0), (0, tn, 1), (1, nt, 2), (2, nn, 2),
        # last process hands the token back to the first
        (3, nt, 4), (4, nn, 4), (4, tn, 5),
    ]
    a = Automaton(p, 6, [0, 3], [2, 5], trans)
    return Transducer(minimize(determinize(a)))


def initial_token_ring() -> Automaton:
    """Token at the first process: ``T N*``."""
    t, n = TOKEN.id("T"), TOKEN.id("N")
    return minimize(Automaton(TOKEN, 2, [0], [1], [(0, t, 1), (1, n, 1)]))


def affine_relation(c: int, msb_first: bool = False) -> Transducer:
    """Pairs ``(x, x + c)`` of equal-length binary words.

    Two's complement, least significant bit first by default (the last
    letter carries the sign, so sign-extension bits may be appended).
    ``msb_first`` reads the sign bit first instead.
    """
    if msb_first:
        return _affine_msb(c)
    p = pair_alphabet(BITS)
    # a state is (pending residual, whether the word may stop here)
    ids: dict[tuple[int, bool], int] = {(c, False): 0}
    order = [(c, False)]
    trans = []
    i = 0
    while i < len(order):
        r, _ = order[i]
        for a in (0, 1):
            for b in (0, 1):
                d = b - a
                if (r - d) % 2:
                    continue
                nxt = ((r - d) // 2, r + d == 0)
                j = ids.get(nxt)
                if j is None:
                    j = ids[nxt] = len(order)
                    order.append(nxt)
                trans.append((i, p.id(f"{a}/{b}"), j))
        i += 1
    acc = [k for k, (_, stop) in enumerate(order) if stop]
    return Transducer(minimize(Automaton(p, len(order), [0], acc, trans)))


def _affine_msb(c: int) -> Transducer:
    # states: 0 = nothing read, 1 + k = difference y - x of the prefix is D_k.
    # Once |D| exceeds |c| the remaining bits cannot bring it back.
    p = pair_alphabet(BITS)
    bound = abs(c)
    diffs = list(range(-bound, bound + 1))
    sid = {dv: 1 + k for k, dv in enumerate(diffs)}
    trans = []
    for a in (0, 1):
        for b in (0, 1):
            s = p.id(f"{a}/{b}")
            first = a - b
            if first in sid:
                trans.append((0, s, sid[first]))
            for dv in diffs:
                nxt = 2 * dv + b - a
                if nxt in sid:
                    trans.append((sid[dv], s, sid[nxt]))
    return Transducer(minimize(Automaton(p, len(diffs) + 1, [0], [sid[c]], trans)))


def encode_int(x: int, width: int, msb_first: bool = False) -> str:
    """Two's-complement word of exactly ``width`` bits."""
    if width < 1 or not -(1 << (width - 1)) <= x < (1 << (width - 1)):
        raise ValueError(f"{x} does not fit in {width} bits")
    w = "".join(str((x >> k) & 1) for k in range(width))
    return w[::-1] if msb_first else w


def decode_int(bits, msb_first: bool = False) -> int:
    bits = [int(b) for b in bits]
    if not bits:
        raise ValueError("the empty word encodes no integer")
    if msb_first:
        bits = bits[::-1]
    v = sum(b << k for k, b in enumerate(bits[:-1]))
    return v - (bits[-1] << (len(bits) - 1))
