"""Reachable configurations of the token ring, with a brute-force cross-check."""

from rmc.automata import bounded_language, minimize
from rmc.builders import initial_token_ring, token_ring
from rmc.engine import RunConfig, run
from rmc.textio import emit_text
from rmc.transducer import bounded_pairs, reflexive


def brute_force(n: int) -> set:
    step = {p for p in bounded_pairs(token_ring(), n) if len(p[0]) == n}
    seen = {w for w in bounded_language(initial_token_ring(), n) if len(w) == n}
    todo = list(seen)
    while todo:
        x = todo.pop()
        for a, b in step:
            if a == x and b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def main() -> None:
    t, a = token_ring(), initial_token_ring()
    res = run(t, a, RunConfig(mode="reach"))
    print(res.summary())
    print(f"|A| = {minimize(a).n}, |T0| = {reflexive(t).n}, |T*(A)| = {res.automaton.n}")
    print(emit_text(res.automaton, "reachable configurations"))
    for n in range(1, 7):
        got = {w for w in bounded_language(res.automaton, n) if len(w) == n}
        print(f"n = {n}: {len(got)} configurations, brute force agrees: {got == brute_force(n)}")


if __name__ == "__main__":
    main()
