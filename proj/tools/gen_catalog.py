#!/usr/bin/env python3
"""Regenerate data/catalog.txt from concrete group constructions.

Each group is built as an explicit multiplication rule, a central series
refinement is found greedily from the bottom up, and the power and
commutator relations are read off by enumerating normal forms. The
commutator convention is [x, y] = x^-1 y^-1 x y, so that g_j g_i =
g_i g_j [g_j, g_i].
"""
import itertools
import sys


class Group:
    def __init__(self, name, elems, mul, one):
        self.name, self.elems, self.mul, self.one = name, list(elems), mul, one
        self.inv = {}
        for x in self.elems:
            for y in self.elems:
                if mul(x, y) == one:
                    self.inv[x] = y
                    break

    def power(self, x, e):
        r = self.one
        for _ in range(e):
            r = self.mul(r, x)
        return r

    def comm(self, x, y):
        m, i = self.mul, self.inv
        return m(m(i[x], i[y]), m(x, y))

    def closure(self, gens):
        seen = {self.one}
        frontier = [self.one]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def metacyclic(name, M, N, r, s):
    # elements a^i b^j, b a b^-1 = a^r, b^N = a^s
    def mul(x, y):
        i, j = x
        k, l = y
        return ((i + pow(r, j, M) * k + s * ((j + l) // N)) % M, (j + l) % N)
    return Group(name, [(i, j) for i in range(M) for j in range(N)], mul, (0, 0))


def abelian(name, orders):
    def mul(x, y):
        return tuple((a + b) % o for a, b, o in zip(x, y, orders))
    return Group(name, itertools.product(*[range(o) for o in orders]), mul,
                 tuple(0 for _ in orders))


def direct(name, g, h):
    def mul(x, y):
        return (g.mul(x[0], y[0]), h.mul(x[1], y[1]))
    return Group(name, [(x, y) for x in g.elems for y in h.elems], mul, (g.one, h.one))


def semidirect_cyclic(name, base, n, act):
    # base x C_n, with c x c^-1 = act(x); act must have order dividing n
    def act_pow(x, j):
        for _ in range(j):
            x = act(x)
        return x

    def mul(x, y):
        (k1, j1), (k2, j2) = x, y
        return (base.mul(k1, act_pow(k2, j1)), (j1 + j2) % n)
    return Group(name, [(k, j) for k in base.elems for j in range(n)], mul, (base.one, 0))


def pc_sequence(G, p):
    order = len(G.elems)
    chain = []          # bottom-up: chain[0] is the last pc generator
    sub = {G.one}
    while len(sub) < order:
        for g in G.elems:
            if g in sub:
                continue
            if G.power(g, p) not in sub:
                continue
            if any(G.comm(g, x) not in sub for x in G.elems):
                continue
            chain.append(g)
            sub = G.closure(chain)
            break
        else:
            raise RuntimeError("no central series step for " + G.name)
    return list(reversed(chain))


def relations(G, p, gens):
    n = len(gens)
    nf = {}
    for exps in itertools.product(range(p), repeat=n):
        x = G.one
        for g, e in zip(gens, exps):
            x = G.mul(x, G.power(g, e))
        nf[x] = exps
    assert len(nf) == len(G.elems), G.name
    pows, comms = {}, {}
    for i, g in enumerate(gens):
        e = nf[G.power(g, p)]
        assert all(v == 0 for v in e[: i + 1])
        if any(e):
            pows[i + 1] = e
    for j in range(n):
        for i in range(j):
            e = nf[G.comm(gens[j], gens[i])]
            assert all(v == 0 for v in e[: j + 1])
            if any(e):
                comms[(j + 1, i + 1)] = e
    return pows, comms


def fingerprint(G):
    def order(x):
        k, y = 1, x
        while y != G.one:
            y, k = G.mul(y, x), k + 1
        return k
    stats = tuple(sorted(order(x) for x in G.elems))
    centre = [z for z in G.elems if all(G.mul(z, x) == G.mul(x, z) for x in G.elems)]
    derived = G.closure([G.comm(x, y) for x in G.elems for y in G.elems])
    zstats = tuple(sorted(order(z) for z in centre))
    squares = len({G.mul(x, x) for x in G.elems})
    return (stats, zstats, len(derived), squares)


def word(e):
    return " ".join(f"g{k + 1}^{v}" for k, v in enumerate(e) if v)


def groups_for(p):
    out = [abelian(f"C{p}", [p]),
           abelian(f"C{p*p}", [p * p]),
           abelian(f"C{p}xC{p}", [p, p]),
           abelian(f"C{p**3}", [p ** 3]),
           abelian(f"C{p*p}xC{p}", [p * p, p]),
           abelian(f"C{p}xC{p}xC{p}", [p, p, p])]
    if p == 2:
        out += [metacyclic("D8", 4, 2, 3, 0), metacyclic("Q8", 4, 2, 3, 2)]
    else:
        base = abelian("", [p, p])
        out += [semidirect_cyclic(f"Heis{p**3}", base, p,
                                  lambda x: (x[0], (x[1] + x[0]) % p)),
                metacyclic(f"M{p**3}", p * p, p, 1 + p, 0)]
    if p == 2:
        c2 = abelian("C2", [2])
        c4c2 = abelian("", [4, 2])
        out += [
            abelian("C16", [16]),
            abelian("C4xC4", [4, 4]),
            semidirect_cyclic("C4xC2:C2", c4c2, 2,
                              lambda x: (x[0], (x[1] + x[0]) % 2)),
            metacyclic("C4:C4", 4, 4, 3, 0),
            abelian("C8xC2", [8, 2]),
            metacyclic("M16", 8, 2, 5, 0),
            metacyclic("D16", 8, 2, 7, 0),
            metacyclic("SD16", 8, 2, 3, 0),
            metacyclic("Q16", 8, 2, 7, 4),
            abelian("C4xC2xC2", [4, 2, 2]),
            direct("C2xD8", c2, metacyclic("", 4, 2, 3, 0)),
            direct("C2xQ8", c2, metacyclic("", 4, 2, 3, 2)),
            semidirect_cyclic("C4oD8", c4c2, 2,
                              lambda x: ((x[0] + 2 * x[1]) % 4, x[1])),
            abelian("C2xC2xC2xC2", [2, 2, 2, 2]),
        ]
    return out


def main():
    print("# Built-in catalog of small p-groups as power-commutator presentations.")
    print("# Regenerate with tools/gen_catalog.py.")
    for p in (2, 3, 5):
        gs = groups_for(p)
        for size in sorted({len(g.elems) for g in gs}):
            same = [g for g in gs if len(g.elems) == size]
            fps = {fingerprint(g) for g in same}
            assert len(fps) == len(same), f"isomorphic duplicates at order {size}"
        for G in gs:
            gens = pc_sequence(G, p)
            pows, comms = relations(G, p, gens)
            print(f"group {G.name} p={p} n={len(gens)}")
            for i, e in sorted(pows.items()):
                print(f"pow {i} = {word(e)}")
            for (j, i), e in sorted(comms.items()):
                print(f"comm {j} {i} = {word(e)}")
            print("end")


if __name__ == "__main__":
    sys.exit(main())
