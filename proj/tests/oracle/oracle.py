#!/usr/bin/env python3
"""Independent brute-force oracle for the classification tables.

Shares no code with the C++ engine. Everything is recomputed from the raw
definitions with straight-line loops:

  * multipartitions by brute-force product of partitions,
  * FLOTW blocks by checking the four conditions node by node,
  * the component permutation by looking up eta_p * Q_i among the Q exponents,
  * orbits by repeated application,
  * a-values with fractions.Fraction, summing the two double sums literally.

Usage:
  oracle.py classify E P DELTA CHARGES N      # TSV, same layout as the CLI
  oracle.py avalue E P DELTA CHARGES LAMBDA  # LAMBDA like "1|" or "2,1||1"
  oracle.py kleshchev E P DELTA CHARGES N ORDER
"""
import itertools
import math
import sys
from fractions import Fraction


def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n, r):
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def multipartitions(n, r):
    for comp in compositions(n, r):
        for combo in itertools.product(*[list(partitions(c)) for c in comp]):
            yield tuple(combo)


def part(lam, k):
    return lam[k - 1] if 1 <= k <= len(lam) else 0


class Spec:
    def __init__(self, e, p, delta, charges):
        self.e, self.p, self.delta, self.v = e, p, delta, list(charges)
        self.f = math.gcd(e, p)
        self.ep = e // self.f
        self.pp = p // self.f
        self.r = delta * self.f * self.pp
        self.L = e * self.pp
        self.fd = self.f * delta
        # w_j for j = (s-1)delta + k
        self.w = [self.v[k] + s * self.ep for s in range(self.f) for k in range(delta)]
        self.m = [Fraction(self.w[j - 1]) - Fraction(j * e, self.fd) + e
                  for j in range(1, self.fd + 1)]

    def q_exponents(self):
        out = []
        for j in range(1, self.pp + 1):
            for l in range(self.f):
                for i in range(self.delta):
                    # eta_p^{l p' + j - 1} eta_e^{v_i} with eta_p = eta_L^{L/p}, eta_e = eta_L^{L/e}
                    out.append(((l * self.pp + j - 1) * (self.L // self.p)
                                + self.v[i] * (self.L // self.e)) % self.L)
        return out

    def varpi(self):
        q = self.q_exponents()
        shift = self.L // self.p
        perm = []
        for i in range(self.r):
            target = (q[i] + shift) % self.L
            hits = [j for j in range(self.r) if q[j] == target]
            assert len(hits) == 1, "oracle needs distinct Q"
            perm.append(hits[0])
        return perm


def is_flotw(lam, spec):
    e, fd, w = spec.e, spec.fd, spec.w
    n = sum(sum(x) for x in lam)
    for c in range(fd):
        nxt = (c + 1) % fd
        shift = w[nxt] - w[c] if nxt != 0 else e + w[0] - w[fd - 1]
        for k in range(1, n + 2):
            if part(lam[c], k) < part(lam[nxt], k + shift):
                return False
    for k in range(1, n + 1):
        residues = set()
        for c in range(fd):
            for a, length in enumerate(lam[c], start=1):
                if length == k:
                    residues.add((k - a + w[c]) % e)
        if len(residues) == e:
            return False
    return True


def lambda1(n, spec):
    out = []
    for lam in multipartitions(n, spec.r):
        blocks = [lam[b * spec.fd:(b + 1) * spec.fd] for b in range(spec.pp)]
        if all(is_flotw(bl, spec) for bl in blocks):
            out.append(lam)
    return out


def apply_perm(lam, perm):
    out = [None] * len(lam)
    for i, comp in enumerate(lam):
        out[perm[i]] = comp
    return tuple(out)


def canonical_key(lam):
    return (tuple(sum(c) for c in lam), tuple(lam))


def orbit(lam, perm):
    orb = [lam]
    cur = apply_perm(lam, perm)
    while cur != lam:
        orb.append(cur)
        cur = apply_perm(cur, perm)
    return orb


def a_block(mu, n, spec):
    betas = []
    for j in range(spec.fd):
        betas.append([Fraction(part(mu[j], s) - s + n) + spec.m[j] for s in range(1, n + 1)])
    first = Fraction(0)
    for i in range(spec.fd):
        for j in range(i, spec.fd):
            for a in betas[i]:
                for b in betas[j]:
                    if i == j and not a > b:
                        continue
                    first += min(a, b)
    second = Fraction(0)
    for i in range(spec.fd):
        for a in betas[i]:
            for j in range(spec.fd):
                for k in range(1, math.floor(a) + 1):
                    second += min(Fraction(k), spec.m[j])
    return first - second


def a_value(lam, spec):
    n = sum(sum(c) for c in lam)
    return sum((a_block(lam[b * spec.fd:(b + 1) * spec.fd], n, spec)
                for b in range(spec.pp)), Fraction(0))


def fmt_lambda(lam):
    return "[" + ",".join("[" + ",".join(str(x) for x in c) + "]" for c in lam) + "]"


def fmt_frac(x):
    return f"{x.numerator}/{x.denominator}"


def classify(n, spec):
    perm = spec.varpi()
    rows = []
    seen = set()
    for lam in lambda1(n, spec):
        if lam in seen:
            continue
        orb = orbit(lam, perm)
        seen.update(orb)
        rep = max(orb, key=canonical_key)
        o = len(orb)
        count = 1 if n == 0 else spec.p // o
        a = a_value(rep, spec)
        for i in range(count):
            rows.append((a, rep, o, i))
    # a ascending, then canonical order (larger key first), then i
    rows.sort(key=lambda t: (t[0], tuple(-x for x in flatten_key(t[1])), t[3]))
    return rows


def flatten_key(lam):
    # Turns the canonical key into a flat integer sequence whose
    # lexicographic order agrees with the key's; negating it reverses it.
    sizes = [sum(c) for c in lam]
    seq = list(sizes)
    for c in lam:
        seq.extend(list(c) + [0] * (sum(sizes) + 1 - len(c)))
    return seq


# -- crystal, used only to explore reading conventions -----------------------

def kleshchev(n, spec, order):
    e, fd, w = spec.e, spec.fd, spec.w
    layer = {tuple(() for _ in range(fd))}
    for _ in range(n):
        nxt = set()
        for lam in layer:
            for i in range(e):
                node = good_node(lam, i, spec, order)
                if node is not None:
                    a, c = node
                    comp = list(lam[c])
                    if a == len(comp):
                        comp.append(1)
                    else:
                        comp[a] += 1
                    nl = list(lam)
                    nl[c] = tuple(comp)
                    nxt.add(tuple(nl))
        layer = nxt
    return layer


def good_node(lam, i, spec, order):
    e, fd, w = spec.e, spec.fd, spec.w
    sig = []
    for c in range(fd):
        comp = lam[c]
        for a in range(len(comp) + 1):
            length = part(comp, a + 1)
            prev = part(comp, a) if a > 0 else math.inf
            if length < prev and (length + 1 - (a + 1) + w[c]) % e == i:
                sig.append(("A", a, c))
            if length > 0 and length > part(comp, a + 2) and (length - (a + 1) + w[c]) % e == i:
                sig.append(("R", a, c))
    # nodes in a row: the removable sits left of the addable; within a row the
    # removable (a, len) precedes addable (a, len+1) on reading top-down
    sig.sort(key=lambda t: (t[2], t[1], 0 if t[0] == "R" else 1))
    if order == "descending":
        sig.reverse()
    stack = []
    for s in sig:
        if s[0] == "A" and stack and stack[-1][0] == "R":
            stack.pop()
        else:
            stack.append(s)
    addables = [s for s in stack if s[0] == "A"]
    if not addables:
        return None
    s = addables[-1] if order != "literal" else addables[0]
    return (s[1], s[2])


def parse_lambda(text, r):
    comps = text.split("|")
    assert len(comps) == r
    return tuple(tuple(int(x) for x in c.split(",")) if c else () for c in comps)


def main(argv):
    cmd = argv[1]
    e, p, delta = int(argv[2]), int(argv[3]), int(argv[4])
    charges = [int(x) for x in argv[5].split(",")]
    spec = Spec(e, p, delta, charges)
    if cmd == "classify":
        n = int(argv[6])
        sys.stdout.write("lambda\to_lambda\ti\ta_value\n")
        for a, rep, o, i in classify(n, spec):
            sys.stdout.write(f"{fmt_lambda(rep)}\t{o}\t{i}\t{fmt_frac(a)}\n")
    elif cmd == "avalue":
        lam = parse_lambda(argv[6], spec.r)
        print(fmt_frac(a_value(lam, spec)))
    elif cmd == "kleshchev":
        n = int(argv[6])
        order = argv[7] if len(argv) > 7 else "ascending"
        for n2 in range(n + 1):
            kl = kleshchev(n2, spec, order)
            fl = [x for x in multipartitions(n2, spec.fd) if is_flotw(x, spec)]
            print(n2, len(kl), len(fl))
    else:
        raise SystemExit(f"unknown command {cmd}")


if __name__ == "__main__":
    main(sys.argv)
