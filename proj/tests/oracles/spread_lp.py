"""Writes the expected LP text of the (v=4, k=2, d=4, f=1) packing model.

Independent of the C++ code: subspaces are built from vector sets, the RREF
is recomputed here, and incidence is tested on explicit vector sets.
"""
import itertools
import sys

V = 4


def rref(vectors):
    rows = []
    for x in vectors:
        for r in rows:
            p = r & -r
            if x & p:
                x ^= r
        if x:
            p = x & -x
            rows = [r ^ x if r & p else r for r in rows]
            rows.append(x)
    return tuple(sorted(rows, key=lambda r: r & -r))


def span(rows):
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return frozenset(out)


def grassmannian(k):
    seen = {}
    for combo in itertools.combinations(range(1, 1 << V), k):
        s = span(combo)
        if len(s) == 1 << k:
            seen.setdefault(rref(combo), s)
    return sorted(seen.items(), key=lambda kv: kv[0])


lines = grassmannian(2)
points = grassmannian(1)
hyperplanes = grassmannian(3)

out = ["Maximize", " obj: " + " + ".join(f"x{i}" for i in range(len(lines))), "Subject To"]
for w, family in ((1, points), (3, hyperplanes)):
    for i, (_, ws) in enumerate(family):
        inc = [j for j, (_, us) in enumerate(lines) if (us <= ws if w == 3 else ws <= us)]
        out.append(f" w{w}_{i}: " + " + ".join(f"x{j}" for j in inc) + " <= 1")
out.append("Binary")
out += [f" x{j}" for j in range(len(lines))]
out.append("End")
sys.stdout.write("\n".join(out) + "\n")
