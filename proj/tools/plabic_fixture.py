#!/usr/bin/env python3
"""Ice quiver with potential of a Grassmannian Postnikov diagram.

The diagram is described by its face labels: a maximal weakly separated
collection of k-subsets of {1..n}.  Faces meeting at a black vertex share
a (k-1)-subset K (labels K+a), faces meeting at a white vertex lie in a
common (k+1)-subset L (labels L-a).  Each black clique contributes a cycle
ordered by the cyclic order of the added element, each white clique the
reverse order of the removed element.  Black cycles enter the potential
with sign +1 and white cycles with -1.  Boundary intervals are frozen.

Usage: plabic_fixture.py K N LABEL... > out.json
"""
import itertools
import json
import sys


def label(s):
    return "".join(str(x) for x in sorted(s))


def cyclic_sort(items, key, start):
    return sorted(items, key=lambda it: (key(it) - start) % 1000)


def main():
    k, n = int(sys.argv[1]), int(sys.argv[2])
    mutable = [frozenset(int(c) for c in w) for w in sys.argv[3:]]
    frozen = [frozenset(((i + j) % n) + 1 for j in range(k)) for i in range(n)]
    coll = frozen + mutable
    cycles = []
    for K in itertools.combinations(range(1, n + 1), k - 1):
        K = frozenset(K)
        faces = [I for I in coll if K <= I]
        if len(faces) >= 3:
            faces.sort(key=lambda I: min(I - K))
            cycles.append((1, faces))
    for L in itertools.combinations(range(1, n + 1), k + 1):
        L = frozenset(L)
        faces = [I for I in coll if I <= L]
        if len(faces) >= 3:
            faces.sort(key=lambda I: -min(L - I))
            cycles.append((-1, faces))

    arrows = {}
    arrow_list = []
    potential = []
    for sign, faces in cycles:
        ids = []
        for a, b in zip(faces, faces[1:] + faces[:1]):
            key = (label(a), label(b))
            # an interior edge is shared by one black and one white cycle
            if key not in arrows:
                arrows[key] = "x%d" % (len(arrow_list) + 1)
                arrow_list.append({"id": arrows[key], "src": key[0], "tgt": key[1]})
            ids.append(arrows[key])
        potential.append({"sign": sign, "cycle": ids})

    shift = k
    rotation = {label(I): label({((x - 1 + shift) % n) + 1 for x in I}) for I in coll}
    out = {
        "vertices": [label(I) for I in coll],
        "arrows": arrow_list,
        "relations": [],
        "potential": potential,
        "frozen": [label(I) for I in frozen],
        "rotation": rotation,
    }
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
