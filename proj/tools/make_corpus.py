"""Writes corpus/monoids/*.json and corpus/entries.json.

Expected values for finite monoids come from the brute-force oracles below,
which share no code with the C++ library.
"""

import itertools
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def cayley(table, identity=0):
    return {"kind": "cayley", "size": len(table), "identity": identity, "table": table}


def truncated(cap):
    return cayley([[min(a + b, cap) for b in range(cap + 1)] for a in range(cap + 1)])


def cyclic(n):
    return cayley([[(a + b) % n for b in range(n)] for a in range(n)])


def residues(n):
    return cayley([[(a * b) % n for b in range(n)] for a in range(n)], 1)


# {e, x, y, z} with x + x = x, y + y = y and z = x + y absorbing.
SEMILATTICE = cayley([[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]])


def flatten(m):
    """Cayley table of a finite monoid or a direct sum of them, elements in
    lexicographic order of their component indices."""
    if m["kind"] == "cayley":
        return m["table"], m["identity"]
    parts = [flatten(c) for c in m["components"]]
    tuples = list(itertools.product(*[range(len(t)) for t, _ in parts]))
    index = {t: i for i, t in enumerate(tuples)}
    table = [[index[tuple(parts[k][0][a[k]][b[k]] for k in range(len(parts)))] for b in tuples] for a in tuples]
    return table, index[tuple(e for _, e in parts)]


def cancellative(t):
    n = len(t)
    return all(t[a][b] != t[a][c] for a in range(n) for b in range(n) for c in range(n) if b != c)


def quasi_zero(t):
    n = len(t)
    return [x for x in range(n) if any(t[x][y] == y for y in range(n))]


def groth_classes(t):
    """Union-find over pairs (a, b) ~ (c, d) iff a+d+m = b+c+m for some m."""
    n = len(t)
    pairs = [(a, b) for a in range(n) for b in range(n)]
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (a, b) in enumerate(pairs):
        for j, (c, d) in enumerate(pairs):
            if any(t[t[a][d]][m] == t[t[b][c]][m] for m in range(n)):
                parent[find(i)] = find(j)
    return [find(i) for i in range(len(pairs))], n


def groth_order(t):
    cls, _ = groth_classes(t)
    return len(set(cls))


def canonical_injective(t, e):
    cls, n = groth_classes(t)
    img = [cls[a * n + e] for a in range(n)]
    return len(set(img)) == n


def monomials_nzd(t, q):
    n = len(t)
    for m in range(n):
        for f in itertools.product(range(q), repeat=n):
            if any(f):
                prod = [0] * n
                for j, c in enumerate(f):
                    prod[t[m][j]] = (prod[t[m][j]] + c) % q
                if not any(prod):
                    return False
    return True


def group_ring_injective(t, e, q):
    cls, n = groth_classes(t)
    img = [cls[a * n + e] for a in range(n)]
    keys = sorted(set(img))
    for f in itertools.product(range(q), repeat=n):
        if any(f):
            out = {k: 0 for k in keys}
            for j, c in enumerate(f):
                out[img[j]] = (out[img[j]] + c) % q
            if not any(out.values()):
                return False
    return True


FINITE = {
    "t2": truncated(2),
    "t3": truncated(3),
    "z2": cyclic(2),
    "z4": cyclic(4),
    "z6_add": cyclic(6),
    "z6_mul": residues(6),
    "semilattice4": SEMILATTICE,
    "z2_plus_t2": {"kind": "direct_sum", "components": [cyclic(2), truncated(2)]},
    "z2_plus_z2": {"kind": "direct_sum", "components": [cyclic(2), cyclic(2)]},
}

# Abelian group structure of G for the finite monoids, checked against the
# class count below.
TORSION = {
    "t2": [], "t3": [], "z2": [2], "z4": [4], "z6_add": [6], "z6_mul": [],
    "semilattice4": [], "z2_plus_t2": [2], "z2_plus_z2": [2, 2],
}

INFINITE = {
    "free0": {"kind": "free", "rank": 0},
    "free1": {"kind": "free", "rank": 1},
    "free2": {"kind": "free", "rank": 2},
    "free3": {"kind": "free", "rank": 3},
    "lattice2": {"kind": "lattice", "rank": 2},
    # <2, 3> in N: a = 2, b = 3 with 3a = 2b.
    "semigroup23": {"kind": "presentation", "generators": 2, "relations": [[[3, 0], [0, 2]]]},
    # N x Z/2: the second generator has order 2.
    "n_x_z2": {"kind": "presentation", "generators": 2, "relations": [[[0, 2], [0, 0]]]},
    "z4_presented": {"kind": "presentation", "generators": 1, "relations": [[[4], [0]]]},
    # Z^2 as x1, x2, y1, y2 with xi + yi = 0.
    "z2_lattice_presented": {"kind": "presentation", "generators": 4,
                             "relations": [[[1, 0, 1, 0], [0, 0, 0, 0]], [[0, 1, 0, 1], [0, 0, 0, 0]]]},
    "z3_lattice_presented": {"kind": "presentation", "generators": 6,
                             "relations": [[[1 if j in (i, i + 3) else 0 for j in range(6)], [0] * 6]
                                           for i in range(3)]},
    "free2_plus_z2": {"kind": "direct_sum", "components": [{"kind": "free", "rank": 2}, cyclic(2)]},
}

MALFORMED = {
    # Commutative with identity 0, but (1+1)+2 = 0 while 1+(1+2) = 1.
    "bad_assoc": cayley([[0, 1, 2], [1, 2, 1], [2, 1, 0]]),
    "bad_commutative": cayley([[0, 1, 2], [1, 1, 1], [2, 2, 2]]),
    "bad_shape": {"kind": "cayley", "size": 3, "identity": 0, "table": [[0, 1], [1, 0]]},
}


def main():
    for name, m in {**FINITE, **INFINITE, **MALFORMED}.items():
        (ROOT / "monoids" / f"{name}.json").write_text(json.dumps(m) + "\n")
    (ROOT / "monoids" / "not_json.json").write_text('{"kind": "free", "rank": \n')

    entries = []
    for name, m in FINITE.items():
        t, e = flatten(m)
        order = groth_order(t)
        tor = TORSION[name]
        assert order == (1 if not tor else __import__("math").prod(tor)), name
        qz = quasi_zero(t)
        canc = cancellative(t)
        entries.append({
            "name": f"{name}-check", "command": "monoid check", "monoid": f"monoids/{name}.json",
            "expected": {"cancellative": canc, "quasi_zero_size": len(qz), "size": len(t),
                         "groth_trivial": order == 1, "canonical_injective": canonical_injective(t, e)},
            "source": "brute-force cancellation, quasi-zero and pair-class enumeration",
        })
        entries.append({
            "name": f"{name}-groth", "command": "groth compute", "monoid": f"monoids/{name}.json",
            "expected": {"free_rank": 0, "torsion": tor, "order": order},
            "source": "pair-class count",
        })
        for q in (2, 6):
            entries.append({
                "name": f"{name}-nzd-z{q}", "command": "mring nzd", "monoid": f"monoids/{name}.json",
                "ring": {"kind": "Zmod", "n": q},
                "expected": {"cancellative": canc, "canonical_injective": canonical_injective(t, e),
                             "monomials_nonzerodivisors": monomials_nzd(t, q),
                             "group_ring_injective": group_ring_injective(t, e, q)},
                "source": "exhaustive search over all ring elements",
            })

    structures = {
        "free0": (0, []), "free1": (1, []), "free2": (2, []), "free3": (3, []), "lattice2": (2, []),
        "semigroup23": (1, []), "n_x_z2": (1, [2]), "z4_presented": (0, [4]),
        "z2_lattice_presented": (2, []), "z3_lattice_presented": (3, []), "free2_plus_z2": (2, [2]),
    }
    for name, (r, tor) in structures.items():
        entries.append({
            "name": f"{name}-groth", "command": "groth compute", "monoid": f"monoids/{name}.json",
            "expected": {"free_rank": r, "torsion": tor},
            "source": "hand Smith form of the relation matrix",
        })
        if tor:
            exp = {"torsion_free": False, "witness": {"order": tor[0]}}
        else:
            exp = {"torsion_free": True, "rank": r}
        entries.append({
            "name": f"{name}-order", "command": "groth order", "monoid": f"monoids/{name}.json",
            "expected": exp, "source": "torsion-free iff no invariant factor",
        })
    entries.append({"name": "free2-check", "command": "monoid check", "monoid": "monoids/free2.json",
                    "expected": {"cancellative": True}, "source": "free monoids cancel"})
    for name, axiom in (("bad_assoc", "associativity"), ("bad_commutative", "commutativity")):
        entries.append({"name": f"{name}-rejected", "command": "monoid check", "monoid": f"monoids/{name}.json",
                        "expected_error": {"error": "axiom-violation", "axiom": axiom},
                        "source": "table validation"})
    entries.append({"name": "bad_shape-rejected", "command": "monoid check", "monoid": "monoids/bad_shape.json",
                    "expected_error": {"error": "invalid-input"}, "source": "table validation"})

    entries += [
        {"name": "z12-units-1-4", "command": "localize units", "ring": {"kind": "Zmod", "n": 12}, "sgens": [1, 4],
         "expected": {"units": 2, "groth_order": 2, "iso": True, "saturation": [1, 2, 4, 5, 7, 8, 10, 11]},
         "source": "Z/12 localized at 4 is Z/3; the saturation is the residues prime to 3"},
        {"name": "z12-units-nzd", "command": "localize units", "ring": {"kind": "Zmod", "n": 12},
         "sgens": [1, 5, 7, 11],
         "expected": {"units": 4, "groth_order": 4, "iso": True, "groth_order_of_S": 4, "embedding": True},
         "source": "inverting units changes nothing"},
        {"name": "z6-units-2", "command": "localize units", "ring": {"kind": "Zmod", "n": 6}, "sgens": [2],
         "expected": {"units": 2, "groth_order": 2, "iso": True}, "source": "Z/6 localized at 2 is Z/3"},
        {"name": "z5x-decompose", "command": "localize decompose", "monoid": "monoids/free1.json",
         "ring": {"kind": "Zmod", "n": 5}, "sgens": [[[1, [1]]]],
         "fraction": {"num": [[2, [1]], [1, [3]]], "den": [[1, [2]]]},
         "expected": {"components": {"[[0],[1]]": {"num": [[2, [1]]], "den": [[1, [2]]]},
                                     "[[1],[0]]": {"num": [[1, [3]]], "den": [[1, [2]]]}},
                      "integer_keys": {"[[0],[1]]": -1, "[[1],[0]]": 1}},
         "source": "split the numerator by degree; keys are reduced pairs"},
        {"name": "zx-decompose-even", "command": "localize decompose", "monoid": "monoids/free1.json",
         "ring": {"kind": "Z"}, "sgens": [[[1, [2]]]],
         "fraction": {"num": [[3, [0]], [-1, [5]]], "den": [[1, [4]]]},
         "expected": {"integer_keys": {"[[0],[4]]": -4, "[[1],[0]]": 1}},
         "source": "split the numerator by degree; keys are reduced pairs"},
        {"name": "z5-free1-iso", "command": "iso verify", "monoid": "monoids/free1.json",
         "ring": {"kind": "Zmod", "n": 5}, "sgens": [], "samples": 100,
         "expected": {"hom_ok": True, "injective_ok": True, "roundtrip_ok": True, "samples": 100},
         "source": "randomized round trip"},
        {"name": "z-powers-of-2-iso", "command": "iso verify", "monoid": "monoids/free1.json",
         "ring": {"kind": "Z"}, "sgens": [2], "samples": 100,
         "expected": {"hom_ok": True, "injective_ok": True, "roundtrip_ok": True},
         "source": "randomized round trip"},
        {"name": "z3-cyclic2-iso", "command": "iso verify", "monoid": "monoids/z2.json",
         "ring": {"kind": "Zmod", "n": 3}, "samples": 50,
         "expected": {"hom_ok": True, "injective_ok": True, "roundtrip_ok": True},
         "source": "randomized round trip"},
        {"name": "laurent-rank2", "command": "iso laurent", "ring": {"kind": "Zmod", "n": 5}, "rank": 2,
         "expected": {"roundtrip_ok": True}, "source": "exact Laurent round trip"},
    ]
    (ROOT / "entries.json").write_text(json.dumps(entries, indent=1) + "\n")


if __name__ == "__main__":
    main()
