"""Brute-force combinatorial verdicts for the fixture files.

Reads fixtures/*.json and writes tests/oracles/combinatorics_expected.json.
Independent of the C++ code: graphs are rebuilt from the face lists and
every quantity comes from exhaustive enumeration.

Run: python3 tests/oracles/combinatorics.py
"""
import itertools
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parents[2]


def graph(doc):
    adj = {v: set() for v in doc["vertices"]}
    for f in doc["faces"]:
        for a, b in itertools.combinations(f, 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def components(adj, removed):
    seen = set(removed)
    comps = 0
    for v in adj:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return comps


def verdicts(doc):
    adj = graph(doc)
    faces = {frozenset(f) for f in doc["faces"]}
    vs = sorted(adj)
    triangles = [t for t in itertools.combinations(vs, 3)
                 if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]]
    empty = [t for t in triangles if frozenset(t) not in faces]
    k4 = any(all(b in adj[a] for a, b in itertools.combinations(q, 2))
             for q in itertools.combinations(vs, 4))
    squares = []
    for q in itertools.combinations(vs, 4):
        for a, b, c, d in [(q[0], q[1], q[2], q[3]), (q[0], q[1], q[3], q[2]), (q[0], q[2], q[1], q[3])]:
            if b in adj[a] and c in adj[b] and d in adj[c] and a in adj[d]:
                squares.append((a, b, c, d))
    chordless = [s for s in squares if s[2] not in adj[s[0]] and s[3] not in adj[s[1]]]
    sep3 = [t for t in triangles if components(adj, t) >= 2]
    sep4 = [s for s in squares if components(adj, s) >= 2]
    flag = not empty and not k4
    complete = all(b in adj[a] for a, b in itertools.combinations(vs, 2))
    edges = sum(len(n) for n in adj.values()) // 2
    return {
        "vertices": len(vs),
        "edges": edges,
        "faces": len(doc["faces"]),
        "flag": flag,
        "four_clique": k4,
        "empty_triangles": len(empty),
        "chordless_squares": len(chordless),
        "separating_3_cycles": len(sep3),
        "separating_4_cycles": len(sep4),
        "flag_no_square_cliques": flag and not chordless,
        "flag_no_square_separation": not complete and not sep3 and not sep4,
    }


if __name__ == "__main__":
    out = {}
    for path in sorted((ROOT / "fixtures").glob("*.json")):
        out[path.stem] = verdicts(json.loads(path.read_text()))
    target = ROOT / "tests" / "oracles" / "combinatorics_expected.json"
    target.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print("wrote", target)
