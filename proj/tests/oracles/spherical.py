"""High-precision spherical trigonometry values used by the tests.

Angles from sides by the law of cosines, sides from angles by the polar law,
the icosahedral circle radius, and the closed-form (2,2,2) duality
parameters of an equilateral triangle. Writes spherical_expected.json.

Run: python3 tests/oracles/spherical.py
"""
import json
import pathlib

from mpmath import mp, acos, cos, sin, pi, sqrt, mpf

mp.dps = 40


def angles_from_sides(a, b, c):
    A = acos((cos(a) - cos(b) * cos(c)) / (sin(b) * sin(c)))
    B = acos((cos(b) - cos(c) * cos(a)) / (sin(c) * sin(a)))
    C = acos((cos(c) - cos(a) * cos(b)) / (sin(a) * sin(b)))
    return A, B, C


def sides_from_angles(A, B, C):
    a = acos((cos(A) + cos(B) * cos(C)) / (sin(B) * sin(C)))
    b = acos((cos(B) + cos(C) * cos(A)) / (sin(C) * sin(A)))
    c = acos((cos(C) + cos(A) * cos(B)) / (sin(A) * sin(B)))
    return a, b, c


def f(x):
    return float(mp.nstr(x, 20))


if __name__ == "__main__":
    t = mpf(1)
    out = {
        "angles_1_05_06": [f(x) for x in angles_from_sides(mpf(1), mpf("0.5"), mpf("0.6"))],
        "sides_235": [f(x) for x in sides_from_angles(pi / 2, pi / 3, pi / 5)],
        "icosahedron_radius": f(acos(mpf(5) ** (-mpf(1) / 4))),
        "icosahedron_angle": f(2 * pi / 5),
        "dual_222_equilateral_1": f(sqrt(cos(t) * cos(t) / cos(t))),
        "area_octant": f(pi / 2),
    }
    target = pathlib.Path(__file__).resolve().parent / "spherical_expected.json"
    target.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print("wrote", target)
