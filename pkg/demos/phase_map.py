"""Map couplings onto magnetic and rotating-frame parameters and back.

The coupling g splits the plane into three confined phases (euclidean
|g| < 1, landau |g| = 1, minkowskian |g| > 1) plus the critical and
supercritical branches that only exist on the extended parameter side.
This demo round-trips rational couplings, classifies a grid of
(Lambda, omegaB) points as a text phase diagram, and maps a few rotating
frames.

Run:  python3 demos/phase_map.py
"""
from fractions import Fraction as F

from riaho import landau
from riaho.coupling import Coupling
from riaho.landau import LandauExtension, RotatingFrame


def main():
    print("round trips g -> (omegaB, Lambda) -> g (exact rationals):")
    for g, w in ((F(1, 2), F(1)), (F(1), F(3)), (F(3), F(2)), (F(-2, 3), F(5, 7))):
        ext = landau.g_to_landau(Coupling(g), w)
        back = landau.landau_to_g(ext)
        print(f"  g = {str(g):>5}, w = {str(w):>4} -> "
              f"omegaB = {str(ext.omegaB):>6}, Lambda = {str(ext.Lambda):>8} -> "
              f"g = {back.g}, phase = {back.phase}")

    print("\nphase diagram over (Lambda, omegaB), Lambda right, omegaB up:")
    print("  E euclidean, L landau, M minkowskian, c critical, s supercritical")
    for num in range(4, -5, -2):
        omega_b = F(num, 2)
        row = []
        for lnum in range(-8, 9, 2):
            lam = F(lnum, 2)
            row.append({"euclidean": "E", "landau": "L", "minkowskian": "M",
                        "critical": "c", "supercritical": "s"}[
                            landau.classify(lam, omega_b)])
        print(f"  omegaB={str(omega_b):>4} | " + " ".join(row))

    print("\nrotating frames (spring k, mass m, frame rate Omega):")
    for k, m, Om in ((F(4), F(1), F(1)), (F(1), F(1), F(1)),
                     (F(1), F(4), F(1)), (F(0), F(1), F(2))):
        res = landau.rotating_frame_to_g(RotatingFrame(k, m, Om))
        g_text = f"g = {res.g}" if res.g is not None else "no finite coupling"
        w_text = f", w = {res.omega}" if res.omega is not None else ""
        print(f"  (k={k}, m={m}, Omega={Om}) -> {res.phase}, {g_text}{w_text}")

    ext = LandauExtension(F(1), F(-4))
    res = landau.landau_to_g(ext)
    print(f"\nsupercritical example (omegaB=1, Lambda=-4): "
          f"phase = {res.phase}, |omega| = {res.omega}")


if __name__ == "__main__":
    main()
