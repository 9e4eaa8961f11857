"""Regenerates oracles.hpp. Needs mpmath, numpy and PyWavelets.

Every value here is computed independently of the C++ library: closed-form
integrals by mpmath, Daubechies filters and cascade samples by PyWavelets.
"""
import pathlib

import numpy as np
import pywt
from mpmath import erfc, mp, mpf, pi, sqrt

mp.dps = 30
out = []


def scalar(name, value):
    out.append(f"inline constexpr double {name} = {mp.nstr(value, 20)};")


def array(name, values):
    body = ", ".join(repr(float(v)) for v in values)
    out.append(f"inline constexpr double {name}[] = {{{body}}};")


# int |e^{-pi x^2}|^p dx = p^{-1/2}
scalar("kGaussianL2", mpf(2) ** mpf(-0.25))
scalar("kGaussianL1", 1)
scalar("kGaussianL4", mpf(4) ** mpf(-0.125))
# (int x^2 e^{-2 pi x^2} dx)^{1/2}
scalar("kGaussianXWeightedL2", sqrt(1 / (4 * sqrt(2) * pi)))
# spectral energy of e^{-pi x^2} beyond |zeta| > b is erfc(sqrt(2 pi) b) / sqrt(2)
b4 = 4 / sqrt(2 * pi)
scalar("kGaussianBand4", b4)
scalar("kGaussianLeakFraction4", erfc(sqrt(2 * pi) * b4))

for k in range(2, 11):
    array(f"kDb{k}Filter", pywt.Wavelet(f"db{k}").rec_lo)

# Exact dyadic values of the db4 scaling function and wavelet: integer values
# from the eigenvector of the two-scale matrix, then dyadic refinement.
h = np.array(pywt.Wavelet("db4").rec_lo)
g = np.array(pywt.Wavelet("db4").rec_hi)
S = len(h) - 1
M = np.zeros((S + 1, S + 1))
for n in range(S + 1):
    for m in range(S + 1):
        if 0 <= 2 * n - m <= S:
            M[n, m] = np.sqrt(2) * h[2 * n - m]
vals, vecs = np.linalg.eig(M)
v = np.real(vecs[:, np.argmin(np.abs(vals - 1))])
v = v / v.sum()
phi_cache = {(0, n): v[n] for n in range(S + 1)}


def phi_at(num, level):
    """phi(num / 2^level)."""
    while level > 0 and num % 2 == 0:
        num //= 2
        level -= 1
    if num < 0 or num > S << level:
        return 0.0
    if (level, num) in phi_cache:
        return phi_cache[(level, num)]
    val = np.sqrt(2) * sum(h[k] * phi_at(num - (k << (level - 1)), level - 1) for k in range(S + 1))
    phi_cache[(level, num)] = val
    return val


def psi_at(num, level):
    return np.sqrt(2) * sum(g[k] * phi_at(2 * num - (k << level), level) for k in range(S + 1))


points = [0.5, 1.0, 1.75, 2.25, 3.0, 4.125, 5.5]
array("kDb4SamplePoints", points)
array("kDb4Phi", [phi_at(int(t * 8), 3) for t in points])
array("kDb4Psi", [psi_at(int(t * 8), 3) for t in points])

# One level of the periodized pyramid transform on a fixed ramp signal.
signal = np.sin(np.linspace(0.0, 3.0, 16)) + np.linspace(0.0, 1.0, 16) ** 2
approx, detail = pywt.dwt(signal, "db2", mode="periodization")
array("kPyramidSignal", signal)
array("kPyramidApproxDb2", approx)
array("kPyramidDetailDb2", detail)

text = "#pragma once\n\n// Generated by generate_oracles.py. Do not edit by hand.\n\nnamespace oracle {\n\n"
text += "\n".join(out) + "\n\n} // namespace oracle\n"
pathlib.Path(__file__).with_name("oracles.hpp").write_text(text)
