#!/usr/bin/env python3
# Copyright 2026 The ghzcat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force 2^N product-space oracle used to freeze regression fixtures.

Independent of the C++ code: states are built as Kronecker products of
single-atom kets, S+S- is assembled from per-atom lowering operators and
exponentiated with numpy's Hermitian eigensolver. Prints values that are
pasted into tests/fixtures.h.
"""

import numpy as np


def product(factors):
    v = np.array([1.0 + 0j])
    for g, e in factors:  # atom j is bit j, so later atoms are more significant
        v = np.kron(np.array([g, e]), v)
    return v


def coherent(n, theta, phi):
    f = (np.cos(theta / 2), np.exp(-1j * phi) * np.sin(theta / 2))
    return np.exp(1j * n * phi) * product([f] * n)


def spsm(n):
    d = 2**n
    lower = np.zeros((d, d))
    for b in range(d):
        for j in range(n):
            if b >> j & 1:
                lower[b ^ (1 << j), b] += 1
    return lower.T @ lower


def propagate(v, n, tau):
    w, u = np.linalg.eigh(spsm(n))
    return u @ (np.exp(-1j * tau * w) * (u.conj().T @ v))


def prob(bra_params, n, ket):
    return abs(np.vdot(coherent(n, *bra_params), ket)) ** 2


def channels(n, theta, phi, tau, alpha, steps=256):
    betas = -np.pi + 2 * np.pi * np.arange(steps) / steps
    start = coherent(n, theta, phi)
    evolved = propagate(start, n, tau)
    b1 = coherent(n, theta, phi - np.pi * (n - 1) / 2)
    b2 = coherent(n, theta, phi - np.pi * (n - 3) / 2)
    pc = np.array([prob((alpha, b), n, evolved) for b in betas])
    pm = np.array([0.5 * prob((alpha, b), n, b1) + 0.5 * prob((alpha, b), n, b2) for b in betas])
    pn = np.array([prob((alpha, b), n, start) for b in betas])
    return betas, pc, pm, pn


def harmonics(betas, p, n):
    return [abs(np.sum(p * np.exp(-1j * h * betas))) / len(p) for h in range(n + 1)]


def main():
    np.set_printoptions(precision=17)
    for n in (3, 4):
        betas, pc, pm, pn = channels(n, np.pi / 2, -np.pi / 2, np.pi / 2, np.pi / 2)
        print(f"n={n}")
        print(f"  gap_coherent_mixture  = {np.max(abs(pc - pm)):.17g}")
        print(f"  gap_coherent_nocavity = {np.max(abs(pc - pn)):.17g}")
        print(f"  p_coherent[0], [64], [128], [192] = {pc[0]:.17g}, {pc[64]:.17g}, {pc[128]:.17g}, {pc[192]:.17g}")
        print(f"  harmonics coherent = {[f'{x:.17g}' for x in harmonics(betas, pc, n)]}")
        print(f"  harmonics mixture  = {[f'{x:.17g}' for x in harmonics(betas, pm, n)]}")
        print(f"  harmonics nocavity = {[f'{x:.17g}' for x in harmonics(betas, pn, n)]}")
    # detection probability of the N=3 cat at (pi/2, 0)
    n = 3
    cat = propagate(coherent(n, np.pi / 2, -np.pi / 2), n, np.pi / 2)
    print(f"cat3 detection at (pi/2, 0) = {prob((np.pi / 2, 0.0), n, cat):.17g}")
    # coherent overlap n=3, (pi/2,-pi/2) vs (pi/2, 0)
    ov = np.vdot(coherent(3, np.pi / 2, -np.pi / 2), coherent(3, np.pi / 2, 0.0))
    print(f"overlap n=3 = {ov.real:.17g} {ov.imag:+.17g}i")
    ov = np.vdot(coherent(5, 1.1, 0.3), coherent(5, 0.7, -2.0))
    print(f"overlap n=5 (1.1,0.3)|(0.7,-2.0) = {ov.real:.17g} {ov.imag:+.17g}i")


if __name__ == "__main__":
    main()
