"""Sector-restricted dense ED of the open spin-1 AKLT chain (numpy/scipy).

Prints the singlet end-to-end correlators for small L to compare against
-4/9 (1 + 6 (-1)^L 3^-L). Independent of the C++ matrix-free path.
"""
import itertools
import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as sla

sz = np.diag([-1.0, 0.0, 1.0])
spl = np.zeros((3, 3)); spl[1, 0] = spl[2, 1] = np.sqrt(2.0)
ss = np.kron(sz, sz) + 0.5 * (np.kron(spl, spl.T) + np.kron(spl.T, spl))


def site_op(op, j, L):
    m = sp.identity(1, format="csr")
    for s in reversed(range(L)):   # site 0 least significant digit
        m = sp.kron(m, sp.csr_matrix(op) if s == j else sp.identity(3), format="csr")
    return m


def run(L, beta):
    ops = {}
    for j in range(L):
        ops[j] = dict(z=site_op(sz, j, L), p=site_op(spl, j, L), m=site_op(spl.T, j, L))
    H = sp.csr_matrix((3**L, 3**L))
    S2 = sp.csr_matrix((3**L, 3**L))
    Sz = sum(ops[j]["z"] for j in range(L))
    for j in range(L - 1):
        b = ops[j]["z"] @ ops[j + 1]["z"] + 0.5 * (ops[j]["p"] @ ops[j + 1]["m"] + ops[j]["m"] @ ops[j + 1]["p"])
        H = H + b + beta * (b @ b)
    Sp = sum(ops[j]["p"] for j in range(L)); Sm = Sp.T
    S2 = Sm @ Sp + Sz @ Sz + Sz
    sec = np.where(np.isclose(Sz.diagonal(), 0))[0]
    Hs = H[sec][:, sec]
    w, v = sla.eigsh(Hs, k=4, which="SA")
    o = np.argsort(w); w = w[o]; v = v[:, o]
    deg = np.abs(w - w[0]) < 1e-8
    V = v[:, deg]
    S2s = S2[sec][:, sec]
    m = V.T @ (S2s @ V)
    ew, ev = np.linalg.eigh(m)
    g = V @ ev[:, 0]
    zd = Sz.diagonal()
    z1 = ops[0]["z"].diagonal()[sec]; zL = ops[L - 1]["z"].diagonal()[sec]
    prob = g**2
    return w[0], ew[0], (prob * z1 * zL).sum(), (prob * z1**2 * zL**2).sum()


for L in (4, 6, 8, 10):
    E, s2, zz, ch = run(L, 1 / 3)
    f = -4 / 9 * (1 + 6 * (-1) ** L * 3.0 ** (-L))
    print(L, "E0=%.12f S2=%.2e zz=%.12f ch=%.12f formula=%.12f dev=%.3e bound=%.3e" % (E, s2, zz, ch, f, abs(zz - f), 10 * 3.0 ** (-L)))
