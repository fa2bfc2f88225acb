#!/usr/bin/env python3
"""Generate the electronic-structure data bundled under crates/vbvqe/data/.

Everything here is the *external oracle* for the Rust crate: Gaussian
integrals (McMurchie-Davidson scheme), restricted Hartree-Fock, FCIDUMP
export, an independent occupation-basis FCI, and an independent
parity-mapping / Z2-tapering path used to produce the pre-mapped 6-qubit
Pauli-sum files.  The Rust code never depends on this script at runtime;
tests compare against its frozen outputs.

Usage:  python3 tools/generate_hamiltonians.py [outdir]
"""

import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.0 / 0.52917721067


# ----------------------------------------------------------------------
# Basis sets (exponents/coefficients over normalized primitives)
# ----------------------------------------------------------------------

STO3G_H = [("s", [3.42525091, 0.62391373, 0.16885540],
            [0.15432897, 0.53532814, 0.44463454])]

G631_H = [("s", [18.7311370, 2.8253937, 0.6401217],
           [0.03349460, 0.23472695, 0.81375733]),
          ("s", [0.1612778], [1.0])]

STO3G_LI = [("s", [16.1195750, 2.9362007, 0.7946505],
             [0.15432897, 0.53532814, 0.44463454]),
            ("s", [0.6362897, 0.1478601, 0.0480887],
             [-0.09996723, 0.39951283, 0.70011547]),
            ("p", [0.6362897, 0.1478601, 0.0480887],
             [0.15591627, 0.60768372, 0.39195739])]

BASIS_SETS = {"sto-3g": {"H": STO3G_H, "Li": STO3G_LI},
              "6-31g": {"H": G631_H}}

CHARGES = {"H": 1, "Li": 3}


@dataclass
class Primitive:
    exponent: float
    coefficient: float


@dataclass
class BasisFunction:
    center: np.ndarray
    momenta: tuple  # Cartesian (l, m, n)
    primitives: list = field(default_factory=list)

    def normalize(self):
        l, m, n = self.momenta
        # normalize each primitive, then the contraction
        for p in self.primitives:
            a = p.exponent
            norm = (2 * a / math.pi) ** 0.75 * (4 * a) ** ((l + m + n) / 2.0)
            norm /= math.sqrt(df(2 * l - 1) * df(2 * m - 1) * df(2 * n - 1))
            p.coefficient *= norm
        s = 0.0
        for pa in self.primitives:
            for pb in self.primitives:
                s += pa.coefficient * pb.coefficient * primitive_overlap(
                    pa.exponent, self.momenta, self.center,
                    pb.exponent, self.momenta, self.center)
        for p in self.primitives:
            p.coefficient /= math.sqrt(s)


def df(k):
    """double factorial with df(-1) = 1"""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


# ----------------------------------------------------------------------
# McMurchie-Davidson integrals
# ----------------------------------------------------------------------

def hermite_e(i, j, t, q_dist, a, b):
    """Hermite expansion coefficient E_t^{ij} for one Cartesian direction."""
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-q * q_dist * q_dist)
    if j == 0:
        return (hermite_e(i - 1, j, t - 1, q_dist, a, b) / (2 * p)
                - (q * q_dist / a) * hermite_e(i - 1, j, t, q_dist, a, b)
                + (t + 1) * hermite_e(i - 1, j, t + 1, q_dist, a, b))
    return (hermite_e(i, j - 1, t - 1, q_dist, a, b) / (2 * p)
            + (q * q_dist / b) * hermite_e(i, j - 1, t, q_dist, a, b)
            + (t + 1) * hermite_e(i, j - 1, t + 1, q_dist, a, b))


def primitive_overlap(a, lmn1, coord_a, b, lmn2, coord_b):
    s = 1.0
    for k in range(3):
        s *= hermite_e(lmn1[k], lmn2[k], 0, coord_a[k] - coord_b[k], a, b)
    return s * (math.pi / (a + b)) ** 1.5


def primitive_kinetic(a, lmn1, coord_a, b, lmn2, coord_b):
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * primitive_overlap(a, lmn1, coord_a, b, lmn2, coord_b)
    term1 = -2 * b * b * (
        primitive_overlap(a, lmn1, coord_a, b, (l2 + 2, m2, n2), coord_b)
        + primitive_overlap(a, lmn1, coord_a, b, (l2, m2 + 2, n2), coord_b)
        + primitive_overlap(a, lmn1, coord_a, b, (l2, m2, n2 + 2), coord_b))
    term2 = -0.5 * (
        l2 * (l2 - 1) * primitive_overlap(a, lmn1, coord_a, b, (l2 - 2, m2, n2), coord_b)
        + m2 * (m2 - 1) * primitive_overlap(a, lmn1, coord_a, b, (l2, m2 - 2, n2), coord_b)
        + n2 * (n2 - 1) * primitive_overlap(a, lmn1, coord_a, b, (l2, m2, n2 - 2), coord_b))
    return term0 + term1 + term2


def boys(n, x):
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_coulomb(t, u, v, n, p, pc):
    """Hermite-Coulomb auxiliary R^n_{tuv}."""
    if t == u == v == 0:
        return (-2.0 * p) ** n * boys(n, p * (pc[0] ** 2 + pc[1] ** 2 + pc[2] ** 2))
    if t == u == 0:
        val = 0.0
        if v > 1:
            val += (v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, pc)
        val += pc[2] * hermite_coulomb(t, u, v - 1, n + 1, p, pc)
        return val
    if t == 0:
        val = 0.0
        if u > 1:
            val += (u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, pc)
        val += pc[1] * hermite_coulomb(t, u - 1, v, n + 1, p, pc)
        return val
    val = 0.0
    if t > 1:
        val += (t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, pc)
    val += pc[0] * hermite_coulomb(t - 1, u, v, n + 1, p, pc)
    return val


def primitive_nuclear(a, lmn1, coord_a, b, lmn2, coord_b, coord_c):
    p = a + b
    center_p = (a * coord_a + b * coord_b) / p
    pc = center_p - coord_c
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    val = 0.0
    for t in range(l1 + l2 + 1):
        et = hermite_e(l1, l2, t, coord_a[0] - coord_b[0], a, b)
        for u in range(m1 + m2 + 1):
            eu = hermite_e(m1, m2, u, coord_a[1] - coord_b[1], a, b)
            for v in range(n1 + n2 + 1):
                ev = hermite_e(n1, n2, v, coord_a[2] - coord_b[2], a, b)
                val += et * eu * ev * hermite_coulomb(t, u, v, 0, p, pc)
    return 2.0 * math.pi / p * val


def primitive_eri(a, lmn1, ra, b, lmn2, rb, c, lmn3, rc, d, lmn4, rd):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    pq = rp - rq
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    l3, m3, n3 = lmn3
    l4, m4, n4 = lmn4
    val = 0.0
    for t in range(l1 + l2 + 1):
        e1t = hermite_e(l1, l2, t, ra[0] - rb[0], a, b)
        for u in range(m1 + m2 + 1):
            e1u = hermite_e(m1, m2, u, ra[1] - rb[1], a, b)
            for v in range(n1 + n2 + 1):
                e1v = hermite_e(n1, n2, v, ra[2] - rb[2], a, b)
                e1 = e1t * e1u * e1v
                if e1 == 0.0:
                    continue
                for tau in range(l3 + l4 + 1):
                    e2t = hermite_e(l3, l4, tau, rc[0] - rd[0], c, d)
                    for nu in range(m3 + m4 + 1):
                        e2u = hermite_e(m3, m4, nu, rc[1] - rd[1], c, d)
                        for phi in range(n3 + n4 + 1):
                            e2v = hermite_e(n3, n4, phi, rc[2] - rd[2], c, d)
                            e2 = e2t * e2u * e2v
                            if e2 == 0.0:
                                continue
                            sign = -1.0 if (tau + nu + phi) % 2 else 1.0
                            val += e1 * e2 * sign * hermite_coulomb(
                                t + tau, u + nu, v + phi, 0, alpha, pq)
    val *= 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
    return val


def contracted(fn, bf_list):
    """contract a primitive integral across basis functions"""
    def value(*bfs):
        total = 0.0
        def rec(idx, coeff, args):
            nonlocal total
            if idx == len(bfs):
                total += coeff * fn(*args)
                return
            bf = bfs[idx]
            for p in bf.primitives:
                rec(idx + 1, coeff * p.coefficient,
                    args + [p.exponent, bf.momenta, bf.center])
        rec(0, 1.0, [])
        return total
    return value


# ----------------------------------------------------------------------
# Molecule / basis assembly and RHF
# ----------------------------------------------------------------------

@dataclass
class Molecule:
    atoms: list  # (symbol, xyz in Angstrom)
    basis: str

    def build(self):
        fns = []
        charges = []
        coords = []
        for symbol, xyz in self.atoms:
            center = np.array(xyz, dtype=float) * ANGSTROM_TO_BOHR
            charges.append(CHARGES[symbol])
            coords.append(center)
            for shell, exps, coefs in BASIS_SETS[self.basis][symbol]:
                momenta = [(0, 0, 0)] if shell == "s" else [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
                for lmn in momenta:
                    bf = BasisFunction(center, lmn,
                                       [Primitive(a, c) for a, c in zip(exps, coefs)])
                    bf.normalize()
                    fns.append(bf)
        return fns, np.array(charges), coords

    def nuclear_repulsion(self):
        _, charges, coords = self.build()
        e = 0.0
        for i in range(len(charges)):
            for j in range(i + 1, len(charges)):
                e += charges[i] * charges[j] / np.linalg.norm(coords[i] - coords[j])
        return e

    def n_electrons(self):
        return int(sum(CHARGES[s] for s, _ in self.atoms))


def ao_integrals(mol):
    fns, charges, coords = mol.build()
    n = len(fns)
    s_fn = contracted(primitive_overlap, fns)
    t_fn = contracted(primitive_kinetic, fns)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            S[i, j] = S[j, i] = s_fn(fns[i], fns[j])
            T[i, j] = T[j, i] = t_fn(fns[i], fns[j])
            v = 0.0
            for z, rc in zip(charges, coords):
                def nuc(*args):
                    return primitive_nuclear(*args, rc)
                v -= z * contracted(nuc, fns)(fns[i], fns[j])
            V[i, j] = V[j, i] = v
    eri_fn = contracted(primitive_eri, fns)
    G = np.zeros((n, n, n, n))
    done = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    key = tuple(sorted([tuple(sorted((i, j))), tuple(sorted((k, l)))]))
                    if key in done:
                        G[i, j, k, l] = done[key]
                        continue
                    val = eri_fn(fns[i], fns[j], fns[k], fns[l])
                    done[key] = val
                    G[i, j, k, l] = val
    return S, T + V, G


def rhf(mol, max_cycles=200, conv=1e-12):
    S, hcore, G = ao_integrals(mol)
    n = S.shape[0]
    n_occ = mol.n_electrons() // 2
    e_nuc = mol.nuclear_repulsion()
    # symmetric orthogonalization
    w, u = np.linalg.eigh(S)
    x = u @ np.diag(w ** -0.5) @ u.T

    def fock(dm):
        j = np.einsum("pqrs,rs->pq", G, dm)
        k = np.einsum("prqs,rs->pq", G, dm)
        return hcore + j - 0.5 * k

    def density(f):
        fp = x.T @ f @ x
        _, cp = np.linalg.eigh(fp)
        c = x @ cp
        cocc = c[:, :n_occ]
        return 2.0 * cocc @ cocc.T, c

    dm, c = density(hcore)
    energy = 0.0
    diis_f, diis_e = [], []
    for cycle in range(max_cycles):
        f = fock(dm)
        err = f @ dm @ S - S @ dm @ f
        diis_f.append(f)
        diis_e.append(err)
        if len(diis_f) > 8:
            diis_f.pop(0)
            diis_e.pop(0)
        if len(diis_f) > 1:
            m = len(diis_f)
            b = -np.ones((m + 1, m + 1))
            b[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    b[i, j] = np.sum(diis_e[i] * diis_e[j])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                coef = np.linalg.solve(b, rhs)[:m]
                f = sum(ci * fi for ci, fi in zip(coef, diis_f))
            except np.linalg.LinAlgError:
                pass
        dm_new, c = density(f)
        e_new = 0.5 * np.sum(dm_new * (hcore + fock(dm_new))) + e_nuc
        if abs(e_new - energy) < conv and np.max(np.abs(dm_new - dm)) < 1e-9:
            return e_new, c, hcore, G, e_nuc
        dm, energy = dm_new, e_new
    raise RuntimeError(f"SCF did not converge (last E = {energy})")


def mo_integrals(c, hcore, G):
    h_mo = c.T @ hcore @ c
    g_mo = np.einsum("pi,pqrs->iqrs", c, G, optimize=True)
    g_mo = np.einsum("qj,iqrs->ijrs", c, g_mo, optimize=True)
    g_mo = np.einsum("rk,ijrs->ijks", c, g_mo, optimize=True)
    g_mo = np.einsum("sl,ijks->ijkl", c, g_mo, optimize=True)
    return h_mo, g_mo


def freeze_core(h_mo, g_mo, e_nuc, n_core):
    """fold the lowest n_core doubly-occupied orbitals into the core energy"""
    core = range(n_core)
    e_core = e_nuc
    for i in core:
        e_core += 2.0 * h_mo[i, i]
        for j in core:
            e_core += 2.0 * g_mo[i, i, j, j] - g_mo[i, j, j, i]
    n = h_mo.shape[0]
    active = list(range(n_core, n))
    h_eff = np.zeros((len(active), len(active)))
    for a, p in enumerate(active):
        for b, q in enumerate(active):
            val = h_mo[p, q]
            for i in core:
                val += 2.0 * g_mo[p, q, i, i] - g_mo[p, i, i, q]
            h_eff[a, b] = val
    g_eff = g_mo[np.ix_(active, active, active, active)]
    return h_eff, g_eff, e_core


def write_fcidump(path, h_mo, g_mo, e_core, n_elec, ms2=0, threshold=1e-12):
    n = h_mo.shape[0]
    lines = [f"&FCI NORB={n},NELEC={n_elec},MS2={ms2},",
             " ORBSYM=" + "1," * n,
             " ISYM=1,",
             "&END"]
    def idx(p, q):
        return p * (p + 1) // 2 + q
    for p in range(n):
        for q in range(p + 1):
            for r in range(p + 1):
                smax = q if r == p else r
                for s in range(smax + 1):
                    v = g_mo[p, q, r, s]
                    if abs(v) > threshold:
                        lines.append(f"{v:23.16E} {p+1:3d} {q+1:3d} {r+1:3d} {s+1:3d}")
    for p in range(n):
        for q in range(p + 1):
            if abs(h_mo[p, q]) > threshold:
                lines.append(f"{h_mo[p,q]:23.16E} {p+1:3d} {q+1:3d}   0   0")
    lines.append(f"{e_core:23.16E}   0   0   0   0")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


# ----------------------------------------------------------------------
# Independent FCI in the occupation basis (block mode order: up then down)
# ----------------------------------------------------------------------

def fermion_terms(h_mo, g_mo, e_core):
    """list of (coeff, [(mode, dagger), ...]) in block spin-orbital order"""
    n = h_mo.shape[0]
    terms = [(e_core, [])]
    for p in range(n):
        for q in range(n):
            if h_mo[p, q] == 0.0:
                continue
            for spin in (0, 1):
                terms.append((h_mo[p, q], [(p + spin * n, True), (q + spin * n, False)]))
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    v = g_mo[p, q, r, s]
                    if v == 0.0:
                        continue
                    for s1 in (0, 1):
                        for s2 in (0, 1):
                            terms.append((0.5 * v, [(p + s1 * n, True), (r + s2 * n, True),
                                                    (s + s2 * n, False), (q + s1 * n, False)]))
    return terms


def fock_matrix(terms, n_modes):
    dim = 1 << n_modes
    mat = np.zeros((dim, dim))
    bit = [1 << (n_modes - 1 - m) for m in range(n_modes)]
    lower_masks = []
    for m in range(n_modes):
        mask = 0
        for k in range(m):
            mask |= bit[k]
        lower_masks.append(mask)
    for coeff, ops in terms:
        for basis in range(dim):
            state = basis
            sign = 1.0
            alive = True
            for mode, dagger in reversed(ops):
                occupied = bool(state & bit[mode])
                if dagger == occupied:
                    alive = False
                    break
                if bin(state & lower_masks[mode]).count("1") % 2 == 1:
                    sign = -sign
                state ^= bit[mode]
            if alive:
                mat[state, basis] += coeff * sign
    return mat


def sector_indices(n_modes, n_elec, sz2):
    n = n_modes // 2
    keep = []
    for basis in range(1 << n_modes):
        up = bin(basis >> n).count("1")
        down = bin(basis & ((1 << n) - 1)).count("1")
        # NB: with mode->bit (n_modes-1-m), the HIGH bits are the UP block
        if up + down == n_elec and up - down == sz2:
            keep.append(basis)
    return keep


def fci_energies(h_mo, g_mo, e_core, n_elec, sz2=0):
    n_modes = 2 * h_mo.shape[0]
    mat = fock_matrix(fermion_terms(h_mo, g_mo, e_core), n_modes)
    all_eigs = np.linalg.eigvalsh(mat)
    keep = sector_indices(n_modes, n_elec, sz2)
    sub = mat[np.ix_(keep, keep)]
    sector_eigs = np.linalg.eigvalsh(sub)
    return all_eigs[0], sector_eigs[0]


# ----------------------------------------------------------------------
# Independent parity mapping and Z2 tapering (symbolic Pauli algebra)
# ----------------------------------------------------------------------
# canonical form: coeff * X^x Z^z  (bit j of x/z = qubit j)

def pauli_mul(t1, t2):
    x1, z1, c1 = t1
    x2, z2, c2 = t2
    sign = -1.0 if bin(z1 & x2).count("1") % 2 else 1.0
    return (x1 ^ x2, z1 ^ z2, c1 * c2 * sign)


def parity_factors(mode, dagger, n_modes):
    update = 0
    for k in range(mode, n_modes):
        update |= 1 << k
    prior = (1 << (mode - 1)) if mode > 0 else 0
    sgn = 0.5 if dagger else -0.5
    return [(update, prior, 0.5), (update, 1 << mode, sgn)]


def parity_map(terms, n_modes):
    acc = {}
    for coeff, ops in terms:
        partial = [(0, 0, complex(coeff))]
        for mode, dagger in ops:
            factors = parity_factors(mode, dagger, n_modes)
            partial = [pauli_mul(p, f) for p in partial for f in factors]
        for x, z, c in partial:
            acc[(x, z)] = acc.get((x, z), 0.0) + c
    return {k: v for k, v in acc.items() if abs(v) > 1e-12}


def reduce_two_qubits(acc, n_modes, n_elec, ms2):
    n_up = (n_elec + ms2) // 2
    up_qubit = n_modes // 2 - 1
    total_qubit = n_modes - 1
    up_sign = 1.0 if n_up % 2 == 0 else -1.0
    total_sign = 1.0 if n_elec % 2 == 0 else -1.0
    out = {}
    keep = [q for q in range(n_modes) if q not in (up_qubit, total_qubit)]
    for (x, z), c in acc.items():
        coeff = c
        for q, sign in ((up_qubit, up_sign), (total_qubit, total_sign)):
            if x & (1 << q):
                raise ValueError("X/Y on a pinned qubit")
            if z & (1 << q):
                coeff *= sign
        nx = nz = 0
        for new_q, old_q in enumerate(keep):
            if x & (1 << old_q):
                nx |= 1 << new_q
            if z & (1 << old_q):
                nz |= 1 << new_q
        out[(nx, nz)] = out.get((nx, nz), 0.0) + coeff
    return {k: v for k, v in out.items() if abs(v) > 1e-12}


def z2_symmetries(acc, n_qubits):
    """Z-only symmetry generators: z-masks with even overlap with every
    term's x-mask.  Null space over F2 of the x-mask row matrix."""
    rows = sorted({x for (x, _z) in acc if x})
    # reduced row echelon form: pivot column -> row
    pivot_rows = {}
    for row in rows:
        r = row
        while r:
            p = r.bit_length() - 1
            if p in pivot_rows:
                r ^= pivot_rows[p]
            else:
                pivot_rows[p] = r
                break
    # full reduction: clear pivot columns from all other rows
    for p in sorted(pivot_rows, reverse=True):
        for q in list(pivot_rows):
            if q != p and pivot_rows[q] & (1 << p):
                pivot_rows[q] ^= pivot_rows[p]
    free = [q for q in range(n_qubits) if q not in pivot_rows]
    kernel = []
    for f in free:
        vec = 1 << f
        for p, r in pivot_rows.items():
            if r & (1 << f):
                vec |= 1 << p
        kernel.append(vec)
    for z in kernel:
        assert all(bin(z & x).count("1") % 2 == 0 for (x, _z) in acc), bin(z)
    return kernel


def taper(acc, n_qubits, generators, sector_signs):
    """Bravyi-style tapering of Z-only generators with chosen X anchors."""
    # choose anchor qubits: q in generator's support, unique across generators
    anchors = []
    for i, g in enumerate(generators):
        candidates = [q for q in range(n_qubits) if g & (1 << q)]
        candidates = [q for q in candidates
                      if all((others & (1 << q)) == 0
                             for j, others in enumerate(generators) if j != i)
                      and q not in anchors]
        if not candidates:
            raise ValueError("no anchor qubit for generator")
        anchors.append(candidates[0])
    # rotate: U = (X_anchor + Z_gen)/sqrt(2); H -> U H U
    work = {k: complex(v) for k, v in acc.items()}
    for g, q in zip(generators, anchors):
        u_terms = [((1 << q), 0, 1.0 / math.sqrt(2.0)), (0, g, 1.0 / math.sqrt(2.0))]
        new = {}
        for (x, z), c in work.items():
            base = (x, z, c)
            for u1 in u_terms:
                for u2 in u_terms:
                    x3, z3, c3 = pauli_mul(pauli_mul(u1, base), u2)
                    key = (x3, z3)
                    new[key] = new.get(key, 0.0) + c3
        work = {k: v for k, v in new.items() if abs(v) > 1e-12}
    # substitute X_anchor -> sign, drop anchors
    keep = [q for q in range(n_qubits) if q not in anchors]
    out = {}
    for (x, z), c in work.items():
        coeff = c
        for q, sign in zip(anchors, sector_signs):
            if z & (1 << q):
                raise ValueError("Z/Y left on anchor qubit after rotation")
            if x & (1 << q):
                coeff *= sign
        nx = nz = 0
        for new_q, old_q in enumerate(keep):
            if x & (1 << old_q):
                nx |= 1 << new_q
            if z & (1 << old_q):
                nz |= 1 << new_q
        out[(nx, nz)] = out.get((nx, nz), 0.0) + coeff
    cleaned = {}
    for k, v in out.items():
        if abs(v.imag) > 1e-9:
            raise ValueError(f"imaginary coefficient {v}")
        if abs(v.real) > 1e-12:
            cleaned[k] = v.real
    return cleaned


def pauli_dict_to_text(acc, n_qubits, comment):
    lines = [f"# {line}" for line in comment.splitlines()]
    for (x, z) in sorted(acc.keys(), key=lambda k: letters(k, n_qubits)):
        c = acc[(x, z)]
        n_y = bin(x & z).count("1")
        coeff = complex(c) * (-1j) ** (n_y % 4)
        if abs(coeff.imag) > 1e-10:
            raise ValueError("non-Hermitian term")
        lines.append(f"{coeff.real!r} {letters((x, z), n_qubits)}")
    return "\n".join(lines) + "\n"


def letters(key, n_qubits):
    x, z = key
    out = []
    for j in range(n_qubits):
        xb = bool(x & (1 << j))
        zb = bool(z & (1 << j))
        out.append("IXZY"[xb + 2 * zb] if not (xb and zb) else "Y")
    return "".join(out)


def pauli_text_matrix_energy(acc, n_qubits):
    """ground energy of a canonical-form dict, via explicit letters"""
    dim = 1 << n_qubits
    mat = np.zeros((dim, dim), dtype=complex)
    for (x, z), c in acc.items():
        n_y = bin(x & z).count("1")
        coeff = complex(c) * (-1j) ** (n_y % 4)
        xm = sum(1 << (n_qubits - 1 - j) for j in range(n_qubits) if x & (1 << j))
        zm = sum(1 << (n_qubits - 1 - j) for j in range(n_qubits) if z & (1 << j))
        phase = coeff * (1j) ** (n_y % 4)
        for b in range(dim):
            sign = -1.0 if bin(b & zm).count("1") % 2 else 1.0
            mat[b ^ xm, b] += phase * sign
    assert np.max(np.abs(mat - mat.conj().T)) < 1e-9
    return np.linalg.eigvalsh(mat)[0]


# ----------------------------------------------------------------------
# Systems
# ----------------------------------------------------------------------

def h2_geometry(r):
    return [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r))]


def h4_geometry(a):
    return [("H", (0.0, 0.0, 0.0)), ("H", (0.74, 0.0, 0.0)),
            ("H", (0.0, a, 0.0)), ("H", (0.74, a, 0.0))]


def h2x2_geometry(a):
    return [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, a)),
            ("H", (0.0, 0.0, 3.0)), ("H", (0.0, 0.0, 4.5))]


def lih_geometry(r):
    return [("Li", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r))]


def run_system(outdir, subdir, system, param, mol, n_core=0, pauli_file=False,
               manifest=None):
    os.makedirs(os.path.join(outdir, subdir), exist_ok=True)
    e_rhf, c, hcore, G, e_nuc = rhf(mol)
    h_mo, g_mo = mo_integrals(c, hcore, G)
    n_elec = mol.n_electrons() - 2 * n_core
    if n_core:
        h_mo, g_mo, e_core = freeze_core(h_mo, g_mo, e_nuc, n_core)
    else:
        e_core = e_nuc
    stem = f"{system}_{param:.2f}" if system == "lih" else f"{system}_{param:.3f}"
    fcipath = os.path.join(outdir, subdir, stem + ".fcidump")
    write_fcidump(fcipath, h_mo, g_mo, e_core, n_elec)
    e_all, e_sector = fci_energies(h_mo, g_mo, e_core, n_elec)
    print(f"{stem}: RHF = {e_rhf:.10f}  FCI(sector) = {e_sector:.10f}  "
          f"matrix min = {e_all:.10f}")
    row = {"system": system, "param": param, "n_orb": h_mo.shape[0],
           "n_elec": n_elec, "e_rhf": e_rhf, "e_fci": e_sector,
           "e_matrix_min": e_all}
    if pauli_file:
        n_modes = 2 * h_mo.shape[0]
        terms = fermion_terms(h_mo, g_mo, e_core)
        acc = parity_map(terms, n_modes)
        reduced = reduce_two_qubits(acc, n_modes, n_elec, 0)
        n_red = n_modes - 2
        e_red = pauli_text_matrix_energy(reduced, n_red)
        assert abs(e_red - e_sector) < 1e-8, f"{e_red} vs {e_sector}"
        text = pauli_dict_to_text(
            reduced, n_red,
            f"{system} at {param} Angstrom, parity mapping with two-qubit reduction\n"
            f"FCI ground energy (Hartree): {e_sector:.12f}")
        with open(os.path.join(outdir, subdir, stem + ".pauli"), "w") as f:
            f.write(text)
        row["e_pauli_ground"] = e_red
    if manifest is not None:
        manifest.append(row)
    return h_mo, g_mo, e_core, n_elec, e_sector, row


def run_lih(outdir, r, manifest):
    mol = Molecule(lih_geometry(r), "sto-3g")
    subdir = "lih"
    os.makedirs(os.path.join(outdir, subdir), exist_ok=True)
    e_rhf, c, hcore, G, e_nuc = rhf(mol)
    h_mo, g_mo = mo_integrals(c, hcore, G)
    h_mo, g_mo, e_core = freeze_core(h_mo, g_mo, e_nuc, 1)
    n_elec = 2
    e_all, e_sector = fci_energies(h_mo, g_mo, e_core, n_elec)
    n_modes = 2 * h_mo.shape[0]  # 10
    terms = fermion_terms(h_mo, g_mo, e_core)
    acc = parity_map(terms, n_modes)
    reduced = reduce_two_qubits(acc, n_modes, n_elec, 0)  # 8 qubits
    n8 = n_modes - 2
    e8 = pauli_text_matrix_energy(reduced, n8)
    # two more Z2 symmetries (the pi-orbital occupation parities)
    gens = z2_symmetries(reduced, n8)
    assert len(gens) >= 2, f"expected >=2 Z2 generators, found {len(gens)}"
    gens = gens[:2]
    best = None
    for s0 in (1.0, -1.0):
        for s1 in (1.0, -1.0):
            tapered = taper(reduced, n8, gens, [s0, s1])
            e6 = pauli_text_matrix_energy(tapered, n8 - 2)
            if best is None or e6 < best[0]:
                best = (e6, (s0, s1), tapered)
    e6, signs, tapered = best
    assert abs(e6 - e8) < 1e-8, f"tapered ground {e6} vs 8-qubit {e8}"
    stem = f"lih_{r:.2f}"
    text = pauli_dict_to_text(
        tapered, n8 - 2,
        f"LiH at {r} Angstrom, STO-3G, frozen core, parity mapping with\n"
        f"two-qubit reduction and two additional Z2 symmetries tapered\n"
        f"(sector signs {signs})\n"
        f"FCI ground energy (Hartree): {e_sector:.12f}")
    with open(os.path.join(outdir, subdir, stem + ".pauli"), "w") as f:
        f.write(text)
    print(f"{stem}: RHF = {e_rhf:.10f}  FCI = {e_sector:.10f}  tapered = {e6:.10f}")
    manifest.append({"system": "lih", "param": r, "n_orb": 5, "n_elec": 2,
                     "e_rhf": e_rhf, "e_fci": e_sector, "e_matrix_min": e_all,
                     "e_pauli_ground": e6})


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "crates/vbvqe/data"
    manifest = []

    # sanity anchor: H2/STO-3G at 1.4 bohr (textbook matrix elements)
    check = Molecule(h2_geometry(1.4 / ANGSTROM_TO_BOHR), "sto-3g")
    e_check, *_ = rhf(check)
    assert abs(e_check - (-1.1167143)) < 2e-6, e_check
    print(f"H2/STO-3G at 1.4 bohr: RHF = {e_check:.8f}")

    for r in [0.3, 0.5, 0.735, 0.9, 1.0, 1.2, 1.5, 2.0, 2.5]:
        run_system(outdir, "h2_sto3g", "h2", r,
                   Molecule(h2_geometry(r), "sto-3g"), manifest=manifest)
    for r in [0.5, 0.7, 1.0, 1.5, 2.0, 2.5]:
        run_system(outdir, "h2_631g", "h2", r,
                   Molecule(h2_geometry(r), "6-31g"), pauli_file=True,
                   manifest=manifest)
    for a in [0.74, 1.0, 1.2, 1.5, 1.8]:
        run_system(outdir, "h4", "h4", a,
                   Molecule(h4_geometry(a), "sto-3g"), pauli_file=True,
                   manifest=manifest)
    for a in [0.8, 1.0, 1.25, 1.5, 2.0]:
        run_system(outdir, "h2x2", "h2x2", a,
                   Molecule(h2x2_geometry(a), "sto-3g"), pauli_file=True,
                   manifest=manifest)
    for r in [1.0, 1.25, 1.55, 2.0, 2.5, 3.0]:
        run_lih(outdir, r, manifest)

    with open(os.path.join(outdir, "manifest.csv"), "w") as f:
        keys = ["system", "param", "n_orb", "n_elec", "e_rhf", "e_fci",
                "e_matrix_min", "e_pauli_ground"]
        f.write(",".join(keys) + "\n")
        for row in manifest:
            f.write(",".join(repr(row.get(k, "")) for k in keys) + "\n")
    print("done")


if __name__ == "__main__":
    main()
