//! Electronic-structure ingestion and fermion-to-qubit mappings.
//!
//! FCIDUMP files carry the one- and two-electron integrals of a molecular
//! Hamiltonian in chemists' notation.  They are turned into a second
//! quantized operator
//!
//! ```text
//!   H = E_core + Σ_pq h_pq a†_p a_q + ½ Σ_pqrs ⟨pq|rs⟩ a†_p a†_q a_s a_r
//! ```
//!
//! over spin orbitals in block order (spin-up orbitals first, then
//! spin-down), and mapped to qubit observables with the Jordan-Wigner or
//! parity transformation.
//!
//! Conventions, fixed once for the whole crate:
//! * mode j ↔ qubit j, occupation |1⟩;
//! * Jordan-Wigner: a†_j = ½(X_j − iY_j) · Z_{j−1}…Z_0 (string on the
//!   lower-indexed modes);
//! * parity: qubit j stores the cumulative occupation parity of modes 0…j,
//!   so with block ordering qubit n/2−1 carries the spin-up electron parity
//!   and qubit n−1 the total parity — both symmetry-pinned, which permits
//!   the two-qubit reduction.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{Observable, Pauli, PauliString, DROP_TOLERANCE};

/// Imaginary residue allowed to survive a mapping before the operator is
/// declared non-Hermitian.
const IMAG_TOLERANCE: f64 = 1e-10;

/// Parsed electronic-integral file.
///
/// `one_body[p*n+q]` is h_pq over spatial orbitals; `two_body` holds the
/// chemists' integrals (pq|rs) as a dense n⁴ array with the full 8-fold
/// symmetry expanded.
#[derive(Debug, Clone)]
pub struct FcidumpData {
    pub n_orbitals: usize,
    pub n_electrons: usize,
    pub ms2: i64,
    pub core_energy: f64,
    one_body: Vec<f64>,
    two_body: Vec<f64>,
}

impl FcidumpData {
    pub fn h(&self, p: usize, q: usize) -> f64 {
        self.one_body[p * self.n_orbitals + q]
    }

    /// Chemists' (pq|rs).
    pub fn eri(&self, p: usize, q: usize, r: usize, s: usize) -> f64 {
        let n = self.n_orbitals;
        self.two_body[((p * n + q) * n + r) * n + s]
    }

    pub fn n_modes(&self) -> usize {
        2 * self.n_orbitals
    }
}

/// Parse FCIDUMP text: a `&FCI … &END` (or `/`) namelist header with NORB,
/// NELEC and MS2, followed by `value i j k l` lines (1-based indices);
/// `i j 0 0` is one-body, `0 0 0 0` the core energy, anything else two-body.
pub fn parse_fcidump(text: &str) -> Result<FcidumpData> {
    let mut lines = text.lines().enumerate();
    let mut header = String::new();
    let mut header_lines = 0usize;
    let mut found_end = false;
    for (_, raw) in lines.by_ref() {
        header_lines += 1;
        header.push_str(raw);
        header.push(' ');
        let upper = raw.to_ascii_uppercase();
        if upper.contains("&END") || raw.trim_end().ends_with('/') {
            found_end = true;
            break;
        }
    }
    if !found_end || !header.to_ascii_uppercase().contains("&FCI") {
        return Err(Error::Parse {
            line: 1,
            message: "missing &FCI … &END header".into(),
        });
    }

    let compact: String = header.chars().filter(|c| !c.is_whitespace()).collect();
    let get_key = |key: &str| -> Result<i64> {
        let upper = compact.to_ascii_uppercase();
        let pat = format!("{key}=");
        let start = upper.find(&pat).ok_or(Error::Parse {
            line: 1,
            message: format!("header key {key} not found"),
        })? + pat.len();
        let rest = &compact[start..];
        let end = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '-' || c == '+'))
            .unwrap_or(rest.len());
        rest[..end].parse().map_err(|_| Error::Parse {
            line: 1,
            message: format!("bad integer for header key {key}"),
        })
    };
    let n_orbitals = get_key("NORB")? as usize;
    let n_electrons = get_key("NELEC")? as usize;
    let ms2 = get_key("MS2")?;
    if n_orbitals == 0 {
        return Err(Error::Parse {
            line: 1,
            message: "NORB must be positive".into(),
        });
    }
    if n_electrons > 2 * n_orbitals {
        return Err(Error::Parse {
            line: 1,
            message: format!("NELEC={n_electrons} exceeds 2·NORB={}", 2 * n_orbitals),
        });
    }

    let n = n_orbitals;
    let mut data = FcidumpData {
        n_orbitals,
        n_electrons,
        ms2,
        core_energy: 0.0,
        one_body: vec![0.0; n * n],
        two_body: vec![0.0; n * n * n * n],
    };

    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 5 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 'value i j k l', got '{line}'"),
            });
        }
        let value: f64 = tokens[0]
            .replace(['D', 'd'], "E")
            .parse()
            .map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad value '{}'", tokens[0]),
            })?;
        let mut ix = [0usize; 4];
        for (slot, tok) in ix.iter_mut().zip(&tokens[1..]) {
            *slot = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad index '{tok}'"),
            })?;
        }
        for &i in &ix {
            if i > n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("orbital index {i} out of range 1..={n}"),
                });
            }
        }
        match ix {
            [0, 0, 0, 0] => data.core_energy = value,
            [i, j, 0, 0] if i > 0 && j > 0 => {
                let (i, j) = (i - 1, j - 1);
                data.one_body[i * n + j] = value;
                data.one_body[j * n + i] = value;
            }
            [i, j, k, l] if i > 0 && j > 0 && k > 0 && l > 0 => {
                let (i, j, k, l) = (i - 1, j - 1, k - 1, l - 1);
                for (p, q, r, s) in [
                    (i, j, k, l),
                    (j, i, k, l),
                    (i, j, l, k),
                    (j, i, l, k),
                    (k, l, i, j),
                    (l, k, i, j),
                    (k, l, j, i),
                    (l, k, j, i),
                ] {
                    data.two_body[((p * n + q) * n + r) * n + s] = value;
                }
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unsupported index pattern {ix:?}"),
                })
            }
        }
    }
    let _ = header_lines;
    Ok(data)
}

pub fn parse_fcidump_path(path: impl AsRef<std::path::Path>) -> Result<FcidumpData> {
    let text = std::fs::read_to_string(path)?;
    parse_fcidump(&text)
}

/// One second-quantized term: coefficient times an ordered product of
/// creation/annihilation operators, `(mode, dagger)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionTerm {
    pub coefficient: f64,
    pub ops: Vec<(usize, bool)>,
}

/// A real-weighted sum of second-quantized operator products.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FermionOperator {
    pub terms: Vec<FermionTerm>,
}

impl FermionOperator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, coefficient: f64, ops: Vec<(usize, bool)>) {
        self.terms.push(FermionTerm { coefficient, ops });
    }

    /// Largest mode index + 1 appearing in any term.
    pub fn min_modes(&self) -> usize {
        self.terms
            .iter()
            .flat_map(|t| t.ops.iter().map(|&(m, _)| m + 1))
            .max()
            .unwrap_or(0)
    }
}

/// Spin-orbital Hamiltonian from parsed integrals, block mode ordering:
/// spin-up orbitals at modes 0…n−1, spin-down at n…2n−1.
pub fn to_fermion_hamiltonian(data: &FcidumpData) -> FermionOperator {
    let n = data.n_orbitals;
    let mode = |orbital: usize, spin: usize| orbital + spin * n;
    let mut op = FermionOperator::new();
    if data.core_energy != 0.0 {
        op.add(data.core_energy, vec![]);
    }
    for p in 0..n {
        for q in 0..n {
            let h = data.h(p, q);
            if h == 0.0 {
                continue;
            }
            for spin in 0..2 {
                op.add(h, vec![(mode(p, spin), true), (mode(q, spin), false)]);
            }
        }
    }
    // ½ Σ (pq|rs) Σ_στ a†_pσ a†_rτ a_sτ a_qσ  (chemists' indices)
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let g = data.eri(p, q, r, s);
                    if g == 0.0 {
                        continue;
                    }
                    for sigma in 0..2 {
                        for tau in 0..2 {
                            op.add(
                                0.5 * g,
                                vec![
                                    (mode(p, sigma), true),
                                    (mode(r, tau), true),
                                    (mode(s, tau), false),
                                    (mode(q, sigma), false),
                                ],
                            );
                        }
                    }
                }
            }
        }
    }
    op
}

/// Canonical symplectic form c · X^x Z^z with per-qubit letter
/// X^{x_j} Z^{z_j}; products pick up (−1) for every Z passing an X.
#[derive(Debug, Clone, Copy)]
struct Canonical {
    x: u64,
    z: u64,
    c: Complex64,
}

fn canonical_mul(a: Canonical, b: Canonical) -> Canonical {
    let sign = if (a.z & b.x).count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    Canonical {
        x: a.x ^ b.x,
        z: a.z ^ b.z,
        c: a.c * b.c * sign,
    }
}

/// (−i)^k
fn neg_i_pow(k: u32) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

fn bits_below(j: usize) -> u64 {
    (1u64 << j) - 1
}

fn bits_from(j: usize, n: usize) -> u64 {
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    all & !bits_below(j)
}

fn transform(
    op: &FermionOperator,
    n_modes: usize,
    mode_factors: impl Fn(usize, bool) -> [Canonical; 2],
) -> Result<Observable> {
    if op.min_modes() > n_modes {
        return Err(Error::QubitOutOfRange {
            index: op.min_modes() - 1,
            n_qubits: n_modes,
        });
    }
    let mut acc: HashMap<(u64, u64), Complex64> = HashMap::new();
    for term in &op.terms {
        let mut partial = vec![Canonical {
            x: 0,
            z: 0,
            c: Complex64::new(term.coefficient, 0.0),
        }];
        for &(mode, dagger) in &term.ops {
            let factors = mode_factors(mode, dagger);
            let mut next = Vec::with_capacity(partial.len() * 2);
            for p in &partial {
                for f in &factors {
                    next.push(canonical_mul(*p, *f));
                }
            }
            partial = next;
        }
        for p in partial {
            let entry = acc.entry((p.x, p.z)).or_insert(Complex64::new(0.0, 0.0));
            *entry += p.c;
        }
    }
    let mut obs = Observable::new(n_modes);
    for ((x, z), c) in acc {
        let n_y = (x & z).count_ones();
        let coeff = c * neg_i_pow(n_y);
        if coeff.im.abs() > IMAG_TOLERANCE {
            return Err(Error::NonHermitian(coeff.im));
        }
        if coeff.re.abs() < DROP_TOLERANCE {
            continue;
        }
        let letters: Vec<Pauli> = (0..n_modes)
            .map(|j| {
                let bit = 1u64 << j;
                match (x & bit != 0, z & bit != 0) {
                    (false, false) => Pauli::I,
                    (true, false) => Pauli::X,
                    (false, true) => Pauli::Z,
                    (true, true) => Pauli::Y,
                }
            })
            .collect();
        obs.add_term(coeff.re, PauliString::new(letters))?;
    }
    Ok(obs.normalize())
}

/// Jordan-Wigner transform: a†_j = ½(X_j − iY_j) Z_{j−1}…Z_0.
pub fn jordan_wigner(op: &FermionOperator, n_modes: usize) -> Result<Observable> {
    transform(op, n_modes, |j, dagger| {
        let lower = bits_below(j);
        let half = Complex64::new(0.5, 0.0);
        let sign = if dagger { half } else { -half };
        [
            Canonical {
                x: 1 << j,
                z: lower,
                c: half,
            },
            // ∓(i/2) Y_j Z_{<j} in canonical X^x Z^z form
            Canonical {
                x: 1 << j,
                z: lower | (1 << j),
                c: sign,
            },
        ]
    })
}

/// Parity transform (no reduction): qubit j stores the cumulative parity of
/// modes 0…j, so a†_j = ½ X_{n−1}…X_{j+1} (X_j Z_{j−1} ∓ i Y_j).
pub fn parity_map(op: &FermionOperator, n_modes: usize) -> Result<Observable> {
    transform(op, n_modes, |j, dagger| {
        let update = bits_from(j, n_modes);
        let half = Complex64::new(0.5, 0.0);
        let sign = if dagger { half } else { -half };
        let prior = if j > 0 { 1u64 << (j - 1) } else { 0 };
        [
            Canonical {
                x: update,
                z: prior,
                c: half,
            },
            Canonical {
                x: update,
                z: 1 << j,
                c: sign,
            },
        ]
    })
}

/// Parity transform with the two symmetry-pinned qubits removed.
///
/// With block mode ordering, qubit n/2−1 is pinned to the spin-up electron
/// parity and qubit n−1 to the total electron parity, both fixed by
/// (n_electrons, ms2).  Their Z letters are replaced by the corresponding
/// ±1 eigenvalues and the qubits dropped, giving an observable on n−2
/// qubits.
pub fn parity_map_reduced(
    op: &FermionOperator,
    n_modes: usize,
    n_electrons: usize,
    ms2: i64,
) -> Result<Observable> {
    let full = parity_map(op, n_modes)?;
    reduce_parity_observable(&full, n_electrons, ms2)
}

/// Two-qubit symmetry reduction of an observable already in the parity
/// basis (see [`parity_map_reduced`]).
pub fn reduce_parity_observable(
    parity_obs: &Observable,
    n_electrons: usize,
    ms2: i64,
) -> Result<Observable> {
    let n = parity_obs.n_qubits();
    if n < 2 || n % 2 != 0 {
        return Err(Error::UnsupportedReduction(format!(
            "parity reduction needs an even register, got {n} qubits"
        )));
    }
    let n_up_twice = n_electrons as i64 + ms2;
    if n_up_twice % 2 != 0 || n_up_twice < 0 {
        return Err(Error::UnsupportedReduction(format!(
            "(n_electrons + ms2) = {n_up_twice} does not give an integral spin-up count"
        )));
    }
    let n_up = (n_up_twice / 2) as usize;
    let up_qubit = n / 2 - 1;
    let total_qubit = n - 1;
    let up_sign = if n_up % 2 == 0 { 1.0 } else { -1.0 };
    let total_sign = if n_electrons % 2 == 0 { 1.0 } else { -1.0 };

    let mut reduced = Observable::new(n - 2);
    for (c, p) in parity_obs.terms() {
        let mut coeff = *c;
        let mut letters = Vec::with_capacity(n - 2);
        for (q, &letter) in p.letters().iter().enumerate() {
            if q == up_qubit || q == total_qubit {
                match letter {
                    Pauli::I => {}
                    Pauli::Z => coeff *= if q == up_qubit { up_sign } else { total_sign },
                    other => {
                        return Err(Error::UnsupportedReduction(format!(
                            "term {p} carries {:?} on pinned qubit {q}; \
                             the operator does not conserve the pinning symmetry",
                            other
                        )))
                    }
                }
            } else {
                letters.push(letter);
            }
        }
        reduced.add_term(coeff, PauliString::new(letters))?;
    }
    Ok(reduced.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver;

    /// Independent Fock-space oracle: build the matrix of a fermion operator
    /// directly in the occupation basis, with the phase convention
    /// a_j |n⟩ = (−1)^{Σ_{k<j} n_k} … (string over lower modes).
    fn fock_matrix(op: &FermionOperator, n_modes: usize) -> crate::matrix::CMatrix {
        let dim = 1usize << n_modes;
        let mut m = crate::matrix::CMatrix::zeros(dim);
        let bit_of = |mode: usize| 1usize << (n_modes - 1 - mode);
        for term in &op.terms {
            for basis in 0..dim {
                let mut state = basis;
                let mut sign = 1.0f64;
                let mut alive = true;
                for &(mode, dagger) in term.ops.iter().rev() {
                    let occupied = state & bit_of(mode) != 0;
                    if dagger == occupied {
                        alive = false;
                        break;
                    }
                    let lower_count = (0..mode).filter(|&k| state & bit_of(k) != 0).count();
                    if lower_count % 2 == 1 {
                        sign = -sign;
                    }
                    state ^= bit_of(mode);
                }
                if alive {
                    m[(state, basis)] += Complex64::new(term.coefficient * sign, 0.0);
                }
            }
        }
        m
    }

    fn hermitian_random_op(n_modes: usize, seed: u64) -> FermionOperator {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut op = FermionOperator::new();
        for _ in 0..6 {
            let len = 2 * rng.gen_range(1..=2usize);
            let ops: Vec<(usize, bool)> = (0..len)
                .map(|_| (rng.gen_range(0..n_modes), rng.gen_bool(0.5)))
                .collect();
            let c = rng.gen_range(-1.0..1.0);
            op.add(c, ops.clone());
            // plus the Hermitian conjugate: reversed order, daggers flipped
            let conj: Vec<(usize, bool)> = ops.iter().rev().map(|&(m, d)| (m, !d)).collect();
            op.add(c, conj);
        }
        op
    }

    const TOY_FCIDUMP: &str = "\
&FCI NORB=2,NELEC=2,MS2=0,
 ORBSYM=1,1,
 ISYM=1,
&END
 0.6746 1 1 1 1
 0.6636 1 1 2 2
 0.1813 1 2 1 2
 0.6975 2 2 2 2
 -1.2528 1 1 0 0
 -0.4756 2 2 0 0
 0.7137 0 0 0 0
";

    #[test]
    fn parses_header_and_entries() {
        let d = parse_fcidump(TOY_FCIDUMP).unwrap();
        assert_eq!(d.n_orbitals, 2);
        assert_eq!(d.n_electrons, 2);
        assert_eq!(d.ms2, 0);
        assert_eq!(d.core_energy, 0.7137);
        assert_eq!(d.h(0, 0), -1.2528);
        assert_eq!(d.h(1, 1), -0.4756);
        assert_eq!(d.eri(0, 0, 1, 1), 0.6636);
    }

    #[test]
    fn eightfold_symmetry_is_expanded() {
        let d = parse_fcidump(TOY_FCIDUMP).unwrap();
        let v = d.eri(0, 1, 0, 1);
        assert_eq!(v, 0.1813);
        for ((p, q), (r, s)) in [
            ((1, 0), (0, 1)),
            ((0, 1), (1, 0)),
            ((1, 0), (1, 0)),
        ] {
            assert_eq!(d.eri(p, q, r, s), v);
        }
        // swap of electron labels
        assert_eq!(d.eri(1, 1, 0, 0), d.eri(0, 0, 1, 1));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "&FCI NORB=2,NELEC=2,MS2=0,&END\n1.0 1 1 1\n";
        match parse_fcidump(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        let out_of_range = "&FCI NORB=2,NELEC=2,MS2=0,&END\n1.0 3 1 0 0\n";
        assert!(parse_fcidump(out_of_range).is_err());
        assert!(parse_fcidump("1.0 1 1 0 0\n").is_err());
    }

    #[test]
    fn one_orbital_hamiltonian_is_the_number_operator() {
        let mut data = parse_fcidump("&FCI NORB=1,NELEC=1,MS2=1,&END\n-1.0 1 1 0 0\n").unwrap();
        data.core_energy = 0.25;
        let op = to_fermion_hamiltonian(&data);
        // -1·(a†_0 a_0 + a†_1 a_1) + 0.25
        let jw = jordan_wigner(&op, 2).unwrap();
        // expectation on |11⟩ (both modes occupied): -2 + 0.25
        let s = crate::simulator::StateVector::basis(2, 0b11);
        assert!((jw.expectation(&s).unwrap() - (-1.75)).abs() < 1e-12);
        let s = crate::simulator::StateVector::basis(2, 0b00);
        assert!((jw.expectation(&s).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn number_operator_maps_to_half_i_minus_z() {
        let mut op = FermionOperator::new();
        op.add(1.0, vec![(0, true), (0, false)]);
        let jw = jordan_wigner(&op, 2).unwrap();
        let mut expect = Observable::new(2);
        expect.add_term(0.5, PauliString::parse("II").unwrap()).unwrap();
        expect.add_term(-0.5, PauliString::parse("ZI").unwrap()).unwrap();
        assert_eq!(jw, expect.normalize());
        // parity on one mode agrees
        let parity = parity_map(&op, 1).unwrap();
        let mut expect1 = Observable::new(1);
        expect1.add_term(0.5, PauliString::parse("I").unwrap()).unwrap();
        expect1.add_term(-0.5, PauliString::parse("Z").unwrap()).unwrap();
        assert_eq!(parity, expect1.normalize());
    }

    #[test]
    fn hopping_maps_to_xx_plus_yy() {
        let mut op = FermionOperator::new();
        op.add(1.0, vec![(0, true), (1, false)]);
        op.add(1.0, vec![(1, true), (0, false)]);
        let jw = jordan_wigner(&op, 2).unwrap();
        let mut expect = Observable::new(2);
        expect.add_term(0.5, PauliString::parse("XX").unwrap()).unwrap();
        expect.add_term(0.5, PauliString::parse("YY").unwrap()).unwrap();
        assert_eq!(jw, expect.normalize());
    }

    #[test]
    fn jw_matches_fock_space_oracle_on_random_operators() {
        for n_modes in [2usize, 3] {
            for seed in 0..4u64 {
                let op = hermitian_random_op(n_modes, seed * 31 + n_modes as u64);
                let jw = jordan_wigner(&op, n_modes).unwrap();
                let via_pauli = jw.to_matrix().unwrap();
                let direct = fock_matrix(&op, n_modes);
                assert!(
                    via_pauli.max_abs_diff(&direct) < 1e-10,
                    "mismatch at n={n_modes} seed={seed}"
                );
            }
        }
    }

    #[test]
    fn jw_and_parity_are_isospectral() {
        for seed in 0..3u64 {
            let op = hermitian_random_op(4, 1000 + seed);
            let jw = jordan_wigner(&op, 4).unwrap();
            let parity = parity_map(&op, 4).unwrap();
            let s1 = solver::full_spectrum(&jw, false).unwrap();
            let s2 = solver::full_spectrum(&parity, false).unwrap();
            for (a, b) in s1.eigenvalues.iter().zip(&s2.eigenvalues) {
                assert!((a - b).abs() < 1e-9, "seed {seed}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn toy_molecule_reduction_preserves_ground_energy() {
        let data = parse_fcidump(TOY_FCIDUMP).unwrap();
        let op = to_fermion_hamiltonian(&data);
        let jw = jordan_wigner(&op, 4).unwrap();
        let reduced = parity_map_reduced(&op, 4, data.n_electrons, data.ms2).unwrap();
        assert_eq!(reduced.n_qubits(), 2);
        let e_full = solver::ground_energy(&jw).unwrap();
        let e_reduced = solver::ground_energy(&reduced).unwrap();
        assert!(
            (e_full - e_reduced).abs() < 1e-9,
            "full {e_full} vs reduced {e_reduced}"
        );
    }

    #[test]
    fn spin_block_swap_leaves_spectrum_invariant() {
        let data = parse_fcidump(TOY_FCIDUMP).unwrap();
        let op = to_fermion_hamiltonian(&data);
        let n = data.n_orbitals;
        let mut swapped = FermionOperator::new();
        for term in &op.terms {
            let ops = term
                .ops
                .iter()
                .map(|&(m, d)| ((m + n) % (2 * n), d))
                .collect();
            swapped.add(term.coefficient, ops);
        }
        let a = solver::full_spectrum(&jordan_wigner(&op, 4).unwrap(), false).unwrap();
        let b = solver::full_spectrum(&jordan_wigner(&swapped, 4).unwrap(), false).unwrap();
        for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn jw_hamiltonian_commutes_with_number_operator() {
        let data = parse_fcidump(TOY_FCIDUMP).unwrap();
        let h = jordan_wigner(&to_fermion_hamiltonian(&data), 4).unwrap();
        let mut number = FermionOperator::new();
        for m in 0..4 {
            number.add(1.0, vec![(m, true), (m, false)]);
        }
        let n_obs = jordan_wigner(&number, 4).unwrap();
        let hm = h.to_matrix().unwrap();
        let nm = n_obs.to_matrix().unwrap();
        let comm_defect = hm.mul_mat(&nm).max_abs_diff(&nm.mul_mat(&hm));
        assert!(comm_defect < 1e-9, "commutator norm {comm_defect}");
    }

    #[test]
    fn reduction_rejects_odd_bookkeeping() {
        let mut op = FermionOperator::new();
        op.add(1.0, vec![(0, true), (0, false)]);
        assert!(parity_map_reduced(&op, 4, 2, 1).is_err());
    }

    #[test]
    fn nilpotent_products_vanish() {
        let mut op = FermionOperator::new();
        op.add(1.0, vec![(0, true), (0, true)]);
        op.add(1.0, vec![(0, false), (0, false)]);
        let jw = jordan_wigner(&op, 1).unwrap();
        assert_eq!(jw.term_count(), 0);
    }
}
