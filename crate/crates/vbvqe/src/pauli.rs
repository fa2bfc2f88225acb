//! Pauli-string algebra and Hermitian observables.
//!
//! An [`Observable`] is a real-weighted sum of Pauli strings,
//!
//! ```text
//!   H = Σ_k  c_k · P_k,      P_k = ⊗_i  σ_i,   σ_i ∈ {I, X, Y, Z},
//! ```
//!
//! which is how every Hamiltonian in this crate is represented.
//!
//! Convention used throughout the crate: qubit 0 is the first (leftmost)
//! letter of a string and the most significant bit of a basis-state index,
//! so `"ZX"` on the state `|01⟩` applies Z to qubit 0 (the `0`) and X to
//! qubit 1 (the `1`).

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::simulator::StateVector;

/// Coefficients with magnitude below this are dropped by [`Observable::normalize`].
pub const DROP_TOLERANCE: f64 = 1e-12;

/// Default qubit cap for dense-matrix realization.
pub const DEFAULT_MATRIX_CAP: usize = 14;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::Invalid(format!("unknown Pauli letter '{other}'"))),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// A tensor product of Pauli letters, one per qubit.
///
/// Letter at position `i` acts on qubit `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString {
    letters: Vec<Pauli>,
}

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Self {
        Self { letters }
    }

    /// All-identity string on `n_qubits` qubits.
    pub fn identity(n_qubits: usize) -> Self {
        Self {
            letters: vec![Pauli::I; n_qubits],
        }
    }

    /// Parse from a letter sequence such as `"ZZI"`.
    pub fn parse(s: &str) -> Result<Self> {
        let letters = s.chars().map(Pauli::from_char).collect::<Result<_>>()?;
        Ok(Self { letters })
    }

    /// One non-identity letter on `qubit`, identity elsewhere.
    pub fn single(n_qubits: usize, qubit: usize, p: Pauli) -> Result<Self> {
        if qubit >= n_qubits {
            return Err(Error::QubitOutOfRange {
                index: qubit,
                n_qubits,
            });
        }
        let mut letters = vec![Pauli::I; n_qubits];
        letters[qubit] = p;
        Ok(Self { letters })
    }

    /// Identity except the given (qubit, letter) assignments.
    pub fn from_ops(n_qubits: usize, ops: &[(usize, Pauli)]) -> Result<Self> {
        let mut letters = vec![Pauli::I; n_qubits];
        for &(q, p) in ops {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    n_qubits,
                });
            }
            letters[q] = p;
        }
        Ok(Self { letters })
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&p| p == Pauli::I)
    }

    /// Bit masks for applying the string to basis indices.
    ///
    /// `x` flags qubits with an X or Y letter (bit flips), `z` flags qubits
    /// with a Z or Y letter (sign flips), `n_y` counts Y letters.  Qubit `k`
    /// maps to index bit `n - 1 - k`.
    pub(crate) fn masks(&self) -> (u64, u64, u32) {
        let n = self.letters.len();
        let mut x = 0u64;
        let mut z = 0u64;
        let mut n_y = 0u32;
        for (k, &p) in self.letters.iter().enumerate() {
            let bit = 1u64 << (n - 1 - k);
            match p {
                Pauli::I => {}
                Pauli::X => x |= bit,
                Pauli::Y => {
                    x |= bit;
                    z |= bit;
                    n_y += 1;
                }
                Pauli::Z => z |= bit,
            }
        }
        (x, z, n_y)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.letters {
            write!(f, "{}", p.to_char())?;
        }
        Ok(())
    }
}

/// `i^k` for `k mod 4`.
fn i_pow(k: u32) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// A Hermitian operator as a real-weighted sum of Pauli strings.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    n_qubits: usize,
    terms: Vec<(f64, PauliString)>,
}

impl Observable {
    /// Empty observable (the zero operator) on `n_qubits`.
    pub fn new(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            terms: Vec::new(),
        }
    }

    /// Build from terms, checking that all strings share one qubit count.
    pub fn from_terms(n_qubits: usize, terms: Vec<(f64, PauliString)>) -> Result<Self> {
        let mut obs = Self::new(n_qubits);
        for (c, p) in terms {
            obs.add_term(c, p)?;
        }
        Ok(obs)
    }

    pub fn add_term(&mut self, coefficient: f64, string: PauliString) -> Result<()> {
        if string.n_qubits() != self.n_qubits {
            return Err(Error::QubitMismatch {
                left: self.n_qubits,
                right: string.n_qubits(),
            });
        }
        self.terms.push((coefficient, string));
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    /// Merge duplicate strings, drop near-zero coefficients and order terms
    /// lexicographically by letters.  Idempotent.
    pub fn normalize(&self) -> Observable {
        let mut merged: BTreeMap<PauliString, f64> = BTreeMap::new();
        for (c, p) in &self.terms {
            *merged.entry(p.clone()).or_insert(0.0) += c;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| c.abs() >= DROP_TOLERANCE)
            .map(|(p, c)| (c, p))
            .collect();
        Observable {
            n_qubits: self.n_qubits,
            terms,
        }
    }

    /// Number of terms (meaningful after [`normalize`](Self::normalize)).
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Scale all coefficients.
    pub fn scaled(&self, factor: f64) -> Observable {
        Observable {
            n_qubits: self.n_qubits,
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c * factor, p.clone()))
                .collect(),
        }
    }

    /// Term-wise sum of two observables on the same register.
    pub fn add(&self, other: &Observable) -> Result<Observable> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Observable {
            n_qubits: self.n_qubits,
            terms,
        })
    }

    /// Dense Hermitian matrix `Σ c_k ⊗_i σ_i` of dimension `2^n`.
    pub fn to_matrix(&self) -> Result<CMatrix> {
        self.to_matrix_with_cap(DEFAULT_MATRIX_CAP)
    }

    pub fn to_matrix_with_cap(&self, cap: usize) -> Result<CMatrix> {
        if self.n_qubits > cap {
            return Err(Error::ResourceLimit {
                n_qubits: self.n_qubits,
                cap,
            });
        }
        let dim = 1usize << self.n_qubits;
        let mut m = CMatrix::zeros(dim);
        for (c, p) in &self.terms {
            let (xm, zm, n_y) = p.masks();
            let base = i_pow(n_y) * c;
            for b in 0..dim as u64 {
                let sign = if (b & zm).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                m[((b ^ xm) as usize, b as usize)] += base * sign;
            }
        }
        Ok(m)
    }

    /// Exact expectation value `⟨ψ|H|ψ⟩`, computed term by term without
    /// materializing the matrix.
    ///
    /// The accumulated imaginary residue is asserted to stay below 1e-12
    /// and discarded.
    pub fn expectation(&self, state: &StateVector) -> Result<f64> {
        if state.n_qubits() != self.n_qubits {
            return Err(Error::QubitMismatch {
                left: state.n_qubits(),
                right: self.n_qubits,
            });
        }
        let amps = state.amplitudes();
        let mut total = Complex64::new(0.0, 0.0);
        for (c, p) in &self.terms {
            let (xm, zm, n_y) = p.masks();
            let phase = i_pow(n_y);
            let mut acc = Complex64::new(0.0, 0.0);
            for (b, amp) in amps.iter().enumerate() {
                let sign = if (b as u64 & zm).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                acc += amps[b ^ xm as usize].conj() * amp * sign;
            }
            total += phase * acc * c;
        }
        assert!(
            total.im.abs() <= 1e-12,
            "imaginary residue {:e} in expectation of a Hermitian observable",
            total.im
        );
        Ok(total.re)
    }

    /// Render in the Pauli-sum text format: one `<coefficient> <letters>`
    /// line per term, qubit 0 first.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (c, p) in &self.terms {
            out.push_str(&format!("{c} {p}\n"));
        }
        out
    }

    /// Parse the Pauli-sum text format.  `#` starts a comment line and blank
    /// lines are ignored; at least one term line is required.
    pub fn from_text(text: &str) -> Result<Observable> {
        let mut terms: Vec<(f64, PauliString)> = Vec::new();
        let mut n_qubits = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (coeff_tok, letters_tok) = match (parts.next(), parts.next(), parts.next()) {
                (Some(c), Some(l), None) => (c, l),
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!("expected '<coefficient> <letters>', got '{line}'"),
                    })
                }
            };
            let coeff: f64 = coeff_tok.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("bad coefficient '{coeff_tok}'"),
            })?;
            let string = PauliString::parse(letters_tok).map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            match n_qubits {
                None => n_qubits = Some(string.n_qubits()),
                Some(n) if n != string.n_qubits() => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!(
                            "string length {} does not match earlier length {n}",
                            string.n_qubits()
                        ),
                    })
                }
                _ => {}
            }
            terms.push((coeff, string));
        }
        let n_qubits = n_qubits.ok_or(Error::Parse {
            line: 0,
            message: "no terms found".into(),
        })?;
        Observable::from_terms(n_qubits, terms)
    }

    /// Read an observable from a Pauli-sum text file.
    pub fn from_path(path: impl AsRef<std::path::Path>) -> Result<Observable> {
        let text = std::fs::read_to_string(path)?;
        Self::from_text(&text)
    }

    /// Write the Pauli-sum text format to a file.
    pub fn write_path(&self, path: impl AsRef<std::path::Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obs(terms: &[(f64, &str)]) -> Observable {
        let n = terms[0].1.len();
        Observable::from_terms(
            n,
            terms
                .iter()
                .map(|(c, s)| (*c, PauliString::parse(s).unwrap()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn normalize_merges_duplicates() {
        let o = obs(&[(0.5, "ZZ"), (0.5, "ZZ")]).normalize();
        assert_eq!(o.term_count(), 1);
        assert_eq!(o.terms()[0].0, 1.0);
        assert_eq!(o.terms()[0].1.to_string(), "ZZ");
    }

    #[test]
    fn normalize_cancels_to_empty() {
        let o = obs(&[(1.0, "XI"), (-1.0, "XI")]).normalize();
        assert_eq!(o.term_count(), 0);
    }

    #[test]
    fn normalize_order_is_stable_under_permutation() {
        let a = obs(&[(-0.5, "ZZ"), (-0.5, "XI"), (-0.5, "IX")]).normalize();
        let b = obs(&[(-0.5, "IX"), (-0.5, "ZZ"), (-0.5, "XI")]).normalize();
        assert_eq!(a, b);
        assert_eq!(a.term_count(), 3);
    }

    #[test]
    fn normalize_is_idempotent() {
        let o = obs(&[(0.25, "XY"), (0.5, "ZI"), (0.25, "XY")]).normalize();
        assert_eq!(o, o.normalize());
    }

    #[test]
    fn z_matrix_is_diag() {
        let m = obs(&[(1.0, "Z")]).to_matrix().unwrap();
        assert_eq!(m[(0, 0)].re, 1.0);
        assert_eq!(m[(1, 1)].re, -1.0);
        assert_eq!(m[(0, 1)].norm(), 0.0);
    }

    #[test]
    fn xx_matrix_is_antidiagonal() {
        let m = obs(&[(1.0, "XX")]).to_matrix().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(m[(i, j)].re, expect, "entry ({i},{j})");
                assert_eq!(m[(i, j)].im, 0.0);
            }
        }
    }

    #[test]
    fn y_matrix_matches_definition() {
        let m = obs(&[(1.0, "Y")]).to_matrix().unwrap();
        assert_eq!(m[(0, 1)], Complex64::new(0.0, -1.0));
        assert_eq!(m[(1, 0)], Complex64::new(0.0, 1.0));
    }

    #[test]
    fn matrix_cap_is_enforced() {
        let o = Observable::from_terms(3, vec![(1.0, PauliString::identity(3))]).unwrap();
        assert!(o.to_matrix_with_cap(2).is_err());
    }

    #[test]
    fn expectation_on_basis_states() {
        let zz = obs(&[(1.0, "ZZ")]);
        let mut s = StateVector::zero(2);
        assert_eq!(zz.expectation(&s).unwrap(), 1.0);
        // (|01⟩ + |10⟩)/√2
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        s.set_amplitudes(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(inv, 0.0),
            Complex64::new(inv, 0.0),
            Complex64::new(0.0, 0.0),
        ]);
        assert!((zz.expectation(&s).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn expectation_rejects_mismatched_register() {
        let zz = obs(&[(1.0, "ZZ")]);
        let s = StateVector::zero(3);
        assert!(zz.expectation(&s).is_err());
    }

    #[test]
    fn mixed_qubit_counts_are_rejected() {
        let mut o = Observable::new(2);
        o.add_term(1.0, PauliString::parse("XX").unwrap()).unwrap();
        assert!(o.add_term(1.0, PauliString::parse("X").unwrap()).is_err());
    }

    #[test]
    fn text_format_round_trips() {
        let o = obs(&[(-0.5, "ZZIIII"), (0.25, "IXYZII")]).normalize();
        let parsed = Observable::from_text(&o.to_text()).unwrap().normalize();
        assert_eq!(o, parsed);
    }

    #[test]
    fn text_format_skips_comments_and_blanks() {
        let text = "# transverse field\n\n-0.5 ZZ\n0.25 XI\n";
        let o = Observable::from_text(text).unwrap();
        assert_eq!(o.term_count(), 2);
    }

    #[test]
    fn text_format_reports_line_numbers() {
        let text = "-0.5 ZZ\nnot_a_number XI\n";
        match Observable::from_text(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
