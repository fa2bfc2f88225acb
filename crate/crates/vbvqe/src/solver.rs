//! Exact ground-state oracle: dense Hermitian diagonalization.
//!
//! A complex Hermitian matrix H = A + iB is embedded into the real
//! symmetric matrix
//!
//! ```text
//!   M = | A  -B |
//!       | B   A |
//! ```
//!
//! whose spectrum is that of H with every eigenvalue doubled, and the real
//! problem is solved by Householder tridiagonalization followed by implicit
//! QL iteration with shifts.  Every system in this crate is small (≤ 14
//! qubits by the matrix cap), so dense is the right tool.

use num_complex::Complex64;

use crate::error::Result;
use crate::matrix::CMatrix;
use crate::pauli::Observable;
use crate::simulator::StateVector;

/// Sorted spectrum of an observable.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    /// All 2^n eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvalues[0]`.
    pub ground_energy: f64,
    /// Normalized ground eigenvector, if requested.
    pub ground_state: Option<StateVector>,
}

/// Smallest eigenvalue of the observable's dense matrix.
pub fn ground_energy(obs: &Observable) -> Result<f64> {
    Ok(full_spectrum(obs, false)?.ground_energy)
}

/// Full sorted spectrum, optionally with the ground eigenvector.
pub fn full_spectrum(obs: &Observable, with_vectors: bool) -> Result<SpectrumResult> {
    let m = obs.to_matrix()?;
    let (eigenvalues, ground) = hermitian_eigen(&m, with_vectors);
    let ground_state = ground.map(|amps| {
        let mut s = StateVector::zero(obs.n_qubits());
        s.set_amplitudes(amps);
        s
    });
    Ok(SpectrumResult {
        ground_energy: eigenvalues[0],
        eigenvalues,
        ground_state,
    })
}

/// Eigenvalues (ascending) of a complex Hermitian matrix, plus the ground
/// eigenvector when `with_vector` is set.
pub fn hermitian_eigen(h: &CMatrix, with_vector: bool) -> (Vec<f64>, Option<Vec<Complex64>>) {
    let d = h.dim();
    debug_assert!(h.hermiticity_defect() < 1e-9 * (1.0 + h.frobenius_norm()));
    // real symmetric embedding, row-major 2d x 2d
    let n = 2 * d;
    let mut m = vec![0.0f64; n * n];
    for i in 0..d {
        for j in 0..d {
            let v = h[(i, j)];
            m[i * n + j] = v.re;
            m[(i + d) * n + (j + d)] = v.re;
            m[i * n + (j + d)] = -v.im;
            m[(i + d) * n + j] = v.im;
        }
    }
    let (vals, vecs) = symmetric_eigen(n, m, with_vector);
    // each eigenvalue of H appears twice in M; take every other sorted value
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let eigenvalues: Vec<f64> = order.iter().step_by(2).map(|&k| vals[k]).collect();
    let ground = if with_vector {
        let z = vecs.expect("vectors requested");
        let col = order[0];
        let mut v: Vec<Complex64> = (0..d)
            .map(|i| Complex64::new(z[i * n + col], z[(i + d) * n + col]))
            .collect();
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut v {
            *a /= norm;
        }
        Some(v)
    } else {
        None
    };
    (eigenvalues, ground)
}

/// Eigen-decomposition of a real symmetric matrix (row-major, square).
///
/// Returns unsorted eigenvalues and, when requested, the orthogonal matrix
/// of column eigenvectors.  Householder reduction (tred2) followed by
/// implicit-shift QL (tqli).
pub fn symmetric_eigen(n: usize, mut a: Vec<f64>, want_vectors: bool) -> (Vec<f64>, Option<Vec<f64>>) {
    let mut diag = vec![0.0f64; n];
    let mut off = vec![0.0f64; n];
    tred2(n, &mut a, &mut diag, &mut off);
    tqli(n, &mut diag, &mut off, &mut a);
    let vectors = want_vectors.then_some(a);
    (diag, vectors)
}

fn sign_of(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Householder reduction of a real symmetric matrix to tridiagonal form,
/// accumulating the orthogonal transform in `a`.
fn tred2(n: usize, a: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i * n + k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = -sign_of(h.sqrt(), f);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    a[j * n + i] = a[i * n + j] / h;
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g_acc += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a[i * n + j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a[i * n + k] * a[k * n + j];
                }
                for k in 0..i {
                    a[k * n + j] -= g * a[k * n + i];
                }
            }
        }
        d[i] = a[i * n + i];
        a[i * n + i] = 1.0;
        for j in 0..i {
            a[j * n + i] = 0.0;
            a[i * n + j] = 0.0;
        }
    }
}

/// Implicit-shift QL iteration on a tridiagonal matrix, rotating the
/// eigenvector accumulator `z` along.
fn tqli(n: usize, d: &mut [f64], e: &mut [f64], z: &mut [f64]) {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PauliString;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

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
    fn single_z_spectrum() {
        let r = full_spectrum(&obs(&[(1.0, "Z")]), false).unwrap();
        assert!((r.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((r.eigenvalues[1] - 1.0).abs() < 1e-12);
        assert_eq!(ground_energy(&obs(&[(1.0, "Z")])).unwrap(), r.ground_energy);
    }

    #[test]
    fn single_x_spectrum() {
        let r = full_spectrum(&obs(&[(1.0, "X")]), false).unwrap();
        assert!((r.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((r.eigenvalues[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn field_only_two_site_spectrum() {
        // J = 0, h = 1: spectrum {-2h, 0, 0, 2h}
        let h = obs(&[(-1.0, "XI"), (-1.0, "IX")]);
        let r = full_spectrum(&h, false).unwrap();
        let expect = [-2.0, 0.0, 0.0, 2.0];
        for (v, e) in r.eigenvalues.iter().zip(expect) {
            assert!((v - e).abs() < 1e-12, "{v} vs {e}");
        }
    }

    #[test]
    fn two_site_ising_ground_energy_matches_closed_form() {
        // J = -0.5, h = 0.5: E0 = -sqrt(J^2 + 4h^2)
        let h = obs(&[(0.5, "ZZ"), (-0.5, "XI"), (-0.5, "IX")]);
        let e = ground_energy(&h).unwrap();
        assert!((e - (-(0.25f64 + 1.0).sqrt())).abs() < 1e-12);
        assert!((e + 1.118033989).abs() < 1e-9);
    }

    #[test]
    fn complex_hermitian_with_y_terms() {
        // H = Y: eigenvalues ±1; and a random Y-heavy 3-qubit observable
        // checked against eigen residuals.
        let h = obs(&[(0.7, "YZI"), (-0.3, "XYI"), (0.2, "IYY"), (0.1, "ZZZ")]);
        let m = h.to_matrix().unwrap();
        let r = full_spectrum(&h, true).unwrap();
        let v = r.ground_state.unwrap();
        let hv = m.mul_vec(v.amplitudes());
        let res: f64 = hv
            .iter()
            .zip(v.amplitudes())
            .map(|(a, b)| (a - b * r.ground_energy).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(res <= 1e-9 * m.frobenius_norm().max(1.0), "residual {res}");
    }

    #[test]
    fn random_symmetric_matrices_have_small_residuals() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for trial in 0..5 {
            let n = 3 + trial * 7;
            let mut a = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..=i {
                    let v = rng.gen_range(-1.0..1.0);
                    a[i * n + j] = v;
                    a[j * n + i] = v;
                }
            }
            let original = a.clone();
            let (vals, vecs) = symmetric_eigen(n, a, true);
            let z = vecs.unwrap();
            let norm: f64 = original.iter().map(|x| x * x).sum::<f64>().sqrt();
            for col in 0..n {
                let mut res = 0.0f64;
                for i in 0..n {
                    let mut hv = 0.0;
                    for j in 0..n {
                        hv += original[i * n + j] * z[j * n + col];
                    }
                    res += (hv - vals[col] * z[i * n + col]).powi(2);
                }
                assert!(res.sqrt() <= 1e-9 * norm.max(1.0), "col {col}: {}", res.sqrt());
            }
            // eigenvector orthonormality
            for c1 in 0..n {
                for c2 in c1..n {
                    let dot: f64 = (0..n).map(|i| z[i * n + c1] * z[i * n + c2]).sum();
                    let expect = if c1 == c2 { 1.0 } else { 0.0 };
                    assert!((dot - expect).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn degenerate_eigenvalues_are_extracted_once_each() {
        // ZZ on two qubits: eigenvalues {+1, +1, -1, -1}
        let r = full_spectrum(&obs(&[(1.0, "ZZ")]), false).unwrap();
        assert_eq!(r.eigenvalues.len(), 4);
        assert!((r.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((r.eigenvalues[1] + 1.0).abs() < 1e-12);
        assert!((r.eigenvalues[2] - 1.0).abs() < 1e-12);
        assert!((r.eigenvalues[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ground_state_expectation_equals_ground_energy() {
        let h = obs(&[(0.5, "ZZ"), (-0.5, "XI"), (-0.5, "IX")]);
        let r = full_spectrum(&h, true).unwrap();
        let e = h.expectation(&r.ground_state.unwrap()).unwrap();
        assert!((e - r.ground_energy).abs() < 1e-10);
    }
}
