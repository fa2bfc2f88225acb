//! Cluster-circuit ansatz generation from valence-bond pairing layers.
//!
//! A pairing layer is a set of disjoint qubit pairs; each pair becomes a
//! cluster unit: two parametrized R_Y rotations followed by one CNOT
//! entangler.  A template is an ordered list of such layers (the resonance
//! scheme); the full circuit with `reps = r` stacks r rotation+entangler
//! blocks, cycling through the template's layers, and closes with a final
//! rotation layer:
//!
//! ```text
//!   reps = 0:  RY layer                                  (mean field)
//!   reps = r:  [RY layer + CNOTs(layer (k-1) mod L)] × r, then RY layer
//! ```
//!
//! so `depth = 2·reps + 1` and `n_parameters = n_qubits · (reps + 1)`.
//!
//! Builtin templates: the 2-qubit unit, the 4-qubit two-layer scheme, and
//! the hexagonal Kekulé ("A"), Dewar ("B") and reduced-Dewar ("C") schemes
//! on six qubits.

use crate::error::{Error, Result};
use crate::simulator::{Circuit, Gate};

/// One valence-bond resonance configuration: disjoint (control, target)
/// pairs, each realized as a cluster unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingLayer {
    pairs: Vec<(usize, usize)>,
}

impl PairingLayer {
    /// Validate that all indices in the layer are distinct.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(c, t) in &pairs {
            if c == t {
                return Err(Error::Invalid(format!("pair {c}-{t} has control = target")));
            }
            for q in [c, t] {
                if !seen.insert(q) {
                    return Err(Error::Invalid(format!(
                        "qubit {q} appears in more than one pair of a layer"
                    )));
                }
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// A named resonance scheme: ordered pairing layers over a fixed register.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterTemplate {
    n_qubits: usize,
    layers: Vec<PairingLayer>,
    name: String,
}

impl ClusterTemplate {
    /// Validate index bounds and that the union of pairs touches every
    /// qubit at least once (otherwise a qubit never entangles).
    pub fn new(n_qubits: usize, layers: Vec<PairingLayer>, name: impl Into<String>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::Invalid("template needs at least one layer".into()));
        }
        let mut touched = vec![false; n_qubits];
        for layer in &layers {
            for &(c, t) in layer.pairs() {
                for q in [c, t] {
                    if q >= n_qubits {
                        return Err(Error::QubitOutOfRange {
                            index: q,
                            n_qubits,
                        });
                    }
                    touched[q] = true;
                }
            }
        }
        if let Some(q) = touched.iter().position(|&t| !t) {
            return Err(Error::Invalid(format!(
                "qubit {q} is not covered by any pairing layer"
            )));
        }
        Ok(Self {
            n_qubits,
            layers,
            name: name.into(),
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn layers(&self) -> &[PairingLayer] {
        &self.layers
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Parse the template file format: one layer per line, pairs written
    /// `control-target` and separated by spaces, e.g. `0-5 1-4 2-3`.
    /// `#` starts a comment line.
    pub fn from_text(n_qubits: usize, text: &str, name: impl Into<String>) -> Result<Self> {
        let mut layers = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut pairs = Vec::new();
            for token in line.split_whitespace() {
                let (c, t) = token.split_once('-').ok_or(Error::Parse {
                    line: idx + 1,
                    message: format!("expected 'control-target', got '{token}'"),
                })?;
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| Error::Parse {
                        line: idx + 1,
                        message: format!("bad qubit index '{s}'"),
                    })
                };
                pairs.push((parse(c)?, parse(t)?));
            }
            layers.push(PairingLayer::new(pairs).map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?);
        }
        Self::new(n_qubits, layers, name)
    }

    pub fn from_path(n_qubits: usize, path: impl AsRef<std::path::Path>) -> Result<Self> {
        let name = path
            .as_ref()
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".into());
        let text = std::fs::read_to_string(path)?;
        Self::from_text(n_qubits, &text, name)
    }

    /// Render in the template file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for layer in &self.layers {
            let line: Vec<String> = layer
                .pairs()
                .iter()
                .map(|(c, t)| format!("{c}-{t}"))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A template together with the number of rotation+entangler blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnsatzSpec {
    pub template: ClusterTemplate,
    pub reps: usize,
}

impl AnsatzSpec {
    pub fn new(template: ClusterTemplate, reps: usize) -> Self {
        Self { template, reps }
    }

    pub fn n_qubits(&self) -> usize {
        self.template.n_qubits()
    }

    pub fn n_parameters(&self) -> usize {
        self.template.n_qubits() * (self.reps + 1)
    }
}

/// Build a validated template from explicit layers.
pub fn custom_template(
    n_qubits: usize,
    layers: Vec<Vec<(usize, usize)>>,
    name: impl Into<String>,
) -> Result<ClusterTemplate> {
    let layers = layers
        .into_iter()
        .map(PairingLayer::new)
        .collect::<Result<Vec<_>>>()?;
    ClusterTemplate::new(n_qubits, layers, name)
}

/// Builtin resonance schemes.
///
/// * `"unit2"` (2 qubits): the single cluster unit.
/// * `"4q"` (4 qubits): nearest-neighbor pairs, then the crossed pairs.
/// * `"A"` (6 qubits): Kekulé, the two nearest-neighbor matchings of the ring.
/// * `"B"` (6 qubits): Dewar, the three "two short + one para bond" matchings.
/// * `"C"` (6 qubits): reduced Dewar, the first two layers of `"B"`.
pub fn builtin_template(name: &str, n_qubits: usize) -> Result<ClusterTemplate> {
    let (expected, layers): (usize, Vec<Vec<(usize, usize)>>) = match name {
        "unit2" => (2, vec![vec![(0, 1)]]),
        "4q" => (4, vec![vec![(0, 1), (2, 3)], vec![(1, 2), (0, 3)]]),
        "A" => (
            6,
            vec![
                vec![(0, 1), (2, 3), (4, 5)],
                vec![(1, 2), (3, 4), (5, 0)],
            ],
        ),
        "B" => (
            6,
            vec![
                vec![(0, 5), (1, 4), (2, 3)],
                vec![(0, 3), (1, 2), (4, 5)],
                vec![(0, 1), (2, 5), (3, 4)],
            ],
        ),
        "C" => (
            6,
            vec![
                vec![(0, 5), (1, 4), (2, 3)],
                vec![(0, 3), (1, 2), (4, 5)],
            ],
        ),
        other => {
            return Err(Error::Invalid(format!(
                "unknown builtin template '{other}' (expected unit2, 4q, A, B or C)"
            )))
        }
    };
    if n_qubits != expected {
        return Err(Error::Invalid(format!(
            "template '{name}' is defined on {expected} qubits, got {n_qubits}"
        )));
    }
    custom_template(expected, layers, name)
}

/// Number of perfect pairings of 2w qubits: `(2w)! / (2^w w!)`.
pub fn pairing_count(n_qubits: usize) -> Result<u128> {
    if n_qubits == 0 || n_qubits % 2 != 0 {
        return Err(Error::Invalid(format!(
            "pairing count needs an even positive qubit count, got {n_qubits}"
        )));
    }
    // (2w)!/(2^w w!) = (2w-1)!! = 1·3·5···(2w-1)
    let mut count: u128 = 1;
    let mut odd = 1u128;
    while odd <= (n_qubits - 1) as u128 {
        count *= odd;
        odd += 2;
    }
    Ok(count)
}

/// Expand an [`AnsatzSpec`] into a runnable circuit.
///
/// Parameter slots are assigned in circuit order: block k uses slots
/// `(k−1)·n .. k·n−1` (qubit order), the final rotation layer uses the last
/// n slots.
pub fn build(spec: &AnsatzSpec) -> Result<Circuit> {
    let n = spec.template.n_qubits();
    let layer_count = spec.template.layers().len();
    let mut gates = Vec::new();
    let mut slot = 0;
    let rotation_layer = |gates: &mut Vec<Gate>, slot: &mut usize| {
        for q in 0..n {
            gates.push(Gate::RyParam {
                qubit: q,
                parameter_index: *slot,
            });
            *slot += 1;
        }
    };
    for k in 0..spec.reps {
        rotation_layer(&mut gates, &mut slot);
        let layer = &spec.template.layers()[k % layer_count];
        for &(c, t) in layer.pairs() {
            gates.push(Gate::Cnot {
                control: c,
                target: t,
            });
        }
    }
    rotation_layer(&mut gates, &mut slot);
    Circuit::new(n, gates, slot)
}
