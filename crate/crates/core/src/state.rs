//! Dense pure states over a register of qubits.
//!
//! Amplitudes are indexed by the computational basis label read as a
//! big-endian bit string: qubit 0 is the leftmost symbol of a ket such as
//! `|ABC>`, and therefore the most significant bit of the index.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Amplitude = Complex64;

/// A 2x2 complex matrix acting on one qubit, row-major.
pub type SingleQubitGate = [[Amplitude; 2]; 2];

/// Tolerance on the squared norm of a state.
pub const NORM_TOL: f64 = 1e-12;

/// Largest register accepted by the constructors.
pub const MAX_QUBITS: usize = 10;

/// Letter used for a qubit in reports: 0 -> `A`, 1 -> `B`, ...
pub fn qubit_label(qubit: usize) -> char {
    debug_assert!(qubit < 26);
    (b'A' + qubit as u8) as char
}

/// Inverse of [`qubit_label`].
pub fn parse_qubit_label(label: &str) -> Option<usize> {
    let mut chars = label.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_uppercase() => Some((c as u8 - b'A') as usize),
        _ => None,
    }
}

/// Serde helpers writing qubit indices as their letter labels.
pub(crate) mod label_serde {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{parse_qubit_label, qubit_label};

    fn parse<'de, D: Deserializer<'de>>(label: &str) -> Result<usize, D::Error> {
        parse_qubit_label(label).ok_or_else(|| D::Error::custom(format!("bad qubit label {label:?}")))
    }

    pub fn serialize<S: Serializer>(qubit: &usize, s: S) -> Result<S::Ok, S::Error> {
        qubit_label(*qubit).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        parse::<D>(&String::deserialize(d)?)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(qubit: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
            qubit.map(qubit_label).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<usize>, D::Error> {
            Option::<String>::deserialize(d)?.map(|l| parse::<D>(&l)).transpose()
        }
    }

    /// `(qubit, outcome)` pairs as `[["A", 0], ...]`.
    pub mod outcomes {
        use super::*;

        pub fn serialize<S: Serializer>(pairs: &[(usize, u8)], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(pairs.iter().map(|&(q, o)| (qubit_label(q), o)))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(usize, u8)>, D::Error> {
            Vec::<(String, u8)>::deserialize(d)?
                .into_iter()
                .map(|(l, o)| Ok((parse::<D>(&l)?, o)))
                .collect()
        }
    }
}

/// Bit of `index` holding qubit `qubit` in an `num_qubits` register.
#[inline]
pub(crate) fn qubit_mask(num_qubits: usize, qubit: usize) -> usize {
    1 << (num_qubits - 1 - qubit)
}

/// Normalized amplitude vector over `num_qubits` qubits.
///
/// Values are immutable once built; every operation returns a new state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "StateDocument", try_from = "StateDocument")]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<Amplitude>,
}

impl PureState {
    /// Validates and normalizes a raw amplitude vector.
    ///
    /// Relative phases are preserved. A vector that is already normalized to
    /// within a few ulps is kept bit-for-bit.
    pub fn from_amplitudes(num_qubits: usize, amplitudes: Vec<Amplitude>) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount(num_qubits));
        }
        let expected = 1usize << num_qubits;
        if amplitudes.len() != expected {
            return Err(Error::LengthMismatch {
                num_qubits,
                expected,
                found: amplitudes.len(),
            });
        }
        if let Some(index) = amplitudes.iter().position(|a| !(a.re.is_finite() && a.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr.sqrt() < NORM_TOL {
            return Err(Error::ZeroVector);
        }
        let mut amplitudes = amplitudes;
        if (norm_sqr - 1.0).abs() > 4.0 * f64::EPSILON {
            let scale = norm_sqr.sqrt().recip();
            amplitudes.iter_mut().for_each(|a| *a *= scale);
        }
        Ok(Self { num_qubits, amplitudes })
    }

    /// Convenience constructor from real amplitudes.
    pub fn from_real(num_qubits: usize, amplitudes: &[f64]) -> Result<Self> {
        Self::from_amplitudes(
            num_qubits,
            amplitudes.iter().map(|&re| Amplitude::new(re, 0.0)).collect(),
        )
    }

    /// Computational basis ket `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount(num_qubits));
        }
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::QubitOutOfRange {
                qubit: index,
                num_qubits,
            });
        }
        let mut amplitudes = vec![Amplitude::new(0.0, 0.0); dim];
        amplitudes[index] = Amplitude::new(1.0, 0.0);
        Ok(Self { num_qubits, amplitudes })
    }

    /// Equal superposition over the listed basis indices.
    fn uniform(num_qubits: usize, support: &[usize]) -> Self {
        let weight = (support.len() as f64).sqrt().recip();
        let mut amplitudes = vec![Amplitude::new(0.0, 0.0); 1 << num_qubits];
        for &i in support {
            amplitudes[i] = Amplitude::new(weight, 0.0);
        }
        Self { num_qubits, amplitudes }
    }

    /// Haar-distributed random state (normalized complex Gaussian vector).
    pub fn random<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount(num_qubits));
        }
        let amplitudes = (0..1usize << num_qubits)
            .map(|_| Amplitude::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        Self::from_amplitudes(num_qubits, amplitudes)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Amplitude {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Result<Amplitude> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Multiplies every amplitude by `phase` (expected to have unit modulus).
    pub fn with_global_phase(&self, phase: Amplitude) -> Self {
        Self {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|a| a * phase).collect(),
        }
    }

    /// `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &PureState) -> Result<Self> {
        let num_qubits = self.num_qubits + other.num_qubits;
        if num_qubits > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount(num_qubits));
        }
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ok(Self { num_qubits, amplitudes })
    }

    /// Applies a single-qubit operator to `qubit`.
    ///
    /// The result is renormalized, so only unitary gates give physical
    /// evolution.
    pub fn apply_single_qubit(&self, qubit: usize, gate: &SingleQubitGate) -> Result<Self> {
        self.check_qubit(qubit)?;
        let mask = qubit_mask(self.num_qubits, qubit);
        let mut amplitudes = self.amplitudes.clone();
        for i0 in (0..self.dim()).filter(|i| i & mask == 0) {
            let i1 = i0 | mask;
            let (a0, a1) = (self.amplitudes[i0], self.amplitudes[i1]);
            amplitudes[i0] = gate[0][0] * a0 + gate[0][1] * a1;
            amplitudes[i1] = gate[1][0] * a0 + gate[1][1] * a1;
        }
        Self::from_amplitudes(self.num_qubits, amplitudes)
    }

    /// Reorders qubits: qubit `j` of the result is qubit `order[j]` of `self`.
    pub fn permute_qubits(&self, order: &[usize]) -> Result<Self> {
        let n = self.num_qubits;
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&q| q >= n || std::mem::replace(&mut seen[q], true)) {
            return Err(Error::InvalidMapping(format!(
                "{order:?} is not a permutation of 0..{n}"
            )));
        }
        let mut amplitudes = vec![Amplitude::new(0.0, 0.0); self.dim()];
        for (old, amp) in self.amplitudes.iter().enumerate() {
            let new = order
                .iter()
                .enumerate()
                .filter(|&(_, &src)| old & qubit_mask(n, src) != 0)
                .fold(0, |acc, (dst, _)| acc | qubit_mask(n, dst));
            amplitudes[new] = *amp;
        }
        Ok(Self {
            num_qubits: n,
            amplitudes,
        })
    }

    pub(crate) fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    /// Ket notation with amplitudes rounded to `digits` decimals, skipping
    /// terms whose weight is negligible.
    pub fn to_ket_string(&self, digits: usize) -> String {
        let terms: Vec<String> = self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm_sqr() > crate::measure::PROB_TOL)
            .map(|(i, a)| {
                format!(
                    "{}|{:0width$b}>",
                    format_amplitude(*a, digits),
                    i,
                    width = self.num_qubits
                )
            })
            .collect();
        if terms.is_empty() {
            "0".to_owned()
        } else {
            terms.join(" + ")
        }
    }
}

fn format_amplitude(a: Amplitude, digits: usize) -> String {
    let tiny = 0.5 * 10f64.powi(-(digits as i32));
    match (a.re.abs() < tiny, a.im.abs() < tiny) {
        (_, true) => format!("{:.digits$}", a.re),
        (true, false) => format!("{:.digits$}i", a.im),
        (false, false) => format!("({:.digits$}{:+.digits$}i)", a.re, a.im),
    }
}

impl fmt::Display for PureState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ket_string(6))
    }
}

/// On-disk form of a state: `{"num_qubits": n, "amplitudes": [[re, im], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateDocument {
    pub num_qubits: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl From<PureState> for StateDocument {
    fn from(state: PureState) -> Self {
        Self {
            num_qubits: state.num_qubits,
            amplitudes: state.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

impl TryFrom<StateDocument> for PureState {
    type Error = Error;

    fn try_from(doc: StateDocument) -> Result<Self> {
        let amplitudes = doc.amplitudes.iter().map(|&[re, im]| Amplitude::new(re, im)).collect();
        PureState::from_amplitudes(doc.num_qubits, amplitudes)
    }
}

/// `|<a|b>|^2`, clamped to `[0, 1]`.
pub fn fidelity(a: &PureState, b: &PureState) -> Result<f64> {
    Ok(a.inner(b)?.norm_sqr().clamp(0.0, 1.0))
}

/// The named states used throughout the analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanonicalState {
    Ghz,
    W,
    WBar,
    WWBar,
    Star,
    Dicke42,
    BellPhiPlus,
}

impl CanonicalState {
    pub const ALL: [CanonicalState; 7] = [
        CanonicalState::Ghz,
        CanonicalState::W,
        CanonicalState::WBar,
        CanonicalState::WWBar,
        CanonicalState::Star,
        CanonicalState::Dicke42,
        CanonicalState::BellPhiPlus,
    ];

    pub fn construct(self) -> PureState {
        match self {
            CanonicalState::Ghz => PureState::uniform(3, &[0b000, 0b111]),
            CanonicalState::W => PureState::uniform(3, &[0b001, 0b010, 0b100]),
            CanonicalState::WBar => PureState::uniform(3, &[0b011, 0b101, 0b110]),
            CanonicalState::WWBar => PureState::uniform(3, &[0b001, 0b010, 0b100, 0b011, 0b101, 0b110]),
            CanonicalState::Star => PureState::uniform(3, &[0b000, 0b100, 0b101, 0b111]),
            CanonicalState::Dicke42 => {
                let support: Vec<usize> = (0..16usize).filter(|i| i.count_ones() == 2).collect();
                PureState::uniform(4, &support)
            }
            CanonicalState::BellPhiPlus => PureState::uniform(2, &[0b00, 0b11]),
        }
    }

    /// Lower-case selector used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            CanonicalState::Ghz => "ghz",
            CanonicalState::W => "w",
            CanonicalState::WBar => "wbar",
            CanonicalState::WWBar => "wwbar",
            CanonicalState::Star => "star",
            CanonicalState::Dicke42 => "dicke42",
            CanonicalState::BellPhiPlus => "bell",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Human-readable ket expansion, e.g. `1/2(|000>+|100>+|101>+|111>)`.
    pub fn definition(self) -> String {
        let state = self.construct();
        let support: Vec<usize> = (0..state.dim())
            .filter(|&i| state.amplitude(i).norm_sqr() > 0.0)
            .collect();
        let prefactor = match support.len() {
            4 => "1/2".to_owned(),
            k => format!("1/sqrt{k}"),
        };
        let mut kets: Vec<usize> = support;
        if self == CanonicalState::WWBar {
            // Excitation-number order, as W then W-bar.
            kets.sort_by_key(|i| (i.count_ones(), *i));
        }
        let body: Vec<String> = kets
            .iter()
            .map(|i| format!("|{:0w$b}>", i, w = state.num_qubits()))
            .collect();
        format!("{prefactor}({})", body.join("+"))
    }
}

impl fmt::Display for CanonicalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Haar-random 2x2 unitary.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> SingleQubitGate {
    let mut g = || -> f64 { rng.sample(StandardNormal) };
    let (a, b) = (Amplitude::new(g(), g()), Amplitude::new(g(), g()));
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / norm, b / norm);
    let phase = Amplitude::from_polar(1.0, g());
    [[a, -b.conj() * phase], [b, a.conj() * phase]]
}
