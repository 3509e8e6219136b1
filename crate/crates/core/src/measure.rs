//! Single-qubit projective measurement with Born-rule probabilities.
//!
//! The measured qubit is removed from the post-measurement register; the
//! remaining qubits keep their original relative order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{Amplitude, PureState};

/// Outcomes below this probability carry no post-measurement state.
pub const PROB_TOL: f64 = 1e-12;

const ORTHONORMAL_TOL: f64 = 1e-12;

/// Result of projecting one qubit onto one basis ket.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub qubit: usize,
    /// Index of the basis ket (0 or 1); for the computational basis this is the bit value.
    pub outcome: u8,
    pub probability: f64,
    pub post_state: Option<PureState>,
}

/// An orthonormal pair of single-qubit kets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitBasis {
    kets: [[Amplitude; 2]; 2],
}

impl SingleQubitBasis {
    pub fn new(first: [Amplitude; 2], second: [Amplitude; 2]) -> Result<Self> {
        let dot = |u: &[Amplitude; 2], v: &[Amplitude; 2]| u[0].conj() * v[0] + u[1].conj() * v[1];
        let ok = (dot(&first, &first).re - 1.0).abs() <= ORTHONORMAL_TOL
            && (dot(&second, &second).re - 1.0).abs() <= ORTHONORMAL_TOL
            && dot(&first, &second).norm() <= ORTHONORMAL_TOL;
        if !ok {
            return Err(Error::NonOrthonormalBasis);
        }
        Ok(Self { kets: [first, second] })
    }

    /// `{|0>, |1>}`.
    pub fn computational() -> Self {
        let (zero, one) = (Amplitude::new(0.0, 0.0), Amplitude::new(1.0, 0.0));
        Self {
            kets: [[one, zero], [zero, one]],
        }
    }

    /// `{|+>, |->}`.
    pub fn hadamard() -> Self {
        let h = Amplitude::new(0.5f64.sqrt(), 0.0);
        Self {
            kets: [[h, h], [h, -h]],
        }
    }

    pub fn ket(&self, which: u8) -> [Amplitude; 2] {
        self.kets[which as usize]
    }
}

/// Full-register index of remaining-register index `rest` with `bit` inserted
/// at the position of `qubit`.
#[inline]
fn insert_bit(num_qubits: usize, qubit: usize, rest: usize, bit: usize) -> usize {
    let shift = num_qubits - 1 - qubit;
    let low = rest & ((1 << shift) - 1);
    let high = rest >> shift;
    (high << (shift + 1)) | (bit << shift) | low
}

fn check_measurable(state: &PureState, qubit: usize) -> Result<()> {
    if state.num_qubits() < 2 {
        return Err(Error::TooFewQubits(state.num_qubits()));
    }
    state.check_qubit(qubit)
}

/// Applies `|ket><ket|` on `qubit` and drops that qubit.
fn project(state: &PureState, qubit: usize, ket: [Amplitude; 2], outcome: u8) -> Result<MeasurementRecord> {
    let n = state.num_qubits();
    let amps = state.amplitudes();
    let reduced: Vec<Amplitude> = (0..1usize << (n - 1))
        .map(|rest| {
            ket[0].conj() * amps[insert_bit(n, qubit, rest, 0)] + ket[1].conj() * amps[insert_bit(n, qubit, rest, 1)]
        })
        .collect();
    let probability: f64 = reduced.iter().map(|a| a.norm_sqr()).sum();
    if probability < PROB_TOL {
        return Ok(MeasurementRecord {
            qubit,
            outcome,
            probability: 0.0,
            post_state: None,
        });
    }
    let post_state = PureState::from_amplitudes(n - 1, reduced)?;
    Ok(MeasurementRecord {
        qubit,
        outcome,
        probability,
        post_state: Some(post_state),
    })
}

/// Measures `qubit` in the computational basis, returning the records for
/// outcomes 0 and 1.
pub fn measure_computational(state: &PureState, qubit: usize) -> Result<[MeasurementRecord; 2]> {
    check_measurable(state, qubit)?;
    let basis = SingleQubitBasis::computational();
    Ok([
        project(state, qubit, basis.ket(0), 0)?,
        project(state, qubit, basis.ket(1), 1)?,
    ])
}

/// Projects `qubit` onto ket `which` of an arbitrary orthonormal basis.
pub fn project_arbitrary(
    state: &PureState,
    qubit: usize,
    basis: &SingleQubitBasis,
    which: u8,
) -> Result<MeasurementRecord> {
    check_measurable(state, qubit)?;
    if which > 1 {
        return Err(Error::InvalidOutcome(which));
    }
    // Bases can be assembled without `new`, so validate again here.
    let basis = SingleQubitBasis::new(basis.kets[0], basis.kets[1])?;
    project(state, qubit, basis.ket(which), which)
}

/// Re-tensors a single-qubit `ket` into `post` at position `qubit`.
pub fn reinsert(post: &PureState, qubit: usize, ket: [Amplitude; 2]) -> Result<PureState> {
    let n = post.num_qubits() + 1;
    if qubit >= n {
        return Err(Error::QubitOutOfRange { qubit, num_qubits: n });
    }
    let mut amplitudes = vec![Amplitude::new(0.0, 0.0); 1 << n];
    for (rest, a) in post.amplitudes().iter().enumerate() {
        amplitudes[insert_bit(n, qubit, rest, 0)] = ket[0] * a;
        amplitudes[insert_bit(n, qubit, rest, 1)] = ket[1] * a;
    }
    PureState::from_amplitudes(n, amplitudes)
}
