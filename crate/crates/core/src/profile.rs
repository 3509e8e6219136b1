//! Splitting profiles: every computational-basis measurement of every qubit,
//! with the Schmidt rank of what is left behind.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::measure::measure_computational;
use crate::schmidt::{schmidt_decompose, Bipartition, SchmidtResult};
use crate::state::{label_serde, PureState};

/// One `(qubit, outcome)` row of a splitting profile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplittingEntry {
    #[serde(with = "label_serde")]
    pub qubit: usize,
    pub outcome: u8,
    pub probability: f64,
    /// Absent for outcomes that never occur.
    pub rank: Option<usize>,
    pub gram_eigenvalues: Option<Vec<f64>>,
    pub post_state: Option<PureState>,
}

impl SplittingEntry {
    pub fn is_possible(&self) -> bool {
        self.rank.is_some()
    }

    pub fn is_entangled(&self) -> bool {
        self.rank.is_some_and(|r| r >= 2)
    }

    pub fn is_maximal(&self) -> bool {
        match (&self.rank, &self.gram_eigenvalues) {
            (Some(_), Some(gram)) => SchmidtResult::from_gram_eigenvalues(gram.clone()).maximally_entangled,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplittingProfile {
    pub state_label: String,
    pub num_qubits: usize,
    /// Ordered by `(qubit, outcome)`.
    pub entries: Vec<SplittingEntry>,
}

impl SplittingProfile {
    pub fn entries_for(&self, qubit: usize) -> impl Iterator<Item = &SplittingEntry> {
        self.entries.iter().filter(move |e| e.qubit == qubit)
    }

    pub fn probability_sum(&self, qubit: usize) -> f64 {
        self.entries_for(qubit).map(|e| e.probability).sum()
    }
}

/// Residual entanglement of a post-measurement register.
///
/// Three or more qubits are split as first qubit against the rest; a single
/// remaining qubit has nothing to be entangled with.
fn residual_schmidt(post: &PureState) -> Result<SchmidtResult> {
    match post.num_qubits() {
        1 => Ok(SchmidtResult::from_gram_eigenvalues(vec![1.0])),
        n => schmidt_decompose(post, &Bipartition::first_vs_rest(n)),
    }
}

pub fn build_profile(state: &PureState, label: impl Into<String>) -> Result<SplittingProfile> {
    let mut entries = Vec::with_capacity(2 * state.num_qubits());
    for qubit in 0..state.num_qubits() {
        for record in measure_computational(state, qubit)? {
            let schmidt = record.post_state.as_ref().map(residual_schmidt).transpose()?;
            entries.push(SplittingEntry {
                qubit,
                outcome: record.outcome,
                probability: record.probability,
                rank: schmidt.as_ref().map(|s| s.rank),
                gram_eigenvalues: schmidt.map(|s| s.gram_eigenvalues),
                post_state: record.post_state,
            });
        }
    }
    Ok(SplittingProfile {
        state_label: label.into(),
        num_qubits: state.num_qubits(),
        entries,
    })
}
