//! Schmidt decomposition of a pure state across a bipartition of its qubits.
//!
//! The squared Schmidt coefficients are the eigenvalues of the Gram matrix
//! `C^dagger C` of the coefficient matrix `C[i][j] = <i|_L <j|_R |psi>`.
//! `C C^dagger` shares the nonzero part of that spectrum, so the smaller of
//! the two is diagonalized.

use serde::{Deserialize, Serialize};

use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::state::{qubit_mask, Amplitude, PureState};

/// Gram eigenvalues at or below this count as zero.
pub const RANK_TOL: f64 = 1e-10;

/// Nonzero Schmidt coefficients closer than this are treated as equal.
pub const MAXIMAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Self {
        Self { left, right }
    }

    /// Qubit 0 against qubits `1..num_qubits`.
    pub fn first_vs_rest(num_qubits: usize) -> Self {
        Self::new(vec![0], (1..num_qubits).collect())
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }

    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        if self.left.is_empty() || self.right.is_empty() {
            return Err(Error::InvalidPartition("both sides must be nonempty".into()));
        }
        let mut seen = vec![false; num_qubits];
        for &q in self.left.iter().chain(&self.right) {
            if q >= num_qubits {
                return Err(Error::InvalidPartition(format!(
                    "qubit {q} out of range for {num_qubits} qubits"
                )));
            }
            if std::mem::replace(&mut seen[q], true) {
                return Err(Error::InvalidPartition(format!("qubit {q} listed twice")));
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("qubit {missing} not assigned")));
        }
        Ok(())
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Amplitude>,
}

impl CoefficientMatrix {
    pub fn get(&self, row: usize, col: usize) -> Amplitude {
        self.data[row * self.cols + col]
    }

    /// `C^dagger C` when `C` is tall or square, `C C^dagger` otherwise.
    fn small_gram(&self) -> (Vec<Amplitude>, usize) {
        let zero = Amplitude::new(0.0, 0.0);
        if self.cols <= self.rows {
            let n = self.cols;
            let mut g = vec![zero; n * n];
            for a in 0..n {
                for b in a..n {
                    let v: Amplitude = (0..self.rows).map(|k| self.get(k, a).conj() * self.get(k, b)).sum();
                    g[a * n + b] = v;
                    g[b * n + a] = v.conj();
                }
            }
            (g, n)
        } else {
            let n = self.rows;
            let mut g = vec![zero; n * n];
            for a in 0..n {
                for b in a..n {
                    let v: Amplitude = (0..self.cols).map(|k| self.get(a, k) * self.get(b, k).conj()).sum();
                    g[a * n + b] = v;
                    g[b * n + a] = v.conj();
                }
            }
            (g, n)
        }
    }
}

/// Packs the bits of `index` belonging to `qubits` (first listed = most significant).
fn gather(index: usize, num_qubits: usize, qubits: &[usize]) -> usize {
    qubits.iter().fold(0, |acc, &q| {
        (acc << 1) | usize::from(index & qubit_mask(num_qubits, q) != 0)
    })
}

pub fn coefficient_matrix(state: &PureState, partition: &Bipartition) -> Result<CoefficientMatrix> {
    let n = state.num_qubits();
    partition.validate(n)?;
    let rows = 1 << partition.left.len();
    let cols = 1 << partition.right.len();
    let mut data = vec![Amplitude::new(0.0, 0.0); rows * cols];
    for (index, amp) in state.amplitudes().iter().enumerate() {
        let i = gather(index, n, &partition.left);
        let j = gather(index, n, &partition.right);
        data[i * cols + j] = *amp;
    }
    Ok(CoefficientMatrix { rows, cols, data })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchmidtResult {
    /// Schmidt coefficients, descending.
    pub coefficients: Vec<f64>,
    /// Eigenvalues of the Gram matrix (squared coefficients), descending.
    pub gram_eigenvalues: Vec<f64>,
    pub rank: usize,
    pub maximally_entangled: bool,
}

impl SchmidtResult {
    /// Builds the result from a Gram spectrum (any order).
    pub fn from_gram_eigenvalues(mut gram: Vec<f64>) -> Self {
        gram.iter_mut().for_each(|v| *v = v.max(0.0));
        gram.sort_by(|a, b| b.total_cmp(a));
        let coefficients: Vec<f64> = gram.iter().map(|v| v.sqrt()).collect();
        let rank = gram.iter().filter(|&&v| v > RANK_TOL).count();
        let nonzero = &coefficients[..rank];
        let maximally_entangled = rank > 1 && nonzero[0] - nonzero[rank - 1] <= MAXIMAL_TOL;
        Self {
            coefficients,
            gram_eigenvalues: gram,
            rank,
            maximally_entangled,
        }
    }

    pub fn is_entangled(&self) -> bool {
        self.rank > 1
    }
}

pub fn schmidt_decompose(state: &PureState, partition: &Bipartition) -> Result<SchmidtResult> {
    let c = coefficient_matrix(state, partition)?;
    let (gram, n) = c.small_gram();
    Ok(SchmidtResult::from_gram_eigenvalues(hermitian_eigenvalues(&gram, n)))
}

pub fn schmidt_rank(state: &PureState, partition: &Bipartition) -> Result<usize> {
    Ok(schmidt_decompose(state, partition)?.rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::CanonicalState;

    fn real_state(n: usize, amps: &[f64]) -> PureState {
        PureState::from_real(n, amps).unwrap()
    }

    fn one_one() -> Bipartition {
        Bipartition::new(vec![0], vec![1])
    }

    fn assert_matrix(c: &CoefficientMatrix, want: &[[f64; 2]; 2]) {
        for (i, row) in want.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                assert!((c.get(i, j) - Amplitude::new(*w, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn coefficient_matrices() {
        let r3 = 3f64.sqrt().recip();
        let s = real_state(2, &[0.0, 1.0, 1.0, 1.0]);
        assert_matrix(&coefficient_matrix(&s, &one_one()).unwrap(), &[[0.0, r3], [r3, r3]]);
        let s = PureState::basis(2, 0).unwrap();
        assert_matrix(&coefficient_matrix(&s, &one_one()).unwrap(), &[[1.0, 0.0], [0.0, 0.0]]);
        let s = real_state(2, &[1.0, 1.0, 0.0, 1.0]);
        assert_matrix(&coefficient_matrix(&s, &one_one()).unwrap(), &[[r3, r3], [0.0, r3]]);
    }

    #[test]
    fn coefficient_matrix_respects_listed_order() {
        // |01>: left=[1], right=[0] puts the 1 at row 1, column 0.
        let s = PureState::basis(2, 0b01).unwrap();
        let c = coefficient_matrix(&s, &Bipartition::new(vec![1], vec![0])).unwrap();
        assert_eq!(c.get(1, 0), Amplitude::new(1.0, 0.0));
    }

    #[test]
    fn wwbar_residue_spectrum() {
        let s = real_state(2, &[0.0, 1.0, 1.0, 1.0]);
        let r = schmidt_decompose(&s, &one_one()).unwrap();
        let s5 = 5f64.sqrt();
        assert!((r.gram_eigenvalues[0] - (3.0 + s5) / 6.0).abs() < 1e-12);
        assert!((r.gram_eigenvalues[1] - (3.0 - s5) / 6.0).abs() < 1e-12);
        assert!((r.gram_eigenvalues[0] - 0.87268).abs() < 1e-5);
        assert_eq!(r.rank, 2);
        assert!(!r.maximally_entangled);
    }

    #[test]
    fn bell_is_maximal() {
        let r = schmidt_decompose(&CanonicalState::BellPhiPlus.construct(), &one_one()).unwrap();
        assert!((r.gram_eigenvalues[0] - 0.5).abs() < 1e-12);
        assert!((r.gram_eigenvalues[1] - 0.5).abs() < 1e-12);
        assert_eq!(r.rank, 2);
        assert!(r.maximally_entangled);
    }

    #[test]
    fn product_states() {
        let r = schmidt_decompose(&PureState::basis(2, 3).unwrap(), &one_one()).unwrap();
        assert_eq!(r.gram_eigenvalues, vec![1.0, 0.0]);
        assert_eq!(r.rank, 1);
        assert!(!r.maximally_entangled);
        assert_eq!(
            schmidt_rank(&real_state(2, &[1.0, 0.0, 1.0, 0.0]), &one_one()).unwrap(),
            1
        );
        assert_eq!(
            schmidt_rank(&real_state(2, &[1.0, 0.0, 1.0, 1.0]), &one_one()).unwrap(),
            2
        );
    }

    #[test]
    fn ghz_and_star_cuts() {
        let ghz = CanonicalState::Ghz.construct();
        let r = schmidt_decompose(&ghz, &Bipartition::first_vs_rest(3)).unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.maximally_entangled);
        // Star, A|BC: C C^dagger = [[1/4, 1/4], [1/4, 3/4]] by hand,
        // eigenvalues (2 +- sqrt 2) / 4.
        let star = CanonicalState::Star.construct();
        let r = schmidt_decompose(&star, &Bipartition::first_vs_rest(3)).unwrap();
        let s2 = 2f64.sqrt();
        assert_eq!(r.rank, 2);
        assert!((r.gram_eigenvalues[0] - (2.0 + s2) / 4.0).abs() < 1e-12);
        assert!((r.gram_eigenvalues[1] - (2.0 - s2) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn larger_blocks_use_jacobi() {
        // Three Bell pairs across (0,1,2)|(3,4,5): rank 8, all equal.
        let bell = CanonicalState::BellPhiPlus.construct();
        let six = bell.tensor(&bell).unwrap().tensor(&bell).unwrap();
        // Pairs are (0,1), (2,3), (4,5); split so each pair straddles the cut.
        let r = schmidt_decompose(&six, &Bipartition::new(vec![0, 2, 4], vec![1, 3, 5])).unwrap();
        assert_eq!(r.rank, 8);
        assert!(r.maximally_entangled);
        for v in &r.gram_eigenvalues {
            assert!((v - 0.125).abs() < 1e-12);
        }
        // Keeping the pairs on one side gives a product.
        let r = schmidt_decompose(&six, &Bipartition::new(vec![0, 1, 2, 3], vec![4, 5])).unwrap();
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn invalid_partitions() {
        let s = CanonicalState::Ghz.construct();
        for p in [
            Bipartition::new(vec![], vec![0, 1, 2]),
            Bipartition::new(vec![0], vec![1]),
            Bipartition::new(vec![0, 1], vec![1, 2]),
            Bipartition::new(vec![0], vec![1, 3]),
        ] {
            assert!(
                matches!(schmidt_decompose(&s, &p), Err(Error::InvalidPartition(_))),
                "{p:?}"
            );
        }
    }
}
